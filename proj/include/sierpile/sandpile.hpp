#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sierpile/gasket.hpp"
#include "sierpile/rng.hpp"

namespace sierpile {

// Chip counts on the non-sink sites of a contracted graph.
struct SandpileConfig {
    const ContractedGraph* graph = nullptr;
    std::vector<long> chips;

    bool operator==(const SandpileConfig& o) const { return chips == o.chips; }
    bool stable() const;
};

struct Odometer {
    std::vector<long> counts;  // topplings per site during one stabilization
};

SandpileConfig make_config(const ContractedGraph& g, std::vector<long> chips);
SandpileConfig zero_config(const ContractedGraph& g);
SandpileConfig max_stable(const ContractedGraph& g);  // deg(v) - 1 everywhere

// Queue-based stabilization with bulk topplings; returns the stable result and
// the odometer. The chips_before - Laplacian * odometer = chips_after identity
// holds exactly.
std::pair<SandpileConfig, Odometer> stabilize(const SandpileConfig& c);

// Add one chip at a uniform non-sink site and stabilize.
SandpileConfig markov_step(const SandpileConfig& c, CounterRng& rng);

// Dhar's test via the burning lemma: adding b_i chips at every sink-adjacent
// site returns the configuration with every site toppling exactly once.
bool is_recurrent(const SandpileConfig& c);

SandpileConfig group_add(const SandpileConfig& a, const SandpileConfig& b);
SandpileConfig identity_element(const ContractedGraph& g);

// Rooted spanning tree of the contracted graph: parent edge per site, where the
// parent is another site or the sink. For parallel sink edges, edge_index
// selects which one (0 <= edge_index < b_i).
struct RootedSpanningTree {
    const ContractedGraph* graph = nullptr;
    std::vector<int> parent;      // site id, or -1 for the sink
    std::vector<int> edge_index;  // index among the parallel edges used
};

bool tree_valid(const RootedSpanningTree& t);

// Burning bijection. Edges at each site are ordered by the canonical address of
// the far endpoint, sink edges last (by parallel index).
SandpileConfig tree_to_sandpile(const RootedSpanningTree& t);
RootedSpanningTree sandpile_to_tree(const SandpileConfig& c);

// Number of neighbours of v whose path to the sink passes through v.
int descendant_count(const RootedSpanningTree& t, int site);

// Exhaustive scan over all stable configurations (small graphs only).
std::vector<SandpileConfig> recurrent_configs(const ContractedGraph& g);

// All spanning trees of the contracted graph, by backtracking enumeration.
// The callback receives each tree once; return false to stop.
void enumerate_spanning_trees(const ContractedGraph& g,
                              const std::function<bool(const RootedSpanningTree&)>& fn);

}  // namespace sierpile
