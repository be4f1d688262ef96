#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sierpile/census.hpp"
#include "sierpile/gasket.hpp"
#include "sierpile/rational.hpp"
#include "sierpile/rng.hpp"
#include "sierpile/sandpile.hpp"

namespace sierpile {

// Exhaustive classification of every edge subset of SG_n (n <= 2; n = 2 takes
// 2^27 subsets and is meant for the opt-in full suite). Counts forests per
// class and tallies exact per-vertex descendant distributions under the
// standard component roots.
struct ForestEnumeration {
    int level = 0;
    std::map<ForestClass, BigInt> counts;
    // tallies[class][vertex][k]
    std::map<ForestClass, std::vector<std::array<long long, 5>>> tallies;

    DescDist dist(ForestClass c, int vertex) const;
};

ForestEnumeration enumerate_forests(int level, int num_threads = 0);

// Spanning-tree enumeration of a contracted graph with per-vertex descendant
// tallies, classified by forest class of the lifted forest.
struct TreeEnumeration {
    long long total = 0;
    std::map<ForestClass, long long> counts;
    std::map<ForestClass, std::vector<std::array<long long, 5>>> tallies;  // per site

    DescDist dist(ForestClass c, int site) const;
};

TreeEnumeration enumerate_contraction_trees(const ContractedGraph& g);

// Number of spanning trees by the matrix-tree theorem: determinant of the
// reduced Laplacian of the graph with the given corners merged.
BigInt kirchhoff_count(const SgGraph& g, const std::vector<int>& merged_corners);

// Wilson's algorithm: uniform spanning forest rooted at the given sites of the
// contracted graph (the sink acts as one root; pass extra roots if desired).
RootedSpanningTree wilson_sample(const ContractedGraph& g, CounterRng& rng);

struct LerwSample {
    std::vector<int> path;  // site ids; last element -1 denotes the sink
};

// Loop-erased random walk from start until hitting the sink.
LerwSample lerw(const ContractedGraph& g, int start, CounterRng& rng);
// Loop erasure of an explicit walk (for unit tests).
std::vector<int> loop_erase(const std::vector<int>& walk);

// Monte-Carlo kernels (OpenMP-parallel with per-sample RNG streams; identical
// results for any thread count).
struct WilsonStats {
    long long samples = 0;
    std::vector<std::array<long long, 5>> des_tallies;  // per base vertex
    std::vector<long long> edge_hits;                   // per base edge id
    double zeta_sum = 0;  // sum over samples of the all-vertex mean des
    double zeta_sq_sum = 0;
};

WilsonStats wilson_monte_carlo(const ContractedGraph& g, long long samples,
                               std::uint64_t seed, int num_threads = 0);

}  // namespace sierpile
