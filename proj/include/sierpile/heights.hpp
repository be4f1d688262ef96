#pragma once

#include <array>
#include <map>
#include <vector>

#include "sierpile/census.hpp"
#include "sierpile/ensembles.hpp"
#include "sierpile/gasket.hpp"
#include "sierpile/rational.hpp"

namespace sierpile {

// P(des = k) at the two non-root corners of a tree (p1) and at the left corner
// of an S2 forest (p2); support {0, 1}.
struct CornerProbs {
    DescDist p1, p2;
};

CornerProbs corner_probs(int n);           // by recursion
CornerProbs corner_probs_closed(int n);    // 11/14 -/+ closed forms; equals the above

using Mat2 = std::array<std::array<Rat, 2>, 2>;
Mat2 matrix_power_2x2(int n);          // closed form of [[2/3,1/3],[3/5,2/5]]^n
Mat2 matrix_power_2x2_iterated(int n); // reference product

// Root distributions: eta2 at the big-component root of S2, eta2bar at the
// isolated corner of S2, eta3 at any corner of R.
struct RootProbs {
    DescDist eta2, eta2bar, eta3;
};

RootProbs root_probs(int n);         // oracle-validated recursion
RootProbs root_probs_closed(int n);  // closed forms of the corrected recursion

// Cut point distributions for a forest class in standard orientation,
// indexed by the opposite corner (0 -> rcut, 1 -> lcut, 2 -> bcut).
std::array<DescDist, 3> cutpoint_probs(int n, ForestClass c);

struct VertexProbMap {
    int level = 0;
    ForestClass cls = ForestClass::T;
    // per-vertex distribution, indexed by SgGraph vertex id; root corners carry
    // their same-component neighbour law
    std::vector<DescDist> table;
};

VertexProbMap vertex_probs(int n, ForestClass c);

// Lemma-2.2 conversion: P(height = k) = sum_{j<=k} d(j) / (degree - j).
std::vector<Rat> desc_to_height(const DescDist& d, int degree);

// Height distributions of the stationary sandpile for a sink choice
// (1 = top corner, 2 = top+right, 3 = all corners), per non-sink vertex.
std::vector<std::vector<Rat>> height_probs(int n, int sink_count);

// des distribution per vertex for the sink ensemble (mixture for 2 sinks).
std::vector<DescDist> sink_desc_probs(int n, int sink_count);

}  // namespace sierpile
