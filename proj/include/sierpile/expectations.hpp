#pragma once

#include <array>
#include <map>
#include <vector>

#include "sierpile/census.hpp"
#include "sierpile/ensembles.hpp"
#include "sierpile/rational.hpp"

namespace sierpile {

// Expected number of non-corner vertices with i neighbouring descendants,
// for the four internal ensembles, plus the cut-point contributions e_n.
struct ExpectationState {
    int n = 0;
    // dbar[ens][i], e[ens][i]; ens indexed by Ens
    std::array<std::array<Rat, 5>, kEnsCount> dbar{};
    std::array<std::array<Rat, 5>, kEnsCount> e{};
};

ExpectationState expectation_state(int n);

// D-bar^i across the five forest classes (S classes share one value).
std::array<Rat, 5> expected_desc(int n, int i);
// Sum_i i * D-bar^i per class.
std::array<Rat, 5> expected_desc_total(int n);

struct HeightReport {
    int n = 0;
    int sink_count = 1;
    std::array<Rat, 4> w;        // W-bar^i over non-corner vertices
    Rat wbar;                    // sum i W^i
    std::array<Rat, 4> w_all;    // including non-sink corner vertices
    Rat wbar_all;
    Rat per_vertex_mean;         // wbar_all / (number of non-sink vertices)
};

HeightReport expected_heights(int n, int sink_count);

struct LimitReport {
    std::array<Rat, 4> w;   // lim W^i_n / |SG_n|
    Rat wbar;               // lim W_n / |SG_n| = (zeta + 3) / 2
    Rat zeta;               // looping constant
    std::array<Rat, 4> dbar;  // lim D^i_n / |SG_n| (same for every class)
    Rat dbar_total;         // lim D_n / |SG_n| = zeta
};

LimitReport limit_report();

// zeta_n: bulk average expected descendant count over the two-root forest
// ensemble, all vertices of SG_n included.
Rat looping_constant(int n);
Rat looping_limit();

}  // namespace sierpile
