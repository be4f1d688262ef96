#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sierpile/gasket.hpp"
#include "sierpile/rational.hpp"

namespace sierpile {

// Forest classes: spanning trees, two-component forests isolating corner i,
// and three-component forests isolating every corner.
enum class ForestClass { T, S1, S2, S3, R };

const char* class_name(ForestClass c);
ForestClass class_from_name(const std::string& s);

// Isolated corner of an S class (paper indices: S1 -> left, S2 -> top, S3 -> right).
int iso_corner(ForestClass c);
// Root corner of the two-corner component under the standard orientation.
int big_root(ForestClass c);

struct CensusState {
    int n = 0;
    BigInt tau, sigma, rho;
};

// Recursion: tau' = 6 tau^2 sigma, sigma' = 7 tau sigma^2 + tau^2 rho,
// rho' = 14 sigma^3 + 12 tau sigma rho.
CensusState counts_recursive(int n);
// Closed forms evaluated through exact prime-power factorisations (540 = 2^2 3^3 5).
CensusState counts_closed(int n);

// The variant with the cubic term printed as 14 sigma^2; kept so tests can show
// it contradicts the closed form at n = 2.
CensusState counts_recursive_printed_rho(int n);

int census_max_level();  // default 8 (big integers grow like 540^(3^n/4))

BigInt class_count(ForestClass c, int n);

// One decomposition configuration: the classes placed on the three copies
// together with the orientation (corner permutation into standard position)
// of each copy, and the weight of the configuration in recursion units
// (tau sigma^2-products count 1 for S parents, tau^2 rho counts 3, etc).
struct DecompEntry {
    std::array<ForestClass, 3> child;    // classes on copies L, R, U
    std::array<CornerPerm, 3> orient;    // copy-local structure -> standard position
    long multiplicity = 1;
};

// Entries for one parent class; multiplicities sum to 6 (T), 10 (S_i), 26+24 (R,
// counting tau sigma rho cases at weight 3 -> 50 recursion units; 26 entries).
const std::vector<DecompEntry>& decomposition_table(ForestClass parent);

// Recompute the level-(n+1) counts from the table, as a cross-check.
BigInt table_recount(ForestClass parent, int n);

}  // namespace sierpile
