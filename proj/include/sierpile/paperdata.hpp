#pragma once

#include <array>
#include <vector>

#include "sierpile/census.hpp"
#include "sierpile/rational.hpp"

namespace sierpile {

// Verbatim data published with the model: used for reproduction checks and for
// documenting where the published tables deviate from the oracle-validated
// recursion. Names follow the published layout.
namespace paper {

// basis (1, (3/5)^n, (2/5)^n, (1/15)^n, (1/25)^n, (2/75)^n, (1/375)^n)
std::array<Rat, 7> mn_basis(int n);

using CutMatrix = std::array<std::array<Rat, 7>, 4>;  // rows k = 0..3

const CutMatrix& bcut_tree();
const CutMatrix& lcut_tree();   // also rcut by symmetry
const CutMatrix& bcut_s2();
const CutMatrix& rcut_s2();
const CutMatrix& lcut_s2();
const CutMatrix& bcut_r();      // all three cut points of the R class

DescDist eval_cut(const CutMatrix& m, int n);

// Table of root probabilities (k = 0..2): eta2, eta2bar, eta3 closed forms.
DescDist table1_eta2(int n);
DescDist table1_eta2bar(int n);
DescDist table1_eta3(int n);

// Published root recursion matrix (rows eta2, eta2bar, eta3) and inhomogeneity.
std::array<std::array<Rat, 3>, 3> root_recursion_matrix();
std::array<Rat, 3> root_recursion_delta2();

// The 5x5 matrix M of the expected-descendant recursion with its published
// eigenvalues and eigenvectors.
std::array<std::array<long, 5>, 5> matrix_m();
std::array<long, 5> m_eigenvalues();
std::array<std::array<long, 5>, 5> m_eigenvectors();

// Published limits.
Rat zeta_limit();                    // 7259/5616
Rat mean_height_limit();             // 24107/11232
std::array<Rat, 4> dbar_limits();    // lim D^i / |SG_n|
std::array<Rat, 4> wbar_limits();    // lim W^i / |SG_n|

// Expected-descendant pipeline driven by the published cut matrices and M;
// reproduces the published limits exactly.
struct PaperPipeline {
    // e_n per collapsed class (T, S, R), entries k = 0..3
    static std::array<std::array<Rat, 4>, 3> e_vec(int n);
    static std::array<Rat, 4> dbar_limit();   // lim D^i/|SG_n|
    static std::array<Rat, 4> wbar_limit();
    static Rat zeta();
    static Rat wbar();
};

}  // namespace paper
}  // namespace sierpile
