#pragma once

#include <array>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sierpile/rational.hpp"

namespace sierpile {

// Minimal linear recurrence of a rational sequence (Berlekamp-Massey over Q).
// Returns c with c[0] = 1 and sum_j c[j] s[n-j] = 0 for n >= len(c)-1.
std::vector<Rat> minimal_recurrence(const std::vector<Rat>& s);

// Exact sum_{m>=1} z^m f(m) for a sequence satisfying a linear recurrence with
// |roots| < 1/|z|. Fits the recurrence on f(1..N) and checks it on extra terms.
Rat weighted_tail_sum(const std::function<Rat(int)>& f, const Rat& z, int fit_terms = 36,
                      int check_terms = 6);

// Nullspace vector of a singular 3x3 matrix (one-dimensional kernel assumed).
std::array<Rat, 3> nullspace_vector_3(const std::array<std::array<Rat, 3>, 3>& m);

// Nullspace vector of a singular n x n rational matrix (1-dim kernel).
std::vector<Rat> nullspace_vector(std::vector<std::vector<Rat>> m);

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m);

}  // namespace sierpile
