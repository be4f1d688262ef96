#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sierpile {

using BigInt = mpz_class;
using Rat = mpq_class;

// Distribution of a descendant count, k = 0..4.
using DescDist = std::array<Rat, 5>;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out(1);
    Rat b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Rat dist_sum(const DescDist& d) {
    Rat s(0);
    for (const auto& x : d) s += x;
    return s;
}

inline Rat dist_mean(const DescDist& d) {
    Rat s(0);
    for (int k = 0; k < 5; ++k) s += k * d[k];
    return s;
}

inline DescDist dist_zero() { return {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}; }

inline DescDist dist_point(int k) {
    DescDist d = dist_zero();
    d[k] = 1;
    return d;
}

}  // namespace sierpile
