#include "sierpile/census.hpp"

#include <cstdlib>

#include "sierpile/ensembles.hpp"

namespace sierpile {

const char* class_name(ForestClass c) {
    switch (c) {
        case ForestClass::T: return "tree";
        case ForestClass::S1: return "s1";
        case ForestClass::S2: return "s2";
        case ForestClass::S3: return "s3";
        case ForestClass::R: return "r";
    }
    return "?";
}

ForestClass class_from_name(const std::string& s) {
    if (s == "tree" || s == "t" || s == "T") return ForestClass::T;
    if (s == "s1" || s == "S1") return ForestClass::S1;
    if (s == "s2" || s == "S2") return ForestClass::S2;
    if (s == "s3" || s == "S3") return ForestClass::S3;
    if (s == "r" || s == "R") return ForestClass::R;
    throw std::invalid_argument("unknown forest class: " + s);
}

int iso_corner(ForestClass c) {
    switch (c) {
        case ForestClass::S1: return 0;
        case ForestClass::S2: return 2;
        case ForestClass::S3: return 1;
        default: throw std::domain_error("iso_corner: not a two-component class");
    }
}

int big_root(ForestClass c) {
    switch (c) {
        case ForestClass::S1: return 2;
        case ForestClass::S2: return 1;
        case ForestClass::S3: return 2;
        default: throw std::domain_error("big_root: not a two-component class");
    }
}

int census_max_level() {
    if (const char* env = std::getenv("SIERPILE_MAX_CENSUS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

CensusState counts_recursive(int n) {
    if (n > census_max_level()) throw std::length_error("census level above maximum");
    CensusState s{0, 3, 1, 1};
    for (int i = 0; i < n; ++i) {
        BigInt t = 6 * s.tau * s.tau * s.sigma;
        BigInt sg = 7 * s.tau * s.sigma * s.sigma + s.tau * s.tau * s.rho;
        BigInt r = 14 * s.sigma * s.sigma * s.sigma + 12 * s.tau * s.sigma * s.rho;
        s = {i + 1, t, sg, r};
    }
    return s;
}

CensusState counts_recursive_printed_rho(int n) {
    CensusState s{0, 3, 1, 1};
    for (int i = 0; i < n; ++i) {
        BigInt t = 6 * s.tau * s.tau * s.sigma;
        BigInt sg = 7 * s.tau * s.sigma * s.sigma + s.tau * s.tau * s.rho;
        BigInt r = 14 * s.sigma * s.sigma + 12 * s.tau * s.sigma * s.rho;
        s = {i + 1, t, sg, r};
    }
    return s;
}

CensusState counts_closed(int n) {
    if (n > census_max_level()) throw std::length_error("census level above maximum");
    // tau_n   = 3 (5/3)^{-n/2} 540^{(3^n-1)/4},  540 = 2^2 3^3 5
    // sigma_n =   (5/3)^{ n/2} 540^{(3^n-1)/4}
    // rho_n   =   (5/3)^{3n/2} 540^{(3^n-1)/4}
    // In prime exponents (a, b, c) for 2^a 3^b 5^c with q = 3^n - 1:
    //   tau:   a = q/2, b = 1 + (3q + 2n)/4, c = (q - 2n)/4
    //   sigma: a = q/2, b = (3q - 2n)/4,     c = (q + 2n)/4
    //   rho:   a = q/2, b = (3q - 6n)/4,     c = (q + 6n)/4
    BigInt q = BigInt(3);
    mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), n);
    q -= 1;
    auto ppow = [](unsigned long base, const BigInt& e) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), base, e.get_ui());
        return r;
    };
    BigInt a = q / 2;
    BigInt bt = 1 + (3 * q + 2 * n) / 4, ct = (q - 2 * n) / 4;
    BigInt bs = (3 * q - 2 * n) / 4, cs = (q + 2 * n) / 4;
    BigInt br = (3 * q - 6 * n) / 4, cr = (q + 6 * n) / 4;
    CensusState s;
    s.n = n;
    s.tau = ppow(2, a) * ppow(3, bt) * ppow(5, ct);
    s.sigma = ppow(2, a) * ppow(3, bs) * ppow(5, cs);
    s.rho = ppow(2, a) * ppow(3, br) * ppow(5, cr);
    return s;
}

BigInt class_count(ForestClass c, int n) {
    CensusState s = counts_recursive(n);
    switch (c) {
        case ForestClass::T: return s.tau;
        case ForestClass::R: return s.rho;
        default: return s.sigma;
    }
}

const std::vector<DecompEntry>& decomposition_table(ForestClass parent) {
    static std::map<int, std::vector<DecompEntry>> tables = [] {
        std::map<int, std::vector<DecompEntry>> t;
        auto fill = [&](ForestClass pc, Ens pe) {
            std::vector<DecompEntry> es;
            for (const auto& c : ensemble_cases(pe)) {
                DecompEntry e;
                e.child = c.cls;
                e.orient = c.g;
                // weight in recursion units: scale by the parent denominator
                Rat w = c.weight * (pc == ForestClass::T ? 6 : pc == ForestClass::R ? 50 : 10);
                e.multiplicity = static_cast<long>(w.get_num().get_si());
                es.push_back(e);
            }
            t[static_cast<int>(pc)] = es;
        };
        fill(ForestClass::T, Ens::P1);
        fill(ForestClass::S1, Ens::P2);
        fill(ForestClass::S2, Ens::P2);
        fill(ForestClass::S3, Ens::P2);
        fill(ForestClass::R, Ens::P3);
        return t;
    }();
    return tables.at(static_cast<int>(parent));
}

BigInt table_recount(ForestClass parent, int n) {
    BigInt total = 0;
    for (const auto& e : decomposition_table(parent)) {
        BigInt prod = e.multiplicity;
        // the tau^2 rho and tau sigma rho entries carry their symmetry factor in
        // the multiplicity; recover the plain product of child counts
        bool heavy = false;
        for (auto c : e.child)
            if (c == ForestClass::R) heavy = true;
        long mult = e.multiplicity;
        if (parent != ForestClass::T && heavy) mult /= 3;
        prod = mult;
        for (auto c : e.child) prod *= class_count(c, n);
        total += prod;
    }
    return total;
}

}  // namespace sierpile
