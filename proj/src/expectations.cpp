#include "sierpile/expectations.hpp"

#include <map>

#include "sierpile/linalg.hpp"

namespace sierpile {

namespace {

// A[pt][ct] = expected number of copies carrying each child ensemble
const std::array<std::array<Rat, kEnsCount>, kEnsCount>& type_matrix() {
    static const auto a = [] {
        std::array<std::array<Rat, kEnsCount>, kEnsCount> m{};
        for (int pt = 0; pt < kEnsCount; ++pt)
            for (const auto& cs : ensemble_cases(static_cast<Ens>(pt)))
                for (int cp = 0; cp < 3; ++cp)
                    m[pt][static_cast<int>(cs.maptype[cp])] += cs.weight;
        return m;
    }();
    return a;
}

std::array<Rat, 5> cut_sum(Ens e, int n) {
    std::array<Rat, 5> s{};
    for (int pos = 3; pos <= 5; ++pos) {
        DescDist d = engine().boundary_dist(e, pos, n);
        for (int k = 0; k < 5; ++k) s[k] += d[k];
    }
    return s;
}

}  // namespace

ExpectationState expectation_state(int n) {
    static std::map<int, ExpectationState> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ExpectationState st;
    st.n = n;
    if (n > 0) {
        ExpectationState prev = expectation_state(n - 1);
        const auto& A = type_matrix();
        for (int pt = 0; pt < kEnsCount; ++pt) {
            st.e[pt] = cut_sum(static_cast<Ens>(pt), n);
            for (int k = 0; k < 5; ++k) {
                Rat acc = st.e[pt][k];
                for (int ct = 0; ct < kEnsCount; ++ct)
                    acc += A[pt][ct] * prev.dbar[ct][k];
                st.dbar[pt][k] = acc;
            }
        }
    }
    cache.emplace(n, st);
    return st;
}

std::array<Rat, 5> expected_desc(int n, int i) {
    auto st = expectation_state(n);
    // classes T, S1, S2, S3, R; the three S classes agree
    Rat t = st.dbar[static_cast<int>(Ens::P1)][i];
    Rat s = st.dbar[static_cast<int>(Ens::P2)][i];
    Rat r = st.dbar[static_cast<int>(Ens::P3)][i];
    return {t, s, s, s, r};
}

std::array<Rat, 5> expected_desc_total(int n) {
    std::array<Rat, 5> out{};
    for (int i = 1; i <= 4; ++i) {
        auto d = expected_desc(n, i);
        for (int c = 0; c < 5; ++c) out[c] += i * d[c];
    }
    return out;
}

namespace {

DescDist corner_marginal(Ens e, int corner, int n) {
    DescDist d = dist_zero();
    for (const auto& a : engine().corner_joint(e, corner, n)) d[a.d] += a.p;
    return d;
}

// mean des at the three corners for a sink ensemble
Rat corner_des_mean(int n, int sink_count) {
    Rat s(0);
    if (sink_count == 1) {
        // tree rooted at top: corners left, right carry p1; top is the root (des = 2)
        s += dist_mean(corner_marginal(Ens::P1, 0, n));
        s += dist_mean(corner_marginal(Ens::P1, 1, n));
        s += dist_mean(corner_marginal(Ens::P1, 2, n));
    } else if (sink_count == 2) {
        // mixture of S2 and S3 = S2 relabelled by the mirror fixing the left corner
        for (int c = 0; c < 3; ++c) {
            s += dist_mean(corner_marginal(Ens::P2, c, n)) / 2;
            s += dist_mean(corner_marginal(Ens::P2, kMirror1[c], n)) / 2;
        }
    } else {
        for (int c = 0; c < 3; ++c) s += dist_mean(corner_marginal(Ens::P3, c, n));
    }
    return s;
}

Ens sink_ens(int sink_count) {
    switch (sink_count) {
        case 1: return Ens::P1;
        case 2: return Ens::P2;  // both mixture components share all bulk sums
        case 3: return Ens::P3;
    }
    throw std::domain_error("sink_count must be 1, 2 or 3");
}

}  // namespace

HeightReport expected_heights(int n, int sink_count) {
    HeightReport rep;
    rep.n = n;
    rep.sink_count = sink_count;
    auto st = expectation_state(n);
    const auto& db = st.dbar[static_cast<int>(sink_ens(sink_count))];
    for (int i = 0; i < 4; ++i) {
        rep.w[i] = 0;
        for (int j = 0; j <= i; ++j) rep.w[i] += db[j] / (4 - j);
    }
    rep.wbar = 0;
    for (int i = 0; i < 4; ++i) rep.wbar += i * rep.w[i];
    // non-sink corners have degree 2; add their height laws
    rep.w_all = rep.w;
    rep.wbar_all = rep.wbar;
    std::vector<DescDist> cmargs;
    if (sink_count == 1) {
        cmargs.push_back(corner_marginal(Ens::P1, 0, n));
        cmargs.push_back(corner_marginal(Ens::P1, 1, n));
    } else if (sink_count == 2) {
        DescDist mix = dist_zero();
        auto a = corner_marginal(Ens::P2, 0, n);
        auto b = corner_marginal(Ens::P2, kMirror1[0], n);
        for (int k = 0; k < 5; ++k) mix[k] = (a[k] + b[k]) / 2;
        cmargs.push_back(mix);
    }
    for (const auto& d : cmargs) {
        for (int k = 0; k < 2; ++k) {
            Rat hk(0);
            for (int j = 0; j <= k; ++j) hk += d[j] / (2 - j);
            rep.w_all[k] += hk;
            rep.wbar_all += k * hk;
        }
    }
    int nonsink = engine().graph(n).vertex_count() - sink_count;
    rep.per_vertex_mean = rep.wbar_all / nonsink;
    return rep;
}

Rat looping_constant(int n) {
    auto st = expectation_state(n);
    Rat bulk(0);
    for (int i = 1; i <= 4; ++i) bulk += i * st.dbar[static_cast<int>(Ens::P2)][i];
    Rat total = bulk + corner_des_mean(n, 2);
    return total / engine().graph(n).vertex_count();
}

namespace {

std::array<Rat, 5> dbar_limit_vec() {
    static const auto lim = [] {
        const auto& A = type_matrix();
        std::vector<std::vector<Rat>> At(kEnsCount, std::vector<Rat>(kEnsCount));
        for (int i = 0; i < kEnsCount; ++i)
            for (int j = 0; j < kEnsCount; ++j)
                At[i][j] = A[j][i] - (i == j ? Rat(3) : Rat(0));
        auto u = nullspace_vector(At);
        Rat usum(0);
        for (const auto& x : u) usum += x;
        std::array<Rat, 5> out{};
        for (int k = 0; k < 5; ++k) {
            auto f = [&](int m) {
                auto st = expectation_state(m);
                Rat s(0);
                for (int pt = 0; pt < kEnsCount; ++pt) s += u[pt] * st.e[pt][k];
                return s;
            };
            out[k] = weighted_tail_sum(f, Rat(1, 3)) / usum * Rat(2, 3);
        }
        return out;
    }();
    return lim;
}

}  // namespace

LimitReport limit_report() {
    LimitReport r;
    auto d = dbar_limit_vec();
    for (int i = 0; i < 4; ++i) r.dbar[i] = d[i];
    r.dbar_total = 0;
    for (int i = 0; i < 5; ++i) r.dbar_total += i * d[i];
    for (int i = 0; i < 4; ++i) {
        r.w[i] = 0;
        for (int j = 0; j <= i; ++j) r.w[i] += d[j] / (4 - j);
    }
    r.wbar = 0;
    for (int i = 0; i < 4; ++i) r.wbar += i * r.w[i];
    r.zeta = r.dbar_total;
    return r;
}

Rat looping_limit() { return limit_report().zeta; }

}  // namespace sierpile
