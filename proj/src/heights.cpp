#include "sierpile/heights.hpp"

#include <stdexcept>

namespace sierpile {

CornerProbs corner_probs(int n) {
    // p1' = (2/3) p1 + (1/3) p2 ; p2' = (3/5) p1 + (2/5) p2, from (2/3,1/3) and (1,0)
    DescDist p1 = dist_zero(), p2 = dist_zero();
    p1[0] = Rat(2, 3);
    p1[1] = Rat(1, 3);
    p2[0] = 1;
    for (int i = 0; i < n; ++i) {
        DescDist q1 = dist_zero(), q2 = dist_zero();
        for (int k = 0; k < 2; ++k) {
            q1[k] = Rat(2, 3) * p1[k] + Rat(1, 3) * p2[k];
            q2[k] = Rat(3, 5) * p1[k] + Rat(2, 5) * p2[k];
        }
        p1 = q1;
        p2 = q2;
    }
    return {p1, p2};
}

CornerProbs corner_probs_closed(int n) {
    Rat t = rat_pow(Rat(1, 15), n);
    CornerProbs c{dist_zero(), dist_zero()};
    c.p1[0] = Rat(11, 14) - Rat(5, 42) * t;
    c.p1[1] = Rat(3, 14) + Rat(5, 42) * t;
    c.p2[0] = Rat(11, 14) + Rat(3, 14) * t;
    c.p2[1] = Rat(3, 14) - Rat(3, 14) * t;
    return c;
}

Mat2 matrix_power_2x2(int n) {
    // 15^-n / 14 * [[3^(n+2) 5^n + 5, -5(1-15^n)], [-9(1-15^n), 3^n 5^(n+1) + 9]]
    Rat p3 = rat_pow(Rat(3), n), p5 = rat_pow(Rat(5), n), p15 = p3 * p5;
    Rat f = Rat(1, 14) / p15;
    Mat2 m;
    m[0][0] = f * (9 * p3 * p5 + 5);
    m[0][1] = f * (-5 * (1 - p15));
    m[1][0] = f * (-9 * (1 - p15));
    m[1][1] = f * (5 * p3 * p5 + 9);
    return m;
}

Mat2 matrix_power_2x2_iterated(int n) {
    Mat2 a{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    Mat2 b{{{Rat(2, 3), Rat(1, 3)}, {Rat(3, 5), Rat(2, 5)}}};
    for (int i = 0; i < n; ++i) {
        Mat2 c;
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                c[r][s] = a[r][0] * b[0][s] + a[r][1] * b[1][s];
        a = c;
    }
    return a;
}

RootProbs root_probs(int n) {
    RootProbs r{dist_zero(), dist_zero(), dist_zero()};
    auto marg = [&](Ens e, int corner) {
        DescDist d = dist_zero();
        for (const auto& a : engine().corner_joint(e, corner, n)) d[a.d] += a.p;
        return d;
    };
    r.eta2 = marg(Ens::P2, 1);
    r.eta2bar = marg(Ens::P2, 2);
    r.eta3 = marg(Ens::P3, 2);
    return r;
}

RootProbs root_probs_closed(int n) {
    Rat t35 = rat_pow(Rat(3, 5), n), t5 = rat_pow(Rat(1, 5), n), t25 = rat_pow(Rat(1, 25), n);
    RootProbs r{dist_zero(), dist_zero(), dist_zero()};
    r.eta2[0] = 0;
    r.eta2[1] = t5;
    r.eta2[2] = 1 - t5;
    r.eta2bar[0] = Rat(33, 28) * t35 - Rat(5, 28) * t25;
    r.eta2bar[1] = Rat(9, 14) * t35 + Rat(5, 14) * t25 - t5;
    r.eta2bar[2] = 1 - Rat(51, 28) * t35 - Rat(5, 28) * t25 + t5;
    r.eta3[0] = Rat(11, 14) * t35 + Rat(3, 14) * t25;
    r.eta3[1] = Rat(3, 7) * (t35 - t25);
    r.eta3[2] = 1 - Rat(17, 14) * t35 + Rat(3, 14) * t25;
    return r;
}

std::array<DescDist, 3> cutpoint_probs(int n, ForestClass c) {
    if (n < 1) throw std::domain_error("cutpoint_probs needs n >= 1");
    auto& eng = engine();
    auto from = [&](Ens e, const CornerPerm& g) {
        // cut opposite corner i of the transformed class sits opposite g^-1... the
        // class obtained by relabelling with g has cut dists permuted accordingly.
        std::array<DescDist, 3> out;
        for (int i = 0; i < 3; ++i) out[g[i]] = eng.boundary_dist(e, 5 - i, n);
        return out;
    };
    switch (c) {
        case ForestClass::T: return from(Ens::P1, kIdentity);
        case ForestClass::S2: return from(Ens::P2, kIdentity);
        case ForestClass::S1: return from(Ens::P2, perm_inverse(kRotCW));
        case ForestClass::S3: return from(Ens::P2, kMirror1);
        case ForestClass::R: return from(Ens::P3, kIdentity);
    }
    throw std::logic_error("cutpoint_probs");
}

VertexProbMap vertex_probs(int n, ForestClass c) {
    auto& eng = engine();
    const SgGraph& g = eng.graph(n);
    VertexProbMap m;
    m.level = n;
    m.cls = c;
    auto pull = [&](Ens e, const CornerPerm& g2) {
        // class c = standard ensemble relabelled by g2^-1; value at v = std map at g2(v)
        const auto& base = eng.vertex_map(e, n);
        m.table.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) m.table[v] = base[g.apply(g2, v)];
    };
    switch (c) {
        case ForestClass::T: pull(Ens::P1, kIdentity); break;
        case ForestClass::S2: pull(Ens::P2, kIdentity); break;
        case ForestClass::S1: pull(Ens::P2, kRotCW); break;
        case ForestClass::S3: pull(Ens::P2, kMirror1); break;
        case ForestClass::R: pull(Ens::P3, kIdentity); break;
    }
    return m;
}

std::vector<Rat> desc_to_height(const DescDist& d, int degree) {
    std::vector<Rat> h(degree, Rat(0));
    for (int k = 0; k < degree; ++k)
        for (int j = 0; j <= k; ++j) h[k] += d[j] / (degree - j);
    return h;
}

std::vector<DescDist> sink_desc_probs(int n, int sink_count) {
    auto& eng = engine();
    const SgGraph& g = eng.graph(n);
    std::vector<DescDist> out(g.vertex_count(), dist_zero());
    if (sink_count == 1) {
        return eng.vertex_map(Ens::P1, n);
    } else if (sink_count == 2) {
        // sinks {top, right}: uniform over S2 union S3
        const auto& m2 = eng.vertex_map(Ens::P2, n);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int w = g.apply(kMirror1, v);  // S3 map value at v = S2 map at m1(v)
            for (int k = 0; k < 5; ++k) out[v][k] = (m2[v][k] + m2[w][k]) / 2;
        }
        return out;
    } else if (sink_count == 3) {
        return eng.vertex_map(Ens::P3, n);
    }
    throw std::domain_error("sink_count must be 1, 2 or 3");
}

std::vector<std::vector<Rat>> height_probs(int n, int sink_count) {
    auto desc = sink_desc_probs(n, sink_count);
    const SgGraph& g = engine().graph(n);
    std::vector<std::vector<Rat>> out(g.vertex_count());
    std::vector<bool> sink(g.vertex_count(), false);
    static const int sinksets[4][3] = {{}, {2, -1, -1}, {2, 1, -1}, {2, 1, 0}};
    for (int i = 0; i < sink_count; ++i) sink[g.corner(sinksets[sink_count][i])] = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (sink[v]) continue;
        out[v] = desc_to_height(desc[v], g.degree(v));
    }
    return out;
}

}  // namespace sierpile
