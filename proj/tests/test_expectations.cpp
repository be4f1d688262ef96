#include <doctest.h>

#include "sierpile/expectations.hpp"
#include "sierpile/heights.hpp"
#include "sierpile/oracle.hpp"
#include "sierpile/paperdata.hpp"

using namespace sierpile;

TEST_CASE("dbar sums count the non-corner vertices") {
    for (int n = 1; n <= 6; ++n) {
        long p3 = 1;
        for (int i = 0; i < n; ++i) p3 *= 3;
        Rat vn = Rat(3 * (p3 + 1), 2) - 3;
        for (int c = 0; c < 5; ++c) {
            Rat s(0);
            for (int i = 0; i <= 4; ++i) s += expected_desc(n, i)[c];
            CHECK(s == vn);
        }
    }
}

TEST_CASE("dbar equals the direct sum over vertex maps") {
    for (int n = 1; n <= 3; ++n) {
        const SgGraph& g = engine().graph(n);
        auto st = expectation_state(n);
        for (auto e : {Ens::P1, Ens::P2, Ens::P2F, Ens::P3}) {
            const auto& m = engine().vertex_map(e, n);
            for (int i = 0; i <= 3; ++i) {
                Rat direct(0);
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!g.is_corner(v)) direct += m[v][i];
                CHECK(direct == st.dbar[static_cast<int>(e)][i]);
            }
        }
    }
}

TEST_CASE("level-1 expected descendants against the exhaustive ensemble") {
    auto fe = enumerate_forests(1);
    const SgGraph& g = engine().graph(1);
    for (int i = 0; i <= 3; ++i) {
        auto d = expected_desc(1, i);
        Rat tree(0), s2(0), r(0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.is_corner(v)) continue;
            tree += fe.dist(ForestClass::T, v)[i];
            s2 += fe.dist(ForestClass::S2, v)[i];
            r += fe.dist(ForestClass::R, v)[i];
        }
        CHECK(d[0] == tree);
        CHECK(d[2] == s2);
        CHECK(d[4] == r);
    }
}

TEST_CASE("exact limit constants and identities") {
    auto r = limit_report();
    CHECK(r.zeta == Rat(635, 432));
    CHECK(r.wbar == Rat(1931, 864));
    CHECK(r.wbar == (r.zeta + 3) / 2);
    CHECK(r.w[0] + r.w[1] + r.w[2] + r.w[3] == 1);
    CHECK(r.w[0] == Rat(10957, 161856));  // agrees with the published value
    CHECK(r.dbar[0] == Rat(10957, 40464));
    CHECK(looping_limit() == Rat(635, 432));
}

TEST_CASE("finite-level looping constants") {
    CHECK(looping_constant(1) == Rat(41, 45));
    CHECK(looping_constant(2) == Rat(7012, 5625));
    CHECK(looping_constant(3) == Rat(78193, 56250));
}

TEST_CASE("looping constant equals the edge-sum bulk average at level 1") {
    // direct computation from the exhaustive two-root ensemble
    auto fe = enumerate_forests(1);
    const SgGraph& g = engine().graph(1);
    Rat total(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto a = fe.dist(ForestClass::S2, v), b = fe.dist(ForestClass::S3, v);
        for (int k = 1; k <= 4; ++k) total += Rat(k) * (a[k] + b[k]) / 2;
    }
    CHECK(total / g.vertex_count() == looping_constant(1));
}

TEST_CASE("published pipeline reproduces the published constants exactly") {
    auto d = paper::PaperPipeline::dbar_limit();
    auto dp = paper::dbar_limits();
    for (int i = 0; i < 4; ++i) CHECK(d[i] == dp[i]);
    auto w = paper::PaperPipeline::wbar_limit();
    auto wp = paper::wbar_limits();
    for (int i = 0; i < 4; ++i) CHECK(w[i] == wp[i]);
    CHECK(paper::PaperPipeline::zeta() == paper::zeta_limit());
    CHECK(paper::PaperPipeline::wbar() == paper::mean_height_limit());
    CHECK(paper::mean_height_limit() == (paper::zeta_limit() + 3) / 2);
}

TEST_CASE("published and exact limits share only the i=0 channel") {
    auto r = limit_report();
    auto dp = paper::dbar_limits();
    CHECK(r.dbar[0] == dp[0]);
    CHECK(r.dbar[1] != dp[1]);
    CHECK(r.zeta != paper::zeta_limit());
}

TEST_CASE("expected heights per sink choice at level 1 against brute force") {
    auto fe = enumerate_forests(1);
    const SgGraph& g = engine().graph(1);
    // sink = top corner: average heights over the 54 recurrent sandpiles equal
    // W-bar computed through Lemma 2.2 (checked on the sandpile side elsewhere);
    // here: consistency of the three reports
    for (int sc : {1, 2, 3}) {
        auto rep = expected_heights(1, sc);
        Rat wsum = rep.w[0] + rep.w[1] + rep.w[2] + rep.w[3];
        // every non-corner vertex contributes exactly one unit of height mass
        CHECK(wsum == g.vertex_count() - 3);
    }
    // tree case: W^i equals the sum over non-corner vertices of P(height = i)
    auto hp = height_probs(1, 1);
    auto rep = expected_heights(1, 1);
    for (int i = 0; i < 4; ++i) {
        Rat s(0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.is_corner(v)) continue;
            if (i < static_cast<int>(hp[v].size())) s += hp[v][i];
        }
        CHECK(s == rep.w[i]);
    }
}

TEST_CASE("telescoped recursion equals step recursion") {
    // expectation_state already iterates; check the telescoped evaluation
    const auto st5 = expectation_state(5);
    // recompute dbar_5 = sum_j A^j e_{5-j} from the stored e vectors
    std::array<std::array<Rat, kEnsCount>, kEnsCount> A{};
    for (int pt = 0; pt < kEnsCount; ++pt)
        for (const auto& cs : ensemble_cases(static_cast<Ens>(pt)))
            for (int cp = 0; cp < 3; ++cp)
                A[pt][static_cast<int>(cs.maptype[cp])] += cs.weight;
    for (int i = 0; i <= 3; ++i) {
        std::array<Rat, kEnsCount> acc{};
        for (int m = 1; m <= 5; ++m) {
            auto em = expectation_state(m);
            std::array<Rat, kEnsCount> v{};
            for (int pt = 0; pt < kEnsCount; ++pt) v[pt] = em.e[pt][i];
            for (int j = 0; j < 5 - m; ++j) {
                std::array<Rat, kEnsCount> w{};
                for (int a = 0; a < kEnsCount; ++a)
                    for (int b = 0; b < kEnsCount; ++b) w[a] += A[a][b] * v[b];
                v = w;
            }
            for (int a = 0; a < kEnsCount; ++a) acc[a] += v[a];
        }
        for (int a = 0; a < kEnsCount; ++a) CHECK(acc[a] == st5.dbar[a][i]);
    }
}
