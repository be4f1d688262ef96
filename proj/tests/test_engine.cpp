#include <doctest.h>

#include "sierpile/ensembles.hpp"
#include "sierpile/oracle.hpp"

using namespace sierpile;

TEST_CASE("case tables have the expected shapes") {
    CHECK(ensemble_cases(Ens::P1).size() == 6);
    CHECK(ensemble_cases(Ens::P2).size() == 8);
    CHECK(ensemble_cases(Ens::P2F).size() == 8);
    CHECK(ensemble_cases(Ens::P3).size() == 26);
    for (auto e : {Ens::P1, Ens::P2, Ens::P2F, Ens::P3}) {
        Rat w(0);
        for (const auto& c : ensemble_cases(e)) w += c.weight;
        CHECK(w == 1);
    }
    // decorated copies appear exactly where the re-entrant routing needs them
    int feeds = 0;
    for (const auto& c : ensemble_cases(Ens::P1))
        for (int cp = 0; cp < 3; ++cp)
            if (c.maptype[cp] == Ens::P2F) ++feeds;
    CHECK(feeds == 2);
    feeds = 0;
    for (const auto& c : ensemble_cases(Ens::P3))
        for (int cp = 0; cp < 3; ++cp)
            if (c.maptype[cp] == Ens::P2F) ++feeds;
    CHECK(feeds == 6);
}

TEST_CASE("R-parent case orbit structure under the symmetry group") {
    // the 26 cases split into orbits of sizes 6,6,6,6,2 under rotations+reflections
    const auto& cases = ensemble_cases(Ens::P3);
    // canonical key: multiset of (copy, class) images under the 6 relabelings
    auto classes_of = [](const EnsCase& c) {
        return std::array<ForestClass, 3>{c.cls[0], c.cls[1], c.cls[2]};
    };
    // group action on configurations: permute copies and relabel classes
    auto act = [](const CornerPerm& g, std::array<ForestClass, 3> cls) {
        std::array<ForestClass, 3> out{};
        auto mapcls = [&](ForestClass c) {
            if (c == ForestClass::T || c == ForestClass::R) return c;
            int iso = iso_corner(c);
            int im = g[iso];
            return im == 0 ? ForestClass::S1 : im == 2 ? ForestClass::S2 : ForestClass::S3;
        };
        for (int cp = 0; cp < 3; ++cp) out[g[cp]] = mapcls(cls[cp]);
        return out;
    };
    std::map<std::array<ForestClass, 3>, int> seen;
    for (const auto& c : cases) seen[classes_of(c)] = 0;
    std::vector<int> orbit_sizes;
    for (auto& [k, mark] : seen) {
        if (mark) continue;
        const std::array<CornerPerm, 6> G = {kIdentity, kRotCW,   kRotCCW,
                                             kMirror1,  kMirror2, kMirror3};
        std::set<std::array<ForestClass, 3>> orbit;
        for (const auto& g : G) orbit.insert(act(g, k));
        int sz = 0;
        for (const auto& o : orbit)
            if (seen.count(o)) {
                seen[o] = 1;
                ++sz;
            }
        orbit_sizes.push_back(sz);
    }
    std::sort(orbit_sizes.begin(), orbit_sizes.end());
    CHECK(orbit_sizes == std::vector<int>{2, 6, 6, 6, 6});
}

TEST_CASE("corner joints match exhaustive tallies at level 1") {
    auto fe = enumerate_forests(1);
    const SgGraph& g = engine().graph(1);
    // d-marginals of the joints equal the oracle marginals
    auto marg = [&](Ens e, int corner, int n) {
        DescDist d = dist_zero();
        for (const auto& a : engine().corner_joint(e, corner, n)) d[a.d] += a.p;
        return d;
    };
    CHECK(marg(Ens::P1, 0, 1) == fe.dist(ForestClass::T, g.corner(0)));
    CHECK(marg(Ens::P1, 2, 1) == fe.dist(ForestClass::T, g.corner(2)));
    CHECK(marg(Ens::P2, 0, 1) == fe.dist(ForestClass::S2, g.corner(0)));
    CHECK(marg(Ens::P2, 1, 1) == fe.dist(ForestClass::S2, g.corner(1)));
    CHECK(marg(Ens::P2, 2, 1) == fe.dist(ForestClass::S2, g.corner(2)));
    CHECK(marg(Ens::P3, 0, 1) == fe.dist(ForestClass::R, g.corner(0)));
}

TEST_CASE("every distribution in every map sums to one and respects degrees") {
    for (int n = 1; n <= 3; ++n) {
        const SgGraph& g = engine().graph(n);
        for (auto e : {Ens::P1, Ens::P2, Ens::P2F, Ens::P3}) {
            const auto& m = engine().vertex_map(e, n);
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(dist_sum(m[v]) == 1);
                CHECK(m[v][4] == 0);
                // non-root vertices have des <= deg - 1
                bool is_root_corner =
                    (e == Ens::P1 && v == g.corner(2)) ||
                    ((e == Ens::P2 || e == Ens::P2F) &&
                     (v == g.corner(1) || v == g.corner(2))) ||
                    (e == Ens::P3 && g.is_corner(v));
                if (!is_root_corner && g.degree(v) == 2) CHECK(m[v][2] == 0);
            }
        }
    }
}

TEST_CASE("map symmetries: tree map mirror-invariant, R map rotation-invariant") {
    for (int n = 1; n <= 4; ++n) {
        const SgGraph& g = engine().graph(n);
        const auto& mt = engine().vertex_map(Ens::P1, n);
        const auto& mr = engine().vertex_map(Ens::P3, n);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(mt[v] == mt[g.reflect(2, v)]);
            CHECK(mr[v] == mr[g.rotate(v)]);
        }
    }
}
