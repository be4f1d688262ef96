#include <doctest.h>

#include <set>

#include "sierpile/gasket.hpp"

using namespace sierpile;

TEST_CASE("vertex and edge counts follow the closed forms") {
    for (int n = 0; n <= 6; ++n) {
        SgGraph g(n);
        long p3 = 1;
        for (int i = 0; i < n; ++i) p3 *= 3;
        CHECK(g.vertex_count() == 3 * (p3 + 1) / 2);
        CHECK(g.edge_count() == 3 * p3);
    }
}

TEST_CASE("degree spectrum: three corners of degree 2, rest degree 4") {
    for (int n = 1; n <= 5; ++n) {
        SgGraph g(n);
        int deg2 = 0, deg4 = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 2)
                ++deg2;
            else if (g.degree(v) == 4)
                ++deg4;
            else
                FAIL("unexpected degree");
        }
        CHECK(deg2 == 3);
        CHECK(deg4 == g.vertex_count() - 3);
        for (int i = 0; i < 3; ++i) CHECK(g.degree(g.corner(i)) == 2);
    }
}

TEST_CASE("canonicalization is idempotent and spelling independent") {
    SgGraph g(4);
    // every raw spelling of every minimal triangle corner maps into the vertex set
    std::set<VertexAddr> seen;
    std::vector<std::uint8_t> word(4, 0);
    bool done = false;
    while (!done) {
        for (std::uint8_t c = 0; c < 3; ++c) {
            VertexAddr raw{word, c};
            VertexAddr canon = canonical(raw);
            CHECK(canonical(canon) == canon);
            g.index_of(raw);  // throws if missing
            seen.insert(canon);
        }
        done = true;
        for (int i = 3; i >= 0; --i) {
            if (++word[i] < 3) {
                done = false;
                break;
            }
            word[i] = 0;
        }
    }
    CHECK(static_cast<int>(seen.size()) == g.vertex_count());
}

TEST_CASE("address strings round trip") {
    SgGraph g(3);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto s = addr_str(g.addr(v));
        CHECK(g.index_of(parse_addr(s, 3)) == v);
    }
}

TEST_CASE("rotation: orbit of corners and cut points, three-fold identity") {
    SgGraph g(3);
    CHECK(g.rotate(g.corner(0)) == g.corner(2));  // left -> top
    CHECK(g.rotate(g.corner(2)) == g.corner(1));  // top -> right
    CHECK(g.rotate(g.corner(1)) == g.corner(0));
    // cut point opposite left -> opposite top
    CHECK(g.rotate(g.cut_point(0)) == g.cut_point(2));
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(g.rotate(g.rotate(g.rotate(v))) == v);
}

TEST_CASE("reflections are involutions with the right fixed corners") {
    SgGraph g(2);
    for (int axis = 1; axis <= 3; ++axis) {
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.reflect(axis, g.reflect(axis, v)) == v);
    }
    CHECK(g.reflect(1, g.corner(0)) == g.corner(0));
    CHECK(g.reflect(1, g.corner(1)) == g.corner(2));
    CHECK(g.reflect(2, g.corner(2)) == g.corner(2));
    CHECK(g.reflect(2, g.corner(0)) == g.corner(1));
    CHECK(g.reflect(3, g.corner(1)) == g.corner(1));
    // r = m1 composed with m2 up to labelling: check rot == reflect1(reflect2)
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(g.rotate(v) == g.reflect(1, g.reflect(2, v)));
}

TEST_CASE("symmetries preserve adjacency") {
    SgGraph g(4);
    std::set<std::pair<int, int>> eset(g.edges().begin(), g.edges().end());
    auto check_perm = [&](const CornerPerm& p) {
        for (auto [a, b] : g.edges()) {
            int ia = g.apply(p, a), ib = g.apply(p, b);
            CHECK(eset.count({std::min(ia, ib), std::max(ia, ib)}) == 1);
        }
    };
    check_perm(kRotCW);
    check_perm(kMirror1);
    check_perm(kMirror2);
    check_perm(kMirror3);
}

TEST_CASE("subtriangle embedding preserves adjacency and covers the graph") {
    for (int n = 1; n <= 4; ++n) {
        SgGraph g(n), sub(n - 1);
        std::set<std::pair<int, int>> eset(g.edges().begin(), g.edges().end());
        std::set<int> covered;
        for (int copy = 0; copy < 3; ++copy) {
            std::set<int> image;
            for (int v = 0; v < sub.vertex_count(); ++v) {
                int w = g.embed(copy, sub.addr(v));
                image.insert(w);
                covered.insert(w);
            }
            CHECK(static_cast<int>(image.size()) == sub.vertex_count());  // injective
            for (auto [a, b] : sub.edges()) {
                int ia = g.embed(copy, sub.addr(a)), ib = g.embed(copy, sub.addr(b));
                CHECK(eset.count({std::min(ia, ib), std::max(ia, ib)}) == 1);
            }
        }
        CHECK(static_cast<int>(covered.size()) == g.vertex_count());
        // gluing rule: top corner of the L copy is the cut point opposite the right corner
        CHECK(g.embed(0, sub.addr(sub.corner(2))) == g.cut_point(1));
        CHECK(g.embed(0, sub.addr(sub.corner(1))) == g.cut_point(2));
        CHECK(g.embed(2, sub.addr(sub.corner(0))) == g.cut_point(1));
    }
}

TEST_CASE("local addresses invert the embedding") {
    SgGraph g(3);
    SgGraph sub(2);
    for (int copy = 0; copy < 3; ++copy) {
        for (int v = 0; v < sub.vertex_count(); ++v) {
            int w = g.embed(copy, sub.addr(v));
            auto la = g.local_addr(copy, w);
            REQUIRE(la.has_value());
            CHECK(sub.index_of(*la) == v);
        }
    }
    // a vertex strictly inside the R copy is not in the L copy
    VertexAddr inner;
    inner.word = {1, 0};
    inner.corner = 1;
    CHECK(!g.local_addr(0, g.index_of(inner)).has_value());
}

TEST_CASE("sink contraction keeps degrees and multiplicities") {
    SgGraph g(1);
    ContractedGraph one(g, SinkSpec{{2}});
    CHECK(one.site_count() == 5);
    int bsum = 0;
    for (int v = 0; v < one.site_count(); ++v) {
        CHECK(one.degree(v) == g.degree(one.base_vertex(v)));
        bsum += one.sink_multiplicity(v);
    }
    CHECK(bsum == 2);  // the top corner of SG_1 has two incident edges

    ContractedGraph two(g, SinkSpec{{2, 1}});
    int b1 = 0;
    for (int v = 0; v < two.site_count(); ++v) b1 += two.sink_multiplicity(v);
    CHECK(b1 == 4);

    SgGraph g0(0);
    ContractedGraph all(g0, SinkSpec{{0, 1, 2}});
    CHECK(all.site_count() == 0);  // degenerate: only the sink remains
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(SgGraph(max_level() + 1), std::length_error);
}
