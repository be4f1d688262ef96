#include <doctest.h>

#include <cmath>
#include <set>

#include "sierpile/ensembles.hpp"
#include "sierpile/heights.hpp"
#include "sierpile/oracle.hpp"

using namespace sierpile;

TEST_CASE("loop erasure unit cases") {
    CHECK(loop_erase({1, 2, 1, 3}) == std::vector<int>{1, 3});
    CHECK(loop_erase({1}) == std::vector<int>{1});
    CHECK(loop_erase({1, 2, 3, 2, 4, 1, 5}) == std::vector<int>{1, 5});
}

TEST_CASE("lerw paths are simple and end at the sink") {
    SgGraph g(2);
    ContractedGraph cg(g, SinkSpec{{2, 1}});
    CounterRng rng(31, 0);
    for (int s = 0; s < 500; ++s) {
        auto sample = lerw(cg, 0, rng);
        std::set<int> seen(sample.path.begin(), sample.path.end());
        CHECK(seen.size() == sample.path.size());
        CHECK(sample.path.front() == 0);
        CHECK(sample.path.back() == -1);
    }
    // start adjacent to the sink still yields a valid path
    auto s2 = lerw(cg, cg.site_count() - 1, rng);
    CHECK(s2.path.back() == -1);
}

TEST_CASE("wilson samples are spanning trees of the contraction") {
    SgGraph g(2);
    ContractedGraph cg(g, SinkSpec{{2}});
    for (int s = 0; s < 100; ++s) {
        CounterRng rng(17, static_cast<std::uint64_t>(s));
        auto t = wilson_sample(cg, rng);
        CHECK(tree_valid(t));
    }
}

TEST_CASE("wilson monte carlo is independent of the thread count") {
    SgGraph g(1);
    ContractedGraph cg(g, SinkSpec{{2}});
    auto a = wilson_monte_carlo(cg, 2000, 99, 1);
    auto b = wilson_monte_carlo(cg, 2000, 99, 4);
    CHECK(a.des_tallies == b.des_tallies);
    CHECK(a.edge_hits == b.edge_hits);
    CHECK(a.zeta_sum == doctest::Approx(b.zeta_sum).epsilon(1e-12));
}

TEST_CASE("wilson two-root sampling converges to the exact mixture dists") {
    SgGraph g(1);
    ContractedGraph cg(g, SinkSpec{{2, 1}});
    const long long N = 40000;
    auto st = wilson_monte_carlo(cg, N, 12345);
    auto mix = sink_desc_probs(1, 2);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int k = 0; k < 5; ++k) {
            double p = rat_double(mix[v][k]);
            double phat = static_cast<double>(st.des_tallies[v][k]) / N;
            double se = std::sqrt(std::max(p * (1 - p), 1e-12) / N);
            CHECK(std::abs(phat - p) <= 4 * se + 1e-9);
        }
    }
}

TEST_CASE("spanning tree enumeration counts") {
    SgGraph g(1);
    long long n1 = 0;
    enumerate_spanning_trees(ContractedGraph(g, SinkSpec{{2}}),
                             [&](const RootedSpanningTree&) {
                                 ++n1;
                                 return true;
                             });
    CHECK(n1 == 54);
    long long n2 = 0;
    enumerate_spanning_trees(ContractedGraph(g, SinkSpec{{2, 1}}),
                             [&](const RootedSpanningTree&) {
                                 ++n2;
                                 return true;
                             });
    CHECK(n2 == 60);
    long long n3 = 0;
    enumerate_spanning_trees(ContractedGraph(g, SinkSpec{{0, 1, 2}}),
                             [&](const RootedSpanningTree&) {
                                 ++n3;
                                 return true;
                             });
    CHECK(n3 == 50);
}

TEST_CASE("level-2 contraction enumeration classifies sigma classes") {
    SgGraph g(2);
    auto en = enumerate_contraction_trees(ContractedGraph(g, SinkSpec{{2, 1}}));
    CHECK(en.total == 972000);
    CHECK(en.counts.at(ForestClass::S2) == 486000);
    CHECK(en.counts.at(ForestClass::S3) == 486000);
}

TEST_CASE("subset enumeration thread independence") {
    auto a = enumerate_forests(1, 1);
    auto b = enumerate_forests(1, 4);
    CHECK(a.counts == b.counts);
    for (auto c : {ForestClass::T, ForestClass::S2, ForestClass::R})
        CHECK(a.tallies.at(c) == b.tallies.at(c));
}
