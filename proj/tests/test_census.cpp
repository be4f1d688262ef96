#include <doctest.h>

#include "sierpile/census.hpp"
#include "sierpile/oracle.hpp"

using namespace sierpile;

TEST_CASE("counts at small levels") {
    auto c0 = counts_recursive(0);
    CHECK(c0.tau == 3);
    CHECK(c0.sigma == 1);
    CHECK(c0.rho == 1);
    auto c1 = counts_recursive(1);
    CHECK(c1.tau == 54);
    CHECK(c1.sigma == 30);
    CHECK(c1.rho == 50);
    auto c2 = counts_recursive(2);
    CHECK(c2.tau == 524880);
    CHECK(c2.sigma == 486000);
    CHECK(c2.rho == 1350000);
}

TEST_CASE("closed forms equal the recursion for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        auto a = counts_recursive(n), b = counts_closed(n);
        CHECK(a.tau == b.tau);
        CHECK(a.sigma == b.sigma);
        CHECK(a.rho == b.rho);
    }
}

TEST_CASE("ratio identities sigma/tau and rho/sigma") {
    for (int n = 0; n <= 6; ++n) {
        auto c = counts_recursive(n);
        BigInt p5 = 1, p3 = 1;
        for (int i = 0; i < n; ++i) {
            p5 *= 5;
            p3 *= 3;
        }
        CHECK(3 * p3 * c.sigma == p5 * c.tau);      // sigma/tau = (1/3)(5/3)^n
        CHECK(p3 * c.rho == p5 * c.sigma);          // rho/sigma = (5/3)^n
    }
}

TEST_CASE("printed quadratic rho variant contradicts the closed form at n = 2") {
    auto printed = counts_recursive_printed_rho(2);
    CHECK(printed.rho == 984600);
    CHECK(printed.rho != counts_closed(2).rho);
    CHECK(counts_recursive(2).rho == counts_closed(2).rho);
}

TEST_CASE("decomposition table multiplicities") {
    long t = 0;
    for (const auto& e : decomposition_table(ForestClass::T)) t += e.multiplicity;
    CHECK(t == 6);
    CHECK(decomposition_table(ForestClass::T).size() == 6);
    long s = 0;
    for (const auto& e : decomposition_table(ForestClass::S2)) s += e.multiplicity;
    CHECK(s == 10);
    CHECK(decomposition_table(ForestClass::S2).size() == 8);
    long r = 0;
    int sss = 0, tsr = 0;
    for (const auto& e : decomposition_table(ForestClass::R)) {
        r += e.multiplicity;
        bool heavy = false;
        for (auto c : e.child)
            if (c == ForestClass::R) heavy = true;
        (heavy ? tsr : sss) += 1;
    }
    CHECK(decomposition_table(ForestClass::R).size() == 26);
    CHECK(r == 50);
    CHECK(sss == 14);
    CHECK(tsr == 12);
}

TEST_CASE("table recount reproduces the recursion") {
    for (int n = 0; n <= 4; ++n) {
        auto next = counts_recursive(n + 1);
        CHECK(table_recount(ForestClass::T, n) == next.tau);
        CHECK(table_recount(ForestClass::S1, n) == next.sigma);
        CHECK(table_recount(ForestClass::S2, n) == next.sigma);
        CHECK(table_recount(ForestClass::R, n) == next.rho);
    }
}

TEST_CASE("level-1 class counts by exhaustive subset classification") {
    auto fe = enumerate_forests(1);
    CHECK(fe.counts.at(ForestClass::T) == 54);
    CHECK(fe.counts.at(ForestClass::S1) == 30);
    CHECK(fe.counts.at(ForestClass::S2) == 30);
    CHECK(fe.counts.at(ForestClass::S3) == 30);
    CHECK(fe.counts.at(ForestClass::R) == 50);
}

TEST_CASE("level-0 R class is the empty forest") {
    auto fe = enumerate_forests(0);
    CHECK(fe.counts.at(ForestClass::R) == 1);
    CHECK(fe.counts.at(ForestClass::T) == 3);
    CHECK(fe.counts.at(ForestClass::S2) == 1);
}

TEST_CASE("kirchhoff determinants") {
    CHECK(kirchhoff_count(SgGraph(0), {}) == 3);
    CHECK(kirchhoff_count(SgGraph(1), {}) == 54);
    CHECK(kirchhoff_count(SgGraph(2), {}) == 524880);
    // trees of the contraction = 2-component forests separating the merged pair
    CHECK(kirchhoff_count(SgGraph(1), {2, 1}) == 60);
    CHECK(kirchhoff_count(SgGraph(1), {0, 1, 2}) == 50);
    CHECK(kirchhoff_count(SgGraph(2), {2, 1}) == 972000);
    CHECK(kirchhoff_count(SgGraph(2), {0, 1, 2}) == 1350000);
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(counts_recursive(census_max_level() + 1), std::length_error);
}
