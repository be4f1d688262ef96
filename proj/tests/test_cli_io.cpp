#include <doctest.h>

#include <json.hpp>

#include "sierpile/rational.hpp"

using namespace sierpile;
using nlohmann::json;

TEST_CASE("rational strings round trip") {
    CHECK(rat_str(Rat(7259, 5616)) == "7259/5616");
    CHECK(rat_str(Rat(4, 2)) == "2");
    CHECK(parse_rat("7259/5616") == Rat(7259, 5616));
    CHECK(parse_rat("-3/7") == Rat(-3, 7));
    CHECK(parse_rat("12") == Rat(12));
    CHECK_THROWS(parse_rat("x/y"));
}

TEST_CASE("rational json payloads parse back") {
    json j{{"zeta", rat_str(Rat(635, 432))}};
    CHECK(parse_rat(j["zeta"].get<std::string>()) == Rat(635, 432));
}

TEST_CASE("dist helpers") {
    DescDist d = dist_point(2);
    CHECK(dist_sum(d) == 1);
    CHECK(dist_mean(d) == 2);
    CHECK(rat_pow(Rat(2, 5), 3) == Rat(8, 125));
}
