#include <doctest.h>

#include "qs/suites.hpp"

using namespace qs;

TEST_CASE("suite names") {
    const auto& names = suite_names();
    CHECK(names.size() == 13);
    CHECK(names.front() == "lr-oracle");
    CHECK(names.back() == "quot-specialize");
}

TEST_CASE("single instances") {
    CHECK(run_suite("gr-duality", {{"d", 2}, {"n", 4}}).passed());
    auto box = run_suite("box", {{"d", 2}, {"l", 2}, {"delta", 1}});
    CHECK(box.passed());
    CHECK(box.cells == 6);
    CHECK(run_suite("lr-oracle", {{"mu", "2,1"}, {"nu", "2,1"}}).passed());
    CHECK(run_suite("flip", {{"n", 4}, {"m", 2}, {"dplus", 2}, {"dminus", 1}, {"nu", "1"}}).passed());
    CHECK(run_suite("stratum", {{"d", 2}, {"l", 2}, {"delta", 1}}).passed());
    CHECK(run_suite("cayley", {{"d", "2"}, {"n", "4"}}).passed());
    CHECK(run_suite("appendix-cross", {{"n", 4}, {"m", 2}, {"d", 2}}).passed());
    CHECK(run_suite("sympower", {{"g", 4}, {"n", 2}}).passed());
    CHECK(run_suite("quot-specialize", {{"d", 2}, {"delta", 3}}).passed());
}

TEST_CASE("small grids") {
    auto r = run_suite("gr-identity", {{"max_n", 3}});
    CHECK(r.passed());
    CHECK(r.observations.at("instances") == "10");
    CHECK(run_suite("appendix-top", {{"max_n", 3}, {"max_m", 1}}).passed());
    CHECK(run_suite("bz-symmetry", {{"d", 2}, {"l", 2}}).passed());
}

TEST_CASE("jobs do not change the report") {
    for (const char* s : {"gr-duality", "cayley", "appendix-lowest"}) {
        Json p{{"max_n", 4}};
        auto one = run_suite(s, p, 1).to_json().dump();
        auto four = run_suite(s, p, 4).to_json().dump();
        CHECK(one == four);
    }
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(run_suite("nosuch", Json::object()), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("box", {{"d", 2}, {"l", 2}, {"delta", 9}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("box", {{"colour", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("gr-duality", {{"d", "x"}, {"n", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("lr-oracle", {{"mu", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("cayley", {{"d", 3}, {"n", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("gr-duality", Json::array()), std::invalid_argument);
}
