#include <doctest.h>

#include <stdexcept>

#include "qs/poly.hpp"

using namespace qs;

TEST_CASE("ring generators") {
    auto R = Ring::make({{"E", 3}, {"F", 2}});
    CHECK(R->num_generators() == 5);
    CHECK(R->name_of(R->generator("F", 2)) == "cF2");
    CHECK(R->degree_of(R->generator("E", 3)) == 3);
    CHECK_THROWS_AS(R->generator("E", 4), std::domain_error);
    CHECK_THROWS_AS(Ring::make({{"E", 1}, {"E", 2}}), std::domain_error);
    CHECK(GradedPoly::chern(R, "E", 0) == GradedPoly(1));
    CHECK(GradedPoly::chern(R, "E", 5).is_zero());
}

TEST_CASE("arithmetic and canonical form") {
    auto R = Ring::make({{"E", 2}, {"F", 2}});
    auto e1 = GradedPoly::generator(R, "E", 1);
    auto e2 = GradedPoly::generator(R, "E", 2);
    auto f2 = GradedPoly::generator(R, "F", 2);
    auto p = e1 * e1 * f2 * BigInt(3) - e2 + GradedPoly(1);
    CHECK(p.str() == "1 - cE2 + 3*cE1^2*cF2");
    CHECK(p.degree() == 4);
    CHECK((p - p).is_zero());
    CHECK((e1 + e2) * (e1 - e2) == e1 * e1 - e2 * e2);
    CHECK(e1 * e2 == e2 * e1);
    CHECK((e1 * e2) * f2 == e1 * (e2 * f2));
    CHECK(p.monomial_string(p.terms().back().first) == "cE1^2*cF2");
}

TEST_CASE("big coefficients stay exact") {
    auto R = Ring::make({{"E", 1}});
    auto x = GradedPoly::generator(R, "E", 1) + GradedPoly(1);
    GradedPoly p(R, 1);
    for (int i = 0; i < 80; ++i) p *= x;
    BigInt binom40 = 1;
    for (int i = 1; i <= 40; ++i) binom40 = binom40 * (80 - 40 + i) / i;
    bool found = false;
    for (const auto& [m, c] : p.terms())
        if (m.degree == 40) {
            CHECK(c == binom40);
            found = true;
        }
    CHECK(found);
    CHECK(binom40 > BigInt(std::numeric_limits<long long>::max()));
}

TEST_CASE("degree cap truncates uniformly") {
    auto R = Ring::make({{"E", 2}}, 3);
    auto e1 = GradedPoly::generator(R, "E", 1);
    auto e2 = GradedPoly::generator(R, "E", 2);
    CHECK((e2 * e2).is_zero());
    CHECK((e1 * e2).degree() == 3);
    CHECK((e1 * e1 * e1 * e1).is_zero());
}

TEST_CASE("mixing rings and restriction") {
    auto R = Ring::make({{"E", 2}, {"F", 1}});
    auto S = Ring::make({{"E", 2}});
    auto T = Ring::make({{"G", 1}});
    auto p = GradedPoly::generator(R, "E", 1) * GradedPoly::generator(R, "F", 1) + GradedPoly::generator(R, "E", 2);
    CHECK(p.restrict_to(S) == GradedPoly::generator(S, "E", 2));
    CHECK_THROWS_AS(GradedPoly::generator(R, "E", 1) + GradedPoly::generator(T, "G", 1), std::domain_error);
    CHECK(GradedPoly(2) * GradedPoly::generator(R, "F", 1) == GradedPoly::generator(R, "F", 1) * BigInt(2));
}
