#include <doctest.h>

#include <string>
#include <vector>

#include "qs/grasschow.hpp"

using namespace qs;

namespace {

GradedPoly c(const GrassBundleModel& m, int i) { return GradedPoly::chern(m.ring(), "E", i); }

BigInt factorial(int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// Degree of Gr(d, n) in the Plücker embedding.
BigInt plucker_degree(int d, int l) {
    BigInt num = factorial(d * l);
    BigInt den = 1;
    for (int i = 0; i < d; ++i) {
        num *= factorial(i);
        den *= factorial(l + i);
    }
    return num / den;
}

// Powers of ζ in Z[c(E)][ζ]/(Σ_i c_i ζ^{n−i}), computed by plain division.
std::vector<GradedPoly> zeta_power(const GrassBundleModel& m, int k) {
    int n = m.n();
    std::vector<GradedPoly> v(static_cast<std::size_t>(n), GradedPoly(m.ring(), 0));
    v[0] = GradedPoly(m.ring(), 1);
    for (int step = 0; step < k; ++step) {
        std::vector<GradedPoly> w(static_cast<std::size_t>(n), GradedPoly(m.ring(), 0));
        for (int j = 0; j + 1 < n; ++j) w[static_cast<std::size_t>(j + 1)] = v[static_cast<std::size_t>(j)];
        GradedPoly top = v[static_cast<std::size_t>(n - 1)];
        for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(n - i)] -= c(m, i) * top;
        v = w;
    }
    return v;
}

}  // namespace

TEST_CASE("reduction on the projective line bundle") {
    auto m = GrassBundleModel::formal(1, 2);
    CHECK(m->basis_reduce(Partition{1}) == m->basis_element(Partition{1}));
    ChowElement expected = m->basis_element(Partition{1}) * (-c(*m, 1)) + m->one() * (-c(*m, 2));
    CHECK(m->basis_reduce(Partition{2}) == expected);
    CHECK(m->basis_reduce(Partition{1, 1}).is_zero());
    ChowElement d1 = m->basis_element(Partition{1});
    CHECK(d1 * d1 == expected);
    CHECK(d1 * m->one() == d1);
}

TEST_CASE("rank vanishing") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            std::vector<int> parts(static_cast<std::size_t>(d + 1), 1);
            CHECK(m->basis_reduce(Partition(parts)).is_zero());
        }
}

TEST_CASE("projective bundle against polynomial division") {
    for (int n = 1; n <= 4; ++n) {
        auto m = GrassBundleModel::formal(1, n, "E", 3 * n);
        ChowElement z = m->basis_element(n > 1 ? Partition{1} : Partition{});
        if (n == 1) continue;
        ChowElement power = m->one();
        for (int k = 0; k <= 2 * n; ++k) {
            auto oracle = zeta_power(*m, k);
            for (int j = 0; j < n; ++j)
                CHECK_MESSAGE(power.coefficient(j == 0 ? Partition{} : Partition{j}) ==
                                  oracle[static_cast<std::size_t>(j)],
                              "n=" << n << " k=" << k << " j=" << j);
            power = power * z;
        }
    }
}

TEST_CASE("Plücker degree with trivial E") {
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d <= n; ++d) {
            int l = n - d;
            auto R = Ring::make({{"E", n}}, d * l + n);
            GrassBundleModel m(R, d, n, ChernSeries::one(R));
            ChowElement p = m.one();
            if (d * l > 0) {
                ChowElement s = m.basis_element(Partition{1});
                for (int i = 0; i < d * l; ++i) p = p * s;
            }
            CHECK_MESSAGE(m.pushforward(p) == GradedPoly(plucker_degree(d, l)), "d=" << d << " n=" << n);
        }
}

TEST_CASE("pushforward") {
    auto m = GrassBundleModel::formal(2, 4);
    CHECK(m->pushforward(m->basis_element(Partition{2, 2})) == GradedPoly(1));
    CHECK(m->pushforward(m->one()).is_zero());
    for (int d = 1; d <= 3; ++d)
        for (int l = 1; l <= 3; ++l) {
            auto g = GrassBundleModel::formal(d, d + l);
            for (int k = 0; k <= 2; ++k)
                for (const auto& lambda : partitions_of(k, d)) {
                    ChowElement x = g->basis_reduce(shifted(lambda, l, d));
                    CHECK_MESSAGE(g->pushforward(x) == g->ambient_schur(SkewShape(lambda), -1),
                                  "d=" << d << " l=" << l << " lambda=" << lambda.str());
                }
        }
}

TEST_CASE("top class squared") {
    for (int d = 1; d <= 3; ++d)
        for (int l = 1; l <= 3; ++l) {
            auto m = GrassBundleModel::formal(d, d + l);
            ChowElement top = m->basis_element(m->box().full());
            CHECK(m->pushforward(top * top) == m->ambient_schur(SkewShape(m->box().full()), -1));
        }
}

TEST_CASE("pushforward kills low degree") {
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d < n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            for (const auto& a : m->basis())
                for (const auto& b : m->basis())
                    if (a.size() + b.size() < d * (n - d))
                        CHECK(m->pushforward(m->basis_element(a) * m->basis_element(b)).is_zero());
        }
}

TEST_CASE("delta prime") {
    auto m = GrassBundleModel::formal(2, 4);
    CHECK(m->delta_prime(Partition{}) == m->one());
    CHECK_THROWS_AS(m->delta_prime(Partition{3}), std::domain_error);

    auto p = GrassBundleModel::formal(1, 4);
    for (int i = 0; i <= 3; ++i) {
        ChowElement expected = p->zero();
        for (int j = 0; j <= i; ++j)
            expected += p->basis_element(j == 0 ? Partition{} : Partition{j}) * c(*p, i - j);
        CHECK(p->delta_prime(i == 0 ? Partition{} : Partition{i}) == expected);
    }

    for (const auto& lambda : m->basis()) {
        CHECK(m->delta_prime(lambda) == m->schur_class(SkewShape(lambda), m->Q()));
        CHECK(m->from_delta_prime(m->to_delta_prime(m->basis_element(lambda))) == m->basis_element(lambda));
        std::map<Partition, GradedPoly> unit{{lambda, GradedPoly(m->ring(), 1)}};
        CHECK(m->to_delta_prime(m->delta_prime(lambda)) == unit);
    }
}

TEST_CASE("change of basis is unitriangular and invertible") {
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; d <= n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            for (const auto& lambda : m->basis()) {
                ChowElement p = m->delta_prime(lambda);
                CHECK(p.coefficient(lambda) == GradedPoly(1));
                for (const auto& [mu, coeff] : p.terms()) CHECK(contains(lambda, mu));
                auto back = m->to_delta_prime(m->basis_element(lambda));
                CHECK(back[lambda] == GradedPoly(1));
                for (const auto& [mu, coeff] : back) CHECK(contains(lambda, mu));
                CHECK(m->from_delta_prime(back) == m->basis_element(lambda));
            }
        }
}

TEST_CASE("tautological Schur classes") {
    auto m = GrassBundleModel::formal(2, 5);
    for (int k = 0; k <= 4; ++k)
        for (const auto& lambda : partitions_of(k)) {
            CHECK(m->schur_class(SkewShape(lambda), m->minus_U()) == m->basis_reduce(lambda));
            // −U and U are inverse K-classes.
            ChowElement sum = m->zero();
            for (const auto& mu : interval(Partition{}, lambda))
                sum += m->schur_class(SkewShape(lambda, mu), m->U()) * m->schur_class(SkewShape(mu), m->minus_U());
            CHECK((k == 0 ? sum == m->one() : sum.is_zero()));
            // Q = E − U.
            KClass q{-1, false, m->ambient(), ""};
            CHECK(m->schur_class(SkewShape(lambda), q) == m->schur_class(SkewShape(lambda), m->Q()));
            // U^∨ has c_i(U^∨) = (−1)^i c_i(U).
            ChowElement dual = m->schur_class(SkewShape(lambda), m->U_dual());
            ChowElement plain = m->schur_class(SkewShape(lambda), m->U());
            CHECK(dual == (k % 2 ? -plain : plain));
        }
    // Multiplicity two matches the product of two single copies.
    for (int k = 0; k <= 3; ++k)
        for (const auto& lambda : partitions_of(k)) {
            ChowElement sum = m->zero();
            for (const auto& mu : interval(Partition{}, lambda))
                sum += m->schur_class(SkewShape(lambda, mu), m->minus_U()) *
                       m->schur_class(SkewShape(mu), m->minus_U());
            CHECK(m->schur_class(SkewShape(lambda), KClass{-2, false, ChernSeries::one(m->ring()), ""}) == sum);
        }
    // c_k(U) vanishes above rank d.
    CHECK(m->schur_class(SkewShape(Partition{3}), m->U()).is_zero());
    CHECK_FALSE(m->schur_class(SkewShape(Partition{1, 1, 1}), m->U()).is_zero());
}

TEST_CASE("multiplication is commutative and associative") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            for (const auto& a : m->basis())
                for (const auto& b : m->basis()) {
                    ChowElement x = m->basis_element(a), y = m->basis_element(b);
                    ChowElement xy = x * y;
                    CHECK(xy == y * x);
                    for (const auto& c3 : m->basis()) {
                        ChowElement z = m->basis_element(c3);
                        CHECK(xy * z == x * (y * z));
                    }
                }
        }
}

TEST_CASE("projectors") {
    auto m = GrassBundleModel::formal(2, 4);
    for (Flavor f : {Flavor::Delta, Flavor::DeltaPrime})
        for (const auto& lambda : m->basis())
            for (const auto& mu : m->basis()) {
                GradedPoly got = m->projector_down(lambda, f, m->projector_up(mu, f, GradedPoly(m->ring(), 1)));
                CHECK(got == GradedPoly(lambda == mu ? 1 : 0));
            }
    auto R = Ring::make({{"E", 4}}, 8);
    GrassBundleModel t(R, 2, 4, ChernSeries::one(R));
    for (const auto& lambda : t.basis()) {
        ChowElement a = t.basis_element(Partition{1}) * t.basis_element(Partition{2, 1});
        CHECK(t.projector_down(lambda, Flavor::Delta, a) ==
              t.pushforward(t.basis_element(complement(lambda, t.box())) * a));
    }
    auto all = m->projector_down_all(Flavor::DeltaPrime, m->basis_element(Partition{2, 1}));
    for (const auto& lambda : m->basis())
        CHECK(all[lambda] == m->projector_down(lambda, Flavor::DeltaPrime, m->basis_element(Partition{2, 1})));
}

TEST_CASE("duality") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            auto rep = verify_duality(*m);
            CHECK_MESSAGE(rep.passed(), rep.to_text());
            CHECK(rep.cells == 4 * m->basis().size() * m->basis().size());
        }
}

TEST_CASE("duality pairing is the identity up to d+l = 7") {
    for (int n = 6; n <= 7; ++n)
        for (int d = 0; d <= n; ++d) {
            auto m = GrassBundleModel::formal(d, n);
            for (const auto& lambda : m->basis()) {
                ChowElement x = m->basis_element(complement(lambda, m->box()));
                for (const auto& mu : m->basis())
                    CHECK(m->pairing(x, m->delta_prime(mu)) == GradedPoly(lambda == mu ? 1 : 0));
            }
        }
}

TEST_CASE("identity decomposition") {
    for (auto [d, n] : std::vector<std::pair<int, int>>{{0, 0}, {0, 3}, {1, 2}, {2, 4}, {2, 5}, {3, 3}}) {
        auto m = GrassBundleModel::formal(d, n);
        auto rep = verify_identity(*m, 2);
        CHECK_MESSAGE(rep.passed(), rep.to_text());
    }
}

TEST_CASE("model mismatch") {
    auto a = GrassBundleModel::formal(1, 2);
    auto b = GrassBundleModel::formal(1, 2);
    CHECK_THROWS_AS(a->mul(a->one(), b->one()), std::domain_error);
    CHECK_THROWS_AS(a->basis_element(Partition{2}), std::domain_error);
}
