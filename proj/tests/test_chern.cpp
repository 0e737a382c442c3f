#include <doctest.h>

#include <string>
#include <vector>

#include "qs/chern.hpp"
#include "qs/lr.hpp"

using namespace qs;

namespace {

// Ring with rank-one bundles x1..xr (and y1..ys) whose first Chern classes
// play the role of Chern roots.
RingPtr root_ring(int r, int s, std::optional<int> cap = std::nullopt) {
    std::vector<Ring::Bundle> b;
    for (int i = 1; i <= r; ++i) b.push_back({"x" + std::to_string(i), 1});
    for (int i = 1; i <= s; ++i) b.push_back({"y" + std::to_string(i), 1});
    return Ring::make(b, cap);
}

GradedPoly root(const RingPtr& R, const std::string& name) { return GradedPoly::generator(R, name, 1); }

ChernSeries elementary(const RingPtr& R, const std::string& prefix, int r) {
    ChernSeries c = ChernSeries::one(R);
    for (int i = 1; i <= r; ++i) c = series_mul(c, ChernSeries::of_bundle(R, prefix + std::to_string(i)));
    return c;
}

// Schur polynomial as a sum over semistandard tableaux.
GradedPoly ssyt_sum(const RingPtr& R, const Partition& shape, int r) {
    const auto& rows = shape.parts();
    std::vector<std::vector<int>> t(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) t[i].assign(static_cast<std::size_t>(rows[i]), 0);
    GradedPoly total(R, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows.size()) {
            GradedPoly m(R, 1);
            for (auto& row : t)
                for (int v : row) m *= root(R, "x" + std::to_string(v));
            total += m;
            return;
        }
        if (j == t[i].size()) return self(self, i + 1, 0);
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= r; ++v) {
            t[i][j] = v;
            self(self, i, j + 1);
        }
        t[i][j] = 0;
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

TEST_CASE("series arithmetic") {
    auto R = Ring::make({{"E", 2}, {"e", 1}, {"f", 1}}, 6);
    auto cE = ChernSeries::of_bundle(R, "E");
    CHECK(series_mul(cE, ChernSeries::one(R)) == cE);
    CHECK(series_mul(cE, series_inv(cE)) == ChernSeries::one(R));
    CHECK(series_inv(series_inv(cE)) == cE);
    CHECK(series_inv(ChernSeries::one(R)) == ChernSeries::one(R));
    auto e = GradedPoly::generator(R, "e", 1);
    auto f = GradedPoly::generator(R, "f", 1);
    auto ef = series_mul(ChernSeries::of_bundle(R, "e"), ChernSeries::of_bundle(R, "f"));
    CHECK(ef[1] == e + f);
    CHECK(ef[2] == e * f);
    auto inv = series_inv(ChernSeries::of_bundle(R, "e"));
    CHECK(inv[3] == -(e * e * e));
    CHECK(series_dual(series_dual(cE)) == cE);
    auto d = series_dual(cE);
    CHECK(d[1] == -GradedPoly::generator(R, "E", 1));
    CHECK(d[2] == GradedPoly::generator(R, "E", 2));
}

TEST_CASE("uncapped inverse needs a precision") {
    auto R = Ring::make({{"E", 1}});
    auto cE = ChernSeries::of_bundle(R, "E");
    CHECK_THROWS_AS(series_inv(cE), std::domain_error);
    auto inv = series_inv(cE, 4);
    CHECK(inv[4] == GradedPoly::generator(R, "E", 1) * GradedPoly::generator(R, "E", 1) *
                        GradedPoly::generator(R, "E", 1) * GradedPoly::generator(R, "E", 1));
    CHECK_THROWS_AS(inv[5], std::domain_error);
}

TEST_CASE("schur determinant examples") {
    auto R = Ring::make({{"E", 3}});
    auto c = ChernSeries::of_bundle(R, "E");
    auto c1 = GradedPoly::generator(R, "E", 1);
    auto c2 = GradedPoly::generator(R, "E", 2);
    CHECK(schur(SkewShape(Partition{}), c) == GradedPoly(1));
    CHECK(schur(SkewShape(Partition{1, 1}), c) == c1 * c1 - c2);
    CHECK(schur(SkewShape(Partition{1}, Partition{2}), c).is_zero());
    CHECK(schur(SkewShape(Partition{2, 1}, Partition{2, 1}), ChernSeries::one(R)) == GradedPoly(1));
    // Rank vanishing: Δ_λ(E) = 0 once λ_1 > rank.
    CHECK(schur(SkewShape(Partition{4}), c).is_zero());
    CHECK_FALSE(schur(SkewShape(Partition{3, 3, 3, 3}), c).is_zero());
}

TEST_CASE("Jacobi-Trudi against tableaux: the determinant is s of the transpose") {
    for (int r = 1; r <= 4; ++r) {
        auto R = root_ring(r, 0);
        auto c = elementary(R, "x", r);
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : partitions_of(n))
                CHECK_MESSAGE(schur(SkewShape(lambda), c) == ssyt_sum(R, transpose(lambda), r),
                              "r=" << r << " lambda=" << lambda.str());
    }
}

TEST_CASE("dual Jacobi-Trudi and sign twist") {
    auto R = Ring::make({{"E", 3}}, 8);
    auto c = ChernSeries::of_bundle(R, "E");
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto sign = BigInt(n % 2 ? -1 : 1);
            CHECK(schur(SkewShape(lambda), series_inv(c)) == sign * schur(SkewShape(transpose(lambda)), c));
            CHECK(schur(SkewShape(lambda), series_dual(c)) == sign * schur(SkewShape(lambda), c));
        }
}

TEST_CASE("sum formula") {
    auto R = Ring::make({{"A", 2}, {"B", 2}, {"C", 1}}, 6);
    auto a = ChernSeries::of_bundle(R, "A");
    auto b = ChernSeries::of_bundle(R, "B");
    auto c = ChernSeries::of_bundle(R, "C");
    CHECK(sum_formula_expand(SkewShape(Partition{2, 1}), {a}) == schur(SkewShape(Partition{2, 1}), a));
    CHECK(sum_formula_expand(SkewShape(Partition{1}), {a, b}) ==
          GradedPoly::generator(R, "A", 1) + GradedPoly::generator(R, "B", 1));
    CHECK(sum_formula_expand(SkewShape(Partition{1, 1}), {a, series_inv(a)}).is_zero());
    std::vector<std::vector<ChernSeries>> lists = {{a, b}, {a, series_inv(b)}, {a, series_dual(b), c}};
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!contains(lambda, mu)) continue;
                    SkewShape s(lambda, mu);
                    for (const auto& fs : lists) {
                        ChernSeries prod = fs[0];
                        for (std::size_t i = 1; i < fs.size(); ++i) prod = series_mul(prod, fs[i]);
                        CHECK(sum_formula_expand(s, fs) == schur(s, prod));
                    }
                }
}

TEST_CASE("Schur products follow the LR rule") {
    auto R = Ring::make({{"E", 4}}, 8);
    auto c = ChernSeries::of_bundle(R, "E");
    for (int a = 0; a <= 4; ++a)
        for (const auto& mu : partitions_of(a))
            for (int b = 0; b <= 4; ++b)
                for (const auto& nu : partitions_of(b)) {
                    GradedPoly rhs(R, 0);
                    for (const auto& [lambda, k] : product_expand(mu, nu))
                        rhs += BigInt(k) * schur(SkewShape(lambda), c);
                    CHECK(schur(SkewShape(mu), c) * schur(SkewShape(nu), c) == rhs);
                }
}

TEST_CASE("tensor product Chern classes") {
    auto R = Ring::make({{"E", 1}, {"F", 1}});
    auto e = GradedPoly::generator(R, "E", 1);
    auto f = GradedPoly::generator(R, "F", 1);
    auto tot = tensor_total_chern(R, "E", "F");
    CHECK(tot.length() == 1);
    CHECK(tot[1] == e + f);
    CHECK(tensor_top_chern(R, "E", "F") == e + f);

    auto R2 = Ring::make({{"E", 2}, {"F", 1}});
    auto c1 = GradedPoly::generator(R2, "E", 1);
    auto c2 = GradedPoly::generator(R2, "E", 2);
    auto y = GradedPoly::generator(R2, "F", 1);
    CHECK(tensor_top_chern(R2, "E", "F") == c2 + c1 * y + y * y);

    auto R0 = Ring::make({{"E", 0}, {"F", 3}});
    CHECK(tensor_top_chern(R0, "E", "F") == GradedPoly(1));
}

TEST_CASE("tensor formulas against Chern roots") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            // Formal ring for the formula, root ring for the oracle; compare
            // after substituting elementary symmetric polynomials.
            auto F = Ring::make({{"E", n}, {"F", m}});
            auto total = tensor_total_chern(F, "E", "F");
            auto top = tensor_top_chern(F, "E", "F");

            auto Rr = root_ring(n, m);
            auto ex = elementary(Rr, "x", n);
            auto ey = elementary(Rr, "y", m);
            auto subst = [&](const GradedPoly& p) {
                GradedPoly out(Rr, 0);
                for (const auto& [mono, coeff] : p.terms()) {
                    GradedPoly term(Rr, coeff);
                    for (int i = 1; i <= n; ++i)
                        for (int k = 0; k < mono.exp[static_cast<std::size_t>(F->generator("E", i))]; ++k) term *= ex[i];
                    for (int j = 1; j <= m; ++j)
                        for (int k = 0; k < mono.exp[static_cast<std::size_t>(F->generator("F", j))]; ++k) term *= ey[j];
                    out += term;
                }
                return out;
            };
            GradedPoly prod(Rr, 1);
            ChernSeries full = ChernSeries::one(Rr);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j) {
                    auto s = root(Rr, "x" + std::to_string(i)) + root(Rr, "y" + std::to_string(j));
                    prod *= s;
                    full = series_mul(full, ChernSeries(Rr, {GradedPoly(Rr, 1), s}));
                }
            CHECK(subst(top) == prod);
            REQUIRE(total.length() == n * m);
            for (int k = 0; k <= n * m; ++k) CHECK(subst(total[k]) == full[k]);
        }
}
