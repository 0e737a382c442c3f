#include "qs/chern.hpp"

#include <stdexcept>

namespace qs {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a != b && !a->same_as(*b)) throw std::domain_error("Chern series over different rings");
}

BigInt binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    BigInt r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

ChernSeries::ChernSeries(RingPtr ring, std::vector<GradedPoly> coeffs, bool exact)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), exact_(exact) {
    if (!ring_) throw std::domain_error("Chern series needs a ring");
    if (coeffs_.empty() || coeffs_[0] != GradedPoly(1)) throw std::domain_error("Chern series must have c_0 = 1");
    for (auto& c : coeffs_)
        if (!c.ring()) c = GradedPoly(ring_, c.constant_term());
    if (auto cap = ring_->cap(); cap && length() >= *cap) {
        coeffs_.resize(static_cast<std::size_t>(*cap) + 1);
        exact_ = true;
    }
    if (exact_)
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ChernSeries ChernSeries::one(const RingPtr& ring) { return ChernSeries(ring, {GradedPoly(ring, 1)}); }

ChernSeries ChernSeries::of_bundle(const RingPtr& ring, std::string_view symbol) {
    std::vector<GradedPoly> c;
    for (int i = 0; i <= ring->rank(symbol); ++i) c.push_back(GradedPoly::chern(ring, symbol, i));
    return ChernSeries(ring, std::move(c));
}

GradedPoly ChernSeries::operator[](int k) const {
    if (k < 0) return GradedPoly(ring_, 0);
    if (k <= length()) return coeffs_[static_cast<std::size_t>(k)];
    if (exact_ || (ring_->cap() && k > *ring_->cap())) return GradedPoly(ring_, 0);
    throw std::domain_error("Chern series coefficient " + std::to_string(k) + " beyond precision " +
                            std::to_string(length()));
}

std::string ChernSeries::str() const {
    std::string s;
    for (int k = 0; k <= length(); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[static_cast<std::size_t>(k)].str() + ")";
        if (k) s += "t^" + std::to_string(k);
    }
    if (!exact_) s += " + O(t^" + std::to_string(length() + 1) + ")";
    return s;
}

bool operator==(const ChernSeries& a, const ChernSeries& b) {
    if (a.exact_ != b.exact_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

ChernSeries series_mul(const ChernSeries& a, const ChernSeries& b) {
    require_same_ring(a.ring(), b.ring());
    const bool exact = a.exact() && b.exact();
    int top;
    if (exact) top = a.length() + b.length();
    else if (!a.exact() && !b.exact()) top = std::min(a.length(), b.length());
    else top = a.exact() ? b.length() : a.length();
    if (auto cap = a.ring()->cap()) top = std::min(top, *cap);
    std::vector<GradedPoly> c(static_cast<std::size_t>(top) + 1, GradedPoly(a.ring(), 0));
    for (int k = 0; k <= top; ++k)
        for (int i = 0; i <= k; ++i) {
            if (exact && (i > a.length() || k - i > b.length())) continue;
            c[static_cast<std::size_t>(k)] += a[i] * b[k - i];
        }
    return ChernSeries(a.ring(), std::move(c), exact);
}

ChernSeries series_inv(const ChernSeries& a, std::optional<int> precision) {
    int top;
    if (precision) top = *precision;
    else if (a.ring()->cap()) top = *a.ring()->cap();
    else throw std::domain_error("series_inv in an uncapped ring needs an explicit precision");
    std::vector<GradedPoly> b{GradedPoly(a.ring(), 1)};
    for (int k = 1; k <= top; ++k) {
        GradedPoly s(a.ring(), 0);
        for (int i = 1; i <= k; ++i) s += a[i] * b[static_cast<std::size_t>(k - i)];
        b.push_back(-s);
    }
    return ChernSeries(a.ring(), std::move(b), false);
}

ChernSeries series_dual(const ChernSeries& a) {
    std::vector<GradedPoly> c;
    for (int k = 0; k <= a.length(); ++k) c.push_back(k % 2 ? -a[k] : a[k]);
    return ChernSeries(a.ring(), std::move(c), a.exact());
}

GradedPoly schur(const SkewShape& shape, const ChernSeries& c) {
    const Partition& lambda = shape.outer;
    const Partition& mu = shape.inner;
    if (!contains(lambda, mu)) return GradedPoly(c.ring(), 0);
    if (lambda == mu) return GradedPoly(c.ring(), 1);
    const std::size_t k = lambda.parts().size();
    std::vector<std::vector<GradedPoly>> a(k, std::vector<GradedPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = c[lambda[i] - mu[j] + static_cast<int>(j) - static_cast<int>(i)];
    GradedPoly det = laplace_determinant<GradedPoly>(a, [](const GradedPoly& p) { return p.is_zero(); });
    if (!det.ring()) det = GradedPoly(c.ring(), det.constant_term());
    return det;
}

namespace {

GradedPoly chain_sum(const Partition& lambda, const Partition& from, const std::vector<ChernSeries>& factors,
                     std::size_t idx) {
    if (idx + 1 == factors.size()) return schur(SkewShape(lambda, from), factors[idx]);
    GradedPoly total(factors[idx].ring(), 0);
    for (const auto& mid : interval(from, lambda)) {
        GradedPoly head = schur(SkewShape(mid, from), factors[idx]);
        if (head.is_zero()) continue;
        total += head * chain_sum(lambda, mid, factors, idx + 1);
    }
    return total;
}

}  // namespace

GradedPoly sum_formula_expand(const SkewShape& shape, const std::vector<ChernSeries>& factors) {
    if (factors.empty()) throw std::domain_error("sum_formula_expand needs at least one factor");
    for (const auto& f : factors) require_same_ring(factors.front().ring(), f.ring());
    if (!contains(shape.outer, shape.inner)) return GradedPoly(factors.front().ring(), 0);
    return chain_sum(shape.outer, shape.inner, factors, 0);
}

BigInt tensor_coefficient(const Partition& lambda, const Partition& mu, int n) {
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                binomial(lambda[static_cast<std::size_t>(i)] + n - 1 - i, mu[static_cast<std::size_t>(j)] + n - 1 - j);
    return integer_determinant(std::move(a));
}

ChernSeries tensor_total_chern(const RingPtr& ring, std::string_view E, std::string_view F) {
    const int n = ring->rank(E);
    const int m = ring->rank(F);
    const auto cE = ChernSeries::of_bundle(ring, E);
    const auto cF = ChernSeries::of_bundle(ring, F);
    const Box box{n, m};
    std::vector<GradedPoly> c(static_cast<std::size_t>(n * m) + 1, GradedPoly(ring, 0));
    for (const auto& lambda : enumerate_box(box)) {
        GradedPoly fpart = schur(SkewShape(complement(lambda, box)), cF);
        if (fpart.is_zero()) continue;
        for (const auto& mu : interval(Partition{}, lambda)) {
            BigInt d = tensor_coefficient(lambda, mu, n);
            if (d == 0) continue;
            auto k = static_cast<std::size_t>(n * m - lambda.size() + mu.size());
            c[k] += d * (schur(SkewShape(transpose(mu)), cE) * fpart);
        }
    }
    return ChernSeries(ring, std::move(c));
}

GradedPoly tensor_top_chern(const RingPtr& ring, std::string_view E, std::string_view F) {
    const auto cE = ChernSeries::of_bundle(ring, E);
    const auto cF = ChernSeries::of_bundle(ring, F);
    GradedPoly total(ring, 0);
    for_each_tensor_top_term(ring->rank(E), ring->rank(F), [&](const Partition& lt, const Partition& lc) {
        total += schur(SkewShape(lt), cE) * schur(SkewShape(lc), cF);
    });
    return total;
}

void for_each_tensor_top_term(int n, int m, const std::function<void(const Partition&, const Partition&)>& term) {
    const Box box{n, m};
    for (const auto& lambda : enumerate_box(box)) term(transpose(lambda), complement(lambda, box));
}

BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
    // Fraction-free Bareiss elimination.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace qs
