#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qs/partition.hpp"
#include "qs/poly.hpp"

namespace qs {

// Total Chern class c = Σ c_i t^i with c_0 = 1.
//
// An exact series is a polynomial in t: coefficients past the stored ones are
// zero. An inexact series (an inverse in an uncapped ring) is only known up
// to its precision and refuses to answer beyond it. In a capped ring every
// series is exact, because c_k with k above the cap is zero there.
class ChernSeries {
public:
    ChernSeries(RingPtr ring, std::vector<GradedPoly> coeffs, bool exact = true);

    static ChernSeries one(const RingPtr& ring);
    static ChernSeries of_bundle(const RingPtr& ring, std::string_view symbol);

    const RingPtr& ring() const { return ring_; }
    GradedPoly operator[](int k) const;
    // Highest stored index.
    int length() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool exact() const { return exact_; }
    std::string str() const;

    friend bool operator==(const ChernSeries& a, const ChernSeries& b);

private:
    RingPtr ring_;
    std::vector<GradedPoly> coeffs_;
    bool exact_ = true;
};

ChernSeries series_mul(const ChernSeries& a, const ChernSeries& b);
// Solved degree by degree up to `precision`, defaulting to the ring cap.
ChernSeries series_inv(const ChernSeries& a, std::optional<int> precision = std::nullopt);
// c_i ↦ (−1)^i c_i.
ChernSeries series_dual(const ChernSeries& a);

// Δ_{λ/μ}(c) = det(c_{λ_i−μ_j+j−i}); zero unless μ ⊆ λ.
GradedPoly schur(const SkewShape& shape, const ChernSeries& c);

// Σ over chains μ = ν⁰ ⊆ ν¹ ⊆ … ⊆ νᵏ = λ of Π Δ_{νⁱ/νⁱ⁻¹}(factor_i).
GradedPoly sum_formula_expand(const SkewShape& shape, const std::vector<ChernSeries>& factors);

// d_{λμ} = det[binom(λ_i+n−i, μ_j+n−j)]_{1≤i,j≤n}.
BigInt tensor_coefficient(const Partition& lambda, const Partition& mu, int n);

// c(E⊗F) = Σ_{μ⊆λ⊆(m^n)} d_{λμ} Δ_{μ^t}(E) Δ_{λ^c}(F) t^{nm−|λ|+|μ|}.
ChernSeries tensor_total_chern(const RingPtr& ring, std::string_view E, std::string_view F);
// c_top(E⊗F) = Σ_{λ∈B_{n,m}} Δ_{λ^t}(E) Δ_{λ^c}(F).
GradedPoly tensor_top_chern(const RingPtr& ring, std::string_view E, std::string_view F);

// Calls term(λ^t, λ^c) for each λ ∈ B_{n,m}; the caller supplies Δ_{λ^t}(A)
// and Δ_{λ^c}(B) in whatever algebra it works in, for A of rank n, B of rank m.
void for_each_tensor_top_term(int n, int m, const std::function<void(const Partition&, const Partition&)>& term);

// Determinant by Laplace expansion along rows, memoized on column subsets.
// `is_zero` lets sparse matrices skip dead branches.
template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& a, const std::function<bool(const T&)>& is_zero);

BigInt integer_determinant(std::vector<std::vector<BigInt>> a);

}  // namespace qs

#include "qs/detail/determinant.ipp"
