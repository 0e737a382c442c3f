#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qs/bigint.hpp"

namespace qs {

inline constexpr int kMaxGenerators = 16;

// Formal bundles (symbol, rank) generating Z[c_i(symbol) : 1 ≤ i ≤ rank],
// with c_i of degree i, and an optional degree cap above which every monomial
// is dropped. The cap is a graded ideal, so truncated arithmetic is exact in
// every degree up to the cap.
class Ring {
public:
    struct Bundle {
        std::string symbol;
        int rank = 0;
    };

    static std::shared_ptr<const Ring> make(std::vector<Bundle> bundles, std::optional<int> cap = std::nullopt);

    const std::vector<Bundle>& bundles() const { return bundles_; }
    std::optional<int> cap() const { return cap_; }
    bool has(std::string_view symbol) const;
    int rank(std::string_view symbol) const;

    int num_generators() const { return static_cast<int>(degree_.size()); }
    // Index of c_i(symbol), 1 ≤ i ≤ rank.
    int generator(std::string_view symbol, int i) const;
    int degree_of(int g) const { return degree_[static_cast<std::size_t>(g)]; }
    const std::string& name_of(int g) const { return name_[static_cast<std::size_t>(g)]; }

    bool same_as(const Ring& other) const;

private:
    Ring() = default;
    std::vector<Bundle> bundles_;
    std::optional<int> cap_;
    std::vector<int> degree_;
    std::vector<std::string> name_;
    std::vector<std::string> symbol_of_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Monomial {
    std::array<std::uint8_t, kMaxGenerators> exp{};
    std::uint16_t degree = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Ascending degree; inside a degree, larger exponents on earlier generators
// first (so cE1^2 precedes cE2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact polynomial over Z in the generators of a Ring, stored as a sorted
// vector of (monomial, nonzero coefficient). A default-constructed value is
// the zero constant without a ring; constants adopt the ring of whatever they
// meet.
class GradedPoly {
public:
    using Term = std::pair<Monomial, BigInt>;

    GradedPoly() = default;
    GradedPoly(long long constant);  // NOLINT(google-explicit-constructor)
    explicit GradedPoly(BigInt constant);
    GradedPoly(RingPtr ring, BigInt constant);

    static GradedPoly generator(const RingPtr& ring, std::string_view symbol, int i);
    // c_i(symbol): 1 for i = 0, 0 for i < 0 or i > rank.
    static GradedPoly chern(const RingPtr& ring, std::string_view symbol, int i);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigInt constant_term() const;
    int degree() const;  // −1 for zero
    bool is_homogeneous() const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const GradedPoly& o);
    GradedPoly& operator*=(const BigInt& k);
    GradedPoly operator-() const;

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(GradedPoly a, const BigInt& k) { return a *= k; }
    friend GradedPoly operator*(const BigInt& k, GradedPoly a) { return a *= k; }
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

    // Move to `target`, matching generators by name; monomials that use a
    // generator missing from `target` are dropped (set to zero).
    GradedPoly restrict_to(const RingPtr& target) const;

    // "3*cE1^2*cF2 - cE2 + 1"; "0" for zero.
    std::string str() const;
    // "cE1^2*cF2"; "1" for the constant monomial.
    std::string monomial_string(const Monomial& m) const;

private:
    void adopt(const GradedPoly& o);
    void add_scaled(const GradedPoly& o, int sign);

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace qs
