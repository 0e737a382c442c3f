#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qs {

// A weakly decreasing integer sequence.
//
// Ordinary partitions have nonnegative parts and never store trailing zeros,
// so equality is equality of diagrams. Generalized partitions keep a fixed
// length and may have negative parts; the diagram operations below reject them.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition generalized(std::vector<int> parts);

    // "3,1"; the empty partition is "0", "-" or "".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool is_generalized() const { return generalized_; }

    // Part i (0-based); 0 past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int size() const;    // |λ|
    int length() const;  // number of nonzero parts
    bool empty() const { return length() == 0; }

    // (λ_1−λ_2, …, λ_{d−1}−λ_d) over the stored parts.
    std::vector<int> differences() const;

    std::string str() const;

    // Graded by size, then lexicographic on the parts. Generalized partitions
    // sort after ordinary ones.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
    bool generalized_ = false;
};

struct Box {
    int d = 0;  // rows
    int l = 0;  // columns

    bool contains(const Partition& lambda) const;
    std::size_t cardinality() const;  // binom(d+l, d)
    Partition full() const;           // (l^d)
    std::string str() const;

    friend bool operator==(const Box&, const Box&) = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition o) : outer(std::move(o)) {}
    SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {}

    // "2,1/1" or "2,1".
    static SkewShape parse(std::string_view text);
    std::string str() const;
};

Partition transpose(const Partition& lambda);
Partition complement(const Partition& lambda, Box box);

// μ ⊆ λ.
bool contains(const Partition& lambda, const Partition& mu);

// All of B_{d,l}, graded by size then lexicographic.
std::vector<Partition> enumerate_box(Box box);

// Partitions of size k inside the box (both bounds optional: negative = unbounded).
std::vector<Partition> partitions_of(int k, int max_rows = -1, int max_part = -1);

// All κ with inner ⊆ κ ⊆ outer.
std::vector<Partition> interval(const Partition& inner, const Partition& outer);

// λ⊘ν = (ν_1+ℓ1, …, ν_{d2}+ℓ1, λ_1, …, λ_{d1}).
Partition oslash(const Partition& lambda, Box b1, const Partition& nu, Box b2);

// λ+k on the first d parts. Ordinary when every part stays ≥ 0.
Partition shifted(const Partition& lambda, int k, int d);

// −λ = (−λ_d, …, −λ_1), generalized of length d.
Partition negated(const Partition& lambda, int d);

// (ℓ^k, λ_1, λ_2, …): k full rows of width l stacked on top, i.e. (λ^t+k)^t.
Partition stack_rows(const Partition& lambda, int k, int l);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace qs
