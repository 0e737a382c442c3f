#include "qs/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qs {

namespace {

void check_decreasing(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
}

void require_ordinary(const Partition& p, const char* what) {
    if (p.is_generalized())
        throw std::domain_error(std::string(what) + ": generalized partition not allowed");
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad partition entry '" + std::string(s) + "'");
    return v;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_decreasing(parts_);
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0)
        throw std::domain_error("ordinary partition with negative part");
}

Partition Partition::generalized(std::vector<int> parts) {
    check_decreasing(parts);
    Partition p;
    p.parts_ = std::move(parts);
    p.generalized_ = true;
    return p;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "-" || text == "0") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        parts.push_back(parse_int(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    bool negative = std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; });
    return negative ? generalized(std::move(parts)) : Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v != 0; }));
}

std::vector<int> Partition::differences() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < parts_.size(); ++i) out.push_back(parts_[i - 1] - parts_[i]);
    return out;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.generalized_ <=> b.generalized_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

bool Box::contains(const Partition& lambda) const {
    if (lambda.is_generalized()) return false;
    return lambda.length() <= d && lambda[0] <= l;
}

std::size_t Box::cardinality() const {
    if (d < 0 || l < 0) return 0;
    // binom(d+l, d) by the multiplicative formula; exact at every step.
    std::size_t r = 1;
    for (int i = 1; i <= d; ++i) r = r * static_cast<std::size_t>(l + i) / static_cast<std::size_t>(i);
    return r;
}

Partition Box::full() const { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), l)); }

std::string Box::str() const { return "B_{" + std::to_string(d) + "," + std::to_string(l) + "}"; }

SkewShape SkewShape::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const {
    return inner.empty() ? outer.str() : outer.str() + "/" + inner.str();
}

Partition transpose(const Partition& lambda) {
    require_ordinary(lambda, "transpose");
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition complement(const Partition& lambda, Box box) {
    if (!box.contains(lambda))
        throw std::domain_error("complement: " + lambda.str() + " not in " + box.str());
    std::vector<int> out(static_cast<std::size_t>(box.d));
    for (int i = 0; i < box.d; ++i) out[static_cast<std::size_t>(i)] = box.l - lambda[static_cast<std::size_t>(box.d - 1 - i)];
    return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
    require_ordinary(lambda, "contains");
    require_ordinary(mu, "contains");
    if (mu.parts().size() > lambda.parts().size()) return false;
    for (std::size_t i = 0; i < mu.parts().size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

namespace {

void fill_partitions(int remaining, int max_rows, int max_part, std::vector<int>& cur,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_rows == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        fill_partitions(remaining - p, max_rows - 1, p, cur, out);
        cur.pop_back();
    }
}

void fill_interval(const Partition& inner, const Partition& outer, std::size_t row, int cap,
                   std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == outer.parts().size()) {
        out.emplace_back(cur);
        return;
    }
    for (int v = inner[row]; v <= std::min(outer[row], cap); ++v) {
        cur.push_back(v);
        fill_interval(inner, outer, row + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_rows, int max_part) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> cur;
    fill_partitions(k, max_rows < 0 ? k : max_rows, max_part < 0 ? k : max_part, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> interval(const Partition& inner, const Partition& outer) {
    std::vector<Partition> out;
    if (!contains(outer, inner)) return out;
    std::vector<int> cur;
    fill_interval(inner, outer, 0, outer[0], cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_box(Box box) {
    if (box.d < 0 || box.l < 0) return {};
    return interval(Partition{}, box.full());
}

Partition oslash(const Partition& lambda, Box b1, const Partition& nu, Box b2) {
    if (!b1.contains(lambda) || !b2.contains(nu))
        throw std::domain_error("oslash: " + lambda.str() + " in " + b1.str() + ", " + nu.str() + " in " +
                                b2.str() + " violates membership");
    std::vector<int> out;
    for (int i = 0; i < b2.d; ++i) out.push_back(nu[static_cast<std::size_t>(i)] + b1.l);
    for (int i = 0; i < b1.d; ++i) out.push_back(lambda[static_cast<std::size_t>(i)]);
    return Partition(std::move(out));
}

Partition shifted(const Partition& lambda, int k, int d) {
    if (static_cast<int>(lambda.parts().size()) > d)
        throw std::domain_error("shifted: " + lambda.str() + " has more than " + std::to_string(d) + " parts");
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + k;
    if (!out.empty() && out.back() < 0) return Partition::generalized(std::move(out));
    return Partition(std::move(out));
}

Partition negated(const Partition& lambda, int d) {
    if (static_cast<int>(lambda.parts().size()) > d)
        throw std::domain_error("negated: " + lambda.str() + " has more than " + std::to_string(d) + " parts");
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = -lambda[static_cast<std::size_t>(d - 1 - i)];
    return Partition::generalized(std::move(out));
}

Partition stack_rows(const Partition& lambda, int k, int l) {
    require_ordinary(lambda, "stack_rows");
    if (lambda[0] > l) throw std::domain_error("stack_rows: " + lambda.str() + " wider than " + std::to_string(l));
    std::vector<int> out(static_cast<std::size_t>(k), l);
    out.insert(out.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(out));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = p.is_generalized() ? 0x9e3779b97f4a7c15ull : 0;
    for (int v : p.parts()) h = h * 1000003u ^ static_cast<std::size_t>(v + 7919);
    return h;
}

}  // namespace qs
