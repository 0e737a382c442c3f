#include "qs/poly.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace qs {

std::shared_ptr<const Ring> Ring::make(std::vector<Bundle> bundles, std::optional<int> cap) {
    if (cap && *cap < 0) throw std::domain_error("negative degree cap");
    std::shared_ptr<Ring> r(new Ring());
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        if (bundles[i].rank < 0) throw std::domain_error("negative rank for " + bundles[i].symbol);
        for (std::size_t j = 0; j < i; ++j)
            if (bundles[j].symbol == bundles[i].symbol)
                throw std::domain_error("duplicate bundle symbol " + bundles[i].symbol);
        for (int k = 1; k <= bundles[i].rank; ++k) {
            r->degree_.push_back(k);
            r->name_.push_back("c" + bundles[i].symbol + std::to_string(k));
            r->symbol_of_.push_back(bundles[i].symbol);
        }
    }
    if (r->degree_.size() > static_cast<std::size_t>(kMaxGenerators))
        throw std::domain_error("too many Chern generators (max " + std::to_string(kMaxGenerators) + ")");
    r->bundles_ = std::move(bundles);
    r->cap_ = cap;
    return r;
}

bool Ring::has(std::string_view symbol) const {
    return std::any_of(bundles_.begin(), bundles_.end(), [&](const Bundle& b) { return b.symbol == symbol; });
}

int Ring::rank(std::string_view symbol) const {
    for (const auto& b : bundles_)
        if (b.symbol == symbol) return b.rank;
    throw std::domain_error("unknown bundle symbol " + std::string(symbol));
}

int Ring::generator(std::string_view symbol, int i) const {
    int offset = 0;
    for (const auto& b : bundles_) {
        if (b.symbol == symbol) {
            if (i < 1 || i > b.rank)
                throw std::domain_error("c_" + std::to_string(i) + "(" + b.symbol + ") out of range");
            return offset + i - 1;
        }
        offset += b.rank;
    }
    throw std::domain_error("unknown bundle symbol " + std::string(symbol));
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other) return true;
    if (cap_ != other.cap_ || bundles_.size() != other.bundles_.size()) return false;
    for (std::size_t i = 0; i < bundles_.size(); ++i)
        if (bundles_[i].symbol != other.bundles_[i].symbol || bundles_[i].rank != other.bundles_[i].rank)
            return false;
    return true;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxGenerators) > 0;
}

GradedPoly::GradedPoly(long long constant) : GradedPoly(BigInt(constant)) {}

GradedPoly::GradedPoly(BigInt constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, std::move(constant));
}

GradedPoly::GradedPoly(RingPtr ring, BigInt constant) : GradedPoly(std::move(constant)) { ring_ = std::move(ring); }

GradedPoly GradedPoly::generator(const RingPtr& ring, std::string_view symbol, int i) {
    GradedPoly p(ring, 0);
    int g = ring->generator(symbol, i);
    if (ring->cap() && ring->degree_of(g) > *ring->cap()) return p;
    Monomial m;
    m.exp[static_cast<std::size_t>(g)] = 1;
    m.degree = static_cast<std::uint16_t>(ring->degree_of(g));
    p.terms_.emplace_back(m, 1);
    return p;
}

GradedPoly GradedPoly::chern(const RingPtr& ring, std::string_view symbol, int i) {
    if (i == 0) return GradedPoly(ring, 1);
    if (i < 0 || i > ring->rank(symbol)) return GradedPoly(ring, 0);
    return generator(ring, symbol, i);
}

bool GradedPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }

BigInt GradedPoly::constant_term() const {
    if (!terms_.empty() && terms_.front().first.degree == 0) return terms_.front().second;
    return 0;
}

int GradedPoly::degree() const { return terms_.empty() ? -1 : terms_.back().first.degree; }

bool GradedPoly::is_homogeneous() const {
    return terms_.empty() || terms_.front().first.degree == terms_.back().first.degree;
}

void GradedPoly::adopt(const GradedPoly& o) {
    if (!o.ring_) return;
    if (!ring_) {
        ring_ = o.ring_;
        return;
    }
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw std::domain_error("polynomials from different rings");
}

void GradedPoly::add_scaled(const GradedPoly& o, int sign) {
    adopt(o);
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    MonomialOrder less;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || less(b->first, a->first)) {
            out.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
            ++b;
        } else {
            BigInt c = sign > 0 ? a->second + b->second : a->second - b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    add_scaled(o, 1);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    add_scaled(o, -1);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const BigInt& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= k;
    return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) {
    *this = *this * o;
    return *this;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    r.adopt(a);
    r.adopt(b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].first.degree == 0) {
        GradedPoly out = b;
        out.ring_ = r.ring_;
        return out *= a.terms_[0].second;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first.degree == 0) {
        GradedPoly out = a;
        out.ring_ = r.ring_;
        return out *= b.terms_[0].second;
    }
    const int cap = (r.ring_ && r.ring_->cap()) ? *r.ring_->cap() : 1 << 30;
    std::vector<GradedPoly::Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree + mb.degree > cap) break;  // b is sorted by degree
            Monomial m;
            for (int g = 0; g < kMaxGenerators; ++g)
                m.exp[static_cast<std::size_t>(g)] =
                    static_cast<std::uint8_t>(ma.exp[static_cast<std::size_t>(g)] + mb.exp[static_cast<std::size_t>(g)]);
            m.degree = static_cast<std::uint16_t>(ma.degree + mb.degree);
            prods.emplace_back(m, ca * cb);
        }
    }
    MonomialOrder less;
    std::sort(prods.begin(), prods.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    for (auto& t : prods) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second == 0) r.terms_.pop_back();
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
    return a.terms_ == b.terms_;
}

GradedPoly GradedPoly::restrict_to(const RingPtr& target) const {
    GradedPoly out(target, 0);
    if (!ring_) {
        out.terms_ = terms_;
        return out;
    }
    std::vector<int> map(static_cast<std::size_t>(ring_->num_generators()), -1);
    for (int g = 0; g < ring_->num_generators(); ++g)
        for (int h = 0; h < target->num_generators(); ++h)
            if (ring_->name_of(g) == target->name_of(h)) map[static_cast<std::size_t>(g)] = h;
    const int cap = target->cap() ? *target->cap() : 1 << 30;
    for (const auto& [m, c] : terms_) {
        if (m.degree > cap) continue;
        Monomial n;
        n.degree = m.degree;
        bool keep = true;
        for (int g = 0; g < ring_->num_generators() && keep; ++g) {
            auto e = m.exp[static_cast<std::size_t>(g)];
            if (e == 0) continue;
            if (map[static_cast<std::size_t>(g)] < 0) keep = false;
            else n.exp[static_cast<std::size_t>(map[static_cast<std::size_t>(g)])] = e;
        }
        if (keep) out.terms_.emplace_back(n, c);
    }
    MonomialOrder less;
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    return out;
}

std::string GradedPoly::monomial_string(const Monomial& m) const {
    if (m.degree == 0) return "1";
    std::string s;
    for (int g = 0; g < kMaxGenerators; ++g) {
        int e = m.exp[static_cast<std::size_t>(g)];
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += ring_ ? ring_->name_of(g) : "g" + std::to_string(g);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        BigInt a = abs(c);
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (m.degree == 0) {
            s += a.str();
        } else {
            if (a != 1) s += a.str() + "*";
            s += monomial_string(m);
        }
    }
    return s;
}

}  // namespace qs
