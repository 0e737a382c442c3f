#include "qs/grasschow.hpp"

#include <sstream>
#include <stdexcept>

#include "qs/lr.hpp"
#include "qs/parallel.hpp"

namespace qs {

namespace {

int sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

// Looks up key under the lock, computes without it, and keeps whichever value
// landed first.
template <class Map, class Key, class Fn>
const typename Map::mapped_type& memo(std::mutex& m, Map& cache, const Key& key, Fn compute) {
    {
        std::lock_guard lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = compute();
    std::lock_guard lock(m);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

// ChowElement

GradedPoly ChowElement::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? GradedPoly() : it->second;
}

void ChowElement::add(const Partition& lambda, const GradedPoly& coeff) {
    if (coeff.is_zero()) return;
    if (model_ && !model_->box().contains(lambda))
        throw std::domain_error("partition " + lambda.str() + " outside " + model_->box().str());
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ChowElement::add_scaled(const ChowElement& other, const GradedPoly& coeff) {
    adopt(other);
    if (coeff.is_zero()) return;
    for (const auto& [lambda, c] : other.terms_) add(lambda, c * coeff);
}

void ChowElement::adopt(const ChowElement& other) {
    if (!other.model_) return;
    if (!model_) {
        model_ = other.model_;
        return;
    }
    if (model_ != other.model_) throw std::domain_error("Chow elements from different models");
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
    adopt(other);
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
    adopt(other);
    for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
    return *this;
}

ChowElement ChowElement::operator-() const {
    ChowElement r(model_);
    for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, -c);
    return r;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    const GrassBundleModel* m = a.model_ ? a.model_ : b.model_;
    if (!m) return {};
    return m->mul(a, b);
}

ChowElement operator*(const ChowElement& a, const GradedPoly& f) {
    ChowElement r(a.model_);
    r.add_scaled(a, f);
    return r;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
}

std::string ChowElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        if (!(it->second == GradedPoly(1))) out << "(" << it->second.str() << ")*";
        out << "D[" << it->first.str() << "]";
    }
    return out.str();
}

// GrassBundleModel

GrassBundleModel::GrassBundleModel(RingPtr ring, int d, int n, ChernSeries ambient)
    : ring_(std::move(ring)),
      d_(d),
      n_(n),
      ambient_(std::move(ambient)),
      inverse_(series_inv(ambient_, ring_->cap() ? std::nullopt : std::optional<int>(d * (n - d) + n))) {
    if (d < 0 || d > n) throw std::domain_error("need 0 <= d <= n");
    basis_ = enumerate_box(box());
}

std::shared_ptr<GrassBundleModel> GrassBundleModel::formal(int d, int n, const std::string& symbol,
                                                           std::optional<int> cap) {
    if (d < 0 || d > n) throw std::domain_error("need 0 <= d <= n");
    auto ring = Ring::make({{symbol, n}}, cap ? cap : std::optional<int>(d * (n - d) + n));
    auto ambient = ChernSeries::of_bundle(ring, symbol);
    return std::make_shared<GrassBundleModel>(ring, d, n, ambient);
}

void GrassBundleModel::require_box(const Partition& lambda) const {
    if (lambda.is_generalized() || !box().contains(lambda))
        throw std::domain_error("partition " + lambda.str() + " outside " + box().str());
}

void GrassBundleModel::require_same(const ChowElement& a) const {
    if (a.model() && a.model() != this) throw std::domain_error("Chow element from a different model");
}

ChowElement GrassBundleModel::pullback(const GradedPoly& base) const {
    ChowElement r(this);
    r.add(Partition{}, base.is_zero() ? base : base * GradedPoly(ring_, 1));
    return r;
}

ChowElement GrassBundleModel::basis_element(const Partition& lambda) const {
    require_box(lambda);
    ChowElement r(this);
    r.add(lambda, GradedPoly(ring_, 1));
    return r;
}

ChowElement GrassBundleModel::basis_reduce(const Partition& lambda) const {
    if (lambda.is_generalized()) throw std::domain_error("basis_reduce needs an ordinary partition");
    if (lambda.length() > d_) return zero();
    if (lambda[0] <= l()) return basis_element(lambda);
    return memo(mutex_, reduce_cache_, lambda, [&] {
        // Δ_λ(Q) = 0 since λ_1 exceeds the rank of Q.
        ChowElement r(this);
        for (const auto& mu : interval(Partition{}, lambda)) {
            if (mu == lambda) continue;
            bool too_wide = false;
            for (int i = 0; i < lambda.length(); ++i)
                if (lambda[i] - mu[i] > n_) too_wide = true;
            if (too_wide) continue;
            GradedPoly c = ambient_schur(SkewShape(lambda, mu), 1);
            if (c.is_zero()) continue;
            r.add_scaled(basis_reduce(mu), -c);
        }
        return r;
    });
}

const ChowElement& GrassBundleModel::basis_product(const Partition& a, const Partition& b) const {
    auto key = a < b ? std::pair(a, b) : std::pair(b, a);
    return memo(mutex_, product_cache_, key, [&] {
        ChowElement r(this);
        for (const auto& [nu, c] : product_expand(a, b)) {
            if (nu.length() > d_) continue;
            r.add_scaled(basis_reduce(nu), GradedPoly(ring_, BigInt(c)));
        }
        return r;
    });
}

const GradedPoly& GrassBundleModel::basis_pairing(const Partition& a, const Partition& b) const {
    auto key = a < b ? std::pair(a, b) : std::pair(b, a);
    return memo(mutex_, pairing_cache_, key, [&] {
        int excess = a.size() + b.size() - d_ * l();
        if (excess < 0 || (ring_->cap() && excess > *ring_->cap())) return GradedPoly();
        return basis_product(a, b).coefficient(box().full());
    });
}

ChowElement GrassBundleModel::mul(const ChowElement& a, const ChowElement& b) const {
    require_same(a);
    require_same(b);
    ChowElement r(this);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) r.add_scaled(basis_product(la, lb), ca * cb);
    return r;
}

GradedPoly GrassBundleModel::pushforward(const ChowElement& a) const {
    require_same(a);
    return a.coefficient(box().full());
}

GradedPoly GrassBundleModel::pairing(const ChowElement& a, const ChowElement& b) const {
    require_same(a);
    require_same(b);
    GradedPoly r;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) {
            const GradedPoly& p = basis_pairing(la, lb);
            if (!p.is_zero()) r += ca * cb * p;
        }
    return r;
}

GradedPoly GrassBundleModel::ambient_schur(const SkewShape& shape, int sign) const {
    static const std::string kE = "E", kMinusE = "-E";
    if (sign > 0) return base_schur(shape, KClass{0, false, ambient_, kE});
    return base_schur(shape, KClass{0, false, inverse_, kMinusE});
}

GradedPoly GrassBundleModel::base_schur(const SkewShape& shape, const KClass& k) const {
    if (!contains(shape.outer, shape.inner)) return {};
    if (shape.outer == shape.inner) return GradedPoly(ring_, 1);
    if (k.tag.empty()) return schur(shape, k.base);
    return memo(mutex_, base_cache_, std::tuple(k.tag, shape.outer, shape.inner),
                [&] { return schur(shape, k.base); });
}

ChowElement GrassBundleModel::delta_prime(const Partition& lambda) const {
    require_box(lambda);
    return memo(mutex_, prime_cache_, lambda, [&] {
        ChowElement r(this);
        for (const auto& mu : interval(Partition{}, lambda)) r.add(mu, ambient_schur(SkewShape(lambda, mu), 1));
        return r;
    });
}

ChowElement GrassBundleModel::from_delta_prime(const std::map<Partition, GradedPoly>& coords) const {
    ChowElement r(this);
    for (const auto& [lambda, c] : coords) r.add_scaled(delta_prime(lambda), c);
    return r;
}

std::map<Partition, GradedPoly> GrassBundleModel::to_delta_prime(const ChowElement& a) const {
    require_same(a);
    std::map<Partition, GradedPoly> r;
    for (const auto& [lambda, c] : a.terms())
        for (const auto& mu : interval(Partition{}, lambda)) {
            GradedPoly t = ambient_schur(SkewShape(lambda, mu), -1) * c;
            if (t.is_zero()) continue;
            auto [it, inserted] = r.try_emplace(mu, t);
            if (!inserted) {
                it->second += t;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

ChowElement GrassBundleModel::taut_schur(const Partition& outer, const Partition& inner, int a, bool dual) const {
    if (!contains(outer, inner)) return zero();
    if (dual) {
        ChowElement r = taut_schur(outer, inner, a, false);
        return sign_of(outer.size() - inner.size()) < 0 ? -r : r;
    }
    if (outer == inner) return one();
    if (a == 0) return zero();
    return memo(mutex_, taut_cache_, std::tuple(outer, inner, a, dual), [&] {
        ChowElement r(this);
        if (a == -1) {
            for (const auto& [rho, c] : skew_expand(outer, inner))
                r.add_scaled(basis_reduce(rho), GradedPoly(ring_, BigInt(c)));
        } else if (a == 1) {
            for (const auto& [rho, c] : skew_expand(outer, inner)) {
                BigInt s = BigInt(c) * sign_of(rho.size());
                r.add_scaled(basis_reduce(transpose(rho)), GradedPoly(ring_, s));
            }
        } else {
            int s = a > 0 ? 1 : -1;
            for (const auto& sigma : interval(inner, outer)) {
                ChowElement left = taut_schur(outer, sigma, s, false);
                if (left.is_zero()) continue;
                ChowElement right = taut_schur(sigma, inner, a - s, false);
                if (right.is_zero()) continue;
                r += mul(left, right);
            }
        }
        return r;
    });
}

ChowElement GrassBundleModel::schur_class(const SkewShape& shape, const KClass& k) const {
    ChowElement r(this);
    if (!contains(shape.outer, shape.inner)) return r;
    for (const auto& kappa : interval(shape.inner, shape.outer)) {
        GradedPoly b = base_schur(SkewShape(shape.outer, kappa), k);
        if (b.is_zero()) continue;
        r.add_scaled(taut_schur(kappa, shape.inner, k.taut, k.dual), b);
    }
    return r;
}

std::map<Partition, GradedPoly> GrassBundleModel::projector_down_all(Flavor flavor, const ChowElement& a) const {
    require_same(a);
    int sign = flavor == Flavor::Delta ? 1 : -1;
    std::map<Partition, GradedPoly> paired;
    for (const auto& mu : basis_) {
        Partition mc = complement(mu, box());
        ChowElement x = flavor == Flavor::Delta ? basis_element(mc) : delta_prime(mc);
        paired[mu] = pairing(x, a);
    }
    std::map<Partition, GradedPoly> r;
    for (const auto& lambda : basis_) {
        GradedPoly acc;
        for (const auto& [mu, p] : paired) {
            if (p.is_zero() || !contains(mu, lambda)) continue;
            acc += ambient_schur(SkewShape(mu, lambda), sign) * p;
        }
        r[lambda] = acc;
    }
    return r;
}

GradedPoly GrassBundleModel::projector_down(const Partition& lambda, Flavor flavor, const ChowElement& a) const {
    require_box(lambda);
    require_same(a);
    int sign = flavor == Flavor::Delta ? 1 : -1;
    GradedPoly acc;
    for (const auto& mu : basis_) {
        if (!contains(mu, lambda)) continue;
        Partition mc = complement(mu, box());
        ChowElement x = flavor == Flavor::Delta ? basis_element(mc) : delta_prime(mc);
        GradedPoly p = pairing(x, a);
        if (!p.is_zero()) acc += ambient_schur(SkewShape(mu, lambda), sign) * p;
    }
    return acc;
}

ChowElement GrassBundleModel::projector_up(const Partition& lambda, Flavor flavor, const GradedPoly& alpha) const {
    ChowElement x = flavor == Flavor::Delta ? basis_element(lambda) : delta_prime(lambda);
    return x * alpha;
}

// Verification

namespace {

Json model_params(const GrassBundleModel& m) { return Json{{"d", m.d()}, {"n", m.n()}}; }

}  // namespace

VerificationReport verify_duality(const GrassBundleModel& model, unsigned jobs) {
    VerificationReport report;
    report.suite = "gr-duality";
    report.params = model_params(model);
    const auto& basis = model.basis();
    std::vector<VerificationReport> parts(basis.size());
    parallel_for(basis.size(), jobs, [&](std::size_t i) {
        const Partition& lambda = basis[i];
        Partition lc = complement(lambda, model.box());
        ChowElement d_lc = model.basis_element(lc);
        ChowElement p_lc = model.delta_prime(lc);
        auto& rep = parts[i];
        for (const auto& mu : basis) {
            ChowElement d_mu = model.basis_element(mu);
            ChowElement p_mu = model.delta_prime(mu);
            GradedPoly delta(model.ring(), lambda == mu ? 1 : 0);
            auto at = [&](int id) { return Json{{"identity", id}, {"lambda", lambda.str()}, {"mu", mu.str()}}; };
            rep.check(at(1), model.ambient_schur(SkewShape(mu, lambda), -1), model.pairing(d_lc, d_mu));
            rep.check(at(2), model.ambient_schur(SkewShape(mu, lambda), 1), model.pairing(p_lc, p_mu));
            rep.check(at(3), delta, model.pairing(d_lc, p_mu));
            rep.check(at(4), delta, model.pairing(p_lc, d_mu));
        }
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

VerificationReport verify_identity(const GrassBundleModel& model, unsigned jobs) {
    VerificationReport report;
    report.suite = "gr-identity";
    report.params = model_params(model);
    const auto& basis = model.basis();
    std::vector<VerificationReport> parts(basis.size());
    parallel_for(basis.size(), jobs, [&](std::size_t i) {
        ChowElement input = model.basis_element(basis[i]);
        for (Flavor flavor : {Flavor::Delta, Flavor::DeltaPrime}) {
            ChowElement sum = model.zero();
            for (const auto& [lambda, coeff] : model.projector_down_all(flavor, input))
                sum += model.projector_up(lambda, flavor, coeff);
            for (const auto& sigma : basis)
                parts[i].check(Json{{"flavor", flavor == Flavor::Delta ? "Delta" : "DeltaPrime"},
                                    {"input", basis[i].str()},
                                    {"entry", sigma.str()}},
                               input.coefficient(sigma), sum.coefficient(sigma));
        }
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

}  // namespace qs
