#include "qs/projectors.hpp"

#include <set>
#include <stdexcept>

#include "qs/parallel.hpp"

namespace qs {

namespace {

int sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

std::string set_str(const std::set<Partition>& s) {
    std::string r = "{";
    for (const auto& p : s) r += (r.size() > 1 ? " " : "") + p.str();
    return r + "}";
}

// Σ_λ Δ_λ·c_λ, or Σ_λ Δ'_λ·c_λ.
ChowElement lift(const GrassBundleModel& G, const std::map<Partition, GradedPoly>& coords, Flavor flavor) {
    ChowElement r = G.zero();
    for (const auto& [lambda, c] : coords) {
        if (c.is_zero()) continue;
        r += (flavor == Flavor::Delta ? G.basis_element(lambda) : G.delta_prime(lambda)) * c;
    }
    return r;
}

void compare_elements(VerificationReport& report, const GrassBundleModel& G, Json where, const ChowElement& expected,
                      const ChowElement& actual) {
    for (const auto& kappa : G.basis()) {
        where["coefficient"] = kappa.str();
        report.check(where, expected.coefficient(kappa), actual.coefficient(kappa));
    }
}

// Checks coords[λ] = sign·δ_{λμ} for every λ in `box`.
void check_delta(VerificationReport& report, const std::string& name, const std::vector<Partition>& box,
                 const Partition& mu, const std::map<Partition, GradedPoly>& coords, int sign) {
    for (const auto& lambda : box) {
        auto it = coords.find(lambda);
        GradedPoly actual = it == coords.end() ? GradedPoly(0) : it->second;
        report.check(Json{{"check", name}, {"lambda", lambda.str()}, {"mu", mu.str()}},
                     GradedPoly(lambda == mu ? sign : 0), actual);
    }
}

void check_zero(VerificationReport& report, const std::string& name, const Partition& input,
                const std::map<Partition, GradedPoly>& coords) {
    for (const auto& [lambda, c] : coords)
        report.check(Json{{"check", name}, {"lambda", lambda.str()}, {"input", input.str()}}, GradedPoly(0), c);
}

// The constant s with coords = s·δ over the box, if there is one.
std::optional<int> uniform_sign(const std::vector<Partition>& box, const Partition& mu,
                                const std::map<Partition, GradedPoly>& coords) {
    std::optional<int> s;
    for (const auto& lambda : box) {
        auto it = coords.find(lambda);
        GradedPoly c = it == coords.end() ? GradedPoly(0) : it->second;
        if (lambda != mu) {
            if (!c.is_zero()) return std::nullopt;
            continue;
        }
        if (c == GradedPoly(1)) s = 1;
        else if (c == GradedPoly(-1)) s = -1;
        else return std::nullopt;
    }
    return s;
}

void merge_all(VerificationReport& report, const std::vector<VerificationReport>& parts) {
    for (const auto& p : parts) report.merge(p);
}

}  // namespace

StrataModel::StrataModel(int n, int m, int d, bool trivial_f) : n_(n), m_(m), d_(d) {
    if (n < 1 || m < 0 || d < 1 || d > n) throw std::domain_error("need 1 <= d <= n and m >= 0");
    if (trivial_f && m != 1) throw std::domain_error("a trivial F has rank 1");
    std::vector<Ring::Bundle> bundles{{"E", n}};
    if (!trivial_f && m > 0) bundles.push_back({"F", m});
    auto ring = Ring::make(bundles, d * l() + n + m);
    auto cE = ChernSeries::of_bundle(ring, "E");
    auto cF = trivial_f || m == 0 ? ChernSeries::one(ring) : ChernSeries::of_bundle(ring, "F");
    auto cEv = series_dual(cE);
    auto cFv = series_dual(cF);
    series_.emplace("Ev", cEv);
    series_.emplace("-Ev", series_inv(cEv));
    series_.emplace("-E", series_inv(cE));
    series_.emplace("F", cF);
    series_.emplace("Fv", cFv);
    series_.emplace("-Fv", series_inv(cFv));
    series_.emplace("Gv", series_mul(cEv, series_inv(cFv)));
    series_.emplace("-Gv", series_mul(series_inv(cEv), cFv));
    series_.emplace("-Ev-Fv", series_inv(series_mul(cEv, cFv)));
    series_.emplace("Ev+Fv", series_mul(cEv, cFv));
    G_ = std::make_shared<GrassBundleModel>(ring, d, n, cEv);
    if (has_top()) top_ = enumerate_box(top_box());
    if (has_low()) low_ = enumerate_box(low_box());

    const auto& G = *G_;
    c_ = G.zero();
    for_each_tensor_top_term(d, m, [&](const Partition& lt, const Partition& lc) {
        GradedPoly f = base("Fv", SkewShape(lc));
        if (!f.is_zero()) c_ += G.schur_class(SkewShape(lt), G.U_dual()) * f;
    });
    d_class_ = G.zero();
    for_each_tensor_top_term(l(), m, [&](const Partition& lt, const Partition& lc) {
        GradedPoly f = base("Fv", SkewShape(lc));
        if (!f.is_zero()) d_class_ += G.schur_class(SkewShape(lt), G.Q_dual()) * f;
    });
}

Json StrataModel::params() const { return Json{{"n", n_}, {"m", m_}, {"d", d_}}; }

GradedPoly StrataModel::base(const std::string& name, const SkewShape& shape) const {
    auto key = std::tuple(name, shape.outer, shape.inner);
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto s = series_.find(name);
    if (s == series_.end()) throw std::domain_error("unknown base class " + name);
    GradedPoly v = schur(shape, s->second);
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(v)).first->second;
}

ChowElement StrataModel::C_alternative() const {
    ChowElement r = G_->zero();
    Box b{d_, m_};
    for (const auto& nu : enumerate_box(b)) {
        GradedPoly f = base("Fv", SkewShape(nu));
        if (!f.is_zero()) r += G_->basis_reduce(complement(nu, b)) * f;
    }
    return r;
}

ChowElement StrataModel::D_alternative() const {
    ChowElement r = G_->zero();
    Box b{l(), m_};
    KClass minus_q_dual{1, true, series_.at("-E"), "-E"};
    for (const auto& nu : enumerate_box(b)) {
        GradedPoly f = base("F", SkewShape(nu));
        if (!f.is_zero()) r += G_->schur_class(SkewShape(complement(nu, b)), minus_q_dual) * f;
    }
    return r * GradedPoly(sign_of(m_ * l()));
}

std::map<Partition, GradedPoly> StrataModel::pi_down(const ChowElement& w) const {
    Box tb = top_box();
    std::map<Partition, GradedPoly> pair;
    for (const auto& tau : top_) pair[tau] = G_->pairing(G_->basis_element(complement(tau, tb)), w);
    std::map<Partition, GradedPoly> out;
    for (const auto& lambda : top_) {
        GradedPoly s(G_->ring(), 0);
        for (const auto& tau : top_)
            if (contains(tau, lambda) && !pair[tau].is_zero()) s += base("Gv", SkewShape(tau, lambda)) * pair[tau];
        out[lambda] = s;
    }
    return out;
}

std::map<Partition, GradedPoly> StrataModel::pi_q_down(const ChowElement& w) const {
    auto pi = pi_down(w);
    std::map<Partition, GradedPoly> out;
    for (const auto& lambda : top_) {
        GradedPoly s(G_->ring(), 0);
        for (const auto& mu : top_)
            if (contains(mu, lambda) && !pi[mu].is_zero()) s += base("-Ev", SkewShape(mu, lambda)) * pi[mu];
        out[lambda] = s;
    }
    return out;
}

std::map<Partition, GradedPoly> StrataModel::gamma_down(const ChowElement& z) const {
    Box lb = low_box();
    std::map<Partition, GradedPoly> pair;
    for (const auto& mu : low_) pair[mu] = G_->pairing(G_->delta_prime(complement(mu, lb)), z);
    std::map<Partition, GradedPoly> out;
    for (const auto& lambda : low_) {
        GradedPoly s(G_->ring(), 0);
        for (const auto& mu : low_)
            if (contains(mu, lambda) && !pair[mu].is_zero()) s += base("-Gv", SkewShape(mu, lambda)) * pair[mu];
        out[lambda] = s;
    }
    return out;
}

std::map<Partition, GradedPoly> StrataModel::gamma_u_down(const ChowElement& z) const {
    auto g = gamma_down(z);
    std::map<Partition, GradedPoly> out;
    for (const auto& lambda : low_) {
        GradedPoly s(G_->ring(), 0);
        for (const auto& mu : low_)
            if (contains(mu, lambda) && !g[mu].is_zero()) s += base("Ev", SkewShape(mu, lambda)) * g[mu];
        out[lambda] = s;
    }
    return out;
}

VerificationReport appendix_top_projectors(int n, int m, int d, unsigned jobs) {
    StrataModel S(n, m, d);
    VerificationReport report;
    report.suite = "appendix-top";
    report.params = S.params();
    if (!S.has_top()) {
        report.observe("empty_box", S.top_box().str());
        return report;
    }
    const auto& G = S.G();
    const auto& top = S.top_basis();
    Box tb = S.top_box();
    report.check(Json{{"check", "excess-class"}}, S.C() == S.C_alternative(), S.C_alternative().str(), S.C().str());

    std::vector<VerificationReport> parts(top.size());
    parallel_for(top.size(), jobs, [&](std::size_t k) {
        const auto& mu = top[k];
        check_delta(parts[k], "orthonormality", top, mu, S.pi_down(S.C() * G.basis_element(mu)), 1);
        check_delta(parts[k], "orthonormality-Q", top, mu, S.pi_q_down(S.C() * G.delta_prime(mu)), 1);
    });
    merge_all(report, parts);

    // Endomorphisms are tested on ι^*Δ_κ for every κ ∈ B_{d,ℓ}; ι_* of it is C·Δ_κ.
    const auto& inputs = G.basis();
    std::vector<VerificationReport> more(inputs.size());
    parallel_for(inputs.size(), jobs, [&](std::size_t k) {
        const auto& kappa = inputs[k];
        auto& rep = more[k];
        ChowElement w = S.C() * G.basis_element(kappa);
        auto pi = S.pi_down(w);
        auto piq = S.pi_q_down(w);

        std::map<Partition, GradedPoly> q;
        for (const auto& nu : top) q[nu] = G.projector_down(shifted(nu, m, d), Flavor::Delta, w);
        for (const auto& lambda : top) {
            GradedPoly rhs(G.ring(), 0);
            for (const auto& nu : top)
                if (contains(nu, lambda) && !q[nu].is_zero()) rhs += S.base("-Fv", SkewShape(nu, lambda)) * q[nu];
            rep.check(Json{{"check", "pi.vs.q"}, {"lambda", lambda.str()}, {"input", kappa.str()}}, rhs, pi[lambda]);
        }

        for (const auto& lambda : top) {
            GradedPoly rhs(G.ring(), 0);
            for (const auto& tau : top)
                if (contains(tau, lambda))
                    rhs += S.base("-Ev-Fv", SkewShape(tau, lambda)) *
                           G.pairing(G.delta_prime(complement(tau, tb)), w);
            rep.check(Json{{"check", "explicit-Q"}, {"lambda", lambda.str()}, {"input", kappa.str()}}, rhs,
                      piq[lambda]);
        }

        ChowElement P = lift(G, pi, Flavor::Delta);
        compare_elements(rep, G, Json{{"check", "composite"}, {"input", kappa.str()}}, P,
                         lift(G, piq, Flavor::DeltaPrime));
        compare_elements(rep, G, Json{{"check", "idempotent"}, {"input", kappa.str()}}, P,
                         lift(G, S.pi_down(S.C() * P), Flavor::Delta));
    });
    merge_all(report, more);
    return report;
}

VerificationReport appendix_lowest_projectors(int n, int m, int d, unsigned jobs) {
    StrataModel S(n, m, d);
    VerificationReport report;
    report.suite = "appendix-lowest";
    report.params = S.params();
    if (!S.has_low()) {
        report.observe("empty_box", S.low_box().str());
        return report;
    }
    const auto& G = S.G();
    const auto& low = S.low_basis();
    Box lb = S.low_box();
    int sign = sign_of(S.l() * m);
    report.observe("expected_sign", std::to_string(sign));
    report.check(Json{{"check", "excess-class"}}, S.D() == S.D_alternative(), S.D_alternative().str(), S.D().str());

    auto diag = S.gamma_down(S.D() * G.delta_prime(Partition{}));
    auto computed = uniform_sign(low, Partition{}, diag);
    report.observe("computed_sign", computed ? std::to_string(*computed) : "none");

    std::vector<VerificationReport> parts(low.size());
    parallel_for(low.size(), jobs, [&](std::size_t k) {
        const auto& mu = low[k];
        check_delta(parts[k], "orthonormality", low, mu, S.gamma_down(S.D() * G.delta_prime(mu)), sign);
        check_delta(parts[k], "orthonormality-U", low, mu, S.gamma_u_down(S.D() * G.basis_element(mu)), sign);
    });
    merge_all(report, parts);

    // Inputs are j^*x = Δ_κ on G_Z.
    const auto& inputs = G.basis();
    std::vector<VerificationReport> more(inputs.size());
    parallel_for(inputs.size(), jobs, [&](std::size_t k) {
        const auto& kappa = inputs[k];
        auto& rep = more[k];
        ChowElement z = G.basis_element(kappa);
        auto g = S.gamma_down(z);
        auto gu = S.gamma_u_down(z);

        std::map<Partition, GradedPoly> p;
        for (const auto& mu : low) p[mu] = G.projector_down(stack_rows(mu, m, S.l()), Flavor::DeltaPrime, z);
        for (const auto& lambda : low) {
            GradedPoly rhs(G.ring(), 0);
            for (const auto& mu : low)
                if (contains(mu, lambda) && !p[mu].is_zero()) rhs += S.base("Fv", SkewShape(mu, lambda)) * p[mu];
            rep.check(Json{{"check", "gamma.vs.p"}, {"lambda", lambda.str()}, {"input", kappa.str()}}, rhs,
                      g[lambda]);
        }

        for (const auto& lambda : low) {
            GradedPoly rhs(G.ring(), 0);
            for (const auto& mu : low)
                if (contains(mu, lambda))
                    rhs += S.base("Ev+Fv", SkewShape(mu, lambda)) * G.pairing(G.basis_element(complement(mu, lb)), z);
            rep.check(Json{{"check", "explicit-U"}, {"lambda", lambda.str()}, {"input", kappa.str()}}, rhs,
                      gu[lambda]);
        }

        compare_elements(rep, G, Json{{"check", "composite"}, {"input", kappa.str()}}, lift(G, g, Flavor::DeltaPrime),
                         lift(G, gu, Flavor::Delta));
        ChowElement L = lift(G, S.gamma_down(S.D() * z), Flavor::DeltaPrime);
        ChowElement LL = lift(G, S.gamma_down(S.D() * L), Flavor::DeltaPrime);
        compare_elements(rep, G, Json{{"check", "idempotent-up-to-sign"}, {"input", kappa.str()}},
                         L * GradedPoly(sign), LL);
    });
    merge_all(report, more);
    return report;
}

VerificationReport appendix_cross_orthogonality(int n, int m, int d, unsigned jobs) {
    StrataModel S(n, m, d);
    VerificationReport report;
    report.suite = "appendix-cross";
    report.params = S.params();
    if (m < 1) {
        report.observe("vacuous", "m = 0");
        return report;
    }
    const auto& G = S.G();
    const auto& top = S.top_basis();
    const auto& low = S.low_basis();
    int l = S.l();

    std::set<Partition> shifted_top, stacked_low;
    for (const auto& nu : top) shifted_top.insert(shifted(nu, m, d));
    for (const auto& nu : low) stacked_low.insert(stack_rows(nu, m, l));
    std::set<Partition> hit;
    for (const auto& p : low)
        if (shifted_top.count(p)) hit.insert(p);
    report.check(Json{{"check", "disjoint-top"}}, hit.empty(), "{}", set_str(hit));
    hit.clear();
    for (const auto& p : top)
        if (stacked_low.count(p)) hit.insert(p);
    report.check(Json{{"check", "disjoint-low"}}, hit.empty(), "{}", set_str(hit));

    // Reduced forms: q_{ν+m,*}q^*_μ = 0 for μ in the low box and
    // p'_{(ν^t+m)^t*}p'^*_λ = 0 for λ in the top box.
    for (const auto& nu : top)
        for (const auto& mu : low)
            report.check(Json{{"check", "reduced-q"}, {"nu", nu.str()}, {"mu", mu.str()}}, GradedPoly(0),
                         G.projector_down(shifted(nu, m, d), Flavor::Delta, G.basis_element(mu)));
    for (const auto& nu : low)
        for (const auto& lambda : top)
            report.check(Json{{"check", "reduced-p"}, {"nu", nu.str()}, {"lambda", lambda.str()}}, GradedPoly(0),
                         G.projector_down(stack_rows(nu, m, l), Flavor::DeltaPrime, G.delta_prime(lambda)));

    // The eight composites, computed on G_Z after the projection formula.
    std::vector<VerificationReport> parts(low.size() + top.size());
    parallel_for(parts.size(), jobs, [&](std::size_t k) {
        auto& rep = parts[k];
        if (k < low.size()) {
            const auto& mu = low[k];
            if (top.empty()) return;
            check_zero(rep, "pi*Gamma", mu, S.pi_down(G.delta_prime(mu)));
            check_zero(rep, "pi*GammaU", mu, S.pi_down(G.basis_element(mu)));
            check_zero(rep, "piQ*Gamma", mu, S.pi_q_down(G.delta_prime(mu)));
            check_zero(rep, "piQ*GammaU", mu, S.pi_q_down(G.basis_element(mu)));
        } else {
            const auto& lambda = top[k - low.size()];
            if (low.empty()) return;
            check_zero(rep, "Gamma*pi", lambda, S.gamma_down(G.basis_element(lambda)));
            check_zero(rep, "Gamma*piQ", lambda, S.gamma_down(G.delta_prime(lambda)));
            check_zero(rep, "GammaU*pi", lambda, S.gamma_u_down(G.basis_element(lambda)));
            check_zero(rep, "GammaU*piQ", lambda, S.gamma_u_down(G.delta_prime(lambda)));
        }
    });
    merge_all(report, parts);
    return report;
}

VerificationReport cayley_relations(int d, int n, unsigned jobs) {
    if (d < 1 || d > n - 1) throw std::domain_error("need 1 <= d <= n-1");
    StrataModel S(n, 1, d, true);
    VerificationReport report;
    report.suite = "cayley";
    report.params = Json{{"d", d}, {"n", n}};
    const auto& G = S.G();
    int l = S.l();
    const auto& top = S.top_basis();  // B_{d,ℓ−1}
    const auto& low = S.low_basis();  // B_{d−1,ℓ}
    report.observe("top_box_size", std::to_string(top.size()));
    report.observe("low_box_size", std::to_string(low.size()));

    ChowElement column = G.basis_element(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)));
    ChowElement row = G.delta_prime(Partition{l});
    report.check(Json{{"check", "excess-class-top"}}, S.C() == column, column.str(), S.C().str());
    report.check(Json{{"check", "excess-class-low"}}, S.D() == row * GradedPoly(sign_of(l)),
                 (row * GradedPoly(sign_of(l))).str(), S.D().str());

    // (a)
    std::vector<VerificationReport> parts(top.size());
    parallel_for(top.size(), jobs, [&](std::size_t k) {
        const auto& mu = top[k];
        ChowElement w = column * G.basis_element(mu);
        std::map<Partition, GradedPoly> reduced;
        for (const auto& lambda : top) reduced[lambda] = G.projector_down(shifted(lambda, 1, d), Flavor::Delta, w);
        check_delta(parts[k], "a-reduced", top, mu, reduced, 1);
        check_delta(parts[k], "a-expanded", top, mu, S.pi_down(w), 1);
    });
    merge_all(report, parts);

    // (b): the reduced form with c_ℓ(𝒬) for j^*j_*, and the same composite with
    // the excess class c_ℓ(𝒬^∨); the constant in front of δ is reported.
    std::optional<int> reduced_sign, excess_sign;
    bool reduced_uniform = true, excess_uniform = true;
    for (const auto& tau : low) {
        Partition stacked = stack_rows(tau, 1, l);
        report.check(Json{{"check", "b-row-product"}, {"tau", tau.str()}}, row * G.delta_prime(tau) ==
                     G.delta_prime(stacked), G.delta_prime(stacked).str(), (row * G.delta_prime(tau)).str());
        std::map<Partition, GradedPoly> reduced;
        for (const auto& nu : low)
            reduced[nu] = G.projector_down(stack_rows(nu, 1, l), Flavor::DeltaPrime, row * G.delta_prime(tau));
        auto excess = S.gamma_down(S.D() * G.delta_prime(tau));
        auto rs = uniform_sign(low, tau, reduced);
        auto es = uniform_sign(low, tau, excess);
        report.check(Json{{"check", "b-reduced-diagonal"}, {"tau", tau.str()}}, rs.has_value(), "±delta", "other");
        report.check(Json{{"check", "b-excess-diagonal"}, {"tau", tau.str()}}, es.has_value(), "±delta", "other");
        if (rs && reduced_sign && *rs != *reduced_sign) reduced_uniform = false;
        if (es && excess_sign && *es != *excess_sign) excess_uniform = false;
        if (rs && !reduced_sign) reduced_sign = rs;
        if (es && !excess_sign) excess_sign = es;
    }
    report.check(Json{{"check", "b-sign-uniform"}}, reduced_uniform && excess_uniform);
    report.observe("stated_sign", std::to_string(sign_of(l)));
    report.observe("sign_with_c_l(Q)", reduced_sign ? std::to_string(*reduced_sign) : "none");
    report.observe("sign_with_c_l(Q^v)", excess_sign ? std::to_string(*excess_sign) : "none");

    // Γ_{ν*} = p'_{(ν^t+1)^t*} j^*, on every input of G_Z.
    for (const auto& kappa : G.basis()) {
        ChowElement z = G.basis_element(kappa);
        auto g = S.gamma_down(z);
        for (const auto& nu : low)
            report.check(Json{{"check", "b-index"}, {"nu", nu.str()}, {"input", kappa.str()}},
                         G.projector_down(stack_rows(nu, 1, l), Flavor::DeltaPrime, z), g[nu]);
    }

    // (c)
    std::set<Partition> shifted_top, stacked_low;
    for (const auto& lambda : top) shifted_top.insert(shifted(lambda, 1, d));
    for (const auto& nu : low) stacked_low.insert(stack_rows(nu, 1, l));
    std::set<Partition> hit;
    for (const auto& p : low)
        if (shifted_top.count(p)) hit.insert(p);
    report.check(Json{{"check", "c-disjoint"}}, hit.empty(), "{}", set_str(hit));
    std::set<Partition> full = as_set(G.basis()), rest, outside_top;
    for (const auto& p : full) {
        if (!shifted_top.count(p)) rest.insert(p);
        if (!S.top_box().contains(p)) outside_top.insert(p);
    }
    report.check(Json{{"check", "c-complement-shifted"}}, rest == as_set(low), set_str(as_set(low)), set_str(rest));
    report.check(Json{{"check", "c-complement-stacked"}}, outside_top == stacked_low, set_str(stacked_low),
                 set_str(outside_top));
    for (const auto& nu : low) check_zero(report, "c-pi*Gamma", nu, S.pi_down(G.delta_prime(nu)));
    for (const auto& lambda : top) check_zero(report, "c-Gamma*pi", lambda, S.gamma_down(G.basis_element(lambda)));
    return report;
}

}  // namespace qs
