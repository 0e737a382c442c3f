#include "qs/motivic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qs/partition.hpp"

namespace qs {

Motive::Motive(long long constant) {
    if (constant != 0) c_[0] = constant;
}

Motive Motive::monomial(int exponent, BigInt coeff) {
    Motive m;
    if (coeff != 0) m.c_[exponent] = std::move(coeff);
    return m;
}

Motive Motive::from_coeffs(const std::vector<long long>& coeffs) {
    Motive m;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) m.c_[static_cast<int>(i)] = coeffs[i];
    return m;
}

BigInt Motive::coefficient(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? BigInt(0) : it->second;
}

int Motive::min_degree() const {
    if (c_.empty()) throw std::domain_error("zero motive has no degree");
    return c_.begin()->first;
}

int Motive::max_degree() const {
    if (c_.empty()) throw std::domain_error("zero motive has no degree");
    return c_.rbegin()->first;
}

BigInt Motive::at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

Motive& Motive::operator+=(const Motive& o) {
    for (const auto& [e, c] : o.c_) {
        BigInt& v = c_[e];
        v += c;
        if (v == 0) c_.erase(e);
    }
    return *this;
}

Motive& Motive::operator-=(const Motive& o) {
    for (const auto& [e, c] : o.c_) {
        BigInt& v = c_[e];
        v -= c;
        if (v == 0) c_.erase(e);
    }
    return *this;
}

Motive& Motive::operator*=(const Motive& o) {
    Motive r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r += monomial(e1 + e2, c1 * c2);
    return *this = r;
}

Motive Motive::shifted(int k) const {
    Motive r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

Motive Motive::betti() const {
    Motive r;
    for (const auto& [e, c] : c_) r.c_[2 * e] = c;
    return r;
}

Motive Motive::reflected(int top) const {
    Motive r;
    for (const auto& [e, c] : c_) r.c_[top - e] = c;
    return r;
}

std::string Motive::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : c_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += a.str();
            continue;
        }
        if (a != 1) s += a.str() + "*";
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Json Motive::to_json() const {
    Json coeffs = Json::object();
    for (const auto& [e, c] : c_) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeffs[std::to_string(e)] = static_cast<long long>(c);
        else
            coeffs[std::to_string(e)] = c.str();
    }
    return Json{{"coeffs", coeffs}};
}

Motive Motive::from_json(const Json& j) {
    const Json& coeffs = j.contains("coeffs") ? j.at("coeffs") : j;
    if (!coeffs.is_object()) throw std::invalid_argument("motivic class must be a JSON map exponent -> coefficient");
    Motive m;
    for (const auto& [key, value] : coeffs.items()) {
        std::size_t used = 0;
        int e = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("bad exponent '" + key + "'");
        BigInt c;
        if (value.is_number_integer()) c = value.get<long long>();
        else if (value.is_string()) c = BigInt(value.get<std::string>());
        else throw std::invalid_argument("bad coefficient for exponent " + key);
        m += monomial(e, c);
    }
    return m;
}

Motive grassmann_poincare(int d, int n) {
    if (d < 0 || n < 0 || d > n) return {};
    Motive r;
    for (const auto& lambda : enumerate_box({d, n - d})) r += Motive::monomial(lambda.size());
    return r;
}

QuotSpec QuotSpec::from_quot_classes(int d, int delta, const std::vector<Motive>& by_k) {
    QuotSpec s{d, delta, {}};
    for (int j = 0; j <= std::min(d, delta); ++j) {
        auto k = static_cast<std::size_t>(d - j);
        s.classes.push_back(k < by_k.size() ? by_k[k] : Motive{});
    }
    return s;
}

void QuotSpec::validate() const {
    if (d < 0 || delta < 0) throw std::domain_error("need d, delta >= 0");
    if (static_cast<int>(classes.size()) != std::min(d, delta) + 1)
        throw std::domain_error("expected " + std::to_string(std::min(d, delta) + 1) + " classes, got " +
                                std::to_string(classes.size()));
}

Motive quot_rhs(const QuotSpec& spec, Variance variance) {
    spec.validate();
    int jmax = std::min(spec.d, spec.delta);
    std::vector<Motive> weights;
    int top = 0;
    for (int j = 0; j <= jmax; ++j) {
        weights.push_back(grassmann_poincare(j, spec.delta).shifted((spec.d - j) * (spec.delta - j)));
        top = std::max(top, weights.back().max_degree());
    }
    Motive r;
    for (int j = 0; j <= jmax; ++j) {
        const Motive& w = weights[static_cast<std::size_t>(j)];
        r += (variance == Variance::Covariant ? w.reflected(top) : w) * spec.classes[static_cast<std::size_t>(j)];
    }
    return r;
}

Motive cayley_rhs(int d, int delta, const Motive& X, const Motive& Z) {
    if (d < 1 || d > delta + 1) throw std::domain_error("need 1 <= d <= delta+1");
    return grassmann_poincare(d - 1, delta).shifted(delta - d + 1) * Z + grassmann_poincare(d, delta) * X;
}

Motive blowup_rhs(int delta, const Motive& X, const std::vector<Motive>& ztilde) {
    if (delta < 1) throw std::domain_error("need delta >= 1");
    Motive r = X;
    for (int i = 1; i <= delta; ++i) {
        auto k = static_cast<std::size_t>(i - 1);
        if (k < ztilde.size()) r += grassmann_poincare(i, delta).shifted(i * i) * ztilde[k];
    }
    return r;
}

Motive brill_noether_rhs(int g, int n, int r, const std::vector<Motive>& classes, bool betti) {
    if (g < 1 || n < 0 || r < 0) throw std::domain_error("need g >= 1, n >= 0, r >= 0");
    int jmax = std::min(n, r + 1);
    if (static_cast<int>(classes.size()) != jmax + 1)
        throw std::domain_error("expected " + std::to_string(jmax + 1) + " classes");
    Motive out;
    for (int j = 0; j <= jmax; ++j) {
        Motive w = grassmann_poincare(j, n).shifted((r + 1 - j) * (n - j));
        out += (betti ? w.betti() : w) * classes[static_cast<std::size_t>(j)];
    }
    return out;
}

Motive macdonald_sym_poincare(int g, int m) {
    if (g < 0 || m < 0) throw std::domain_error("need g, m >= 0");
    Motive binom = 1;
    for (int i = 0; i < 2 * g; ++i) binom *= Motive::from_coeffs({1, 1});
    Motive r;
    for (int a = 0; a <= std::min(m, 2 * g); ++a)
        for (int c = 0; c <= m - a; ++c) r += Motive::monomial(a + 2 * c, binom.coefficient(a));
    return r;
}

VerificationReport verify_sym_power_identity(int g, int n) {
    if (n < 1 || n > g - 1) throw std::domain_error("need 1 <= n <= g-1");
    VerificationReport report;
    report.suite = "sympower";
    report.params = Json{{"g", g}, {"n", n}};
    Motive lhs = macdonald_sym_poincare(g, g - 1 + n);
    Motive jac = 1;
    for (int i = 0; i < 2 * g; ++i) jac *= Motive::from_coeffs({1, 1});
    Motive lower = macdonald_sym_poincare(g, g - 1 - n);
    Motive direct = lower.shifted(2 * n);
    for (int i = 0; i < n; ++i) direct += jac.shifted(2 * i);
    report.check(Json{{"check", "direct"}}, lhs == direct, lhs.str("u"), direct.str("u"));
    Motive bn = brill_noether_rhs(g, n, 0, {lower, jac}, true);
    report.check(Json{{"check", "brill-noether"}}, lhs == bn, lhs.str("u"), bn.str("u"));
    return report;
}

VerificationReport verify_quot_specialization(int d, int delta) {
    if (d < 1 || d > delta + 1) throw std::domain_error("need 1 <= d <= delta+1");
    VerificationReport report;
    report.suite = "quot-specialize";
    report.params = Json{{"d", d}, {"delta", delta}};
    const std::vector<std::pair<Motive, Motive>> probes = {{1, 0}, {0, 1}};
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto& [X, Z] = probes[p];
        Motive q = quot_rhs(QuotSpec::from_quot_classes(d, delta, {X, Z}));
        Motive c = cayley_rhs(d, delta, X, Z);
        report.check(Json{{"check", "cayley"}, {"probe", p == 0 ? "X" : "Z"}}, q == c, c.str(), q.str());
        if (d <= delta) {
            std::vector<Motive> free(static_cast<std::size_t>(d + 1));
            free.back() = X + Z;
            Motive q0 = quot_rhs({d, delta, free});
            Motive g = grassmann_poincare(d, delta) * (X + Z);
            report.check(Json{{"check", "locally-free"}, {"probe", p == 0 ? "X" : "Z"}}, q0 == g, g.str(), q0.str());
        }
        if (d == delta) {
            Motive b = blowup_rhs(delta, X, {Z});
            report.check(Json{{"check", "blowup"}, {"probe", p == 0 ? "X" : "Z"}}, b == c, c.str(), b.str());
        }
    }
    return report;
}

Motive hilb_rhs(int n, int d, const Motive& lower, const Motive& upper) {
    if (n < 1 || d < 1) throw std::domain_error("need n, d >= 1");
    return lower.shifted(d) + upper;
}

int expected_codim(int i, int delta) { return i * (delta + i); }

int bn_number(int g, int r, int d) { return g - (r + 1) * (g - d + r); }

}  // namespace qs
