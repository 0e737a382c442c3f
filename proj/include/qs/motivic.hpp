#pragma once

#include <map>
#include <string>
#include <vector>

#include "qs/poly.hpp"
#include "qs/report.hpp"

namespace qs {

// Laurent polynomial in one variable over Z. t is one Tate twist; the Betti
// realization substitutes t ↦ u².
class Motive {
public:
    Motive() = default;
    Motive(long long constant);  // NOLINT(google-explicit-constructor)
    static Motive monomial(int exponent, BigInt coeff = 1);
    // Σ_i coeffs[i]·t^i.
    static Motive from_coeffs(const std::vector<long long>& coeffs);

    const std::map<int, BigInt>& coeffs() const { return c_; }
    BigInt coefficient(int exponent) const;
    bool is_zero() const { return c_.empty(); }
    int min_degree() const;
    int max_degree() const;
    BigInt at_one() const;

    Motive& operator+=(const Motive& o);
    Motive& operator-=(const Motive& o);
    Motive& operator*=(const Motive& o);
    friend Motive operator+(Motive a, const Motive& b) { return a += b; }
    friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
    friend Motive operator*(Motive a, const Motive& b) { return a *= b; }
    friend bool operator==(const Motive&, const Motive&) = default;

    // t^k·this.
    Motive shifted(int k) const;
    // t ↦ u².
    Motive betti() const;
    // t^top·this(1/t).
    Motive reflected(int top) const;

    // "1 + t + 2*t^2"; "0" for zero.
    std::string str(const std::string& var = "t") const;
    // {"coeffs": {"0": 1, ...}}
    Json to_json() const;
    static Motive from_json(const Json& j);

private:
    std::map<int, BigInt> c_;
};

// [n choose d]_t = Σ_{λ∈B_{d,n−d}} t^{|λ|}; zero outside 0 ≤ d ≤ n.
Motive grassmann_poincare(int d, int n);

enum class Variance { Contravariant, Covariant };

// classes[j] = [Quot_{d−j}(𝒦)] for j = 0..min(d,δ).
struct QuotSpec {
    int d = 0;
    int delta = 0;
    std::vector<Motive> classes;

    // From a list indexed by the Quot index k: by_k[k] = [Quot_k(𝒦)], missing
    // entries zero.
    static QuotSpec from_quot_classes(int d, int delta, const std::vector<Motive>& by_k);
    void validate() const;
};

// Σ_j t^{(d−j)(δ−j)}·[δ choose j]_t·class_j. Covariant reflects every weight
// polynomial in the largest weight degree.
Motive quot_rhs(const QuotSpec& spec, Variance variance = Variance::Contravariant);
// t^{δ−d+1}[δ choose d−1]_t·Z + [δ choose d]_t·X.
Motive cayley_rhs(int d, int delta, const Motive& X, const Motive& Z);
// X + Σ_{i=1}^{δ} t^{i²}[δ choose i]_t·Z̃_{i−1}; missing Z̃ are zero.
Motive blowup_rhs(int delta, const Motive& X, const std::vector<Motive>& ztilde);
// Σ_{j=0}^{min(n,r+1)} t^{(r+1−j)(n−j)}[n choose j]_t·class_j with
// class_j = [G^{r−j}_{g−1−n}]. With betti, the weights are realized (t ↦ u²)
// and the classes are taken to be Poincaré polynomials in u.
Motive brill_noether_rhs(int g, int n, int r, const std::vector<Motive>& classes, bool betti = false);

// Poincaré polynomial of C^{(m)} for a genus-g curve, in u: the coefficient
// of x^m in (1+xu)^{2g}/((1−x)(1−xu²)).
Motive macdonald_sym_poincare(int g, int m);
// Checks [C^{(g−1+n)}] = t^n[C^{(g−1−n)}] + [n choose 1]_t·[Jac] in Betti
// numbers, directly and through brill_noether_rhs with r = 0.
VerificationReport verify_sym_power_identity(int g, int n);
// quot_rhs with classes [X, Z, 0, …] against cayley_rhs, for X and Z
// independent; the locally free case [0, …, 0, X] against [δ choose d]_t·X;
// and the blowup form when d = δ.
VerificationReport verify_quot_specialization(int d, int delta);

// t^d·lower + upper, lower = [Hilb†_{n−d,n}], upper = [Hilb†_{n−d+1,n}].
Motive hilb_rhs(int n, int d, const Motive& lower, const Motive& upper);
int expected_codim(int i, int delta);
int bn_number(int g, int r, int d);

}  // namespace qs
