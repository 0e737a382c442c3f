#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qs/chern.hpp"
#include "qs/partition.hpp"
#include "qs/poly.hpp"
#include "qs/report.hpp"

namespace qs {

class GrassBundleModel;

// Σ_λ Δ_λ(−U)·π^*(coeff_λ) over λ in the model's box. A default-constructed
// element is zero and adopts the model of whatever it meets.
class ChowElement {
public:
    ChowElement() = default;
    explicit ChowElement(const GrassBundleModel* model) : model_(model) {}

    const GrassBundleModel* model() const { return model_; }
    const std::map<Partition, GradedPoly>& terms() const { return terms_; }
    GradedPoly coefficient(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff·Δ_λ; λ must lie in the box.
    void add(const Partition& lambda, const GradedPoly& coeff);
    void add_scaled(const ChowElement& other, const GradedPoly& coeff);

    ChowElement& operator+=(const ChowElement& other);
    ChowElement& operator-=(const ChowElement& other);
    ChowElement operator-() const;
    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator*(const ChowElement& a, const GradedPoly& f);
    friend ChowElement operator*(const GradedPoly& f, const ChowElement& a) { return a * f; }
    friend bool operator==(const ChowElement& a, const ChowElement& b);

    // "(cE1)*D[1] + D[0]"; "0" for zero.
    std::string str() const;

private:
    void adopt(const ChowElement& other);

    const GrassBundleModel* model_ = nullptr;
    std::map<Partition, GradedPoly> terms_;
};

// taut·U (or taut·U^∨ when dual) plus a class pulled back from the base with
// total Chern class `base`. A nonempty tag names the base class so its Schur
// classes can be memoized inside a model.
struct KClass {
    int taut = 0;
    bool dual = false;
    ChernSeries base;
    std::string tag;
};

enum class Flavor { Delta, DeltaPrime };

// CH(Gr_d(E)) as a free module over the base ring with basis Δ_λ(−U),
// λ ∈ B_{d,ℓ}, ℓ = n−d. E is described only by its total Chern class, so a
// model can sit over E^∨ or any other series in the ring.
class GrassBundleModel {
public:
    GrassBundleModel(RingPtr ring, int d, int n, ChernSeries ambient);

    // Gr_d(E) for a formal bundle E of rank n, capped at dℓ+n unless given.
    static std::shared_ptr<GrassBundleModel> formal(int d, int n, const std::string& symbol = "E",
                                                    std::optional<int> cap = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    int d() const { return d_; }
    int n() const { return n_; }
    int l() const { return n_ - d_; }
    Box box() const { return {d_, n_ - d_}; }
    const std::vector<Partition>& basis() const { return basis_; }
    const ChernSeries& ambient() const { return ambient_; }           // c(E)
    const ChernSeries& ambient_inverse() const { return inverse_; }  // c(−E)

    ChowElement zero() const { return ChowElement(this); }
    ChowElement one() const { return pullback(GradedPoly(ring_, 1)); }
    ChowElement pullback(const GradedPoly& base) const;
    ChowElement basis_element(const Partition& lambda) const;

    // Δ_λ(−U) for any ordinary λ, written in the box basis.
    ChowElement basis_reduce(const Partition& lambda) const;
    ChowElement mul(const ChowElement& a, const ChowElement& b) const;
    GradedPoly pushforward(const ChowElement& a) const;
    // π_*(a·b) without forming the product.
    GradedPoly pairing(const ChowElement& a, const ChowElement& b) const;

    // Δ'_λ = Δ_λ(Q) = Σ_{μ⊆λ} Δ_{λ/μ}(E)·Δ_μ.
    ChowElement delta_prime(const Partition& lambda) const;
    // Δ_λ = Σ_{μ⊆λ} Δ_{λ/μ}(−E)·Δ'_μ, written back in the Δ basis.
    ChowElement from_delta_prime(const std::map<Partition, GradedPoly>& coords) const;
    // Coordinates of a in the Δ' basis.
    std::map<Partition, GradedPoly> to_delta_prime(const ChowElement& a) const;

    // Δ_{λ/μ}(E) and Δ_{λ/μ}(−E), memoized.
    GradedPoly ambient_schur(const SkewShape& shape, int sign) const;

    KClass minus_U() const { return {-1, false, ChernSeries::one(ring_), ""}; }
    KClass U() const { return {1, false, ChernSeries::one(ring_), ""}; }
    KClass Q() const { return {-1, false, ambient_, "E"}; }
    KClass Q_dual() const { return {-1, true, series_dual(ambient_), "E^v"}; }
    KClass U_dual() const { return {1, true, ChernSeries::one(ring_), ""}; }

    // Δ_{λ/μ}(K) = Σ_{μ⊆κ⊆λ} Δ_{λ/κ}(base)·Δ_{κ/μ}(taut·U).
    ChowElement schur_class(const SkewShape& shape, const KClass& k) const;

    // π_{λ*}(a) = Σ_{μ⊇λ} Δ_{μ/λ}(E)·π_*(Δ_{μ^c}·a), and with −E and Δ' for
    // the primed flavor.
    GradedPoly projector_down(const Partition& lambda, Flavor flavor, const ChowElement& a) const;
    // All λ at once.
    std::map<Partition, GradedPoly> projector_down_all(Flavor flavor, const ChowElement& a) const;
    // π^*_λ(α) = Δ_λ·α, or Δ'_λ·α.
    ChowElement projector_up(const Partition& lambda, Flavor flavor, const GradedPoly& alpha) const;

private:
    void require_box(const Partition& lambda) const;
    void require_same(const ChowElement& a) const;
    const ChowElement& basis_product(const Partition& a, const Partition& b) const;
    const GradedPoly& basis_pairing(const Partition& a, const Partition& b) const;
    ChowElement taut_schur(const Partition& outer, const Partition& inner, int a, bool dual) const;
    GradedPoly base_schur(const SkewShape& shape, const KClass& k) const;

    RingPtr ring_;
    int d_;
    int n_;
    ChernSeries ambient_;
    ChernSeries inverse_;
    std::vector<Partition> basis_;

    mutable std::mutex mutex_;
    mutable std::map<Partition, ChowElement> reduce_cache_;
    mutable std::map<std::pair<Partition, Partition>, ChowElement> product_cache_;
    mutable std::map<std::pair<Partition, Partition>, GradedPoly> pairing_cache_;
    mutable std::map<Partition, ChowElement> prime_cache_;
    mutable std::map<std::tuple<std::string, Partition, Partition>, GradedPoly> base_cache_;
    mutable std::map<std::tuple<Partition, Partition, int, bool>, ChowElement> taut_cache_;
};

// π_*(Δ_{λ^c}Δ_μ) = Δ_{μ/λ}(−E), π_*(Δ'_{λ^c}Δ'_μ) = Δ_{μ/λ}(E),
// π_*(Δ_{λ^c}Δ'_μ) = δ and π_*(Δ'_{λ^c}Δ_μ) = δ over the box.
VerificationReport verify_duality(const GrassBundleModel& model, unsigned jobs = 1);
// Σ_λ π^*_λ π_{λ*} = Id in both flavors, applied to every basis element.
VerificationReport verify_identity(const GrassBundleModel& model, unsigned jobs = 1);

}  // namespace qs
