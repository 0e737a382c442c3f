#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "qs/grasschow.hpp"
#include "qs/report.hpp"

namespace qs {

// G = Gr_d(E^∨) over a base with formal E (rank n) and F (rank m), used for
// both G and G_Z. Classes on Z_+ are represented by their lifts to G; the
// excess insertions ι_*ι^* = c_top(F^∨⊗U^∨) and j^*j_* = c_top(F^∨⊗Q^∨) are
// the only geometry.
class StrataModel {
public:
    // With trivial_f, F is the trivial line bundle (m must be 1) and only E
    // generates the base ring.
    StrataModel(int n, int m, int d, bool trivial_f = false);

    int n() const { return n_; }
    int m() const { return m_; }
    int d() const { return d_; }
    int l() const { return n_ - d_; }
    Box top_box() const { return {d_, l() - m_}; }
    Box low_box() const { return {d_ - m_, l()}; }
    bool has_top() const { return d_ >= 0 && l() - m_ >= 0; }
    bool has_low() const { return d_ - m_ >= 0; }
    const std::vector<Partition>& top_basis() const { return top_; }
    const std::vector<Partition>& low_basis() const { return low_; }
    Json params() const;

    const GrassBundleModel& G() const { return *G_; }
    const RingPtr& ring() const { return G_->ring(); }

    // Δ_{λ/μ} of a named base class: "Ev", "-Ev", "F", "Fv", "-Fv", "Gv",
    // "-Gv", "-Ev-Fv", "Ev+Fv".
    GradedPoly base(const std::string& name, const SkewShape& shape) const;

    // c_top(F^∨⊗U^∨) by the tensor formula and as Σ_{ν∈B_{d,m}} Δ_ν(F^∨)Δ_{ν^c}.
    const ChowElement& C() const { return c_; }
    ChowElement C_alternative() const;
    // c_top(F^∨⊗Q^∨) by the tensor formula and as (−1)^{mℓ}Σ_{ν∈B_{ℓ,m}} Δ_ν(F)Δ_{ν^c}(−Q^∨).
    const ChowElement& D() const { return d_class_; }
    ChowElement D_alternative() const;

    // π_{λ*}(x) for λ in the top box, where w = ι_*x:
    // Σ_τ Δ_{τ/λ}(G^∨)·q_*(Δ_{τ^c}·w).
    std::map<Partition, GradedPoly> pi_down(const ChowElement& w) const;
    // π^Q_{λ*} = Σ_{μ⊇λ} Δ_{μ/λ}(−E^∨)π_{μ*}.
    std::map<Partition, GradedPoly> pi_q_down(const ChowElement& w) const;
    // Γ_{λ*}(x) for λ in the low box, where z = j^*x:
    // Σ_μ Δ_{μ/λ}(−G^∨)·p_*(Δ'_{μ^c}·z).
    std::map<Partition, GradedPoly> gamma_down(const ChowElement& z) const;
    // Γ^U_{λ*} = Σ_{μ⊇λ} Δ_{μ/λ}(E^∨)Γ_{μ*}.
    std::map<Partition, GradedPoly> gamma_u_down(const ChowElement& z) const;

private:
    int n_, m_, d_;
    std::shared_ptr<GrassBundleModel> G_;
    std::map<std::string, ChernSeries> series_;
    std::vector<Partition> top_, low_;
    ChowElement c_, d_class_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<std::string, Partition, Partition>, GradedPoly> cache_;
};

// Cayley relations for m = 1 and trivial F: (a) q_{λ+1,*}(Δ_{(1^d)}Δ_μ) = δ,
// (b) p'_{(ν^t+1)^t*}(Δ'_{(ℓ)}Δ'_τ) = δ with the sign of Γ_{ν*}Γ^*_τ reported,
// (c) the index-set identities and the direct vanishings.
VerificationReport cayley_relations(int d, int n, unsigned jobs = 1);

VerificationReport appendix_top_projectors(int n, int m, int d, unsigned jobs = 1);
VerificationReport appendix_lowest_projectors(int n, int m, int d, unsigned jobs = 1);
VerificationReport appendix_cross_orthogonality(int n, int m, int d, unsigned jobs = 1);

}  // namespace qs
