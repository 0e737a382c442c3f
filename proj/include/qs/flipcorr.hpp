#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qs/grasschow.hpp"
#include "qs/report.hpp"

namespace qs {

// Dense matrix over the base ring with labelled rows and columns. The matrix
// of a map has one column per input basis element.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::vector<std::string> rows, std::vector<std::string> cols);

    static PolyMatrix identity(const std::vector<std::string>& labels, const RingPtr& ring, int sign = 1);
    // Columns f(x) for x in inputs, written in target's basis.
    static PolyMatrix of_map(const std::vector<Partition>& inputs, const GrassBundleModel& target,
                             const std::function<ChowElement(const Partition&)>& f);

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cols_.size(); }
    const std::vector<std::string>& rows() const { return rows_; }
    const std::vector<std::string>& cols() const { return cols_; }
    GradedPoly& at(std::size_t r, std::size_t c) { return a_[r * cols_.size() + c]; }
    const GradedPoly& at(std::size_t r, std::size_t c) const { return a_[r * cols_.size() + c]; }

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(int k);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(int k, PolyMatrix a) { return a *= k; }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    bool is_zero() const;
    // Block stacking; labels of the other axis must agree in count.
    static PolyMatrix hstack(const std::vector<PolyMatrix>& blocks);
    static PolyMatrix vstack(const std::vector<PolyMatrix>& blocks);
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    // Records every entry against `expected` in the report.
    void compare(VerificationReport& report, const Json& where, const PolyMatrix& expected) const;

    Json to_json() const;

private:
    std::vector<std::string> rows_;
    std::vector<std::string> cols_;
    std::vector<GradedPoly> a_;
};

// CH(G_− ×_Z G_+) as the tensor product of the two box bases over the base
// ring. Keys are (α on G_−, β on G_+).
class PairElement {
public:
    PairElement(const GrassBundleModel* minus, const GrassBundleModel* plus) : minus_(minus), plus_(plus) {}

    static PairElement tensor(const ChowElement& on_minus, const ChowElement& on_plus);

    const std::map<std::pair<Partition, Partition>, GradedPoly>& terms() const { return terms_; }
    void add(const Partition& a, const Partition& b, const GradedPoly& coeff);
    PairElement& operator+=(const PairElement& o);
    PairElement operator*(const GradedPoly& f) const;
    friend PairElement operator*(const PairElement& x, const PairElement& y);
    friend bool operator==(const PairElement& x, const PairElement& y);

    // r_{+*}(this·r_−^*x) and r_{−*}(this·r_+^*y).
    ChowElement push_to_plus(const ChowElement& x) const;
    ChowElement push_to_minus(const ChowElement& y) const;

private:
    void require_same(const PairElement& o) const;

    const GrassBundleModel* minus_;
    const GrassBundleModel* plus_;
    std::map<std::pair<Partition, Partition>, GradedPoly> terms_;
};

// G_+ = Gr_{d_+}(V), G_− = Gr_{d_−}(W) over a common base, with the excess
// classes of the flip correspondence.
class FlipModel {
public:
    FlipModel(std::shared_ptr<const GrassBundleModel> plus, std::shared_ptr<const GrassBundleModel> minus);

    // V of rank n and W of rank m as formal bundles. The default cap d_+ℓ_+
    // bounds the degree of every matrix entry these maps produce.
    static std::shared_ptr<FlipModel> formal(int n, int m, int d_plus, int d_minus,
                                             std::optional<int> cap = std::nullopt);
    static RingPtr formal_ring(int n, int m, int cap);

    const GrassBundleModel& plus() const { return *plus_; }
    const GrassBundleModel& minus() const { return *minus_; }
    int n() const { return plus_->n(); }
    int m() const { return minus_->n(); }
    int d_plus() const { return plus_->d(); }
    int d_minus() const { return minus_->d(); }
    int delta_d() const { return d_plus() - d_minus(); }
    int delta_l() const { return plus_->l() - minus_->l(); }
    Box nu_box() const { return {delta_d(), delta_l()}; }
    Json params() const;

    // c_top(Q_−^∨⊗U_+^∨) and c_top(Q_+^∨⊗U_−^∨) via the tensor formula.
    const PairElement& kernel_up() const { return kernel_up_; }
    const PairElement& kernel_down() const { return kernel_down_; }
    // Σ_λ Δ_λ(−U_+)Δ_{λ^c}(Q_−^∨) and (−1)^{ℓ_+d_−} Σ_μ Δ_{μ^t}(U_−)Δ_{μ^c}(Q_+).
    PairElement kernel_up_alternative() const;
    PairElement kernel_down_alternative() const;

    // Ψ^ν(x) = r_{+*}(c_top(Q_−^∨⊗U_+^∨)·Δ_ν(−U_+)·r_−^*x).
    ChowElement psi_up(const Partition& nu, const ChowElement& x) const;
    // Ψ^std_ν(y) = r_{−*}(c_top(Q_+^∨⊗U_−^∨)·Δ_{ν^c}(Q_+)·r_+^*y).
    ChowElement psi_std_down(const Partition& nu, const ChowElement& y) const;

    const PolyMatrix& up_matrix(const Partition& nu) const;
    const PolyMatrix& down_matrix(const Partition& nu) const;

private:
    void require_nu(const Partition& nu) const;

    std::shared_ptr<const GrassBundleModel> plus_;
    std::shared_ptr<const GrassBundleModel> minus_;
    PairElement kernel_up_;
    PairElement kernel_down_;
    mutable std::mutex mutex_;
    mutable std::map<Partition, PolyMatrix> up_cache_;
    mutable std::map<Partition, PolyMatrix> down_cache_;
};

// Ψ^std_ν∘Ψ^ν = (−1)^{d_−δ_ℓ}·Id, for one ν or for every ν in the box.
VerificationReport verify_flip_identity(const FlipModel& model, std::optional<Partition> nu = std::nullopt,
                                        unsigned jobs = 1);

enum class SpanMode {
    // Rows outside {λ⊘ν} vanish once positive-degree base classes are set to
    // zero, so the image is a summand complementary to the other basis vectors.
    ModuloBase,
    // Rows outside {λ⊘ν} vanish exactly. Only true when the base classes
    // that enter the kernels are trivial.
    Literal,
};

// Stacks Ψ^ν for ν ⊆ ν_fix and compares their joint image with the span of
// {Δ_{λ⊘ν}}: the square block on those rows must have determinant ±1 and the
// remaining rows must vanish in the sense of `mode`.
VerificationReport image_span_check(const FlipModel& model, const Partition& nu_fix,
                                    SpanMode mode = SpanMode::ModuloBase);

// c_top kernels agree with their alternative expansions.
VerificationReport verify_kernels(const FlipModel& model);

struct StratumIndex {
    int i = 0;
    Partition nu;

    // (i,ν) ≺ (j,τ) iff i<j, or i=j and ν ⊊ τ.
    bool precedes(const StratumIndex& o) const;
    std::string str() const;
    friend auto operator<=>(const StratumIndex&, const StratumIndex&) = default;
};

// Flip models over a fixed G_+ = Gr_d(V), V of rank n = d+ℓ, and one W of
// rank n−δ, with G_{−,i} = Gr_{d−i}(W) for max(0,δ−ℓ) ≤ i ≤ min(d,δ).
class StratumFamily {
public:
    StratumFamily(int d, int l, int delta);

    int d() const { return d_; }
    int l() const { return l_; }
    int delta() const { return delta_; }
    Json params() const;
    const std::vector<int>& strata() const { return strata_; }
    const FlipModel& model(int i) const;
    const GrassBundleModel& plus() const { return *plus_; }
    // Every (i, ν ∈ B_{i,δ−i}).
    std::vector<StratumIndex> indices() const;
    // (−1)^{(d−i)(δ−i)}.
    int sign(int i) const;

private:
    int d_, l_, delta_;
    std::shared_ptr<GrassBundleModel> plus_;
    std::vector<int> strata_;
    std::map<int, std::shared_ptr<FlipModel>> models_;
};

// Ψ^std_{(j,τ)}∘Ψ^ν_{(i)}: zero unless (i,ν) ⪰ (j,τ), and the signed identity
// on the diagonal.
VerificationReport semiorthogonality_check(const StratumFamily& family, const StratumIndex& up,
                                           const StratumIndex& down);
VerificationReport verify_semiorthogonality(const StratumFamily& family, unsigned jobs = 1);

// The signed family (−1)^{(d−i)(δ−i)}Ψ_{(d−i,d),ν} of down maps inverting the
// stacked up maps, built from the top index down.
std::map<StratumIndex, PolyMatrix> build_inverse(const StratumFamily& family);

// Down∘Up = Id on the sum of strata and Up∘Down = Id on CH(G_+).
VerificationReport verify_stratum_isomorphism(const StratumFamily& family, unsigned jobs = 1);

struct BoxPiece {
    int i;
    Partition lambda;
    Partition nu;
    Partition image;
};

// (i, λ ∈ B_{d−i,ℓ−δ+i}, ν ∈ B_{i,δ−i}) ↦ λ⊘ν.
std::vector<BoxPiece> box_decomposition(int d, int l, int delta);
VerificationReport verify_box_decomposition(int d, int l, int delta);

}  // namespace qs
