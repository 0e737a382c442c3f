#include "qs/flipcorr.hpp"

#include <set>
#include <stdexcept>

#include "qs/parallel.hpp"

namespace qs {

namespace {

int sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

std::vector<std::string> labels(const std::vector<Partition>& ps) {
    std::vector<std::string> r;
    for (const auto& p : ps) r.push_back(p.str());
    return r;
}

}  // namespace

// PolyMatrix

PolyMatrix::PolyMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), a_(rows_.size() * cols_.size()) {}

PolyMatrix PolyMatrix::identity(const std::vector<std::string>& labels, const RingPtr& ring, int sign) {
    PolyMatrix m(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = GradedPoly(ring, sign);
    return m;
}

PolyMatrix PolyMatrix::of_map(const std::vector<Partition>& inputs, const GrassBundleModel& target,
                              const std::function<ChowElement(const Partition&)>& f) {
    PolyMatrix m(labels(target.basis()), labels(inputs));
    for (std::size_t c = 0; c < inputs.size(); ++c) {
        ChowElement y = f(inputs[c]);
        for (std::size_t r = 0; r < target.basis().size(); ++r) m.at(r, c) = y.coefficient(target.basis()[r]);
    }
    return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (o.num_rows() != num_rows() || o.num_cols() != num_cols()) throw std::domain_error("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (o.num_rows() != num_rows() || o.num_cols() != num_cols()) throw std::domain_error("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(int k) {
    for (auto& x : a_) x *= BigInt(k);
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.num_cols() != b.num_rows()) throw std::domain_error("matrix shape mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t k = 0; k < a.num_cols(); ++k) {
            const GradedPoly& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.num_cols(); ++j) {
                const GradedPoly& y = b.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols()) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::hstack(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) return {};
    std::vector<std::string> cols;
    for (const auto& b : blocks) {
        if (b.num_rows() != blocks[0].num_rows()) throw std::domain_error("matrix shape mismatch");
        cols.insert(cols.end(), b.cols_.begin(), b.cols_.end());
    }
    PolyMatrix r(blocks[0].rows_, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.num_rows(); ++i)
            for (std::size_t j = 0; j < b.num_cols(); ++j) r.at(i, off + j) = b.at(i, j);
        off += b.num_cols();
    }
    return r;
}

PolyMatrix PolyMatrix::vstack(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) return {};
    std::vector<std::string> rows;
    for (const auto& b : blocks) {
        if (b.num_cols() != blocks[0].num_cols()) throw std::domain_error("matrix shape mismatch");
        rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    }
    PolyMatrix r(rows, blocks[0].cols_);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.num_rows(); ++i)
            for (std::size_t j = 0; j < b.num_cols(); ++j) r.at(off + i, j) = b.at(i, j);
        off += b.num_rows();
    }
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    std::vector<std::string> rl, cl;
    for (auto i : rows) rl.push_back(rows_[i]);
    for (auto j : cols) cl.push_back(cols_[j]);
    PolyMatrix r(rl, cl);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

void PolyMatrix::compare(VerificationReport& report, const Json& where, const PolyMatrix& expected) const {
    if (expected.num_rows() != num_rows() || expected.num_cols() != num_cols()) {
        report.check(where, false, "shape " + std::to_string(expected.num_rows()) + "x" +
                                       std::to_string(expected.num_cols()),
                     "shape " + std::to_string(num_rows()) + "x" + std::to_string(num_cols()));
        return;
    }
    for (std::size_t i = 0; i < num_rows(); ++i)
        for (std::size_t j = 0; j < num_cols(); ++j) {
            Json at_ij = where;
            at_ij["row"] = rows_[i];
            at_ij["col"] = cols_[j];
            report.check(at_ij, expected.at(i, j), at(i, j));
        }
}

Json PolyMatrix::to_json() const {
    Json entries = Json::array();
    for (std::size_t i = 0; i < num_rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < num_cols(); ++j) row.push_back(at(i, j).str());
        entries.push_back(row);
    }
    return Json{{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

// PairElement

PairElement PairElement::tensor(const ChowElement& on_minus, const ChowElement& on_plus) {
    PairElement r(on_minus.model(), on_plus.model());
    for (const auto& [a, x] : on_minus.terms())
        for (const auto& [b, y] : on_plus.terms()) r.add(a, b, x * y);
    return r;
}

void PairElement::add(const Partition& a, const Partition& b, const GradedPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::pair(a, b), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PairElement::require_same(const PairElement& o) const {
    if (o.minus_ != minus_ || o.plus_ != plus_) throw std::domain_error("pair elements from different models");
}

PairElement& PairElement::operator+=(const PairElement& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

PairElement PairElement::operator*(const GradedPoly& f) const {
    PairElement r(minus_, plus_);
    for (const auto& [k, c] : terms_) r.add(k.first, k.second, c * f);
    return r;
}

PairElement operator*(const PairElement& x, const PairElement& y) {
    x.require_same(y);
    PairElement r(x.minus_, x.plus_);
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            ChowElement a = x.minus_->basis_element(kx.first) * x.minus_->basis_element(ky.first);
            ChowElement b = x.plus_->basis_element(kx.second) * x.plus_->basis_element(ky.second);
            GradedPoly c = cx * cy;
            for (const auto& [pa, ca] : a.terms())
                for (const auto& [pb, cb] : b.terms()) r.add(pa, pb, c * ca * cb);
        }
    return r;
}

bool operator==(const PairElement& x, const PairElement& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (auto i = x.terms_.begin(), j = y.terms_.begin(); i != x.terms_.end(); ++i, ++j)
        if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
}

ChowElement PairElement::push_to_plus(const ChowElement& x) const {
    ChowElement r = plus_->zero();
    for (const auto& [k, c] : terms_) {
        GradedPoly p = minus_->pairing(x, minus_->basis_element(k.first));
        if (!p.is_zero()) r.add(k.second, c * p);
    }
    return r;
}

ChowElement PairElement::push_to_minus(const ChowElement& y) const {
    ChowElement r = minus_->zero();
    for (const auto& [k, c] : terms_) {
        GradedPoly p = plus_->pairing(y, plus_->basis_element(k.second));
        if (!p.is_zero()) r.add(k.first, c * p);
    }
    return r;
}

// FlipModel

RingPtr FlipModel::formal_ring(int n, int m, int cap) { return Ring::make({{"V", n}, {"W", m}}, cap); }

std::shared_ptr<FlipModel> FlipModel::formal(int n, int m, int d_plus, int d_minus, std::optional<int> cap) {
    if (d_plus < 0 || d_plus > n || d_minus < 0 || d_minus > m)
        throw std::domain_error("need 0 <= d_+ <= n and 0 <= d_- <= m");
    auto ring = formal_ring(n, m, cap ? *cap : d_plus * (n - d_plus));
    auto plus = std::make_shared<GrassBundleModel>(ring, d_plus, n, ChernSeries::of_bundle(ring, "V"));
    auto minus = std::make_shared<GrassBundleModel>(ring, d_minus, m, ChernSeries::of_bundle(ring, "W"));
    return std::make_shared<FlipModel>(plus, minus);
}

FlipModel::FlipModel(std::shared_ptr<const GrassBundleModel> plus, std::shared_ptr<const GrassBundleModel> minus)
    : plus_(std::move(plus)),
      minus_(std::move(minus)),
      kernel_up_(minus_.get(), plus_.get()),
      kernel_down_(minus_.get(), plus_.get()) {
    if (!plus_->ring()->same_as(*minus_->ring())) throw std::domain_error("flip models need a common base ring");
    if (delta_d() < 0 || delta_l() < 0) throw std::domain_error("need d_- <= d_+ and l_- <= l_+");
    const auto& P = *plus_;
    const auto& M = *minus_;
    for_each_tensor_top_term(M.l(), P.d(), [&](const Partition& lt, const Partition& lc) {
        kernel_up_ += PairElement::tensor(M.schur_class(SkewShape(lt), M.Q_dual()),
                                          P.schur_class(SkewShape(lc), P.U_dual()));
    });
    for_each_tensor_top_term(P.l(), M.d(), [&](const Partition& lt, const Partition& lc) {
        kernel_down_ += PairElement::tensor(M.schur_class(SkewShape(lc), M.U_dual()),
                                            P.schur_class(SkewShape(lt), P.Q_dual()));
    });
}

Json FlipModel::params() const {
    return Json{{"n", n()}, {"m", m()}, {"d_plus", d_plus()}, {"d_minus", d_minus()}};
}

PairElement FlipModel::kernel_up_alternative() const {
    PairElement r(minus_.get(), plus_.get());
    Box b{d_plus(), minus_->l()};
    for (const auto& lambda : enumerate_box(b))
        r += PairElement::tensor(minus_->schur_class(SkewShape(complement(lambda, b)), minus_->Q_dual()),
                                 plus_->basis_reduce(lambda));
    return r;
}

PairElement FlipModel::kernel_down_alternative() const {
    PairElement r(minus_.get(), plus_.get());
    Box b{d_minus(), plus_->l()};
    for (const auto& mu : enumerate_box(b))
        r += PairElement::tensor(minus_->schur_class(SkewShape(transpose(mu)), minus_->U()),
                                 plus_->schur_class(SkewShape(complement(mu, b)), plus_->Q()));
    return r * GradedPoly(plus_->ring(), sign_of(plus_->l() * d_minus()));
}

void FlipModel::require_nu(const Partition& nu) const {
    if (nu.is_generalized() || !nu_box().contains(nu))
        throw std::domain_error("nu = " + nu.str() + " outside " + nu_box().str());
}

ChowElement FlipModel::psi_up(const Partition& nu, const ChowElement& x) const {
    require_nu(nu);
    return kernel_up_.push_to_plus(x) * plus_->basis_element(nu);
}

ChowElement FlipModel::psi_std_down(const Partition& nu, const ChowElement& y) const {
    require_nu(nu);
    return kernel_down_.push_to_minus(plus_->delta_prime(complement(nu, nu_box())) * y);
}

const PolyMatrix& FlipModel::up_matrix(const Partition& nu) const {
    require_nu(nu);
    {
        std::lock_guard lock(mutex_);
        auto it = up_cache_.find(nu);
        if (it != up_cache_.end()) return it->second;
    }
    PolyMatrix m = PolyMatrix::of_map(minus_->basis(), *plus_,
                                      [&](const Partition& a) { return psi_up(nu, minus_->basis_element(a)); });
    std::lock_guard lock(mutex_);
    return up_cache_.emplace(nu, std::move(m)).first->second;
}

const PolyMatrix& FlipModel::down_matrix(const Partition& nu) const {
    require_nu(nu);
    {
        std::lock_guard lock(mutex_);
        auto it = down_cache_.find(nu);
        if (it != down_cache_.end()) return it->second;
    }
    PolyMatrix m = PolyMatrix::of_map(plus_->basis(), *minus_,
                                      [&](const Partition& b) { return psi_std_down(nu, plus_->basis_element(b)); });
    std::lock_guard lock(mutex_);
    return down_cache_.emplace(nu, std::move(m)).first->second;
}

VerificationReport verify_flip_identity(const FlipModel& model, std::optional<Partition> nu, unsigned jobs) {
    VerificationReport report;
    report.suite = "flip";
    report.params = model.params();
    std::vector<Partition> nus = nu ? std::vector<Partition>{*nu} : enumerate_box(model.nu_box());
    if (nu) report.params["nu"] = nu->str();
    int sign = sign_of(model.d_minus() * model.delta_l());
    report.observe("expected_sign", std::to_string(sign));
    PolyMatrix id = PolyMatrix::identity(labels(model.minus().basis()), model.plus().ring(), sign);
    std::vector<VerificationReport> parts(nus.size());
    parallel_for(nus.size(), jobs, [&](std::size_t k) {
        PolyMatrix comp = model.down_matrix(nus[k]) * model.up_matrix(nus[k]);
        comp.compare(parts[k], Json{{"nu", nus[k].str()}}, id);
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

VerificationReport verify_kernels(const FlipModel& model) {
    VerificationReport report;
    report.suite = "flip-kernels";
    report.params = model.params();
    report.check(Json{{"kernel", "up"}}, model.kernel_up() == model.kernel_up_alternative());
    report.check(Json{{"kernel", "down"}}, model.kernel_down() == model.kernel_down_alternative());
    return report;
}

VerificationReport image_span_check(const FlipModel& model, const Partition& nu_fix, SpanMode mode) {
    VerificationReport report;
    report.suite = "flip-image";
    report.params = model.params();
    report.params["nu_fix"] = nu_fix.str();
    report.params["mode"] = mode == SpanMode::Literal ? "literal" : "modulo-base";
    if (!model.nu_box().contains(nu_fix)) throw std::domain_error("nu_fix outside its box");
    const auto& plus_basis = model.plus().basis();
    const auto& minus_basis = model.minus().basis();
    Box b_minus = model.minus().box();

    std::vector<PolyMatrix> blocks;
    std::vector<int> col_degree;
    std::set<Partition> target;
    for (const auto& nu : interval(Partition{}, nu_fix)) {
        blocks.push_back(model.up_matrix(nu));
        for (const auto& lambda : minus_basis) {
            target.insert(oslash(lambda, b_minus, nu, model.nu_box()));
            col_degree.push_back(lambda.size() + nu.size());
        }
    }
    PolyMatrix stacked = PolyMatrix::hstack(blocks);
    std::size_t expected_cols = blocks.size() * minus_basis.size();
    report.check(Json{{"check", "distinct targets"}}, target.size() == expected_cols, std::to_string(expected_cols),
                 std::to_string(target.size()));

    std::vector<std::size_t> rows_in, all_cols;
    for (std::size_t j = 0; j < stacked.num_cols(); ++j) all_cols.push_back(j);
    std::optional<int> shift;
    bool graded = true;
    std::size_t outside = 0;
    for (std::size_t i = 0; i < plus_basis.size(); ++i) {
        bool in = target.count(plus_basis[i]) > 0;
        if (in) rows_in.push_back(i);
        for (std::size_t j = 0; j < stacked.num_cols(); ++j) {
            const GradedPoly& e = stacked.at(i, j);
            if (!in) {
                if (!e.is_zero()) ++outside;
                GradedPoly seen = mode == SpanMode::Literal ? e : GradedPoly(e.constant_term());
                report.check(Json{{"check", "outside span"}, {"row", stacked.rows()[i]}, {"col", j}}, GradedPoly(),
                             seen);
            }
            if (e.is_zero()) continue;
            int s = e.degree() + plus_basis[i].size() - col_degree[j];
            if (!e.is_homogeneous() || (shift && *shift != s)) graded = false;
            shift = s;
        }
    }
    report.check(Json{{"check", "graded"}}, graded);
    report.observe("outside_entries", std::to_string(outside));

    PolyMatrix square = stacked.submatrix(rows_in, all_cols);
    std::vector<std::vector<BigInt>> constant(square.num_rows(), std::vector<BigInt>(square.num_cols()));
    for (std::size_t i = 0; i < square.num_rows(); ++i)
        for (std::size_t j = 0; j < square.num_cols(); ++j) constant[i][j] = square.at(i, j).constant_term();
    BigInt det = square.num_rows() == square.num_cols() ? integer_determinant(constant) : BigInt(0);
    report.observe("rank", std::to_string(rows_in.size()));
    report.observe("unit_determinant", to_string(det));
    report.check(Json{{"check", "unit determinant"}}, det == 1 || det == -1, "+-1", to_string(det));
    return report;
}

// Strata

bool StratumIndex::precedes(const StratumIndex& o) const {
    if (i != o.i) return i < o.i;
    return !(nu == o.nu) && contains(o.nu, nu);
}

std::string StratumIndex::str() const { return std::to_string(i) + ":" + nu.str(); }

StratumFamily::StratumFamily(int d, int l, int delta) : d_(d), l_(l), delta_(delta) {
    if (d < 0 || l < 0 || delta < 0 || delta > d + l) throw std::domain_error("need 0 <= delta <= d+l");
    int n = d + l, m = n - delta;
    auto ring = FlipModel::formal_ring(n, m, d * l);
    plus_ = std::make_shared<GrassBundleModel>(ring, d, n, ChernSeries::of_bundle(ring, "V"));
    auto W = ChernSeries::of_bundle(ring, "W");
    for (int i = std::max(0, delta - l); i <= std::min(d, delta); ++i) {
        strata_.push_back(i);
        auto minus = std::make_shared<GrassBundleModel>(ring, d - i, m, W);
        models_[i] = std::make_shared<FlipModel>(plus_, minus);
    }
}

Json StratumFamily::params() const { return Json{{"d", d_}, {"l", l_}, {"delta", delta_}}; }

const FlipModel& StratumFamily::model(int i) const {
    auto it = models_.find(i);
    if (it == models_.end()) throw std::domain_error("no stratum " + std::to_string(i));
    return *it->second;
}

std::vector<StratumIndex> StratumFamily::indices() const {
    std::vector<StratumIndex> r;
    for (int i : strata_)
        for (const auto& nu : enumerate_box({i, delta_ - i})) r.push_back({i, nu});
    return r;
}

int StratumFamily::sign(int i) const { return sign_of((d_ - i) * (delta_ - i)); }

VerificationReport semiorthogonality_check(const StratumFamily& family, const StratumIndex& up,
                                           const StratumIndex& down) {
    VerificationReport report;
    report.suite = "stratum-semiorthogonality";
    report.params = family.params();
    Json where{{"up", up.str()}, {"down", down.str()}};
    PolyMatrix comp = family.model(down.i).down_matrix(down.nu) * family.model(up.i).up_matrix(up.nu);
    if (up == down) {
        const FlipModel& m = family.model(up.i);
        int local_sign = sign_of(m.d_minus() * m.delta_l());
        if (local_sign != family.sign(up.i)) report.observe("sign_mismatch_" + up.str(), "local sign vs correction sign");
        comp.compare(report, where,
                     PolyMatrix::identity(comp.rows(), family.plus().ring(), family.sign(up.i)));
    } else if (!down.precedes(up)) {
        comp.compare(report, where, PolyMatrix(comp.rows(), comp.cols()));
    }
    return report;
}

VerificationReport verify_semiorthogonality(const StratumFamily& family, unsigned jobs) {
    VerificationReport report;
    report.suite = "stratum-semiorthogonality";
    report.params = family.params();
    auto idx = family.indices();
    std::vector<std::pair<StratumIndex, StratumIndex>> pairs;
    for (const auto& a : idx)
        for (const auto& b : idx) pairs.emplace_back(a, b);
    std::vector<VerificationReport> parts(pairs.size());
    parallel_for(pairs.size(), jobs,
                 [&](std::size_t k) { parts[k] = semiorthogonality_check(family, pairs[k].first, pairs[k].second); });
    for (const auto& p : parts) report.merge(p);
    return report;
}

std::map<StratumIndex, PolyMatrix> build_inverse(const StratumFamily& family) {
    auto idx = family.indices();
    // Top index first: i descending, then larger ν first.
    std::sort(idx.begin(), idx.end(), [](const StratumIndex& a, const StratumIndex& b) {
        if (a.i != b.i) return a.i > b.i;
        if (a.nu.size() != b.nu.size()) return a.nu.size() > b.nu.size();
        return a.nu < b.nu;
    });
    const auto& plus_labels = family.plus().basis();
    std::vector<std::string> pl;
    for (const auto& p : plus_labels) pl.push_back(p.str());
    PolyMatrix id = PolyMatrix::identity(pl, family.plus().ring());

    std::map<StratumIndex, PolyMatrix> unsigned_inverse;
    for (const auto& a : idx) {
        PolyMatrix correction = id;
        for (const auto& [b, psi] : unsigned_inverse)
            if (a.precedes(b))
                correction -= family.sign(b.i) * (family.model(b.i).up_matrix(b.nu) * psi);
        unsigned_inverse[a] = family.model(a.i).down_matrix(a.nu) * correction;
    }
    std::map<StratumIndex, PolyMatrix> signed_family;
    for (auto& [a, psi] : unsigned_inverse) signed_family[a] = family.sign(a.i) * psi;
    return signed_family;
}

VerificationReport verify_stratum_isomorphism(const StratumFamily& family, unsigned jobs) {
    VerificationReport report;
    report.suite = "stratum";
    report.params = family.params();
    auto inverse = build_inverse(family);
    std::vector<PolyMatrix> ups, downs;
    for (const auto& [a, psi] : inverse) {
        ups.push_back(family.model(a.i).up_matrix(a.nu));
        downs.push_back(psi);
    }
    PolyMatrix up = PolyMatrix::hstack(ups);
    PolyMatrix down = PolyMatrix::vstack(downs);
    report.observe("strata", std::to_string(family.strata().size()));
    report.observe("source_rank", std::to_string(up.num_cols()));
    report.observe("target_rank", std::to_string(up.num_rows()));
    report.check(Json{{"check", "ranks agree"}}, up.num_cols() == up.num_rows());
    if (up.num_cols() != up.num_rows()) return report;

    // Down·Up is checked block by block so failures name their indices.
    std::vector<std::pair<StratumIndex, StratumIndex>> blocks;
    for (const auto& [a, pa] : inverse)
        for (const auto& [b, pb] : inverse) blocks.emplace_back(a, b);
    std::vector<VerificationReport> parts(blocks.size() + 1);
    parallel_for(blocks.size() + 1, jobs, [&](std::size_t k) {
        if (k == blocks.size()) {
            PolyMatrix comp = up * down;
            comp.compare(parts[k], Json{{"composite", "up*down"}},
                         PolyMatrix::identity(comp.rows(), family.plus().ring()));
            return;
        }
        const auto& [a, b] = blocks[k];
        PolyMatrix comp = inverse.at(a) * family.model(b.i).up_matrix(b.nu);
        PolyMatrix expected = a == b ? PolyMatrix::identity(comp.rows(), family.plus().ring())
                                     : PolyMatrix(comp.rows(), comp.cols());
        comp.compare(parts[k], Json{{"composite", "down*up"}, {"down", a.str()}, {"up", b.str()}}, expected);
    });
    for (const auto& p : parts) report.merge(p);
    return report;
}

std::vector<BoxPiece> box_decomposition(int d, int l, int delta) {
    if (d < 0 || l < 0 || delta < 0 || delta > d + l) throw std::domain_error("need 0 <= delta <= d+l");
    std::vector<BoxPiece> r;
    for (int i = std::max(0, delta - l); i <= std::min(d, delta); ++i) {
        Box b1{d - i, l - delta + i}, b2{i, delta - i};
        for (const auto& lambda : enumerate_box(b1))
            for (const auto& nu : enumerate_box(b2)) r.push_back({i, lambda, nu, oslash(lambda, b1, nu, b2)});
    }
    return r;
}

VerificationReport verify_box_decomposition(int d, int l, int delta) {
    VerificationReport report;
    report.suite = "box";
    report.params = Json{{"d", d}, {"l", l}, {"delta", delta}};
    auto pieces = box_decomposition(d, l, delta);
    Box box{d, l};
    // One cell per κ in the box: hit exactly once.
    std::map<Partition, std::vector<std::string>> preimages;
    std::map<int, std::size_t> counts;
    for (const auto& p : pieces) {
        std::string src = std::to_string(p.i) + ":" + p.lambda.str() + "|" + p.nu.str();
        if (!box.contains(p.image))
            report.check(Json{{"i", p.i}, {"lambda", p.lambda.str()}, {"nu", p.nu.str()}}, false,
                         "inside " + box.str(), p.image.str());
        else
            preimages[p.image].push_back(src);
        ++counts[p.i];
    }
    for (const auto& kappa : enumerate_box(box)) {
        const auto& pre = preimages[kappa];
        std::string got = std::to_string(pre.size()) + " preimages";
        for (const auto& s : pre) got += " " + s;
        report.check(Json{{"kappa", kappa.str()}}, pre.size() == 1, "1 preimage", got);
    }
    for (const auto& [i, c] : counts) report.observe("stratum_" + std::to_string(i), std::to_string(c));
    return report;
}

}  // namespace qs
