#include "qs/suites.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "qs/flipcorr.hpp"
#include "qs/grasschow.hpp"
#include "qs/lr.hpp"
#include "qs/lr_oracle.hpp"
#include "qs/motivic.hpp"
#include "qs/parallel.hpp"
#include "qs/projectors.hpp"

namespace qs {

namespace {

class Params {
public:
    Params(const Json& j, std::set<std::string> allowed) : j_(j.is_null() ? Json::object() : j) {
        if (!j_.is_object()) throw std::invalid_argument("suite parameters must be a JSON object");
        for (const auto& [key, value] : j_.items())
            if (!allowed.count(key)) throw std::invalid_argument("unknown parameter '" + key + "'");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    int get(const std::string& key, std::optional<int> fallback = std::nullopt) const {
        if (!j_.contains(key)) {
            if (fallback) return *fallback;
            throw std::invalid_argument("missing parameter '" + key + "'");
        }
        const Json& v = j_.at(key);
        if (v.is_number_integer()) return v.get<int>();
        if (v.is_string()) {
            const auto& s = v.get_ref<const std::string&>();
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == s.size() && !s.empty()) return x;
        }
        throw std::invalid_argument("parameter '" + key + "' must be an integer");
    }

    std::optional<Partition> partition(const std::string& key) const {
        if (!j_.contains(key)) return std::nullopt;
        const Json& v = j_.at(key);
        if (!v.is_string()) throw std::invalid_argument("parameter '" + key + "' must be a partition string");
        try {
            return Partition::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw std::invalid_argument("parameter '" + key + "': " + e.what());
        }
    }

    bool all(std::initializer_list<const char*> keys) const {
        for (const char* k : keys)
            if (!has(k)) return false;
        return true;
    }

private:
    Json j_;
};

std::string label(const Json& params) {
    std::string s;
    for (const auto& [k, v] : params.items()) {
        if (!s.empty()) s += " ";
        s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return s;
}

using Instance = std::function<VerificationReport()>;

// Runs instances in parallel and folds them in order; counterexamples and
// observations are tagged with the instance parameters.
VerificationReport run_grid(const std::string& suite, const Json& params, const std::vector<Instance>& instances,
                            unsigned jobs) {
    std::vector<VerificationReport> parts(instances.size());
    parallel_for(instances.size(), jobs, [&](std::size_t k) { parts[k] = instances[k](); });
    VerificationReport total;
    total.suite = suite;
    total.params = params;
    for (const auto& p : parts) {
        total.cells += p.cells;
        total.failures += p.failures;
        for (auto c : p.counterexamples) {
            if (total.counterexamples.size() >= VerificationReport::kMaxStored) break;
            Json indices = Json::object();
            indices["instance"] = p.params;
            for (const auto& [k, v] : c.indices.items()) indices[k] = v;
            c.indices = indices;
            total.counterexamples.push_back(std::move(c));
        }
        for (const auto& [k, v] : p.observations) total.observations[label(p.params) + ": " + k] = v;
    }
    total.observe("instances", std::to_string(parts.size()));
    return total;
}

std::string lr_str(const LRMap& m) {
    std::string s = "{";
    for (const auto& [p, c] : m) s += (s.size() > 1 ? ", " : "") + p.str() + ":" + std::to_string(c);
    return s + "}";
}

VerificationReport lr_oracle_pair(const Partition& mu, const Partition& nu) {
    VerificationReport r;
    r.suite = "lr-oracle";
    r.params = Json{{"mu", mu.str()}, {"nu", nu.str()}};
    int vars = std::max(mu.length() + nu.length(), 4);
    auto expected = oracle::schur_product(mu, nu, vars);
    auto actual = product_expand(mu, nu);
    r.check(Json{{"mu", mu.str()}, {"nu", nu.str()}}, expected == actual, lr_str(expected), lr_str(actual));
    return r;
}

VerificationReport bz_symmetry(int d, int l, int max_k, unsigned jobs) {
    VerificationReport r;
    r.suite = "bz-symmetry";
    r.params = Json{{"d", d}, {"l", l}, {"max_k", max_k}};
    if (d < 0 || l < 0 || max_k < 0) throw std::invalid_argument("need d, l, max_k >= 0");
    const Box box{d, l};
    auto all = enumerate_box(box);
    std::vector<VerificationReport> parts(all.size());
    parallel_for(all.size(), jobs, [&](std::size_t i) {
        const auto& lambda = all[i];
        auto& rep = parts[i];
        for (const auto& mu : all)
            for (const auto& nu : all) {
                auto c = lr_coefficient(mu, nu, lambda);
                auto at = [&](const char* rule) {
                    return Json{{"rule", rule}, {"lambda", lambda.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
                };
                auto cmp = [&](Json where, std::uint64_t other) {
                    rep.check(where, c == other, std::to_string(c), std::to_string(other));
                };
                cmp(at("symmetry"), lr_coefficient(nu, mu, lambda));
                for (int k = 1; k <= max_k; ++k) {
                    Json w = at("translation");
                    w["k"] = k;
                    cmp(w, lr_coefficient(shifted(mu, k, d), nu, shifted(lambda, k, d)));
                }
                cmp(at("complementation"), lr_coefficient(mu, complement(lambda, box), complement(nu, box)));
            }
    });
    for (const auto& p : parts) r.merge(p);
    return r;
}

VerificationReport flip_instance(int n, int m, int dp, int dm, std::optional<Partition> nu, unsigned jobs) {
    auto model = FlipModel::formal(n, m, dp, dm);
    auto r = verify_flip_identity(*model, nu, jobs);
    r.merge(verify_kernels(*model));
    return r;
}

VerificationReport stratum_instance(int d, int l, int delta, unsigned jobs) {
    StratumFamily fam(d, l, delta);
    auto r = verify_semiorthogonality(fam, jobs);
    r.merge(verify_stratum_isomorphism(fam, jobs));
    r.suite = "stratum";
    r.params = fam.params();
    return r;
}

VerificationReport cayley_instance(int d, int n, unsigned jobs) {
    auto r = cayley_relations(d, n, jobs);
    // Box sizes against the Cayley motivic formula: Z is weighted by
    // [n−1 choose d−1]_t (low box), X by [n−1 choose d]_t (top box).
    auto one = Motive(1);
    auto x = cayley_rhs(d, n - 1, one, 0).at_one();
    auto z = cayley_rhs(d, n - 1, 0, one).at_one();
    r.check(Json{{"check", "top-box-vs-motive"}}, r.observations.at("top_box_size") == x.str(), x.str(),
            r.observations.at("top_box_size"));
    r.check(Json{{"check", "low-box-vs-motive"}}, r.observations.at("low_box_size") == z.str(), z.str(),
            r.observations.at("low_box_size"));
    return r;
}

using Runner = std::function<VerificationReport(const Json&, unsigned)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"lr-oracle",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"mu", "nu", "max_size", "max_rows"});
             if (p.has("mu") || p.has("nu")) {
                 auto mu = p.partition("mu"), nu = p.partition("nu");
                 if (!mu || !nu) throw std::invalid_argument("lr-oracle needs both mu and nu");
                 return lr_oracle_pair(*mu, *nu);
             }
             int max_size = p.get("max_size", 6), max_rows = p.get("max_rows", 3);
             std::vector<Partition> ps;
             for (int a = 0; a <= max_size; ++a)
                 for (const auto& mu : partitions_of(a, max_rows)) ps.push_back(mu);
             std::vector<Instance> inst;
             for (const auto& mu : ps)
                 for (const auto& nu : ps) inst.push_back([mu, nu] { return lr_oracle_pair(mu, nu); });
             return run_grid("lr-oracle", Json{{"max_size", max_size}, {"max_rows", max_rows}}, inst, jobs);
         }},
        {"bz-symmetry",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "l", "max_k"});
             return bz_symmetry(p.get("d", 3), p.get("l", 3), p.get("max_k", 3), jobs);
         }},
        {"gr-duality",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "n", "max_n"});
             if (p.all({"d", "n"})) return verify_duality(*GrassBundleModel::formal(p.get("d"), p.get("n")), jobs);
             int max_n = p.get("max_n", 6);
             std::vector<Instance> inst;
             for (int n = 0; n <= max_n; ++n)
                 for (int d = 0; d <= n; ++d)
                     inst.push_back([d, n] { return verify_duality(*GrassBundleModel::formal(d, n)); });
             return run_grid("gr-duality", Json{{"max_n", max_n}}, inst, jobs);
         }},
        {"gr-identity",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "n", "max_n"});
             if (p.all({"d", "n"})) return verify_identity(*GrassBundleModel::formal(p.get("d"), p.get("n")), jobs);
             int max_n = p.get("max_n", 5);
             std::vector<Instance> inst;
             for (int n = 0; n <= max_n; ++n)
                 for (int d = 0; d <= n; ++d)
                     inst.push_back([d, n] { return verify_identity(*GrassBundleModel::formal(d, n)); });
             return run_grid("gr-identity", Json{{"max_n", max_n}}, inst, jobs);
         }},
        {"flip",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"n", "m", "dplus", "dminus", "nu", "max_n"});
             if (p.all({"n", "m", "dplus", "dminus"}))
                 return flip_instance(p.get("n"), p.get("m"), p.get("dplus"), p.get("dminus"), p.partition("nu"),
                                      jobs);
             int max_n = p.get("max_n", 5);
             std::vector<Instance> inst;
             for (int n = 0; n <= max_n; ++n)
                 for (int m = 0; m <= n; ++m)
                     for (int dp = 0; dp <= n; ++dp)
                         for (int dm = 0; dm <= std::min(dp, m); ++dm)
                             if (m - dm <= n - dp)
                                 inst.push_back([=] { return flip_instance(n, m, dp, dm, std::nullopt, 1); });
             return run_grid("flip", Json{{"max_n", max_n}}, inst, jobs);
         }},
        {"stratum",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "l", "delta", "max_d", "max_delta", "max_n"});
             if (p.all({"d", "l", "delta"})) return stratum_instance(p.get("d"), p.get("l"), p.get("delta"), jobs);
             int max_d = p.get("max_d", 3), max_delta = p.get("max_delta", 2), max_n = p.get("max_n", 5);
             std::vector<Instance> inst;
             for (int d = 0; d <= max_d; ++d)
                 for (int l = 0; d + l <= max_n; ++l)
                     for (int delta = 0; delta <= std::min(max_delta, d + l); ++delta)
                         inst.push_back([=] { return stratum_instance(d, l, delta, 1); });
             return run_grid("stratum", Json{{"max_d", max_d}, {"max_delta", max_delta}, {"max_n", max_n}}, inst,
                             jobs);
         }},
        {"box",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "l", "delta", "max_d", "max_l"});
             if (p.all({"d", "l", "delta"})) return verify_box_decomposition(p.get("d"), p.get("l"), p.get("delta"));
             int max_d = p.get("max_d", 6), max_l = p.get("max_l", 6);
             std::vector<Instance> inst;
             for (int d = 0; d <= max_d; ++d)
                 for (int l = 0; l <= max_l; ++l)
                     for (int delta = 0; delta <= d + l; ++delta)
                         inst.push_back([=] { return verify_box_decomposition(d, l, delta); });
             return run_grid("box", Json{{"max_d", max_d}, {"max_l", max_l}}, inst, jobs);
         }},
        {"cayley",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "n", "max_n"});
             if (p.all({"d", "n"})) return cayley_instance(p.get("d"), p.get("n"), jobs);
             int max_n = p.get("max_n", 5);
             std::vector<Instance> inst;
             for (int n = 2; n <= max_n; ++n)
                 for (int d = 1; d <= n - 1; ++d) inst.push_back([=] { return cayley_instance(d, n, 1); });
             return run_grid("cayley", Json{{"max_n", max_n}}, inst, jobs);
         }},
        {"appendix-top",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"n", "m", "d", "max_n", "max_m"});
             if (p.all({"n", "m", "d"})) return appendix_top_projectors(p.get("n"), p.get("m"), p.get("d"), jobs);
             int max_n = p.get("max_n", 5), max_m = p.get("max_m", 2);
             std::vector<Instance> inst;
             for (int n = 1; n <= max_n; ++n)
                 for (int m = 0; m <= max_m; ++m)
                     for (int d = 1; d <= n - m; ++d)
                         inst.push_back([=] { return appendix_top_projectors(n, m, d); });
             return run_grid("appendix-top", Json{{"max_n", max_n}, {"max_m", max_m}}, inst, jobs);
         }},
        {"appendix-lowest",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"n", "m", "d", "max_n", "max_m"});
             if (p.all({"n", "m", "d"})) return appendix_lowest_projectors(p.get("n"), p.get("m"), p.get("d"), jobs);
             int max_n = p.get("max_n", 5), max_m = p.get("max_m", 2);
             std::vector<Instance> inst;
             for (int n = 1; n <= max_n; ++n)
                 for (int m = 0; m <= max_m; ++m)
                     for (int d = std::max(1, m); d <= n; ++d)
                         inst.push_back([=] { return appendix_lowest_projectors(n, m, d); });
             return run_grid("appendix-lowest", Json{{"max_n", max_n}, {"max_m", max_m}}, inst, jobs);
         }},
        {"appendix-cross",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"n", "m", "d", "max_n", "max_m"});
             if (p.all({"n", "m", "d"}))
                 return appendix_cross_orthogonality(p.get("n"), p.get("m"), p.get("d"), jobs);
             int max_n = p.get("max_n", 5), max_m = p.get("max_m", 2);
             std::vector<Instance> inst;
             for (int n = 1; n <= max_n; ++n)
                 for (int m = 1; m <= max_m; ++m)
                     for (int d = 1; d <= n; ++d)
                         inst.push_back([=] { return appendix_cross_orthogonality(n, m, d); });
             return run_grid("appendix-cross", Json{{"max_n", max_n}, {"max_m", max_m}}, inst, jobs);
         }},
        {"sympower",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"g", "n", "max_g"});
             if (p.all({"g", "n"})) return verify_sym_power_identity(p.get("g"), p.get("n"));
             int max_g = p.get("max_g", 5);
             std::vector<Instance> inst;
             for (int g = 2; g <= max_g; ++g)
                 for (int n = 1; n <= g - 1; ++n) inst.push_back([=] { return verify_sym_power_identity(g, n); });
             return run_grid("sympower", Json{{"max_g", max_g}}, inst, jobs);
         }},
        {"quot-specialize",
         [](const Json& j, unsigned jobs) {
             Params p(j, {"d", "delta", "max_delta"});
             if (p.all({"d", "delta"})) return verify_quot_specialization(p.get("d"), p.get("delta"));
             int max_delta = p.get("max_delta", 4);
             std::vector<Instance> inst;
             for (int delta = 1; delta <= max_delta; ++delta)
                 for (int d = 1; d <= delta; ++d) inst.push_back([=] { return verify_quot_specialization(d, delta); });
             return run_grid("quot-specialize", Json{{"max_delta", max_delta}}, inst, jobs);
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, run] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const Json& params, unsigned jobs) {
    for (const auto& [n, run] : registry()) {
        if (n != name) continue;
        try {
            return run(params, jobs);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qs
