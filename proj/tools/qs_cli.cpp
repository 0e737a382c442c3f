#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "qs/chern.hpp"
#include "qs/flipcorr.hpp"
#include "qs/grasschow.hpp"
#include "qs/lr.hpp"
#include "qs/motivic.hpp"
#include "qs/projectors.hpp"
#include "qs/suites.hpp"

using namespace qs;

namespace {

struct Options {
    unsigned jobs = 1;
    std::optional<int> cap;
    std::string out;
    std::string format = "json";
    bool timing = false;
};

// Thrown for bad input that CLI11 cannot see (partition syntax, files).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("bad partition '" + text + "': " + e.what());
    }
}

Box parse_box(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(text);
        return Box{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("bad box '" + text + "', expected d,l");
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw UsageError("cannot write " + opt.out);
    f << text;
}

void emit_json(const Options& opt, Json j) {
    if (!j.contains("schema")) {
        Json r;
        r["schema"] = 1;
        for (auto& [k, v] : j.items()) r[k] = v;
        j = r;
    }
    emit(opt, j.dump(2) + "\n");
}

int emit_report(const Options& opt, VerificationReport r, double ms, const Json& extra = Json::object()) {
    r.wall_ms = ms;
    if (opt.format == "text") {
        std::string t = r.to_text();
        if (opt.timing) t += "  wall_ms = " + std::to_string(static_cast<long long>(ms)) + "\n";
        emit(opt, t);
    } else {
        Json j = r.to_json(opt.timing);
        for (const auto& [k, v] : extra.items()) j[k] = v;
        emit(opt, j.dump(2) + "\n");
    }
    return r.passed() ? 0 : 1;
}

template <class F>
int timed_report(const Options& opt, F f, const Json& extra = Json::object()) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = f();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return emit_report(opt, std::move(r), ms, extra);
}

Json lr_json(const LRMap& m) {
    Json c = Json::object();
    for (const auto& [p, k] : m) c[p.str()] = k;
    return Json{{"coefficients", c}};
}

// "E:3", "-E:3" (c(−E)), "E^v:3" (c(E^∨)).
ChernSeries bundle_series(const std::string& spec, std::optional<int> cap, RingPtr& ring) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw UsageError("bad bundle '" + spec + "', expected SYMBOL:RANK");
    std::string sym = spec.substr(0, colon);
    int rank = 0;
    try {
        rank = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("bad rank in '" + spec + "'");
    }
    bool neg = !sym.empty() && sym.front() == '-';
    if (neg) sym.erase(0, 1);
    bool dual = sym.size() > 2 && sym.substr(sym.size() - 2) == "^v";
    if (dual) sym.erase(sym.size() - 2);
    if (sym.empty() || rank < 0) throw UsageError("bad bundle '" + spec + "'");
    ring = Ring::make({{sym, rank}}, cap);
    auto c = ChernSeries::of_bundle(ring, sym);
    if (dual) c = series_dual(c);
    if (neg) {
        if (!cap) throw UsageError("a negative bundle needs --cap");
        c = series_inv(c);
    }
    return c;
}

std::vector<Motive> read_classes(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!j.is_array()) throw UsageError(path + ": expected a JSON array of exponent->coefficient maps");
    std::vector<Motive> out;
    try {
        for (const auto& e : j) out.push_back(Motive::from_json(e));
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    return out;
}

Json parse_params(const std::vector<std::string>& kv, const std::string& json_text) {
    Json p = Json::object();
    if (!json_text.empty()) {
        try {
            p = Json::parse(json_text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --params: ") + e.what());
        }
    }
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("bad --param '" + s + "', expected key=value");
        std::string k = s.substr(0, eq), v = s.substr(eq + 1);
        std::size_t used = 0;
        int x = 0;
        bool integer = false;
        try {
            x = std::stoi(v, &used);
            integer = used == v.size();
        } catch (const std::exception&) {
        }
        if (integer) p[k] = x;
        else p[k] = v;
    }
    return p;
}

std::string cache_path() {
    const char* dir = std::getenv("QS_CACHE_DIR");
    if (!dir || !*dir) return {};
    return (std::filesystem::path(dir) / "lr_cache.bin").string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus on Grassmannian bundles and verification suites"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--cap", opt.cap, "Degree cap for formal rings built by the command");
    app.add_option("--out", opt.out, "Write output to this file");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", opt.timing, "Include wall time in reports");

    std::function<int()> action;

    // lr
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients and products");
    std::string mu_s, nu_s, lambda_s, box_s;
    lr->add_option("--mu", mu_s)->required();
    lr->add_option("--nu", nu_s)->required();
    lr->add_option("--lambda", lambda_s);
    lr->add_option("--box", box_s, "Restrict to B_{d,l}, given as d,l");
    lr->callback([&] {
        action = [&] {
            auto mu = parse_partition(mu_s), nu = parse_partition(nu_s);
            if (!lambda_s.empty()) {
                auto lambda = parse_partition(lambda_s);
                emit_json(opt, Json{{"coefficients", {{lambda.str(), lr_coefficient(mu, nu, lambda)}}}});
                return 0;
            }
            std::optional<Box> box;
            if (!box_s.empty()) box = parse_box(box_s);
            emit_json(opt, lr_json(product_expand(mu, nu, box)));
            return 0;
        };
    });

    // schur
    auto* sc = app.add_subcommand("schur", "Skew Schur determinant of a formal bundle");
    std::string shape_s, bundle_s;
    sc->add_option("--shape", shape_s, "lambda or lambda/mu")->required();
    sc->add_option("--bundle", bundle_s, "SYMBOL:RANK, -SYMBOL:RANK or SYMBOL^v:RANK")->required();
    sc->callback([&] {
        action = [&] {
            SkewShape shape;
            try {
                shape = SkewShape::parse(shape_s);
            } catch (const std::exception& e) {
                throw UsageError("bad shape '" + shape_s + "': " + e.what());
            }
            RingPtr ring;
            auto c = bundle_series(bundle_s, opt.cap, ring);
            emit_json(opt, Json{{"shape", shape.str()}, {"polynomial", poly_to_json(schur(shape, c))}});
            return 0;
        };
    });

    // gr
    auto* gr = app.add_subcommand("gr", "Grassmannian bundle identities");
    gr->require_subcommand(1);
    int gd = 0, gn = 0;
    for (const char* name : {"verify-duality", "verify-identity"}) {
        auto* s = gr->add_subcommand(name, name[7] == 'd' ? "Duality pairings" : "Projector decomposition of Id");
        s->add_option("--d", gd)->required();
        s->add_option("--n", gn)->required();
        std::string which = name;
        s->callback([&, which] {
            action = [&, which] {
                if (gd < 0 || gd > gn) throw UsageError("need 0 <= d <= n");
                auto model = GrassBundleModel::formal(gd, gn, "E", opt.cap);
                return timed_report(opt, [&] {
                    return which == "verify-duality" ? verify_duality(*model, opt.jobs)
                                                     : verify_identity(*model, opt.jobs);
                });
            };
        });
    }

    // flip
    auto* fl = app.add_subcommand("flip", "Virtual Grassmannian flips");
    fl->require_subcommand(1);
    int fn = 0, fm = 0, fdp = 0, fdm = 0;
    std::string fnu;
    auto* fv = fl->add_subcommand("verify", "Psi^std o Psi = sign * Id");
    fv->add_option("--n", fn)->required();
    fv->add_option("--m", fm)->required();
    fv->add_option("--dplus", fdp)->required();
    fv->add_option("--dminus", fdm)->required();
    fv->add_option("--nu", fnu);
    fv->callback([&] {
        action = [&] {
            std::optional<Partition> nu;
            if (!fnu.empty()) nu = parse_partition(fnu);
            auto model = FlipModel::formal(fn, fm, fdp, fdm, opt.cap);
            if (nu && !model->nu_box().contains(*nu)) throw UsageError("nu outside " + model->nu_box().str());
            return timed_report(opt, [&] {
                auto r = verify_flip_identity(*model, nu, opt.jobs);
                r.merge(verify_kernels(*model));
                return r;
            });
        };
    });
    int sd = 0, sdelta = 0, sl = 0;
    auto* fs = fl->add_subcommand("stratum", "Semiorthogonality and the stratum isomorphism");
    fs->add_option("--d", sd)->required();
    fs->add_option("--delta", sdelta)->required();
    fs->add_option("--l", sl)->required();
    fs->callback([&] {
        action = [&] {
            return timed_report(opt, [&] { return run_suite("stratum", {{"d", sd}, {"l", sl}, {"delta", sdelta}}, opt.jobs); });
        };
    });

    // box
    auto* bx = app.add_subcommand("box", "Box decomposition");
    bx->require_subcommand(1);
    int bd = 0, bl = 0, bdelta = 0;
    auto* bdc = bx->add_subcommand("decompose", "Bijectivity of the stratified box decomposition");
    bdc->add_option("--d", bd)->required();
    bdc->add_option("--l", bl)->required();
    bdc->add_option("--delta", bdelta)->required();
    bdc->callback([&] {
        action = [&] {
            Json pieces = Json::array();
            for (const auto& p : box_decomposition(bd, bl, bdelta))
                pieces.push_back(Json{{"i", p.i}, {"lambda", p.lambda.str()}, {"nu", p.nu.str()}, {"image", p.image.str()}});
            return timed_report(opt, [&] { return verify_box_decomposition(bd, bl, bdelta); }, Json{{"pieces", pieces}});
        };
    });

    // cayley
    auto* cy = app.add_subcommand("cayley", "Cayley relation suite");
    cy->require_subcommand(1);
    int cd = 0, cn = 0;
    auto* cv = cy->add_subcommand("verify", "Relations (a), (b), (c)");
    cv->add_option("--d", cd)->required();
    cv->add_option("--n", cn)->required();
    cv->callback([&] {
        action = [&] { return timed_report(opt, [&] { return run_suite("cayley", {{"d", cd}, {"n", cn}}, opt.jobs); }); };
    });

    // appendix
    auto* ap = app.add_subcommand("appendix", "Top/lowest strata projectors and cross orthogonality");
    ap->require_subcommand(1);
    int an = 0, am = 0, ad = 0;
    std::string which = "top";
    auto* av = ap->add_subcommand("verify", "Projector identities");
    av->add_option("--n", an)->required();
    av->add_option("--m", am)->required();
    av->add_option("--d", ad)->required();
    av->add_option("--which", which)->check(CLI::IsMember({"top", "lowest", "cross"}));
    av->callback([&] {
        action = [&] {
            return timed_report(opt, [&] {
                return run_suite("appendix-" + which, {{"n", an}, {"m", am}, {"d", ad}}, opt.jobs);
            });
        };
    });

    // motivic
    auto* mo = app.add_subcommand("motivic", "Motivic and Poincare polynomial evaluators");
    mo->require_subcommand(1);
    int md = 0, mn = 0, mdelta = 0, mg = 0, mm = 0;
    std::string classes_path;
    bool by_quot_index = false, covariant = false;
    auto* mga = mo->add_subcommand("gauss", "Gaussian binomial [n choose d]_t");
    mga->add_option("--d", md)->required();
    mga->add_option("--n", mn)->required();
    mga->callback([&] {
        action = [&] {
            emit_json(opt, grassmann_poincare(md, mn).to_json());
            return 0;
        };
    });
    auto* mq = mo->add_subcommand("quot", "Right-hand side of the Quot formula");
    mq->add_option("--d", md)->required();
    mq->add_option("--delta", mdelta)->required();
    mq->add_option("--classes", classes_path, "JSON array of exponent->coefficient maps, class_j = [Quot_{d-j}]")
        ->required();
    mq->add_flag("--by-quot-index", by_quot_index, "Array entry k is [Quot_k] instead");
    mq->add_flag("--covariant", covariant, "Reflect the weight polynomials");
    mq->callback([&] {
        action = [&] {
            auto classes = read_classes(classes_path);
            QuotSpec spec = by_quot_index ? QuotSpec::from_quot_classes(md, mdelta, classes)
                                          : QuotSpec{md, mdelta, classes};
            try {
                spec.validate();
            } catch (const std::domain_error& e) {
                throw UsageError(e.what());
            }
            emit_json(opt, quot_rhs(spec, covariant ? Variance::Covariant : Variance::Contravariant).to_json());
            return 0;
        };
    });
    auto* ms = mo->add_subcommand("sympower", "Symmetric power identity against the Macdonald oracle");
    ms->add_option("--g", mg)->required();
    ms->add_option("--n", mn)->required();
    ms->callback([&] {
        action = [&] {
            Json extra = Json{{"lhs", macdonald_sym_poincare(mg, mg - 1 + mn).to_json()}, {"variable", "u"}};
            return timed_report(opt, [&] { return run_suite("sympower", {{"g", mg}, {"n", mn}}, opt.jobs); }, extra);
        };
    });
    auto* mmac = mo->add_subcommand("macdonald", "Poincare polynomial of C^(m) in u");
    mmac->add_option("--g", mg)->required();
    mmac->add_option("--m", mm)->required();
    mmac->callback([&] {
        action = [&] {
            if (mg < 0 || mm < 0) throw UsageError("need g, m >= 0");
            Json j = macdonald_sym_poincare(mg, mm).to_json();
            j["variable"] = "u";
            emit_json(opt, j);
            return 0;
        };
    });

    // run
    auto* run = app.add_subcommand("run", "Run a named verification suite");
    std::string suite;
    std::vector<std::string> kv;
    std::string params_json;
    bool list = false;
    run->add_option("suite", suite, "Suite name");
    run->add_option("--param", kv, "key=value, repeatable");
    run->add_option("--params", params_json, "Parameters as a JSON object");
    run->add_flag("--list", list, "List suite names");
    run->callback([&] {
        action = [&] {
            if (list) {
                std::string s;
                for (const auto& n : suite_names()) s += n + "\n";
                emit(opt, s);
                return 0;
            }
            if (suite.empty()) throw UsageError("missing suite name");
            Json params = parse_params(kv, params_json);
            return timed_report(opt, [&] { return run_suite(suite, params, opt.jobs); });
        };
    });

    // Global flags may follow the subcommand.
    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        for (auto* s : a->get_subcommands({})) {
            s->fallthrough();
            fall(s);
        }
    };
    fall(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string cache = cache_path();
    if (!cache.empty()) lr_cache_load(cache);
    int code = 2;
    try {
        code = action ? action() : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!cache.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(cache).parent_path(), ec);
        lr_cache_save(cache);
    }
    return code;
}
