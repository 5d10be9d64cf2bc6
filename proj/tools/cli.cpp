#include "cli.hpp"

#include "hopfcyc/io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>
#include <omp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hopfcyc::cli {

namespace {

struct Session {
    int max_degree = 4;
    std::string field = "q";
    std::string method = "lambda";
    std::string format = "json";
    int jobs = 1;
};

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return ss.str();
}

bool is_inline(const std::string& s) { return !s.empty() && s.find_first_not_of(" \t\r\n") != std::string::npos && s[s.find_first_not_of(" \t\r\n")] == '{'; }

// What was hashed: file bytes, inline text, or "builtin:<name>".
std::string source_bytes(const std::string& source) {
    if (is_inline(source)) return source;
    std::ifstream in(source, std::ios::binary);
    if (!in) return "builtin:" + source;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using Series = std::vector<Json>;

struct Report {
    std::string name;
    std::vector<std::string> args;
    Session session;
    Json inputs = Json::array();
    CheckReport checks;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::pair<std::string, Series>> series;  // indexed by degree
    Json details = Json::object();
    std::vector<std::pair<std::string, double>> timings;

    void input(const std::string& role, const std::string& source) {
        std::string bytes = source_bytes(source);
        std::string kind = is_inline(source) ? "inline" : (bytes.rfind("builtin:", 0) == 0 ? "builtin" : "file");
        inputs.push_back(Json{{"role", role}, {"source", kind == "inline" ? "<inline>" : source}, {"kind", kind},
                              {"sha256", sha256_hex(bytes)}});
    }
    void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
    void add_series(const std::string& k, const std::vector<Index>& v) {
        Series s;
        for (auto x : v) s.push_back(x);
        series.emplace_back(k, s);
    }
    template <class F>
    auto timed(const std::string& phase, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto finish = [&] {
            std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
            timings.emplace_back(phase, dt.count());
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            finish();
        } else {
            auto r = f();
            finish();
            return r;
        }
    }
};

Json checks_json(const CheckReport& c) {
    Json out = Json::array();
    for (const auto& k : c.checks) {
        Json e{{"name", k.name}, {"passed", k.passed}};
        if (!k.witness.empty()) e["witness"] = k.witness;
        out.push_back(e);
    }
    return out;
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(const Report& r, std::ostream& out) {
    if (r.session.format == "table") {
        out << "hopfcyc " << r.name;
        for (const auto& a : r.args) out << ' ' << (is_inline(a) ? "<inline>" : a);
        out << "  (field " << r.session.field << ", max degree " << r.session.max_degree << ", method "
            << r.session.method << ")\n";
        std::size_t passed = 0;
        for (const auto& c : r.checks.checks) passed += c.passed;
        out << "checks: " << passed << "/" << r.checks.checks.size() << " passed\n";
        for (const auto& c : r.checks.checks) {
            out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.witness.empty()) out << ": " << c.witness;
            out << '\n';
        }
        for (const auto& [k, v] : r.facts) out << k << ": " << v << '\n';
        if (!r.series.empty()) {
            std::vector<std::size_t> width{1};
            std::size_t rows = 0;
            for (const auto& [k, v] : r.series) {
                std::size_t w = k.size();
                for (const auto& x : v) w = std::max(w, cell(x).size());
                width.push_back(w);
                rows = std::max(rows, v.size());
            }
            out << std::setw(static_cast<int>(width[0])) << "n";
            for (std::size_t c = 0; c < r.series.size(); ++c)
                out << "  " << std::setw(static_cast<int>(width[c + 1])) << r.series[c].first;
            out << '\n';
            for (std::size_t n = 0; n < rows; ++n) {
                out << std::setw(static_cast<int>(width[0])) << n;
                for (std::size_t c = 0; c < r.series.size(); ++c) {
                    const auto& v = r.series[c].second;
                    out << "  " << std::setw(static_cast<int>(width[c + 1])) << (n < v.size() ? cell(v[n]) : "");
                }
                out << '\n';
            }
        }
        out << "timings (ms):";
        for (const auto& [k, v] : r.timings) out << ' ' << k << '=' << std::fixed << std::setprecision(1) << v;
        out << '\n';
        return;
    }
    Json j;
    j["schema"] = 1;
    j["command"] = Json{{"name", r.name},
                        {"args", r.args},
                        {"config",
                         {{"max_degree", r.session.max_degree},
                          {"field", r.session.field},
                          {"method", r.session.method},
                          {"jobs", r.session.jobs}}}};
    j["inputs"] = r.inputs;
    j["status"] = r.checks.ok() ? "pass" : "fail";
    j["checks"] = checks_json(r.checks);
    Json res = Json::object();
    for (const auto& [k, v] : r.facts) res[k] = v;
    if (!r.series.empty()) {
        Json s = Json::object();
        std::size_t rows = 0;
        for (const auto& [k, v] : r.series) rows = std::max(rows, v.size());
        Json deg = Json::array();
        for (std::size_t n = 0; n < rows; ++n) deg.push_back(n);
        s["degree"] = deg;
        for (const auto& [k, v] : r.series) s[k] = v;
        res["homology"] = s;
    }
    for (auto it = r.details.begin(); it != r.details.end(); ++it) res[it.key()] = it.value();
    j["results"] = res;
    Json t = Json::object();
    for (const auto& [k, v] : r.timings) t[k + "_ms"] = v;
    j["timings"] = t;
    out << j.dump(2) << '\n';
}

Field session_field(const Session& s) { return Field::parse(s.field); }

void require_char0(const Session& s, const std::string& what) {
    Field f = session_field(s);
    if (!f.is_rational())
        throw InputError(what + " needs characteristic 0 (Connes' complex and the cyclic comparison theorems); " +
                         f.name() + " supports Hochschild homology only");
}

void compare(Report& r, const std::string& name, const std::vector<Index>& a, const std::vector<Index>& b) {
    std::string w;
    if (a != b) {
        for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n)
            if (a[n] != b[n]) {
                w = "degree " + std::to_string(n) + ": " + std::to_string(a[n]) + " vs " + std::to_string(b[n]);
                break;
            }
        if (w.empty()) w = "length mismatch";
    }
    r.checks.add(name, a == b, w);
}

// --- commands ---------------------------------------------------------------

void cmd_verify_hopf(Report& r, const std::string& src) {
    r.input("hopf", src);
    HopfPtr h = resolve_hopf(src);
    r.checks.append(r.timed("verify", [&] { return verify_hopf(*h); }));
    r.fact("dim", std::to_string(h->dim()));
    r.fact("commutative", h->commutative() ? "yes" : "no");
    r.fact("cocommutative", h->cocommutative() ? "yes" : "no");
}

CrossedModuleData load_module(Report& r, const std::string& src, const std::string& mod) {
    if (mod.empty()) {
        r.input("module", src);
        return parse_crossed(load_document(src));
    }
    r.input("hopf", src);
    r.input("module", mod);
    return resolve_module(resolve_hopf(src), mod);
}

void cmd_verify_crossed(Report& r, const std::string& src, const std::string& mod) {
    CrossedModuleData m = load_module(r, src, mod);
    r.timed("verify", [&] {
        r.checks.append(verify_crossed(m));
        r.checks.append(verify_modular(m));
    });
    r.fact("dim", std::to_string(m.dim));
}

void cmd_verify_galois(Report& r, const std::string& src) {
    r.input("extension", src);
    ComoduleAlgebraData ext = resolve_extension(src);
    r.timed("verify", [&] {
        // galois_check repeats these; they are reported here only when they fail
        CheckReport pre = verify_comodule_algebra(ext);
        if (!pre.ok()) {
            r.checks.append(pre);
            return;
        }
        GaloisExtensionData g = galois_check(ext);
        r.checks.append(g.checks);
        r.fact("dim_A", std::to_string(ext.algebra.dim()));
        r.fact("dim_B", std::to_string(g.coinvariants.basis.size()));
        r.fact("dim_H", std::to_string(ext.base->dim()));
        r.fact("canonical_map_rank_defect", std::to_string(g.rank_defect));
        if (!g.galois) return;
        r.checks.append(kappa_relations(g));
        r.checks.append(ab_crossed_module(g).checks);
    });
}

void cmd_verify_cyclic(Report& r, const std::string& src, const std::string& mod) {
    CrossedModuleData m = load_module(r, src, mod);
    int n = r.session.max_degree;
    r.timed("verify", [&] {
        CheckReport crossed = verify_crossed(m);
        r.checks.append(crossed);
        r.checks.append(verify_modular(m));
        if (!crossed.ok()) return;
        CheckReport wd = verify_cyclic_well_defined(m, n);
        r.checks.append(wd);
        if (!wd.ok()) return;
        CyclicObjectData z = build_cyclic(m, n, BuildOptions{false});
        r.checks.append(verify_cyclic_object(z));
        r.add_series("dim", z.dims);
    });
}

void cmd_hh(Report& r, const std::string& src, const std::string& mod) {
    CrossedModuleData m = load_module(r, src, mod);
    int n = r.session.max_degree;
    Field f = session_field(r.session);
    CyclicObjectData z = r.timed("build", [&] { return build_simplicial(m, n + 1); });
    auto hh = r.timed("homology", [&] { return hochschild(z, 0, n, f); });
    r.add_series("HH", hh);
    if (r.session.method == "both") {
        auto tor = r.timed("oracle", [&] { return tor_oracle(m, 0, n, f); });
        r.add_series("Tor", tor);
        compare(r, "Hochschild complex agrees with the Tor oracle", hh, tor);
    }
}

void cmd_hc(Report& r, const std::string& src, const std::string& mod) {
    require_char0(r.session, "cyclic homology");
    CrossedModuleData m = load_module(r, src, mod);
    int n = r.session.max_degree;
    CyclicObjectData z = r.timed("build", [&] { return build_cyclic(m, n + 1); });
    auto hh = r.timed("hochschild", [&] { return hochschild(z, 0, n); });
    r.add_series("HH", hh);
    std::vector<Index> hc;
    if (r.session.method != "bicomplex") {
        hc = r.timed("connes", [&] { return cyclic_connes(z, 0, n); });
        r.add_series("HC_connes", hc);
    }
    if (r.session.method != "lambda") {
        auto hb = r.timed("bicomplex", [&] { return cyclic_bicomplex(z, 0, n); });
        r.add_series("HC_bicomplex", hb);
        if (hc.empty())
            hc = hb;
        else
            compare(r, "Connes complex agrees with the Tsygan bicomplex", hc, hb);
    }
    r.checks.append(sbi_check(hh, hc));
}

void cmd_galois(Report& r, const std::string& src) {
    require_char0(r.session, "relative cyclic homology");
    r.input("extension", src);
    ComoduleAlgebraData ext = resolve_extension(src);
    int n = r.session.max_degree;
    GaloisExtensionData g = r.timed("galois", [&] { return galois_check(ext); });
    r.checks.append(g.checks);
    r.fact("dim_A", std::to_string(ext.algebra.dim()));
    r.fact("dim_B", std::to_string(g.coinvariants.basis.size()));
    r.fact("dim_H", std::to_string(ext.base->dim()));
    if (!g.galois) return;
    r.checks.append(kappa_relations(g));
    GaloisHomologyReport gh = r.timed("lambda", [&] { return galois_homology(g, n); });
    r.checks.append(gh.lambda.checks);
    r.add_series("HH_direct", gh.hh_direct);
    r.add_series("HH_lambda", gh.hh_transported);
    r.add_series("HC_direct", gh.hc_direct);
    r.add_series("HC_lambda", gh.hc_transported);
    compare(r, "HH(A/B) equals HH(H, A_B) through lambda", gh.hh_direct, gh.hh_transported);
    compare(r, "HC(A/B) equals HC(H, A_B) through lambda", gh.hc_direct, gh.hc_transported);
    if (r.session.method != "lambda") {
        auto hb = r.timed("bicomplex", [&] { return cyclic_bicomplex(gh.lambda.source.object, 0, n); });
        r.add_series("HC_bicomplex", hb);
        compare(r, "Connes complex agrees with the Tsygan bicomplex", gh.hc_direct, hb);
    }
    r.checks.append(sbi_check(gh.hh_direct, gh.hc_direct));
    if (ext.base->group) {
        GradedBurgheleaReport b = r.timed("graded", [&] { return burghelea_graded(g, n); });
        r.checks.append(b.checks);
        r.add_series("HC_graded_formula", b.formula);
        compare(r, "graded decomposition matches the direct computation", b.formula, b.direct);
    }
}

void cmd_burghelea(Report& r, const std::string& src, const std::string& mod) {
    require_char0(r.session, "cyclic homology");
    CrossedModuleData m = load_module(r, src, mod);
    if (!m.base->group) throw InputError("burghelea needs a group algebra");
    int n = r.session.max_degree;
    BurgheleaResult b = r.timed("formula", [&] { return burghelea_finite(m, n); });
    r.checks.append(b.checks);
    if (!b.checks.ok()) return;
    auto direct = r.timed("direct", [&] { return cyclic_connes(build_cyclic(m, n + 1), 0, n); });
    r.add_series("HC_direct", direct);
    r.add_series("HC_formula", b.folded);
    compare(r, "class decomposition matches the direct computation", b.folded, direct);
    const FiniteGroupData& g = *m.base->group;
    Json classes = Json::array();
    for (std::size_t c = 0; c < b.representatives.size(); ++c)
        classes.push_back(Json{{"representative", g.names[b.representatives[c]]}, {"group_homology", b.group_homology[c]}});
    r.details["classes"] = classes;
}

void cmd_qtorus(Report& r, const std::string& src) {
    require_char0(r.session, "the quantum torus formula");
    r.input("cocycle", src);
    TorusCocycle c = parse_torus(load_document(src));
    int n = r.session.max_degree;
    TorusReport t = r.timed("formula", [&] { return torus_homology(c, n); });
    std::int64_t bound = c.q_order && c.q_order->fits_slong_p() ? 2 * c.q_order->get_si() : 4;
    bound = std::min<std::int64_t>(bound, c.r <= 2 ? 40 : c.r <= 4 ? 4 : 1);
    r.checks.append(r.timed("oracle", [&] { return box_oracle(c, t.lattice, bound); }));
    r.fact("lattice", t.lattice.describe());
    r.fact("q_order", c.q_order ? c.q_order->get_str() : "infinite");
    Series hhp, hcf, hcp, hht, hct;
    auto total = [](const std::optional<Integer>& x) { return x ? Json(x->get_str()) : Json("infinite"); };
    for (const auto& d : t.degrees) {
        hhp.push_back(d.hh_per_point.get_str());
        hcf.push_back(d.hc_fixed.get_str());
        hcp.push_back(d.hc_per_nonzero_point.get_str());
        hht.push_back(total(d.hh_total));
        hct.push_back(total(d.hc_total));
    }
    r.series = {{"HH_per_point", hhp}, {"HC_fixed", hcf}, {"HC_per_nonzero_point", hcp}, {"HH", hht}, {"HC", hct}};
}

int cmd_export(const std::string& what, const std::string& src, const std::string& mod, bool explicit_constants,
               std::ostream& out) {
    Json j;
    if (what == "hopf")
        j = hopf_json(*resolve_hopf(src), explicit_constants);
    else if (what == "crossed")
        j = crossed_json(mod.empty() ? parse_crossed(load_document(src)) : resolve_module(resolve_hopf(src), mod),
                         explicit_constants);
    else
        j = extension_json(resolve_extension(src), explicit_constants);
    out << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hopf cyclic homology engine", "hopfcyc"};
    app.require_subcommand(1);
    Session s;
    std::string a1, a2;

    auto common = [&](CLI::App* c, bool homology) {
        c->add_option("--format", s.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        c->add_option("--jobs", s.jobs, "worker threads")->check(CLI::Range(1, 1024));
        c->add_option("--max-degree", s.max_degree, "top degree")->check(CLI::Range(1, 64));
        if (homology) {
            c->add_option("--field", s.field, "q or f<p>");
            c->add_option("--method", s.method, "lambda, bicomplex or both")
                ->check(CLI::IsMember({"lambda", "bicomplex", "both"}));
        }
    };
    auto pair_args = [&](CLI::App* c) {
        c->add_option("hopf", a1, "builtin name, file or inline JSON")->required();
        c->add_option("module", a2, "builtin module or crossed-module document");
    };

    auto* verify = app.add_subcommand("verify", "axiom and identity suites");
    verify->require_subcommand(1);
    auto* vh = verify->add_subcommand("hopf", "Hopf algebra axioms");
    vh->add_option("source", a1)->required();
    common(vh, false);
    auto* vc = verify->add_subcommand("crossed", "crossed and modular conditions");
    pair_args(vc);
    common(vc, false);
    auto* vg = verify->add_subcommand("galois", "comodule algebra, canonical map, translation map");
    vg->add_option("source", a1)->required();
    common(vg, false);
    auto* vy = verify->add_subcommand("cyclic", "simplicial and cyclic identities");
    pair_args(vy);
    common(vy, false);

    auto* hh = app.add_subcommand("hh", "Hochschild homology HH(H, M)");
    pair_args(hh);
    common(hh, true);
    auto* hc = app.add_subcommand("hc", "cyclic homology HC(H, M)");
    pair_args(hc);
    common(hc, true);
    auto* ga = app.add_subcommand("galois", "relative cyclic homology of a Hopf-Galois extension");
    ga->add_option("source", a1)->required();
    common(ga, true);
    auto* bu = app.add_subcommand("burghelea", "conjugacy class decomposition for group algebras");
    pair_args(bu);
    common(bu, true);
    auto* qt = app.add_subcommand("qtorus", "quantum torus homology");
    qt->add_option("source", a1)->required();
    common(qt, true);
    auto* ex = app.add_subcommand("export", "print a builtin structure as a JSON document");
    std::string what;
    ex->add_option("kind", what)->required()->check(CLI::IsMember({"hopf", "crossed", "galois"}));
    ex->add_option("source", a1)->required();
    ex->add_option("module", a2);
    bool explicit_constants = false;
    ex->add_flag("--explicit", explicit_constants, "write group algebras by structure constants");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Report r;
    r.session = s;
    r.args = {a1};
    if (!a2.empty()) r.args.push_back(a2);
    try {
        if (*ex) return cmd_export(what, a1, a2, explicit_constants, out);
        omp_set_num_threads(s.jobs);
        set_parallel(s.jobs > 1);
        if (s.method == "both" || s.method == "bicomplex" || s.field != "q") session_field(s);
        if (*verify) {
            if (*vh) r.name = "verify hopf", cmd_verify_hopf(r, a1);
            if (*vc) r.name = "verify crossed", cmd_verify_crossed(r, a1, a2);
            if (*vg) r.name = "verify galois", cmd_verify_galois(r, a1);
            if (*vy) r.name = "verify cyclic", cmd_verify_cyclic(r, a1, a2);
        } else if (*hh) {
            if (a2.empty()) throw InputError("hh needs a Hopf algebra and a module");
            r.name = "hh", cmd_hh(r, a1, a2);
        } else if (*hc) {
            if (a2.empty()) throw InputError("hc needs a Hopf algebra and a module");
            r.name = "hc", cmd_hc(r, a1, a2);
        } else if (*ga) {
            r.name = "galois", cmd_galois(r, a1);
        } else if (*bu) {
            if (a2.empty()) throw InputError("burghelea needs a group algebra and a module");
            r.name = "burghelea", cmd_burghelea(r, a1, a2);
        } else if (*qt) {
            r.name = "qtorus", cmd_qtorus(r, a1);
        }
    } catch (const InputError& e) {
        err << "hopfcyc: input error: " << e.what() << '\n';
        return kInputError;
    } catch (const InsufficientTruncation& e) {
        err << "hopfcyc: " << e.what() << '\n';
        return kInputError;
    } catch (const AxiomViolation& e) {
        r.checks.add("construction", false, e.what());
    } catch (const nlohmann::json::exception& e) {
        err << "hopfcyc: input error: " << e.what() << '\n';
        return kInputError;
    }
    emit(r, out);
    if (!r.checks.ok()) {
        err << "hopfcyc: check failed: " << r.checks.first_failure() << '\n';
        return kCheckFailed;
    }
    return kOk;
}

}  // namespace hopfcyc::cli
