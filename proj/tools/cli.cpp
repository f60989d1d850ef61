#include "cli.hpp"

#include "fourfold/catalog.hpp"
#include "fourfold/einstein.hpp"
#include "fourfold/expr.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/serialize.hpp"
#include "fourfold/surgery.hpp"
#include "fourfold/sw_certify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>

namespace fourfold::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconclusive = 2;

struct Options {
    bool approx = false;
    std::string catalog_path;
    std::string c4_text;
    std::string format = "json";
    bool strict = false;
    std::vector<std::string> k_values = {"1", "2/3"};
    std::string theorem;
    std::vector<std::string> exprs;
    std::string mode = "spin";
    std::int64_t g = 3, h = 3, m_max = 4, n_max = 6;
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json envelope(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

json symbolic(const SymbolicValue& v, bool approx) {
    json j = {{"status", "computed"}, {"value", v.str()}};
    if (approx) j["approx"] = v.approx();
    return j;
}

json inconclusive(const std::string& reason) { return {{"status", "inconclusive"}, {"reason", reason}}; }

json computed(const Computed<SymbolicValue>& c, bool approx) {
    return c.has_value() ? symbolic(*c, approx) : inconclusive(c.reason);
}

Rational resolve_c4(const Options& o) {
    std::string text = o.c4_text;
    if (text.empty())
        if (const char* env = std::getenv("FOURFOLD_C4")) text = env;
    if (text.empty()) return 1;
    Rational c4;
    try {
        c4 = parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("c4 must be a rational number, got '" + text + "'");
    }
    if (c4 <= 0) throw UsageError("c4 must be positive");
    return c4;
}

struct Context {
    Options opt;
    Catalog catalog;
    std::ostream& out;
};

Manifold build(Context& cx, const std::string& text, json* report = nullptr) {
    Expr e = parse(text, cx.catalog);
    if (report) {
        (*report)["expression"] = print(e);
        json norm = json::array();
        for (const auto& [id, k] : normalize(e)) norm.push_back({id, k});
        (*report)["normalized"] = norm;
    }
    return evaluate(e, cx.catalog);
}

void emit(Context& cx, const json& j);

void text_lines(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) text_lines(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) text_lines(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(Context& cx, const json& j) {
    if (cx.opt.format == "text") {
        json body = j;
        body.erase("schema");
        text_lines(body, "", cx.out);
    } else {
        cx.out << j.dump() << "\n";
    }
}

int cmd_catalog(Context& cx) {
    json r = envelope("catalog");
    json atoms = json::array();
    auto describe = [&](const Manifold& m) {
        json flags = json::array();
        for (Flag f : m.flags) flags.push_back(flag_name(f));
        atoms.push_back({{"id", m.name},
                         {"b1", m.chr.b1},
                         {"b_plus", m.chr.b_plus},
                         {"b_minus", m.chr.b_minus},
                         {"euler", m.euler()},
                         {"signature", m.signature()},
                         {"spin", m.chr.is_spin},
                         {"simply_connected", m.chr.is_simply_connected},
                         {"flags", flags}});
    };
    for (const auto& id : catalog_fixed_ids()) describe(catalog_get(id));
    for (const auto& id : cx.catalog.custom_ids()) describe(cx.catalog.get(id));
    r["atoms"] = atoms;
    r["families"] = json::array({"Sigma(g,h)", "Y(l)", "Gompf(a,b)"});
    emit(cx, r);
    return kOk;
}

int cmd_build(Context& cx) {
    json r = envelope("build");
    Manifold m = build(cx, cx.opt.exprs.at(0), &r);
    r["manifold"] = to_json(m);
    auto problems = validate(m);
    r["valid"] = problems.empty();
    if (!problems.empty()) r["problems"] = problems;
    emit(cx, r);
    return kOk;
}

json beta_json(const Computed<HullMaximum>& b) {
    if (!b.has_value()) return inconclusive(b.reason);
    json w = json::array();
    for (const auto& x : b->witness) w.push_back(to_string(x));
    return {{"status", "computed"}, {"value", to_string(b->value)}, {"witness", w}, {"method", b->method}};
}

int cmd_invariants(Context& cx) {
    const bool ax = cx.opt.approx;
    json r = envelope("invariants");
    Manifold m = build(cx, cx.opt.exprs.at(0), &r);
    Rational c4 = resolve_c4(cx.opt);
    r["name"] = m.name;
    r["b1"] = m.chr.b1;
    r["b_plus"] = m.chr.b_plus;
    r["b_minus"] = m.chr.b_minus;
    r["euler"] = m.euler();
    r["signature"] = m.signature();
    r["spin"] = m.chr.is_spin;
    r["two_chi_plus_three_tau"] = m.chr.two_chi_plus_three_tau();
    r["two_chi_minus_three_tau"] = m.chr.two_chi_minus_three_tau();

    json dims = json::array();
    for (std::size_t i = 0; i < m.spinc.size(); ++i) {
        const auto& g = m.spinc[i];
        json d = {{"index", i}, {"almost_complex", g.almost_complex}, {"c1_squared", g.c1_squared}};
        try {
            d["moduli_dimension"] = moduli_dimension(m, g);
            d["dirac_index"] = dirac_index(m, g);
        } catch (const std::domain_error& e) {
            d["inadmissible"] = e.what();
        }
        dims.push_back(d);
    }
    r["spinc"] = dims;

    SumAnalysis a = analyze_sum(m);
    if (a.admissible) r["sum_moduli_dimension"] = a.certificate.details["moduli_dimension"];
    else r["sum_moduli_dimension"] = inconclusive(a.reason);

    auto inv = scalar_invariants(m);
    if (inv.has_value()) {
        r["Is"] = symbolic(inv->Is, ax);
        r["Y"] = symbolic(inv->Y, ax);
        r["K"] = symbolic(inv->K, ax);
    } else {
        r["Is"] = r["Y"] = r["K"] = inconclusive(inv.reason);
    }
    json lam = json::array();
    for (const auto& ks : cx.opt.k_values) {
        Rational k;
        try {
            k = parse_rational(ks);
        } catch (const std::exception&) {
            throw UsageError("k must be a rational number, got '" + ks + "'");
        }
        json e = computed(lambda_bar_k(m, k), ax);
        e["k"] = to_string(k);
        lam.push_back(e);
    }
    r["lambda_bar"] = lam;
    r["Ir"] = computed(ricci_invariant(m), ax);
    try {
        r["beta_squared"] = beta_json(beta_squared(m));
    } catch (const std::invalid_argument& e) {
        r["beta_squared"] = inconclusive(e.what());
    }
    auto sv = simplicial_volume(m, c4);
    if (sv.has_value())
        r["simplicial_volume"] = {{"status", "computed"},
                                  {"lo", to_string(sv->lo())},
                                  {"hi", to_string(sv->hi())},
                                  {"c4", to_string(c4)}};
    else
        r["simplicial_volume"] = inconclusive(sv.reason);
    if (ax) r["approx_note"] = "decimal approximations are not authoritative";
    emit(cx, r);
    return kOk;
}

int verdict_exit(Verdict v) { return v == Verdict::Inconclusive ? kInconclusive : kOk; }

int cmd_check(Context& cx) {
    const std::string& id = cx.opt.theorem;
    json r = envelope("check");
    r["theorem"] = id;
    const auto& xs = cx.opt.exprs;
    std::size_t want = id == "exotic" ? 2 : 1;
    if (xs.size() != want)
        throw UsageError("check " + id + " takes " + std::to_string(want) + " expression" + (want == 1 ? "" : "s"));
    Manifold m = build(cx, xs[0], &r);
    Certificate cert;
    if (id == "bauer") {
        cert = check_bauer(decompose(m).parts);
    } else if (id == "theorem-a") {
        cert = check_almost_complex_sum(decompose(m).parts);
    } else if (id == "theorem-b") {
        cert = check_mod4_sum(decompose(m).parts);
    } else if (id == "hitchin-thorpe") {
        cert = hitchin_thorpe(m);
    } else if (id == "ght") {
        cert = ght(m, resolve_c4(cx.opt), cx.opt.strict);
    } else if (id == "einstein") {
        cert = einstein_obstruction(m);
    } else if (id == "decomposition") {
        auto parts = decompose(m).parts;
        if (parts.size() == 1) {
            cert = check_symplectic(parts.front());
        } else if (parts.size() == 2 || parts.size() == 3) {
            cert = check_almost_complex_sum(parts);
            if (cert.verdict != Verdict::Nonvanishing) cert = check_mod4_sum(parts);
        } else {
            throw std::invalid_argument("needs 1 to 3 summands with b+ > 0, found " + std::to_string(parts.size()));
        }
        if (cert.verdict == Verdict::Nonvanishing) {
            std::int64_t d = cert.details["moduli_dimension"].get<std::int64_t>();
            r["moduli_dimension"] = d;
            r["bound"] = decomposition_bound(cert, d);
        }
    } else if (id == "exotic") {
        Manifold xp = build(cx, xs[1]);
        ExoticPair p = exotic_pair(m, xp);
        r["y"] = p.y.name;
        r["left"] = p.left.name;
        r["right"] = p.right.name;
        cert = p.certificate;
    } else {
        throw UsageError("unknown theorem id '" + id + "'");
    }
    r["verdict"] = verdict_name(cert.verdict);
    r["certificate"] = to_json(cert);
    emit(cx, r);
    return verdict_exit(cert.verdict);
}

int cmd_beta2(Context& cx) {
    json r = envelope("beta2");
    Manifold m = build(cx, cx.opt.exprs.at(0), &r);
    auto b = beta_squared(m);
    json bj = beta_json(b);
    for (const auto& [k, v] : bj.items()) r[k] = v;
    if (b.has_value() && cx.opt.approx) {
        r["approx"] = to_double(b->value);
        r["approx_note"] = "decimal approximations are not authoritative";
    }
    if (cx.opt.format == "text" && b.has_value()) cx.out << to_string(b->value) << "\n";
    else emit(cx, r);
    return b.has_value() ? kOk : kInconclusive;
}

int cmd_search(Context& cx) {
    const auto& o = cx.opt;
    if (o.mode != "spin" && o.mode != "nonspin") throw UsageError("--mode must be spin or nonspin");
    Rational c4 = resolve_c4(o);
    auto tuples = o.mode == "spin" ? search_spin_examples(o.g, o.h, o.m_max, o.n_max, c4, o.threads)
                                   : search_nonspin_examples(o.g, o.h, o.m_max, o.n_max, c4, o.threads);
    for (const auto& t : tuples) {
        json r = envelope("search");
        r["mode"] = o.mode;
        r["g"] = o.g;
        r["h"] = o.h;
        r["tuple"] = to_json(t);
        cx.out << r.dump() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Invariants and certificates for smooth 4-manifolds built by connected sum", "fourfold"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--approx", opt.approx, "Add decimal approximations (not authoritative)");
    app.add_option("--catalog", opt.catalog_path, "JSON file with custom building blocks");
    app.add_option("--c4", opt.c4_text, "Product constant for simplicial volume (default 1, or FOURFOLD_C4)");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* catalog = app.add_subcommand("catalog", "List the building blocks");
    auto* build_cmd = app.add_subcommand("build", "Evaluate an expression to a manifold");
    build_cmd->add_option("expr", opt.exprs, "Manifold expression")->required()->expected(1);
    auto* inv = app.add_subcommand("invariants", "Characteristic numbers and curvature invariants");
    inv->add_option("expr", opt.exprs, "Manifold expression")->required()->expected(1);
    inv->add_option("--k", opt.k_values, "k values for lambda_k (rationals)");
    auto* check = app.add_subcommand("check", "Run a theorem certificate");
    check->add_option("theorem", opt.theorem, "Theorem id")
        ->required()
        ->check(CLI::IsMember({"bauer", "theorem-a", "theorem-b", "hitchin-thorpe", "ght", "einstein",
                               "decomposition", "exotic"}));
    check->add_option("expr", opt.exprs, "Manifold expression(s)")->required()->expected(1, 2);
    check->add_flag("--strict", opt.strict, "Demand strict inequality (ght)");
    auto* beta = app.add_subcommand("beta2", "Maximum of the square over the hull of monopole classes");
    beta->add_option("expr", opt.exprs, "Manifold expression")->required()->expected(1);
    auto* search = app.add_subcommand("search", "Enumerate the geography families");
    // --h is the genus, so help is long-form only here.
    search->set_help_flag("--help", "Print this help message and exit");
    search->add_option("--mode", opt.mode)->check(CLI::IsMember({"spin", "nonspin"}));
    search->add_option("--g", opt.g);
    search->add_option("--h", opt.h);
    search->add_option("--mmax", opt.m_max);
    search->add_option("--nmax", opt.n_max);
    search->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Context cx{opt, {}, out};
    try {
        if (!opt.catalog_path.empty()) load_catalog_file(opt.catalog_path, cx.catalog);
        if (*catalog) return cmd_catalog(cx);
        if (*build_cmd) return cmd_build(cx);
        if (*inv) return cmd_invariants(cx);
        if (*check) return cmd_check(cx);
        if (*beta) return cmd_beta2(cx);
        if (*search) return cmd_search(cx);
    } catch (const ParseError& e) {
        json j = {{"error", "parse"}, {"offset", e.offset()}, {"expected", e.expected()}, {"message", e.what()}};
        err << j.dump() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace fourfold::cli
