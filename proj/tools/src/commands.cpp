#include "flagbundle_cli/cli.hpp"
#include "render.hpp"

#include <flagbundle/flagbundle.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace flagbundle::cli {

namespace {

struct SampleResult {
    std::vector<double> point;
    double value = 0.0;
    bool pass = false;
};

struct Verification {
    std::string suite;
    std::string subject;
    bool lower_bound = false;  // pass iff aggregate > tolerance
    double tolerance = 0.0;
    double aggregate = 0.0;
    bool pass = false;
    std::vector<SampleResult> samples;
    json details = json::object();

    void add(std::vector<double> point, double value) {
        const bool ok = lower_bound ? value > tolerance : value <= tolerance;
        samples.push_back({std::move(point), value, ok});
    }
    void finish() {
        aggregate = 0.0;
        for (const SampleResult& s : samples) aggregate = std::max(aggregate, s.value);
        pass = !samples.empty() && (lower_bound ? aggregate > tolerance : aggregate <= tolerance);
    }
};

std::vector<double> coords(const RealVector& x) { return {x.data(), x.data() + x.size()}; }

std::pair<ParabolicDatum, ParabolicDatum> parse_product(const std::string& text) {
    static const std::string cross = "\xC3\x97";
    std::size_t pos = text.find(cross);
    std::size_t width = cross.size();
    if (pos == std::string::npos) {
        pos = text.find_first_of("xX*");
        width = 1;
    }
    if (pos == std::string::npos) throw ParseError("expected a product 'A1/{}xA1/{}'", text.size());
    return {ParabolicDatum::parse(text.substr(0, pos)), ParabolicDatum::parse(text.substr(pos + width))};
}

FiniteDifference fd_of(const RunConfig& cfg) {
    FiniteDifference fd;
    if (cfg.fd_step) fd.step = *cfg.fd_step;
    return fd;
}

struct VerifyArgs {
    std::string suite;
    std::string subject;
    long ell = 1;
    double a = 0.0;
    double b = 1.0;
    bool perturb = false;
};

Verification verify_single(const VerifyArgs& v, const RunConfig& cfg) {
    const ParabolicDatum p = ParabolicDatum::parse(v.subject);
    const BigCellChart chart(p);
    const CytDatum d = cyt_datum(p, v.ell);
    const std::vector<PointZ> pts = sample_points(chart.dim(), cfg.samples, cfg.seed, cfg.radius);

    Verification r;
    r.suite = v.suite;
    r.subject = p.to_string();
    r.tolerance = cfg.tolerance(v.suite);
    r.details["ell"] = v.ell;
    r.details["m"] = d.m;
    r.details["fano_index"] = d.I;

    if (v.suite == "einstein") {
        const FiniteDifference fd = fd_of(cfg);
        r.details["lambda"] = rational_json(d.lambda);
        r.details["omega0_scale"] = rational_json(d.omega0_scale);
        for (const PointZ& z : pts)
            r.add(coords(to_real(z)), einstein_residual_at(chart, d.omega0_exponents(), to_double(d.lambda), z, fd));
    } else if (v.suite == "curvature") {
        const double h = cfg.fd_step.value_or(1e-4);
        r.details["step"] = h;
        r.details["bundle"] = to_json(d.bundle);
        for (const PointZ& z : pts)
            r.add(coords(to_real(z)), curvature_identity_residual(chart, d.connection_exponents(), z, h));
    } else if (v.suite == "cyt") {
        const CytReport rep = cyt_report(d, d, pts, fd_of(cfg));
        r.details["lambda"] = rational_json(d.lambda);
        r.details["trace_psi"] = rational_json(d.trace_psi);
        r.details["trace_mean"] = rep.trace_mean;
        r.details["trace_std"] = rep.trace_std;
        for (const CytSample& s : rep.samples) r.add(coords(to_real(s.z)), s.residual);
    } else if (v.suite == "lck") {
        const double c = to_double(d.lee_coefficient);
        r.details["lee_coefficient"] = rational_json(d.lee_coefficient);
        r.details["stated_lee_coefficient"] = rational_json(d.stated_lee_coefficient);
        r.details["fitted_lee_coefficient"] = fitted_lee_coefficient(d, pts.front());
        r.details["stated_residual"] = lck_residual_at(d, pts.front(), to_double(d.stated_lee_coefficient));
        for (const PointZ& z : pts) r.add(coords(to_real(z)), lck_residual_at(d, z, c));
    }
    r.finish();
    return r;
}

Verification verify_product(const VerifyArgs& v, const RunConfig& cfg) {
    const auto [p1, p2] = parse_product(v.subject);
    const ProductPair pair(ContactStructure::from_bundle(canonical_fraction_bundle(p1, v.ell)),
                           ContactStructure::from_bundle(canonical_fraction_bundle(p2, v.ell)));
    const std::vector<RealVector> pts = sample_product_points(pair, cfg.samples, cfg.seed, cfg.radius);

    Verification r;
    r.suite = v.suite;
    r.subject = p1.to_string() + "x" + p2.to_string();
    r.tolerance = cfg.tolerance(v.suite);
    r.details["a"] = v.a;
    r.details["b"] = v.b;
    r.details["ell"] = v.ell;
    r.details["real_dim"] = pair.real_dim();

    if (v.suite == "nijenhuis") {
        NijenhuisOptions opts;
        opts.step = cfg.fd_step.value_or(1e-3);
        if (v.perturb) opts.perturbation = Perturbation::FlipPhiThetaRow;
        r.details["step"] = opts.step;
        r.details["perturbed"] = v.perturb;
        for (const RealVector& x : pts) r.add(coords(x), nijenhuis_residual_at(pair, v.a, v.b, x, opts));
    } else {
        r.lower_bound = true;
        for (const RealVector& x : pts) r.add(coords(x), dOmega_witness(pair, v.a, v.b, {x}));
    }
    r.finish();
    return r;
}

json verification_json(const Verification& r, const RunConfig& cfg) {
    json pts = json::array();
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const SampleResult& s = r.samples[i];
        pts.push_back({{"index", i}, {"point", s.point}, {"residual", s.value}, {"tolerance", r.tolerance}, {"pass", s.pass}});
    }
    return {
        {"command", "verify"},
        {"suite", r.suite},
        {"subject", r.subject},
        {"seed", cfg.seed},
        {"samples", r.samples.size()},
        {"comparison", r.lower_bound ? ">" : "<="},
        {"tolerance", r.tolerance},
        {"aggregate", r.aggregate},
        {"pass", r.pass},
        {"details", r.details},
        {"points", pts},
    };
}

void render_verification(const Verification& r, const RunConfig& cfg, std::ostream& out) {
    switch (cfg.format) {
    case Format::Json:
        out << verification_json(r, cfg).dump(2) << '\n';
        return;
    case Format::Csv: {
        Row header = {"index", "residual", "tolerance", "pass"};
        const std::size_t n = r.samples.empty() ? 0 : r.samples.front().point.size();
        for (std::size_t k = 0; k < n; ++k) header.push_back("x" + std::to_string(k + 1));
        std::vector<Row> rows;
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const SampleResult& s = r.samples[i];
            Row row = {std::to_string(i), number(s.value), number(r.tolerance), s.pass ? "true" : "false"};
            for (double c : s.point) row.push_back(number(c));
            rows.push_back(std::move(row));
        }
        out << csv_table(header, rows);
        return;
    }
    case Format::Markdown: {
        out << "## verify " << r.suite << ' ' << r.subject << "\n\n";
        std::vector<Row> summary = {
            {"result", r.pass ? "PASS" : "FAIL"},
            {"aggregate", number(r.aggregate)},
            {"requirement", std::string(r.lower_bound ? "> " : "<= ") + number(r.tolerance)},
            {"samples", std::to_string(r.samples.size())},
            {"seed", std::to_string(cfg.seed)},
        };
        for (const auto& [k, v] : r.details.items()) summary.push_back({k, v.is_string()         ? v.get<std::string>()
                                  : v.is_number_float() ? number(v.get<double>())
                                                        : v.dump()});
        out << markdown_table({"field", "value"}, summary) << '\n';
        std::vector<Row> rows;
        for (std::size_t i = 0; i < r.samples.size(); ++i)
            rows.push_back({std::to_string(i), number(r.samples[i].value), r.samples[i].pass ? "yes" : "no"});
        out << markdown_table({"sample", "residual", "pass"}, rows);
        return;
    }
    }
}

int cmd_verify(const VerifyArgs& v, const RunConfig& cfg, std::ostream& out) {
    const bool product = v.suite == "nijenhuis" || v.suite == "nonkahler";
    const Verification r = product ? verify_product(v, cfg) : verify_single(v, cfg);
    render_verification(r, cfg, out);
    return r.pass ? kExitPass : kExitCheckFailed;
}

int cmd_invariants(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    const ParabolicDatum p = ParabolicDatum::parse(text);
    const FlagInvariants f = flag_invariants(p);
    const json j = to_json(f, p);
    if (cfg.format == Format::Json) {
        out << j.dump(2) << '\n';
        return kExitPass;
    }
    auto render_vec = [](const json& a) {
        std::string s;
        for (const auto& v : a) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
        return "(" + s + ")";
    };
    std::string pairings, minuscule;
    for (int i : p.complement()) {
        const std::string key = std::to_string(i + 1);
        pairings += (pairings.empty() ? "" : " ") + key + ":" + j["delta_p_pairings"][key].dump();
        minuscule += (minuscule.empty() ? "" : " ") + key + ":" + (j["minuscule"][key].get<bool>() ? "yes" : "no");
    }
    std::string roots;
    for (const auto& r : j["complement_pos_roots"]) roots += (roots.empty() ? "" : " ") + render_vec(r);
    const std::vector<Row> rows = {
        {"datum", p.to_string()},
        {"m_theta", std::to_string(f.m_theta)},
        {"complement_pos_roots", roots},
        {"delta_p_root", render_vec(j["delta_p_root"])},
        {"delta_p_weight", render_vec(j["delta_p_weight"])},
        {"delta_p_pairings", pairings},
        {"fano_index", std::to_string(f.fano_index)},
        {"picard_rank", std::to_string(f.picard_rank)},
        {"minuscule", minuscule},
    };
    out << (cfg.format == Format::Csv ? csv_table({"field", "value"}, rows) : markdown_table({"field", "value"}, rows));
    return kExitPass;
}

bool is_integer_text(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int cmd_astheno(const std::vector<std::string>& args, int points, const RunConfig& cfg, std::ostream& out) {
    long m1 = 0, m2 = 0;
    std::optional<SasakiPairReport> pair;
    json subjects = json::array();
    if (is_integer_text(args[0]) && is_integer_text(args[1])) {
        m1 = std::stol(args[0]);
        m2 = std::stol(args[1]);
    } else {
        const ParabolicDatum p1 = ParabolicDatum::parse(args[0]);
        const ParabolicDatum p2 = ParabolicDatum::parse(args[1]);
        subjects = {p1.to_string(), p2.to_string()};
        const SasakiDatum s1(p1, std::vector<long>(p1.complement().size(), 1));
        const SasakiDatum s2(p2, std::vector<long>(p2.complement().size(), 1));
        pair = sasaki_pair_report(s1, s2, std::min(cfg.samples, 8), cfg.seed);
        m1 = pair->m1;
        m2 = pair->m2;
    }
    const AsthenoLocus l = astheno_locus(m1, m2);
    json sols = json::array();
    std::vector<Row> rows;
    for (const auto& [a, b] : l.sample_points(points)) {
        const double res = astheno_residual(m1, m2, a, b);
        sols.push_back({{"a", a}, {"b", b}, {"residual", res}});
        rows.push_back({number(a), number(b), number(res)});
    }
    json j = {{"command", "astheno"}, {"locus", to_json(l)}, {"points", sols}};
    if (!l.degenerate && l.has_solutions)
        j["exact_check"] = rational_json(astheno_residual_exact(m1, m2, l.center_a, l.radius_sq));
    if (!subjects.empty()) j["subjects"] = subjects;
    if (pair) j["sasaki"] = to_json(*pair);

    if (cfg.format == Format::Json) {
        out << j.dump(2) << '\n';
    } else if (cfg.format == Format::Csv) {
        out << csv_table({"a", "b", "residual"}, rows);
    } else {
        out << "## astheno locus m1=" << m1 << " m2=" << m2 << "\n\n";
        std::string shape;
        if (l.degenerate)
            shape = "line a = " + to_string(*l.line_a);
        else
            shape = "circle (a - (" + to_string(l.center_a) + "))^2 + b^2 = " + to_string(l.radius_sq);
        out << markdown_table({"field", "value"},
                              {{"locus", shape},
                               {"solutions with b != 0", l.has_solutions ? "yes" : "no"},
                               {"dimension warning", l.dimension_warning ? "m1 + m2 + 1 <= 3" : "none"}})
            << '\n'
            << markdown_table({"a", "b", "residual"}, rows);
    }
    return kExitPass;
}

std::vector<LieType> parse_types(const std::string& list) {
    std::vector<LieType> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(LieType::parse(item));
    return out;
}

int cmd_report_table1(const std::string& types, const RunConfig& cfg, std::ostream& out) {
    const Table1 t = table1(parse_types(types));
    if (cfg.format == Format::Json) {
        json j = to_json(t);
        j["command"] = "report";
        j["name"] = "table1";
        out << j.dump(2) << '\n';
        return kExitPass;
    }
    const Row header = {"manifold", "datum", "ell", "m", "I", "lambda", "omega0/rho0", "holonomy"};
    auto row_of = [](const Table1Row& r) {
        if (r.m == 0) return Row{r.manifold, r.datum, "I = " + std::to_string(r.fano), "|Pi^+|", std::to_string(r.fano), "1/|Pi^+|", "|Pi^+|", r.holonomy};
        return Row{r.manifold,          r.datum,          std::to_string(r.ell),          std::to_string(r.m),
                   std::to_string(r.fano), to_string(r.lambda), to_string(r.omega0_scale), r.holonomy};
    };
    std::vector<Row> rows, inst;
    for (const Table1Row& r : t.rows) rows.push_back(row_of(r));
    for (const Table1Row& r : t.generic_instances) inst.push_back(row_of(r));
    if (cfg.format == Format::Csv) {
        rows.insert(rows.end(), inst.begin(), inst.end());
        out << csv_table(header, rows);
        return kExitPass;
    }
    out << "## CYT structures on M = Q x S^1\n\n" << markdown_table(header, rows);
    if (!inst.empty()) out << "\n### Q(K_{G/T}) x S^1 evaluated\n\n" << markdown_table(header, inst);
    return kExitPass;
}

int cmd_report_examples(const RunConfig& cfg, std::ostream& out) {
    struct Example {
        const char* name;
        const char* datum;
        const char* note;
    };
    const Example examples[] = {
        {"CP^1", "A1/{}", ""},
        {"CP^3", "A3/{2,3}", ""},
        {"Gr(2,C^4)", "A3/{1,3}", "psi = omega_0"},
        {"W_6 = SL(3)/B", "A2/{}", "psi coefficient I/(m ell) = 2/3 uses m = m_theta = 3, the complex dimension"},
    };
    json list = json::array();
    std::vector<Row> rows;
    for (const Example& e : examples) {
        const ParabolicDatum p = ParabolicDatum::parse(e.datum);
        const BigCellChart chart(p);
        const FlagInvariants f = flag_invariants(p);
        const CytDatum d = cyt_datum(p, 1);
        Exponents unit(p.rank(), 0.0);
        for (int i : p.complement()) unit[i] = 1.0;
        const std::string potential = potential_string(chart, unit);
        const std::string rho0 = potential_string(chart, d.rho0_exponents());
        json item = {
            {"name", e.name},
            {"invariants", to_json(f, p)},
            {"potential", potential},
            {"rho0_potential", rho0},
            {"canonical_fraction_bundle", to_json(d.bundle)},
            {"cyt", to_json(d)},
        };
        if (*e.note) item["note"] = e.note;
        list.push_back(item);
        rows.push_back({e.name, p.to_string(), std::to_string(f.m_theta), std::to_string(f.fano_index), potential,
                        to_json(d.bundle)["ell"].dump(), to_string(d.lambda), to_string(d.psi_scale)});
    }
    const Row header = {"example", "datum", "m", "I", "potential", "ell(K^{1/I})", "lambda", "psi/omega0"};
    if (cfg.format == Format::Json)
        out << json{{"command", "report"}, {"name", "examples"}, {"examples", list}}.dump(2) << '\n';
    else if (cfg.format == Format::Csv)
        out << csv_table(header, rows);
    else
        out << "## Examples\n\n" << markdown_table(header, rows);
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and geometric checks for flag manifolds and their circle bundles", "flagbundle"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    int samples = 100;
    double fd_step = 0.0, radius = 2.0;
    std::string format = "json", config;
    std::vector<std::string> tol;
    auto* o_seed = app.add_option("--seed", seed, "Sampling seed");
    auto* o_samples = app.add_option("--samples", samples, "Number of sample points");
    auto* o_fd = app.add_option("--fd-step", fd_step, "Finite-difference step");
    auto* o_radius = app.add_option("--radius", radius, "Sampling disk radius per coordinate");
    auto* o_format = app.add_option("--format", format, "json, csv or markdown");
    app.add_option("--config", config, "key=value configuration file");
    app.add_option("--tol", tol, "Tolerance override, e.g. --tol einstein=1e-4");

    std::string datum;
    auto* inv = app.add_subcommand("invariants", "Exact invariants of a parabolic datum such as A3/{1,3}");
    inv->add_option("datum", datum)->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run a numerical verification suite");
    ver->add_option("suite", va.suite)
        ->required()
        ->check(CLI::IsMember({"einstein", "curvature", "nijenhuis", "cyt", "lck", "nonkahler"}));
    ver->add_option("datum", va.subject, "Datum, or a product such as A1/{}xA1/{}")->required();
    ver->add_option("--ell", va.ell, "Power ell of K^{ell/I}")->check(CLI::PositiveNumber);
    ver->add_option("--a", va.a, "Tsukada parameter a");
    ver->add_option("--b", va.b, "Tsukada parameter b (nonzero)");
    ver->add_flag("--perturb", va.perturb, "Break phi_1 (negative control for nijenhuis)");

    std::vector<std::string> ast_args;
    int points = 8;
    auto* ast = app.add_subcommand("astheno", "Astheno-Kahler locus for (m1, m2) or for two data");
    ast->add_option("args", ast_args, "m1 m2, or two data")->required()->expected(2);
    ast->add_option("--points", points, "Sample points on the locus")->check(CLI::PositiveNumber);

    std::string report_name, types = "A1,A2,A3,B2,C3,D4,G2";
    auto* rep = app.add_subcommand("report", "Regenerate tables and examples");
    rep->add_option("name", report_name)->required()->check(CLI::IsMember({"table1", "examples"}));
    rep->add_option("--types", types, "Comma-separated types for the Q(K_{G/T}) row");

    std::vector<const char*> argv = {"flagbundle"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config.empty()) apply_config_file(config, cfg);
        if (o_seed->count()) cfg.seed = seed;
        if (o_samples->count()) cfg.samples = samples;
        if (o_fd->count()) cfg.fd_step = fd_step;
        if (o_radius->count()) cfg.radius = radius;
        if (o_format->count()) cfg.format = parse_format(format);
        if (!tol.empty()) {
            std::string text;
            for (const std::string& t : tol) text += "tol." + t + "\n";
            apply_config_text(text, cfg);
        }
        cfg.validate();

        if (*inv) return cmd_invariants(datum, cfg, out);
        if (*ver) return cmd_verify(va, cfg, out);
        if (*ast) return cmd_astheno(ast_args, points, cfg, out);
        if (report_name == "table1") return cmd_report_table1(types, cfg, out);
        return cmd_report_examples(cfg, out);
    } catch (const UnsupportedType& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace flagbundle::cli
