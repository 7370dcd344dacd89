#include "permdes/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "permdes/bounds.hpp"
#include "permdes/charlier.hpp"
#include "permdes/combinatorics.hpp"
#include "permdes/design.hpp"
#include "permdes/groups.hpp"
#include "permdes/permset_io.hpp"
#include "permdes/radius.hpp"
#include "permdes/report_json.hpp"

namespace permdes::cli {

namespace {

struct InputOptions {
    std::string path;
    std::string family;
    int n = 0;
    int p = 0;

    bool given() const { return !path.empty() || !family.empty(); }
};

struct Options {
    InputOptions input;
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string tol;
    int cap = kDefaultRadiusDegreeCap;
    std::size_t closure_cap = kDefaultClosureCap;

    std::string out_path;
    std::string mode = "auto";
    bool timing = false;
    std::size_t farthest = 0;
    bool exact = false;
    std::size_t trials = 0;
    int claim_t = 0;
    int bound_n = 0;
    int bound_t = 0;
    int tmax = 0;
    int kmax = 8;
    int rmax = -1;
};

void add_input(CLI::App* sub, Options& o)
{
    auto* in = sub->add_option("--in", o.input.path, "PERMSET file (1-based one-line rows)");
    auto* family = sub->add_option("--family", o.input.family, "named group: symmetric, alternating, cyclic, dihedral, agl1, pgl2");
    sub->add_option("--n", o.input.n, "degree parameter for symmetric/alternating/cyclic/dihedral");
    sub->add_option("--p", o.input.p, "prime parameter for agl1/pgl2");
    sub->add_option("--closure-cap", o.closure_cap, "largest group that may be constructed");
    in->excludes(family);
}

void add_format(CLI::App* sub, Options& o, const std::vector<std::string>& formats)
{
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
}

PermSet load_input(const Options& o)
{
    if (!o.input.path.empty()) {
        return read_permset(o.input.path);
    }
    if (o.input.family.empty()) {
        throw Error("an input is required: --in PATH or --family NAME");
    }
    const int param = o.input.p != 0 ? o.input.p : o.input.n;
    if (param == 0) {
        throw Error("--family needs --n (or --p for agl1/pgl2)");
    }
    return construct_named(o.input.family, param, o.closure_cap);
}

Rational parse_tolerance(const std::string& text)
{
    if (text.empty()) {
        return default_root_tolerance();
    }
    // Accepts decimal or scientific notation and converts exactly.
    const auto e = text.find_first_of("eE");
    const std::string mantissa = text.substr(0, e);
    const long exponent = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
    const auto dot = mantissa.find('.');
    std::string digits = mantissa;
    long scale = exponent;
    if (dot != std::string::npos) {
        digits.erase(dot, 1);
        scale -= static_cast<long>(mantissa.size() - dot - 1);
    }
    Integer num(digits);
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational tol = scale < 0 ? make_rational(num, pow10) : Rational(num * pow10);
    if (tol <= 0) {
        throw Error("--tol must be positive");
    }
    return tol;
}

void emit_json(std::ostream& out, const nlohmann::json& j)
{
    out << j.dump(2) << '\n';
}

int cmd_gen(const Options& o, std::ostream& out)
{
    if (o.input.family.empty()) {
        throw Error("gen needs --family");
    }
    const auto set = load_input(o);
    if (o.out_path.empty()) {
        write_permset(out, set);
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            throw Error("cannot write " + o.out_path);
        }
        write_permset(file, set);
    }
    return kExitOk;
}

int cmd_strength(const Options& o, std::ostream& out)
{
    const auto set = load_input(o);
    const auto report = design_strength(set, o.jobs);
    if (o.format == "json") {
        emit_json(out, to_json(report));
        return kExitOk;
    }
    out << "n = " << report.n << ", |D| = " << report.size << '\n';
    out << "strength t = " << report.strength << (report.is_one_design ? " (1-design)" : "") << '\n';
    for (const auto& m : report.moments) {
        out << "  i=" << m.i << "  design " << to_fraction(m.design) << "  space " << to_fraction(m.space)
            << (m.design == m.space ? "" : "  differs") << '\n';
    }
    return kExitOk;
}

int cmd_radius(const Options& o, std::ostream& out)
{
    const auto set = load_input(o);
    RadiusOptions ropt;
    ropt.mode = parse_radius_mode(o.mode);
    ropt.jobs = o.jobs;
    ropt.degree_cap = o.cap;

    const auto start = std::chrono::steady_clock::now();
    const auto result = covering_radius(set, ropt);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::optional<double> seconds;
    if (o.timing) {
        seconds = elapsed.count();
    }

    std::vector<std::pair<Permutation, int>> far;
    if (o.farthest > 0) {
        far = farthest_points(set, o.farthest, o.cap);
    }

    if (o.format == "json") {
        auto j = to_json(result, seconds);
        if (o.farthest > 0) {
            auto list = nlohmann::json::array();
            for (const auto& [p, d] : far) {
                list.push_back({{"permutation", p.to_string()}, {"distance", d}});
            }
            j["farthest"] = list;
        }
        emit_json(out, j);
        return kExitOk;
    }
    out << "covering radius = " << result.radius << '\n';
    out << "witness = " << result.witness.to_string() << '\n';
    out << "mode = " << to_string(result.mode) << ", enumerated = " << result.enumerated << '\n';
    for (const auto& note : result.notes) {
        out << "note: " << note << '\n';
    }
    if (seconds) {
        out << "seconds = " << decimal12(*seconds) << '\n';
    }
    for (const auto& [p, d] : far) {
        out << "  " << p.to_string() << "  at distance " << d << '\n';
    }
    return kExitOk;
}

nlohmann::json bound_row(int n, int t, const Rational& tol)
{
    const int s = half_strength(t);
    nlohmann::json row{{"n", n}, {"t", t}, {"s", s}, {"thm2", one_design_bound(n)},
                       {"krasikov_upper", round12(krasikov_upper(s))}};
    if (t >= 2) {
        const auto thm1 = charlier_bound(n, t, tol);
        row["thm1"] = thm1.bound;
        row["x_s"] = round12(thm1.bracket.midpoint().get_d());
        row["caveats"] = thm1.caveats;
    } else {
        row["thm1"] = nullptr;
        row["x_s"] = nullptr;
        row["caveats"] = nlohmann::json::array();
    }
    return row;
}

int cmd_bound(const Options& o, std::ostream& out)
{
    if (o.bound_n < 1) {
        throw Error("bound needs --n >= 1");
    }
    const auto tol = parse_tolerance(o.tol);
    std::vector<int> ts;
    if (o.tmax > 0) {
        for (int t = 1; t <= o.tmax; ++t) {
            ts.push_back(t);
        }
    } else if (o.bound_t >= 1) {
        ts.push_back(o.bound_t);
    } else {
        throw Error("bound needs --t T or --tmax T");
    }
    for (int t : ts) {
        if (t > o.bound_n) {
            throw Error("strength t cannot exceed n");
        }
    }

    std::vector<nlohmann::json> rows;
    for (int t : ts) {
        rows.push_back(bound_row(o.bound_n, t, tol));
    }
    if (o.format == "json") {
        emit_json(out, rows.size() == 1 ? rows.front() : nlohmann::json(rows));
        return kExitOk;
    }
    if (o.format == "csv") {
        out << "n,t,s,thm1,thm2,x_s,krasikov_upper\n";
        for (const auto& r : rows) {
            out << r["n"] << ',' << r["t"] << ',' << r["s"] << ',' << (r["thm1"].is_null() ? "" : r["thm1"].dump())
                << ',' << r["thm2"] << ',' << (r["x_s"].is_null() ? "" : decimal12(r["x_s"].get<double>())) << ','
                << decimal12(r["krasikov_upper"].get<double>()) << '\n';
        }
        return kExitOk;
    }
    for (const auto& r : rows) {
        out << "n=" << r["n"] << " t=" << r["t"] << " s=" << r["s"] << ": ";
        if (r["thm1"].is_null()) {
            out << "rho <= " << r["thm2"] << " (1-design)";
        } else {
            out << "rho <= " << r["thm1"] << " (x(s) = " << decimal12(r["x_s"].get<double>()) << ")";
        }
        for (const auto& c : r["caveats"]) {
            out << " [" << c.get<std::string>() << "]";
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out)
{
    const auto set = load_input(o);
    BoundOptions bopt;
    bopt.compute_exact = o.exact;
    bopt.radius.mode = parse_radius_mode(o.mode);
    bopt.radius.jobs = o.jobs;
    bopt.radius.degree_cap = o.cap;
    const auto report = bound_report(set, bopt);

    std::optional<AnnihilationReport> annihilation;
    const int claimed = o.claim_t > 0 ? o.claim_t : report.strength;
    if (o.trials > 0 && claimed >= 1) {
        annihilation = verify_annihilation(set, claimed, o.trials, 1e-8L, o.seed);
    }
    const bool failed = !report.violations.empty() || (annihilation && !annihilation->passed);

    if (o.format == "json") {
        auto j = to_json(report);
        if (annihilation) {
            j["annihilation"] = to_json(*annihilation);
        }
        emit_json(out, j);
        return failed ? kExitVerificationFailed : kExitOk;
    }
    auto show = [&](const char* label, const std::optional<int>& v) {
        out << "  " << label << " = " << (v ? std::to_string(*v) : std::string("n/a")) << '\n';
    };
    out << "n = " << report.n << ", |D| = " << report.size << '\n';
    out << "strength = " << report.strength << ", transitivity = " << report.transitivity << '\n';
    show("half-strength s", report.s);
    show("thm1 (Charlier) bound", report.thm1);
    show("thm2 (1-design) bound", report.thm2);
    show("n - t transitive bound", report.cw);
    show("krasikov floor", report.krasikov_floor);
    if (report.exact_radius) {
        out << "  exact radius = " << *report.exact_radius << " (" << *report.radius_mode << "), witness "
            << report.witness->to_string() << '\n';
    }
    if (report.tightest) {
        out << "  tightest = " << *report.tightest << '\n';
    }
    for (const auto& c : report.caveats) {
        out << "  caveat: " << c << '\n';
    }
    for (const auto& v : report.violations) {
        out << "  VIOLATED: " << v << '\n';
    }
    if (annihilation) {
        out << "  annihilation (t=" << annihilation->t << ", s=" << annihilation->s << ", " << annihilation->trials
            << " trials): max |residual| = " << decimal12(static_cast<double>(annihilation->max_abs_residual))
            << (annihilation->passed ? " ok" : " FAILED") << '\n';
    }
    return failed ? kExitVerificationFailed : kExitOk;
}

int cmd_charlier_roots(const Options& o, std::ostream& out)
{
    if (o.kmax < 1) {
        throw Error("--kmax must be at least 1");
    }
    const auto tol = parse_tolerance(o.tol);
    struct Row {
        int k;
        RootBracket bracket;
    };
    std::vector<Row> rows;
    for (int k = 1; k <= o.kmax; ++k) {
        rows.push_back({k, largest_zero(k, tol)});
    }
    if (o.format == "json") {
        auto list = nlohmann::json::array();
        for (const auto& r : rows) {
            list.push_back({{"k", r.k},
                            {"lo", to_fraction(r.bracket.lo)},
                            {"hi", to_fraction(r.bracket.hi)},
                            {"midpoint", round12(r.bracket.midpoint().get_d())},
                            {"krasikov_upper", round12(krasikov_upper(r.k))}});
        }
        emit_json(out, list);
        return kExitOk;
    }
    if (o.format == "text") {
        for (const auto& r : rows) {
            out << "x(" << r.k << ") = " << decimal12(r.bracket.midpoint().get_d()) << "  in ["
                << decimal12(r.bracket.lo.get_d()) << ", " << decimal12(r.bracket.hi.get_d()) << "]  <= "
                << decimal12(krasikov_upper(r.k)) << '\n';
        }
        return kExitOk;
    }
    out << "k,lo,hi,midpoint,krasikov_upper\n";
    for (const auto& r : rows) {
        out << r.k << ',' << decimal12(r.bracket.lo.get_d()) << ',' << decimal12(r.bracket.hi.get_d()) << ','
            << decimal12(r.bracket.midpoint().get_d()) << ',' << decimal12(krasikov_upper(r.k)) << '\n';
    }
    return kExitOk;
}

int cmd_verify_orthogonality(const Options& o, std::ostream& out)
{
    if (o.bound_n < 1) {
        throw Error("verify-orthogonality needs --n >= 1");
    }
    const int rmax = o.rmax >= 0 ? o.rmax : o.bound_n / 2;
    const auto report = verify_orthogonality(o.bound_n, rmax);
    if (o.format == "json") {
        emit_json(out, to_json(report));
        return kExitOk;
    }
    for (const auto& e : report.entries) {
        out << "<C" << e.r << ", C" << e.s << "> = " << to_fraction(e.value) << '\n';
    }
    out << "all " << report.entries.size() << " pairs exact\n";
    return kExitOk;
}

int cmd_moments(const Options& o, std::ostream& out)
{
    std::optional<PermSet> set;
    if (o.input.given()) {
        set = load_input(o);
    }
    const int n = set ? set->degree() : o.input.n;
    if (n < 1) {
        throw Error("moments needs --n or an input set");
    }
    std::optional<FrequencyVector> fv;
    if (set) {
        fv = frequencies(*set, o.jobs);
    }

    auto rows = nlohmann::json::array();
    for (int i = 0; i <= n; ++i) {
        nlohmann::json row{{"i", i}, {"space", to_fraction(space_moment(n, i))}};
        if (fv) {
            row["design"] = to_fraction(design_moment(*fv, i));
        }
        rows.push_back(row);
    }
    const auto table = rencontres(n);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& v : table.w) {
        w.push_back(v.get_str());
    }

    if (o.format == "json") {
        emit_json(out, {{"n", n}, {"rencontres", w}, {"moments", rows}});
        return kExitOk;
    }
    if (o.format == "csv") {
        out << (fv ? "i,space,design\n" : "i,space\n");
        for (const auto& r : rows) {
            out << r["i"] << ',' << r["space"].get<std::string>();
            if (fv) {
                out << ',' << r["design"].get<std::string>();
            }
            out << '\n';
        }
        return kExitOk;
    }
    out << "rencontres w_0..w_" << n << ":";
    for (const auto& v : table.w) {
        out << ' ' << v.get_str();
    }
    out << '\n';
    for (const auto& r : rows) {
        out << "  i=" << r["i"] << "  space " << r["space"].get<std::string>();
        if (fv) {
            out << "  design " << r["design"].get<std::string>();
        }
        out << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"permdes: covering radius and design strength of permutation sets", "permdes"};
    app.require_subcommand(1, 1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Emit a named permutation group as a PERMSET file");
    add_input(gen, o);
    gen->add_option("--out", o.out_path, "write to a file instead of standard output");

    auto* strength = app.add_subcommand(
        "strength", "Design strength t: largest t with sum_j f_j j^i equal to the moments of S_n for i = 1..t");
    add_input(strength, o);
    add_format(strength, o, {"text", "json"});
    strength->add_option("--jobs", o.jobs, "threads for pairwise distance counting (0 = all cores)");

    auto* radius = app.add_subcommand(
        "radius", "Covering radius rho(D) = max over sigma of min over d in D of d_S(sigma, d), exhaustively");
    add_input(radius, o);
    add_format(radius, o, {"text", "json"});
    radius->add_option("--mode", o.mode, "auto, naive or coset")->check(CLI::IsMember({"auto", "naive", "coset"}));
    radius->add_option("--jobs", o.jobs, "worker threads for naive enumeration (0 = all cores)");
    radius->add_option("--cap", o.cap, "largest degree that may be enumerated");
    radius->add_flag("--timing", o.timing, "include wall-clock seconds in the output");
    radius->add_option("--farthest", o.farthest, "also list the K permutations farthest from the set");

    auto* bound = app.add_subcommand(
        "bound", "Covering-radius bounds for a t-design of degree n: floor(n - x(s)) and n - 1");
    add_format(bound, o, {"text", "json", "csv"});
    bound->add_option("--n", o.bound_n, "degree n")->required();
    auto* t_opt = bound->add_option("--t", o.bound_t, "design strength t");
    auto* tmax_opt = bound->add_option("--tmax", o.tmax, "tabulate t = 1..T");
    t_opt->excludes(tmax_opt);
    bound->add_option("--tol", o.tol, "initial root bracket width (default 1e-9)");

    auto* report = app.add_subcommand(
        "report", "Strength, transitivity and every covering-radius bound of a set, optionally the exact radius");
    add_input(report, o);
    add_format(report, o, {"text", "json"});
    report->add_flag("--exact", o.exact, "compute the exact covering radius and check it against the bounds");
    report->add_option("--mode", o.mode, "radius mode: auto, naive or coset")
        ->check(CLI::IsMember({"auto", "naive", "coset"}));
    report->add_option("--jobs", o.jobs, "worker threads for naive enumeration (0 = all cores)");
    report->add_option("--cap", o.cap, "largest degree that may be enumerated");
    report->add_option("--trials", o.trials, "random points for the Charlier annihilation check (0 = skip)");
    report->add_option("--claim-t", o.claim_t, "strength to assume in the annihilation check");
    report->add_option("--seed", o.seed, "seed for the annihilation check");

    auto* roots = app.add_subcommand(
        "charlier-roots", "Largest zeros x(k) of the Charlier polynomials C_k, certified by Sturm sequences");
    add_format(roots, o, {"csv", "text", "json"});
    o.format = "text";
    roots->add_option("--kmax", o.kmax, "largest k");
    roots->add_option("--tol", o.tol, "bracket width (default 1e-9)");

    auto* ortho = app.add_subcommand(
        "verify-orthogonality", "Exact check of <C^_r, C^_s>_n = r! delta_rs for the reversed Charlier polynomials");
    add_format(ortho, o, {"text", "json"});
    ortho->add_option("--n", o.bound_n, "degree n")->required();
    ortho->add_option("--rmax", o.rmax, "largest r and s (default n/2)");

    auto* moments = app.add_subcommand(
        "moments", "Rencontres numbers and distance moments of S_n, and of a set when one is given");
    add_input(moments, o);
    add_format(moments, o, {"text", "json", "csv"});
    moments->add_option("--jobs", o.jobs, "threads for pairwise distance counting (0 = all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "permdes: " << e.what() << '\n';
        return kExitUsage;
    }

    // charlier-roots defaults to CSV.
    if (roots->parsed() && roots->count("--format") == 0) {
        o.format = "csv";
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (strength->parsed()) return cmd_strength(o, out);
        if (radius->parsed()) return cmd_radius(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (report->parsed()) return cmd_report(o, out);
        if (roots->parsed()) return cmd_charlier_roots(o, out);
        if (ortho->parsed()) return cmd_verify_orthogonality(o, out);
        if (moments->parsed()) return cmd_moments(o, out);
    } catch (const VerificationFailure& e) {
        err << "permdes: verification failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "permdes: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "permdes: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace permdes::cli
