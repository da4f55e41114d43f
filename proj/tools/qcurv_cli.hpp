#pragma once

// Command-line front end for the qcurv library.
//
//   qcurv curvature       --family F --q N | --custom ...  [--at p/q]
//   qcurv instants        (--family F --q N | --custom ...) (--lambda p/q | --eigs K --window lo:hi) [--width p/q]
//   qcurv theorem-a       [--q-max N] [--json]
//   qcurv verify-appendix [--q-max N]
//   qcurv asymptotics     --family F --q N | --custom ...
//   qcurv sample          --family F --q N | --custom ...  --t-range lo:hi --steps N [--out file.csv]
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <qcurv/qcurv.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcurv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Raised for bad command-line input that CLI11 itself does not catch.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "n=..,l=..,zeta=..,eta=..,lamF=..,lamB=.." with every key present exactly once.
inline SubmersionData parse_custom(std::string_view spec) {
    std::map<std::string, std::string> fields;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        const std::string_view item = spec.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("malformed --custom item '" + std::string(item) + "' (expected key=value)");
        }
        const std::string key(item.substr(0, eq));
        if (!fields.emplace(key, std::string(item.substr(eq + 1))).second) {
            throw UsageError("duplicate --custom key '" + key + "'");
        }
        pos = comma + 1;
    }
    static const std::vector<std::string> keys{"n", "l", "zeta", "eta", "lamF", "lamB"};
    for (const auto& [key, value] : fields) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw UsageError("unknown --custom key '" + key + "'");
        }
    }
    for (const auto& key : keys) {
        if (!fields.contains(key)) {
            throw UsageError("--custom is missing key '" + key + "'");
        }
    }
    auto as_int = [&](const std::string& key) {
        const Rational r = parse_rational(fields[key]);
        if (!r.is_integer() || abs(r) > Rational(100000)) {
            throw UsageError("--custom " + key + " must be a (moderate) integer");
        }
        return r.numerator().convert_to<int>();
    };
    SubmersionData d{as_int("n"), as_int("l"), parse_rational(fields["zeta"]), parse_rational(fields["eta"]),
                     parse_rational(fields["lamF"]), parse_rational(fields["lamB"])};
    if (auto violations = validate(d); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return d;
}

/// "lo:hi" where hi may be "inf".
inline TimeWindow parse_window(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError("malformed window '" + std::string(text) + "' (expected lo:hi)");
    }
    TimeWindow w{parse_rational(text.substr(0, colon)), std::nullopt};
    const std::string_view hi = text.substr(colon + 1);
    if (hi != "inf") {
        w.hi = parse_rational(hi);
    }
    if (w.lo.sign() < 0 || (w.hi && w.hi->sign() <= 0)) {
        throw UsageError("window bounds must be positive");
    }
    return w;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct DataOptions {
    std::string family;
    int q = 1;
    std::string custom;

    void attach(CLI::App& sub) {
        auto* fam = sub.add_option("--family", family, "Hopf family: i, ii, iii or iv")
                        ->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
        auto* qopt = sub.add_option("--q", q, "family parameter q");
        auto* cust = sub.add_option("--custom", custom, "n=..,l=..,zeta=..,eta=..,lamF=..,lamB=..");
        fam->excludes(cust);
        cust->excludes(fam);
        qopt->excludes(cust);
        cust->excludes(qopt);
    }

    [[nodiscard]] bool has_family() const { return !family.empty(); }

    [[nodiscard]] std::optional<HopfFamily> hopf() const {
        if (!has_family()) {
            return std::nullopt;
        }
        return HopfFamily(parse_hopf_id(family), q);
    }

    [[nodiscard]] SubmersionData data() const {
        if (has_family()) {
            return hopf_data(*hopf());
        }
        if (custom.empty()) {
            throw UsageError("one of --family or --custom is required");
        }
        return parse_custom(custom);
    }
};

inline int cmd_curvature(const DataOptions& opts, const std::optional<std::string>& at, std::ostream& out) {
    const SubmersionData d = opts.data();
    const CurvaturePackage pkg = curvature_package(d);
    nlohmann::json j = {{"data", d}, {"package", pkg}};
    if (at) {
        const Rational t = parse_rational(*at);
        if (t.sign() <= 0) {
            throw UsageError("--at requires t > 0");
        }
        j["at"] = evaluate_package(pkg, t);
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

inline int cmd_instants(const DataOptions& opts, const std::optional<std::string>& lambda_text,
                        const std::optional<int>& eigs, const std::optional<std::string>& window_text,
                        const std::optional<std::string>& width_text, std::ostream& out) {
    const SubmersionData d = opts.data();
    const std::optional<Rational> width =
        width_text ? std::optional<Rational>(parse_rational(*width_text)) : std::nullopt;
    if (width && width->sign() <= 0) {
        throw UsageError("--width must be positive");
    }
    std::vector<InstantReport> reports;
    if (lambda_text) {
        if (eigs || window_text) {
            throw UsageError("--lambda cannot be combined with --eigs/--window");
        }
        const Rational lambda = parse_rational(*lambda_text);
        if (lambda.sign() <= 0) {
            throw UsageError("--lambda must be positive");
        }
        reports = find_instants(d, lambda);
    } else {
        if (!eigs || !window_text) {
            throw UsageError("instants needs --lambda, or both --eigs and --window");
        }
        if (*eigs < 1) {
            throw UsageError("--eigs must be >= 1");
        }
        const auto family = opts.hopf();
        if (!family) {
            throw UsageError("--eigs needs a base spectrum; use --family (or --lambda with --custom)");
        }
        reports = enumerate_instants(d, base_spectrum(*family), parse_window(*window_text), *eigs);
    }
    nlohmann::json j = nlohmann::json::array();
    for (auto& r : reports) {
        if (width) {
            r.root = r.root.refine(*width);
        }
        j.push_back(r);
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

inline int cmd_theorem_a(int q_max, bool as_json, std::ostream& out, std::ostream& err) {
    if (q_max < 1) {
        throw UsageError("--q-max must be >= 1");
    }
    const auto rows = theorem_a_table(q_max);
    bool all_match = true;
    for (const auto& r : rows) {
        if (!r.matches()) {
            all_match = false;
            err << "mismatch: " << r.family.label() << " collapse=" << r.collapse() << " (expected "
                << r.expected_collapse << "), expansion=" << r.expansion() << " (expected " << r.expected_expansion
                << ")\n";
        }
    }
    if (as_json) {
        out << nlohmann::json(rows).dump(2) << '\n';
    } else {
        out << theorem_a_markdown(rows);
    }
    return all_match ? exit_ok : exit_mismatch;
}

/// One disagreement between the canonical-variation formulas and the closed forms.
struct AppendixMismatch {
    HopfFamily family;
    std::string field;
    nlohmann::json expected;
    nlohmann::json actual;
};

inline std::vector<AppendixMismatch> verify_appendix(int q_max, int& checked) {
    std::vector<AppendixMismatch> out;
    checked = 0;
    std::vector<HopfFamily> families;
    for (HopfId id : {HopfId::i, HopfId::ii, HopfId::iii}) {
        for (int q = min_q(id); q <= q_max; ++q) {
            families.emplace_back(id, q);
        }
    }
    families.emplace_back(HopfId::iv);
    for (const auto& f : families) {
        const SubmersionData d = hopf_data(f);
        const CurvaturePackage pkg = curvature_package(d);
        const BergerClosedForm cf = berger_closed_form(f);
        auto check = [&](const char* field, const auto& expected, const auto& actual) {
            ++checked;
            if (!(expected == actual)) {
                out.push_back({f, field, nlohmann::json(expected), nlohmann::json(actual)});
            }
        };
        check("q_curv", cf.q_curv, pkg.q_curv);
        check("scal", cf.scal, pkg.scal);
        check("ric_norm_sq", cf.ric_norm_sq, pkg.ric_norm_sq);
        check("ric_vertical", cf.vertical.value, pkg.ric_vertical);
        check("ric_horizontal", cf.horizontal.value, pkg.ric_horizontal);
        check("kappa", cf.horizontal.value, pkg.kappa);
        check("vertical_multiplicity", cf.vertical.multiplicity, d.l);
        check("horizontal_multiplicity", cf.horizontal.multiplicity, d.n - d.l);
    }
    return out;
}

inline int cmd_verify_appendix(int q_max, std::ostream& out, std::ostream& err) {
    if (q_max < 1) {
        throw UsageError("--q-max must be >= 1");
    }
    int checked = 0;
    const auto mismatches = verify_appendix(q_max, checked);
    nlohmann::json report = {{"checked", checked}, {"ok", mismatches.empty()}, {"mismatches", nlohmann::json::array()}};
    for (const auto& m : mismatches) {
        report["mismatches"].push_back({{"family", to_string(m.family.id)},
                                        {"q", m.family.q},
                                        {"field", m.field},
                                        {"expected", m.expected},
                                        {"actual", m.actual}});
        err << "mismatch: " << m.family.label() << " " << m.field << "\n  expected " << m.expected.dump()
            << "\n  actual   " << m.actual.dump() << '\n';
    }
    out << report.dump(2) << '\n';
    return mismatches.empty() ? exit_ok : exit_mismatch;
}

inline int cmd_asymptotics(const DataOptions& opts, std::ostream& out) {
    const SubmersionData d = opts.data();
    out << nlohmann::json(classify(d)).dump(2) << '\n';
    return exit_ok;
}

inline int cmd_sample(const DataOptions& opts, const std::string& range_text, int steps,
                      const std::optional<std::string>& out_path, std::ostream& out) {
    const SubmersionData d = opts.data();
    const auto colon = range_text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("malformed --t-range '" + range_text + "' (expected lo:hi)");
    }
    const Rational lo = parse_rational(std::string_view(range_text).substr(0, colon));
    const Rational hi = parse_rational(std::string_view(range_text).substr(colon + 1));
    if (lo.sign() <= 0 || hi < lo) {
        throw UsageError("--t-range needs 0 < lo <= hi");
    }
    if (steps < 1 || (steps == 1 && lo != hi)) {
        throw UsageError("--steps must be >= 2 (or 1 for a single point)");
    }
    const CurvaturePackage pkg = curvature_package(d);
    const LaurentPoly disc = discriminant(pkg);

    std::ofstream file;
    if (out_path) {
        file.open(*out_path);
        if (!file) {
            throw std::runtime_error("cannot open '" + *out_path + "' for writing");
        }
    }
    std::ostream& csv = out_path ? static_cast<std::ostream&>(file) : out;
    csv << "t,scal,Q,alpha,beta,discriminant\n";
    for (int i = 0; i < steps; ++i) {
        const Rational t = steps == 1 ? lo : lo + (hi - lo) * Rational(i) / Rational(steps - 1);
        csv << format_double(t.to_double()) << ',' << format_double(eval(pkg.scal, t).to_double()) << ','
            << format_double(eval(pkg.q_curv, t).to_double()) << ',' << format_double(eval(pkg.alpha, t).to_double())
            << ',' << format_double(eval(pkg.beta, t).to_double()) << ','
            << format_double(eval(disc, t).to_double()) << '\n';
    }
    return exit_ok;
}

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact curvature and bifurcation analysis of canonical variations", "qcurv"};
    app.require_subcommand(1, 1);

    DataOptions curv_opts;
    std::optional<std::string> at;
    auto* curv = app.add_subcommand("curvature", "print the curvature package as Laurent polynomials in t");
    curv_opts.attach(*curv);
    curv->add_option("--at", at, "also evaluate exactly at t = p/q");

    DataOptions inst_opts;
    std::optional<std::string> lambda_text;
    std::optional<int> eigs;
    std::optional<std::string> window_text;
    std::optional<std::string> width_text;
    auto* inst = app.add_subcommand("instants", "bifurcation instants for base eigenvalues");
    inst_opts.attach(*inst);
    auto* lam_opt = inst->add_option("--lambda", lambda_text, "single base eigenvalue p/q");
    auto* eig_opt = inst->add_option("--eigs", eigs, "number of base eigenvalues to scan");
    inst->add_option("--window", window_text, "instant window lo:hi (hi may be inf)");
    inst->add_option("--width", width_text, "refine reported intervals to this width");
    lam_opt->excludes(eig_opt);
    eig_opt->excludes(lam_opt);

    int thm_q_max = 12;
    bool thm_json = false;
    auto* thm = app.add_subcommand("theorem-a", "reproduce the asymptotic bifurcation table for the Hopf bundles");
    thm->add_option("--q-max", thm_q_max, "largest q per family");
    thm->add_flag("--json", thm_json, "emit JSON instead of markdown");

    int ver_q_max = 50;
    auto* ver = app.add_subcommand("verify-appendix", "check curvature formulas against the Berger closed forms");
    ver->add_option("--q-max", ver_q_max, "largest q per family");

    DataOptions asy_opts;
    auto* asy = app.add_subcommand("asymptotics", "classify bifurcation behavior as t -> 0 and t -> inf");
    asy_opts.attach(*asy);

    DataOptions smp_opts;
    std::string range_text;
    int steps = 0;
    std::optional<std::string> out_path;
    auto* smp = app.add_subcommand("sample", "write decimal samples of the curvature functions as CSV");
    smp_opts.attach(*smp);
    smp->add_option("--t-range", range_text, "lo:hi")->required();
    smp->add_option("--steps", steps, "number of sample points")->required();
    smp->add_option("--out", out_path, "CSV file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (curv->parsed()) return cmd_curvature(curv_opts, at, out);
        if (inst->parsed()) return cmd_instants(inst_opts, lambda_text, eigs, window_text, width_text, out);
        if (thm->parsed()) return cmd_theorem_a(thm_q_max, thm_json, out, err);
        if (ver->parsed()) return cmd_verify_appendix(ver_q_max, out, err);
        if (asy->parsed()) return cmd_asymptotics(asy_opts, out);
        if (smp->parsed()) return cmd_sample(smp_opts, range_text, steps, out_path, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

} // namespace qcurv::cli
