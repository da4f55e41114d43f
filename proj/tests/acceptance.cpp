// Acceptance gate: every criterion runs at its stated tolerance and time limit
// and prints one PASS/FAIL line. Exit status is nonzero if any criterion fails.

#include <qcurv/qcurv.hpp>

#include "generators.hpp"
#include "qcurv_cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qcurv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) {
                detail = what;
            }
            pass = false;
        }
    }
};

Rational r(long long p, long long q = 1) { return Rational(Integer(p), Integer(q)); }

std::vector<HopfFamily> families(int q_max) {
    std::vector<HopfFamily> out;
    for (HopfId id : {HopfId::i, HopfId::ii, HopfId::iii}) {
        for (int q = min_q(id); q <= q_max; ++q) {
            out.emplace_back(id, q);
        }
    }
    out.emplace_back(HopfId::iv);
    return out;
}

// 1. Q and scal from the canonical variation equal the closed forms, exactly.
Outcome appendix_equivalence() {
    Outcome o;
    int checked = 0;
    for (const auto& f : families(50)) {
        const CurvaturePackage pkg = curvature_package(hopf_data(f));
        const BergerClosedForm cf = berger_closed_form(f);
        o.require(pkg.q_curv == cf.q_curv, f.label() + ": Q differs");
        o.require(pkg.scal == cf.scal, f.label() + ": scal differs");
        ++checked;
    }
    o.require(checked == 49 + 50 + 50 + 1, "unexpected family count");
    if (o.pass) {
        o.detail = std::to_string(checked) + " family members";
    }
    return o;
}

// 2. Round-sphere values and the conformal Jacobi kernel at t = 1.
Outcome round_sphere_identities() {
    Outcome o;
    for (const auto& f : families(50)) {
        const SubmersionData d = hopf_data(f);
        const CurvaturePackage pkg = curvature_package(d);
        const Rational n(d.n);
        const Rational one(1);
        if (f.id == HopfId::iii) {
            o.require(eval(pkg.scal, one) == n * (n + 2), f.label() + ": scal(1)");
            o.require(eval(pkg.q_curv, one) == einstein_q(d.n, n + 2), f.label() + ": Q(1)");
        } else {
            o.require(eval(pkg.scal, one) == n * (n - 1), f.label() + ": scal(1)");
            o.require(eval(pkg.q_curv, one) == n * (n * n - 4) / r(8), f.label() + ": Q(1)");
            o.require(n * n / r(2) + eval(pkg.alpha, one) * n + eval(pkg.beta, one) == r(0),
                      f.label() + ": Jacobi kernel");
        }
    }
    return o;
}

// 3. `theorem-a --q-max 30` reproduces the reference thresholds row for row.
Outcome theorem_a_reproduction() {
    Outcome o;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"theorem-a", "--q-max", "30", "--json"}, out, err);
    o.require(code == 0, "theorem-a exited with " + std::to_string(code) + ": " + err.str());
    const auto rows = nlohmann::json::parse(out.str());
    o.require(rows.size() == 29 + 30 + 30 + 1, "row count " + std::to_string(rows.size()));
    for (const auto& row : rows) {
        const std::string fam = row["family"];
        const int q = row["q"];
        bool collapse = false;
        bool expansion = false;
        if (fam == "i") {
            collapse = false;
            expansion = q >= 6;
        } else if (fam == "ii") {
            collapse = q >= 1;
            expansion = q >= 2;
        } else if (fam == "iii") {
            collapse = q >= 2;
            expansion = q >= 3;
        } else {
            collapse = expansion = true;
        }
        const std::string label = "(" + fam + ") q=" + std::to_string(q);
        o.require(row["collapse"]["result"] == collapse, label + ": collapse");
        o.require(row["expansion"]["result"] == expansion, label + ": expansion");
    }
    std::ostringstream md;
    o.require(cli::run({"theorem-a", "--q-max", "30"}, md, err) == 0, "markdown run failed");
    return o;
}

// 4. Which rows need the sufficient condition and which only the direct check.
Outcome threshold_split() {
    Outcome o;
    for (const auto& f : families(30)) {
        const SubmersionData d = hopf_data(f);
        bool ratio = false;
        bool direct = false;
        switch (f.id) {
        case HopfId::i:
            ratio = f.q >= 10;
            direct = f.q >= 6;
            break;
        case HopfId::ii:
            ratio = f.q >= 3;
            direct = f.q >= 2;
            break;
        case HopfId::iii:
            ratio = f.q >= 4;
            direct = f.q >= 3;
            break;
        case HopfId::iv:
            ratio = direct = true;
            break;
        }
        o.require(ratio_condition(d).holds == ratio, f.label() + ": ratio_condition");
        o.require(expansion_direct_check(d) == direct, f.label() + ": expansion_direct_check");
    }
    return o;
}

// 5. Signs of a, b, c, delta and the ratio bound against rho_+ over 5 <= n <= 60.
Outcome sign_polynomial_sweep() {
    Outcome o;
    int pairs = 0;
    for (int n = 5; n <= 60; ++n) {
        for (int l = 1; l < n; ++l) {
            const DimPair dp(n, l);
            if (!(dp.d1() || dp.d2() || dp.d3())) {
                continue;
            }
            ++pairs;
            const std::string label = "(n,l)=(" + std::to_string(n) + "," + std::to_string(l) + ")";
            const auto abc = poly_abc(dp);
            if (dp.d1() || dp.d2()) {
                o.require(abc.a.sign() > 0, label + ": a > 0");
            }
            o.require(abc.b.sign() < 0, label + ": b < 0");
            o.require(abc.c.sign() < 0, label + ": c < 0");
            if (abc.a.is_zero()) {
                o.require(false, label + ": a = 0");
                continue;
            }
            o.require(delta_rho(dp).delta.sign() > 0, label + ": delta > 0");
            o.require(ratio_bound_exceeds_rho_plus(dp), label + ": ratio bound > rho_+");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " dimension pairs";
    }
    return o;
}

// 6. Desk-scale substitute for "infinitely many" instants.
Outcome instant_enumeration() {
    Outcome o;
    auto good = [](const std::vector<InstantReport>& v) {
        return std::count_if(v.begin(), v.end(), [](const InstantReport& r) { return r.transversal && r.scalar_distinct; });
    };

    const HopfFamily s15(HopfId::iv);
    const SubmersionData d15 = hopf_data(s15);
    const auto near0 = enumerate_instants(d15, base_spectrum(s15), {r(0), r(1, 100)}, 40);
    const auto near_inf = enumerate_instants(d15, base_spectrum(s15), {r(100), std::nullopt}, 40);
    o.require(good(near0) >= 5, "(iv): only " + std::to_string(good(near0)) + " instants in (0, 1/100)");
    o.require(good(near_inf) >= 5, "(iv): only " + std::to_string(good(near_inf)) + " instants in (100, inf)");

    const auto s7 = find_instants(hopf_data(HopfFamily(HopfId::ii, 1)), r(16));
    o.require(s7.size() == 1, "(ii) q=1, lambda=16: expected one instant");
    if (!s7.empty()) {
        o.require(compare(s7[0].root, r(1, 10)) > 0 && compare(s7[0].root, r(1, 5)) < 0,
                  "(ii) q=1, lambda=16: instant outside (1/10, 1/5)");
        o.require(s7[0].transversal && s7[0].scalar_distinct, "(ii) q=1, lambda=16: flags");
    }

    int finite_total = 0;
    for (int q = 2; q <= 5; ++q) {
        const HopfFamily f(HopfId::i, q);
        const SubmersionData d = hopf_data(f);
        const auto bound = lambda_plus_upper_bound(curvature_package(d), r(1, 100));
        o.require(collapse_discriminant_bounded(d) && bound.has_value(), f.label() + ": discriminant not bounded");
        if (!bound) {
            continue;
        }
        const auto reports = enumerate_instants(d, base_spectrum(f), {r(0), r(1, 100)}, 200);
        for (const auto& rep : reports) {
            o.require(rep.lambda <= *bound, f.label() + ": instant near 0 for lambda above the bound");
        }
        finite_total += static_cast<int>(reports.size());
    }
    if (o.pass) {
        o.detail = "(iv) " + std::to_string(good(near0)) + " near 0, " + std::to_string(good(near_inf)) +
                   " near inf; (i) q=2..5 " + std::to_string(finite_total) + " near 0";
    }
    return o;
}

// 7. Limit signs of Q at both ends for q <= 30.
Outcome limit_signs() {
    Outcome o;
    using LS = LimitSign;
    for (const auto& f : families(30)) {
        const int q = f.q;
        bool zero_ok = false;
        LS inf_expected = LS::pos_infinity;
        for (const LaurentPoly& p : {appendix_q_poly(f), curvature_package(hopf_data(f)).q_curv}) {
            const LimitSigns s = q_limit_signs(p);
            switch (f.id) {
            case HopfId::i:
                zero_ok = s.at_zero != LS::pos_infinity && s.at_zero != LS::neg_infinity;
                inf_expected = q <= 9 ? LS::neg_infinity : LS::pos_infinity;
                break;
            case HopfId::ii:
                zero_ok = s.at_zero == LS::pos_infinity;
                inf_expected = q <= 2 ? LS::neg_infinity : LS::pos_infinity;
                break;
            case HopfId::iii:
                zero_ok = s.at_zero == (q == 1 ? LS::neg_infinity : LS::pos_infinity);
                inf_expected = q <= 3 ? LS::neg_infinity : LS::pos_infinity;
                break;
            case HopfId::iv:
                zero_ok = s.at_zero == LS::pos_infinity;
                inf_expected = LS::pos_infinity;
                break;
            }
            o.require(zero_ok, f.label() + ": limit at 0 is " + to_string(s.at_zero));
            o.require(s.at_infinity == inf_expected, f.label() + ": limit at inf is " + to_string(s.at_infinity));
        }
    }
    return o;
}

/// Jacobi residual in long double straight from the scalar curvature formulas.
class OracleResidual {
public:
    OracleResidual(const SubmersionData& d, long double lambda)
        : n_(d.n),
          l_(d.l),
          zeta_(d.zeta.to_long_double()),
          eta_(d.eta.to_long_double()),
          lf_(d.lambda_F.to_long_double()),
          lb_(d.lambda_B.to_long_double()),
          lambda_(lambda) {}

    long double operator()(long double t) const {
        const long double n = n_;
        const long double l = l_;
        const long double vert = lf_ / t + eta_ * t;
        const long double horiz = lb_ - 2 * zeta_ * t;
        const long double scal = l * vert + (n - l) * horiz;
        const long double norm = l * vert * vert + (n - l) * horiz * horiz;
        const long double cn = (n * n * n - 4 * n * n + 16 * n - 16) / (8 * (n - 1) * (n - 1) * (n - 2) * (n - 2));
        const long double q = -2 * norm / ((n - 2) * (n - 2)) + cn * scal * scal;
        const long double alpha = ((n * n - 4 * n + 8) * scal - 8 * horiz * (n - 1)) / (4 * (n - 1) * (n - 2));
        return lambda_ * lambda_ / 2 + lambda_ * alpha - 2 * q;
    }

private:
    long double n_, l_, zeta_, eta_, lf_, lb_, lambda_;
};

/// Grid scan over (lo, hi) with log spacing, then bisection of every sign change.
std::vector<long double> oracle_roots(const OracleResidual& f, long double lo, long double hi) {
    constexpr int grid = 2'000'000;
    const long double ratio = std::pow(hi / lo, 1.0L / grid);
    std::vector<long double> roots;
    long double a = lo;
    long double fa = f(a);
    for (int i = 1; i <= grid; ++i) {
        const long double b = i == grid ? hi : a * ratio;
        const long double fb = f(b);
        if (fa == 0) {
            roots.push_back(a);
        } else if ((fa < 0) != (fb < 0) && fb != 0) {
            long double x = a;
            long double y = b;
            long double fx = fa;
            while (y - x > 1e-12L * y) {
                const long double m = (x + y) / 2;
                const long double fm = f(m);
                if ((fm < 0) == (fx < 0)) {
                    x = m;
                    fx = fm;
                } else {
                    y = m;
                }
            }
            roots.push_back((x + y) / 2);
        }
        a = b;
        fa = fb;
    }
    return roots;
}

// 8. Exact isolation against a floating-point scan on random data.
Outcome oracle_cross_check() {
    Outcome o;
    testing::Gen gen(20240611);
    const Rational lo(r(1, 1000));
    const Rational hi(1000);
    int total_roots = 0;
    int with_roots = 0;
    for (int instance = 0; instance < 100; ++instance) {
        const SubmersionData d = gen.submersion(14);
        const Rational lambda = gen.positive_rational(400, 4);
        const CurvaturePackage pkg = curvature_package(d);
        if (jacobi_residual(pkg, lambda).is_zero()) {
            --instance;
            continue;
        }
        std::vector<RootBox> exact;
        for (const auto& rep : find_instants(d, pkg, lambda)) {
            if (TimeWindow{lo, hi}.contains(rep.root)) {
                exact.push_back(rep.root);
            }
        }
        const auto oracle = oracle_roots(OracleResidual(d, lambda.to_long_double()), 1e-3L, 1e3L);
        const std::string label = "instance " + std::to_string(instance) + " (n=" + std::to_string(d.n) +
                                  ", l=" + std::to_string(d.l) + ", lambda=" + lambda.str() + ")";
        o.require(exact.size() == oracle.size(), label + ": " + std::to_string(exact.size()) + " exact roots vs " +
                                                     std::to_string(oracle.size()) + " oracle roots");
        if (exact.size() != oracle.size()) {
            continue;
        }
        total_roots += static_cast<int>(exact.size());
        with_roots += exact.empty() ? 0 : 1;
        for (std::size_t k = 0; k < exact.size(); ++k) {
            const long double x = oracle[k];
            const long double slack = 1e-9L * x;
            o.require(exact[k].lo().to_long_double() - slack <= x && x <= exact[k].hi().to_long_double() + slack,
                      label + ": oracle root outside the isolating box");
            const RootBox fine = exact[k].refine(Rational(Integer(1), Integer(100000000)) * exact[k].hi());
            o.require(fine.lo().to_long_double() - slack <= x && x <= fine.hi().to_long_double() + slack,
                      label + ": oracle root outside the refined box");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(total_roots) + " roots over " + std::to_string(with_roots) + " instances with roots";
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    // optional criterion numbers select a subset
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        only.push_back(std::atoi(argv[i]));
    }
    const std::vector<Criterion> criteria{
        {1, "closed-form equivalence", 5, appendix_equivalence},
        {2, "round-sphere identities", 1, round_sphere_identities},
        {3, "bifurcation table", 30, theorem_a_reproduction},
        {4, "threshold split", 10, threshold_split},
        {5, "sign-polynomial sweep", 30, sign_polynomial_sweep},
        {6, "instant enumeration", 60, instant_enumeration},
        {7, "limit signs of Q", 5, limit_signs},
        {8, "oracle cross-check", 60, oracle_cross_check},
    };
    int failures = 0;
    int ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) {
            continue;
        }
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.pass = false;
            o.detail = "over the time limit; " + o.detail;
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  [%d] %-26s %7.3f s (limit %g s)  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
