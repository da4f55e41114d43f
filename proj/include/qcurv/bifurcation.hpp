#pragma once

/**
 * @file bifurcation.hpp
 * @brief Bifurcation instants of the constant Q-curvature problem along a
 *        canonical variation.
 *
 * On basic functions the Jacobi operator is (1/2) Delta_B^2 + alpha_t Delta_B
 * + beta_t, so a base eigenvalue lambda degenerates it exactly when
 * (1/2) lambda^2 + alpha_t lambda + beta_t = 0. An instant t_* is a
 * bifurcation instant when, in addition, alpha'(t_*) lambda + beta'(t_*) != 0.
 *
 * After multiplying the residual by m t^s, the derivative of the cleared
 * polynomial at a root equals m t_*^s (alpha' lambda + beta'), so that
 * condition is the same as t_* being a simple root of the cleared polynomial,
 * which is decided exactly with a gcd.
 */

#include "algebra/int_poly.hpp"
#include "algebra/laurent.hpp"
#include "algebra/rational.hpp"
#include "algebra/root_isolation.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcurv {

/**
 * Nonzero spectrum of a base Laplacian, as a strictly increasing generator
 * k -> lambda_k for k = 1, 2, ...
 */
class Spectrum {
public:
    using generator_type = std::function<Rational(int)>;

    explicit Spectrum(generator_type generator) : generator_(std::move(generator)) {}

    /// k-th nonzero eigenvalue, k >= 1.
    [[nodiscard]] Rational eigenvalue(int k) const {
        if (k < 1) {
            throw std::domain_error("eigenvalue index must be >= 1");
        }
        return generator_(k);
    }

    [[nodiscard]] std::vector<Rational> first(int count) const {
        std::vector<Rational> out;
        out.reserve(static_cast<std::size_t>(std::max(count, 0)));
        for (int k = 1; k <= count; ++k) {
            out.push_back(eigenvalue(k));
        }
        return out;
    }

private:
    generator_type generator_;
};

struct InstantReport {
    Rational lambda;
    RootBox root;              ///< the instant t_*
    bool transversal = false;  ///< alpha' lambda + beta' != 0 at t_*
    bool scalar_distinct = false;  ///< lambda != scal(t_*) / (n-1)
    LaurentPoly jacobi_poly;   ///< (1/2) lambda^2 + lambda alpha + beta
};

/// (1/2) lambda^2 + lambda alpha(t) + beta(t).
inline LaurentPoly jacobi_residual(const CurvaturePackage& pkg, const Rational& lambda) {
    return LaurentPoly(lambda * lambda / Rational(2)) + lambda * pkg.alpha + pkg.beta;
}

inline LaurentPoly jacobi_residual(const SubmersionData& d, const Rational& lambda) {
    return jacobi_residual(curvature_package(d), lambda);
}

/// alpha^2 - 2 beta; when nonnegative the lambda-roots are -alpha +- sqrt of it.
inline LaurentPoly discriminant(const CurvaturePackage& pkg) {
    return square(pkg.alpha) - Rational(2) * pkg.beta;
}

inline LaurentPoly discriminant(const SubmersionData& d) { return discriminant(curvature_package(d)); }

/**
 * eta l t^2 + (lambda (n-1) - Lambda_B (n-l)) t - l Lambda_F, whose positive
 * roots are the t where lambda = scal_t / (n-1). Cleared to integers.
 */
inline IntPoly scalar_coincidence_poly(const SubmersionData& d, const Rational& lambda) {
    const Rational n(d.n);
    const Rational l(d.l);
    LaurentPoly s;
    s.add_term(2, d.eta * l);
    s.add_term(1, lambda * (n - 1) - d.lambda_B * (n - l));
    s.add_term(0, -l * d.lambda_F);
    if (s.is_zero()) {
        return {};
    }
    return clear_denominators(s).poly;
}

/**
 * Rational upper bound for lambda_t^+ = -alpha + sqrt(alpha^2 - 2 beta) over
 * 0 < t <= t_max. Empty when alpha or the discriminant blows up at 0. An
 * eigenvalue above the bound has no instant in (0, t_max].
 */
inline std::optional<Rational> lambda_plus_upper_bound(const CurvaturePackage& pkg, const Rational& t_max) {
    if (t_max.sign() <= 0) {
        throw std::domain_error("lambda_plus_upper_bound requires t_max > 0");
    }
    const LaurentPoly disc = discriminant(pkg);
    if (pkg.alpha.has_negative_exponents() || disc.has_negative_exponents()) {
        return std::nullopt;
    }
    auto sup_abs = [&](const LaurentPoly& p) {
        Rational out(0);
        for (const auto& [k, c] : p.terms()) {
            out += abs(c) * pow(t_max, k);
        }
        return out;
    };
    // sqrt(x) <= (x + 1) / 2
    return sup_abs(pkg.alpha) + (sup_abs(disc) + Rational(1)) / Rational(2);
}

/// Every positive root of the Jacobi residual for `lambda`, classified.
inline std::vector<InstantReport> find_instants(const SubmersionData& d, const CurvaturePackage& pkg,
                                                const Rational& lambda) {
    if (lambda.sign() <= 0) {
        throw std::domain_error("find_instants requires lambda > 0");
    }
    LaurentPoly residual = jacobi_residual(pkg, lambda);
    if (residual.is_zero()) {
        throw std::domain_error("Jacobi residual vanishes identically in t");
    }
    const ClearedPoly cleared = clear_denominators(residual);
    const IntPoly coincidence = scalar_coincidence_poly(d, lambda);

    std::vector<InstantReport> out;
    for (auto& box : isolate_positive_roots(cleared.poly)) {
        InstantReport r{lambda, box, root_is_simple(box), !has_common_root(box, coincidence), residual};
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<InstantReport> find_instants(const SubmersionData& d, const Rational& lambda) {
    return find_instants(d, curvature_package(d), lambda);
}

/// Open window (lo, hi) of instants; no upper bound when `hi` is empty.
struct TimeWindow {
    Rational lo;
    std::optional<Rational> hi;

    [[nodiscard]] bool contains(const RootBox& r) const {
        if (compare(r, lo) <= 0) {
            return false;
        }
        return !hi || compare(r, *hi) < 0;
    }
    [[nodiscard]] bool is_empty() const { return hi && *hi <= lo; }
};

/**
 * Instants for the first `max_eigs` eigenvalues that fall inside `window`,
 * sorted by the instant (ties broken by lambda).
 */
inline std::vector<InstantReport> enumerate_instants(const SubmersionData& d, const Spectrum& spectrum,
                                                     const TimeWindow& window, int max_eigs) {
    if (max_eigs < 1) {
        throw std::domain_error("enumerate_instants requires max_eigs >= 1");
    }
    if (window.lo.sign() < 0 || (window.hi && window.hi->sign() <= 0)) {
        throw std::domain_error("instant window bounds must be positive");
    }
    std::vector<InstantReport> out;
    if (window.is_empty()) {
        return out;
    }
    const CurvaturePackage pkg = curvature_package(d);
    for (const Rational& lambda : spectrum.first(max_eigs)) {
        for (auto& report : find_instants(d, pkg, lambda)) {
            if (window.contains(report.root)) {
                out.push_back(std::move(report));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const InstantReport& a, const InstantReport& b) {
        const int c = compare(a.root, b.root);
        return c != 0 ? c < 0 : a.lambda < b.lambda;
    });
    return out;
}

} // namespace qcurv
