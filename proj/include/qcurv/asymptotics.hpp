#pragma once

/**
 * @file asymptotics.hpp
 * @brief Existence of infinitely many bifurcation instants as the fibers
 *        collapse (t -> 0) or expand (t -> infinity).
 *
 * Two routes are provided for each end. The *criteria* check sufficient
 * conditions that depend only on (n, l), the signs of the data and the ratio
 * eta/zeta. The *direct checks* read the leading coefficients of alpha and
 * alpha^2 - 2 beta for the concrete data and decide, over a single square
 * root, that lambda_t^+ -> +infinity and that alpha' lambda_t^+ + beta' keeps a
 * nonzero leading term.
 */

#include "algebra/laurent.hpp"
#include "algebra/quadext.hpp"
#include "algebra/rational.hpp"
#include "bifurcation.hpp"
#include "geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcurv {

struct DimPair {
    int n = 0;
    int l = 0;

    DimPair(int n_, int l_) : n(n_), l(l_) {
        if (n < 5 || l < 1 || l >= n) {
            throw std::domain_error("dimension pair needs n >= 5 and 1 <= l < n");
        }
    }

    /// 5 <= n <= 8 and l >= 3
    [[nodiscard]] bool d1() const { return n >= 5 && n <= 8 && l >= 3; }
    /// n >= 9 and l >= 2
    [[nodiscard]] bool d2() const { return n >= 9 && l >= 2; }
    /// n >= 21 and l = 1
    [[nodiscard]] bool d3() const { return n >= 21 && l == 1; }
};

struct SignPolyCoefficients {
    Rational a;
    Rational b;
    Rational c;
};

/**
 * a(n,l) = ((n^4 + 64n - 64) l - 128 (n-1)^2) l,
 * b(n,l) = -32 l (n^3 - 5n^2 + 12n - 8),
 * c(n,l) = -512 (n-1)^2 (n - l - 1/2).
 */
inline SignPolyCoefficients poly_abc(const DimPair& dp) {
    const Rational n(dp.n);
    const Rational l(dp.l);
    const Rational n1 = n - 1;
    SignPolyCoefficients out;
    out.a = ((n * n * n * n + Rational(64) * n - Rational(64)) * l - Rational(128) * n1 * n1) * l;
    out.b = Rational(-32) * l * (n * n * n - Rational(5) * n * n + Rational(12) * n - Rational(8));
    out.c = Rational(-512) * n1 * n1 * (n - l - Rational(1) / Rational(2));
    return out;
}

struct DeltaRho {
    Rational delta;         ///< b^2 - 4ac
    QuadExtValue rho_minus; ///< (-b - sqrt(delta)) / (2a)
    QuadExtValue rho_plus;  ///< (-b + sqrt(delta)) / (2a)
};

inline DeltaRho delta_rho(const DimPair& dp) {
    const auto [a, b, c] = poly_abc(dp);
    if (a.is_zero()) {
        throw std::domain_error("degenerate sign polynomial: a(n,l) = 0");
    }
    const Rational delta = b * b - Rational(4) * a * c;
    if (delta.sign() < 0) {
        throw std::domain_error("sign polynomial has negative discriminant");
    }
    const Rational two_a = Rational(2) * a;
    return {delta, QuadExtValue(-b / two_a, Rational(-1) / two_a, delta),
            QuadExtValue(-b / two_a, Rational(1) / two_a, delta)};
}

/// (n^3 - 4n^2 + 16n - 16) l^2 - 16 (n-1)^2 l, the radicand in the ratio bound.
inline Rational ratio_radicand(const DimPair& dp) {
    const Rational n(dp.n);
    const Rational l(dp.l);
    return (n * n * n - Rational(4) * n * n + Rational(16) * n - Rational(16)) * l * l -
           Rational(16) * (n - 1) * (n - 1) * l;
}

/// Squared ratio bound 64 (n-1)^2 (n-l) / radicand; empty when the radicand is not positive.
inline std::optional<Rational> ratio_bound_squared(const DimPair& dp) {
    const Rational rad = ratio_radicand(dp);
    if (rad.sign() <= 0) {
        return std::nullopt;
    }
    const Rational n(dp.n);
    return Rational(64) * (n - 1) * (n - 1) * (n - Rational(dp.l)) / rad;
}

struct RatioCondition {
    bool holds = false;
    std::string diagnostic;  ///< why the condition could not hold, if it does not apply

    explicit operator bool() const { return holds; }
};

/**
 * eta / zeta > 8 (n-1) sqrt(n-l) / sqrt(radicand), decided by squaring both
 * (positive) sides.
 */
inline RatioCondition ratio_condition(const SubmersionData& d) {
    if (d.zeta.sign() <= 0 || d.eta.sign() <= 0) {
        return {false, "requires zeta > 0 and eta > 0"};
    }
    const auto bound_sq = ratio_bound_squared(DimPair(d.n, d.l));
    if (!bound_sq) {
        return {false, "nonpositive radicand (n^3-4n^2+16n-16)l^2 - 16(n-1)^2 l"};
    }
    return {d.eta * d.eta > d.zeta * d.zeta * *bound_sq, {}};
}

/// The proof inequality 8(n-1) sqrt(n-l) / sqrt(radicand) > rho_+, decided in Q(sqrt(delta)).
inline bool ratio_bound_exceeds_rho_plus(const DimPair& dp) {
    const auto bound_sq = ratio_bound_squared(dp);
    if (!bound_sq) {
        return false;
    }
    const DeltaRho dr = delta_rho(dp);
    if (sign(dr.rho_plus) <= 0) {
        return true;
    }
    // both sides positive: compare squares
    const QuadExtValue rho_sq = dr.rho_plus * dr.rho_plus;
    return sign(QuadExtValue(*bound_sq - rho_sq.a, -rho_sq.b, dr.delta)) > 0;
}

/// 16 (n-1) / ((n^2 - 4n + 8) l) < rho_+, which makes lambda_t^+ grow when eta/zeta > rho_+.
inline bool growth_threshold_below_rho_plus(const DimPair& dp) {
    const Rational n(dp.n);
    const Rational threshold = Rational(16) * (n - 1) / ((n * n - Rational(4) * n + Rational(8)) * Rational(dp.l));
    return sign(delta_rho(dp).rho_plus - threshold) > 0;
}

/// Lambda_F > 0 and (n, l) satisfies (D1) or (D2).
inline bool collapse_criterion(const SubmersionData& d) {
    if (d.lambda_F.sign() <= 0 || d.n < 5 || d.l < 1 || d.l >= d.n) {
        return false;
    }
    const DimPair dp(d.n, d.l);
    return dp.d1() || dp.d2();
}

/// (D1), (D2) or (D3), zeta > 0, eta > 0 and the ratio condition.
inline bool expansion_criterion(const SubmersionData& d) {
    if (d.n < 5 || d.l < 1 || d.l >= d.n) {
        return false;
    }
    const DimPair dp(d.n, d.l);
    if (!(dp.d1() || dp.d2() || dp.d3())) {
        return false;
    }
    return d.zeta.sign() > 0 && d.eta.sign() > 0 && ratio_condition(d).holds;
}

/**
 * Leading behavior of the larger lambda-root at one end of (0, infinity).
 *
 * With D = alpha^2 - 2 beta ~ L t^(2e), alpha ~ A t^e and beta ~ B t^(2e)
 * (e = -1 at 0, e = +1 at infinity), lambda_t^+ ~ (-A + sqrt(L)) t^e and
 * alpha' lambda_t^+ + beta' ~ e (A (-A + sqrt(L)) + 2B) t^(2e-1).
 */
struct LeadingBehavior {
    Rational discriminant_lead;   ///< L
    QuadExtValue lambda_plus_lead; ///< -A + sqrt(L)
    QuadExtValue speed_lead;      ///< e (A (-A + sqrt(L)) + 2B)
};

inline LeadingBehavior leading_behavior(const CurvaturePackage& pkg, int end_exponent) {
    const LaurentPoly disc = discriminant(pkg);
    const Rational L = disc.coefficient(2 * end_exponent);
    const Rational A = pkg.alpha.coefficient(end_exponent);
    const Rational B = pkg.beta.coefficient(2 * end_exponent);
    const Rational radicand = L.sign() > 0 ? L : Rational(0);
    LeadingBehavior out;
    out.discriminant_lead = L;
    out.lambda_plus_lead = QuadExtValue(-A, Rational(1), radicand);
    out.speed_lead = QuadExtValue(Rational(end_exponent) * (Rational(2) * B - A * A), Rational(end_exponent) * A,
                                  radicand);
    return out;
}

namespace detail {

inline bool discriminant_dominates(const CurvaturePackage& pkg, int end_exponent) {
    const LaurentPoly disc = discriminant(pkg);
    if (disc.is_zero()) {
        return false;
    }
    const int extreme = end_exponent < 0 ? disc.min_exponent() : disc.max_exponent();
    return extreme == 2 * end_exponent;
}

inline bool leading_terms_diverge(const CurvaturePackage& pkg, int end_exponent) {
    if (!discriminant_dominates(pkg, end_exponent)) {
        return false;
    }
    const LeadingBehavior lb = leading_behavior(pkg, end_exponent);
    return lb.discriminant_lead.sign() > 0 && sign(lb.lambda_plus_lead) > 0 && sign(lb.speed_lead) != 0;
}

} // namespace detail

/**
 * As t -> infinity: the t^2 coefficient of alpha^2 - 2 beta is positive,
 * lambda_t^+ grows linearly with positive slope, and alpha' lambda_t^+ + beta'
 * has a nonzero leading coefficient.
 */
inline bool expansion_direct_check(const SubmersionData& d) {
    return detail::leading_terms_diverge(curvature_package(d), 1);
}

enum class CollapseBehavior { infinite, finite };

/**
 * As t -> 0: infinite when the t^-2 coefficient of alpha^2 - 2 beta is
 * positive, lambda_t^+ blows up like 1/t with positive coefficient and
 * alpha' lambda_t^+ + beta' has a nonzero t^-3 coefficient; finite otherwise.
 */
inline CollapseBehavior collapse_direct_check(const SubmersionData& d) {
    return detail::leading_terms_diverge(curvature_package(d), -1) ? CollapseBehavior::infinite
                                                                   : CollapseBehavior::finite;
}

/// alpha^2 - 2 beta has no negative exponents, so lambda_t^+ stays bounded as t -> 0.
inline bool collapse_discriminant_bounded(const SubmersionData& d) {
    const LaurentPoly disc = discriminant(curvature_package(d));
    return disc.is_zero() || disc.min_exponent() >= 0;
}

enum class VerdictMethod { criterion, direct, negative };

inline const char* to_string(VerdictMethod m) {
    switch (m) {
    case VerdictMethod::criterion: return "criterion";
    case VerdictMethod::direct: return "direct";
    case VerdictMethod::negative: return "negative";
    }
    return "?";
}

struct SideVerdict {
    bool infinite = false;
    VerdictMethod method = VerdictMethod::direct;
};

struct AsymptoticVerdict {
    SideVerdict collapse;
    SideVerdict expansion;
};

/**
 * Combined verdict. A side proven by the sufficient criterion reports
 * `criterion`; otherwise the direct check decides (`direct`). A collapse side
 * with bounded discriminant reports `negative`.
 */
inline AsymptoticVerdict classify(const SubmersionData& d) {
    AsymptoticVerdict v;
    if (collapse_criterion(d)) {
        v.collapse = {true, VerdictMethod::criterion};
    } else if (collapse_direct_check(d) == CollapseBehavior::infinite) {
        v.collapse = {true, VerdictMethod::direct};
    } else if (collapse_discriminant_bounded(d)) {
        v.collapse = {false, VerdictMethod::negative};
    } else {
        v.collapse = {false, VerdictMethod::direct};
    }
    if (expansion_criterion(d)) {
        v.expansion = {true, VerdictMethod::criterion};
    } else {
        v.expansion = {expansion_direct_check(d), VerdictMethod::direct};
    }
    return v;
}

/// Limit of a Laurent polynomial at t -> 0 or t -> infinity.
enum class LimitSign { neg_infinity, negative, zero, positive, pos_infinity };

inline const char* to_string(LimitSign s) {
    switch (s) {
    case LimitSign::neg_infinity: return "-inf";
    case LimitSign::negative: return "-";
    case LimitSign::zero: return "0";
    case LimitSign::positive: return "+";
    case LimitSign::pos_infinity: return "+inf";
    }
    return "?";
}

struct LimitSigns {
    LimitSign at_zero;
    LimitSign at_infinity;

    friend bool operator==(const LimitSigns&, const LimitSigns&) = default;
};

inline LimitSigns q_limit_signs(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("limit signs of the zero Laurent polynomial");
    }
    auto classify_end = [](int exponent, int coefficient_sign, bool diverges_for_positive) {
        if (exponent == 0) {
            return coefficient_sign > 0 ? LimitSign::positive : LimitSign::negative;
        }
        if (!diverges_for_positive) {
            return LimitSign::zero;
        }
        return coefficient_sign > 0 ? LimitSign::pos_infinity : LimitSign::neg_infinity;
    };
    const int lo = p.min_exponent();
    const int hi = p.max_exponent();
    return {classify_end(lo, p.coefficient(lo).sign(), lo < 0),
            classify_end(hi, p.coefficient(hi).sign(), hi > 0)};
}

} // namespace qcurv
