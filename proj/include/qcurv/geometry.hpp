#pragma once

/**
 * @file geometry.hpp
 * @brief Curvature of the canonical variation g_t = t g_V + g_H of a Riemannian
 *        submersion with totally geodesic fibers and Einstein base and fiber.
 *
 * Every quantity is returned as an exact Laurent polynomial in t.
 */

#include "algebra/laurent.hpp"
#include "algebra/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcurv {

/**
 * Data of a submersion F^l -> M^n -> B: dimensions, the O'Neill tensor
 * constants zeta (horizontal) and eta (vertical), and the Einstein constants
 * of fiber and base.
 */
struct SubmersionData {
    int n = 0;
    int l = 0;
    Rational zeta;
    Rational eta;
    Rational lambda_F;
    Rational lambda_B;

    friend bool operator==(const SubmersionData&, const SubmersionData&) = default;
};

class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid submersion data:";
        for (const auto& s : v) {
            out += " [" + s + "]";
        }
        return out;
    }

    std::vector<std::string> violations_;
};

/// Every violated invariant of `d`; empty iff `d` is admissible.
inline std::vector<std::string> validate(const SubmersionData& d) {
    std::vector<std::string> out;
    if (d.n < 5) {
        out.emplace_back("n >= 5 required");
    }
    if (d.l < 1 || d.l >= d.n) {
        out.emplace_back("1 <= l < n required");
    }
    if (d.zeta.sign() < 0) {
        out.emplace_back("zeta >= 0 required");
    }
    if (d.eta.sign() < 0) {
        out.emplace_back("eta >= 0 required");
    }
    if (d.eta * Rational(d.l) != d.zeta * Rational(d.n - d.l)) {
        out.emplace_back("eta*l != zeta*(n-l)");
    }
    if (d.l == 1 && !d.lambda_F.is_zero()) {
        out.emplace_back("l=1 requires lambda_F=0");
    }
    return out;
}

/// Coefficient (n^3 - 4n^2 + 16n - 16) / (8 (n-1)^2 (n-2)^2) of scal^2 in Q.
inline Rational q_scal_coefficient(int n) {
    const Rational N(n);
    return (N * N * N - Rational(4) * N * N + Rational(16) * N - Rational(16)) /
           (Rational(8) * (N - 1) * (N - 1) * (N - 2) * (N - 2));
}

/// Q = lap_scal / (2(n-1)) - 2 |Ric|^2 / (n-2)^2 + c_n scal^2.
inline Rational pointwise_q(int n, const Rational& scal, const Rational& ric_norm_sq, const Rational& lap_scal) {
    if (n < 5) {
        throw std::domain_error("Q-curvature formula used with n < 5");
    }
    const Rational N(n);
    return lap_scal / (Rational(2) * (N - 1)) - Rational(2) * ric_norm_sq / ((N - 2) * (N - 2)) +
           q_scal_coefficient(n) * scal * scal;
}

/// Q-curvature of an Einstein metric Ric = lam g in dimension n.
inline Rational einstein_q(int n, const Rational& lam) {
    return pointwise_q(n, Rational(n) * lam, Rational(n) * lam * lam, Rational(0));
}

/**
 * Curvature of (M, g_t) as Laurent polynomials in t.
 *
 * Ricci eigenvalues are given with respect to g_t-orthonormal frames, except
 * `ric_vertical_reference`, which is Ric_t(U,U) / g(U,U) for the fixed metric g.
 */
struct CurvaturePackage {
    LaurentPoly kappa;                   ///< horizontal Einstein constant
    LaurentPoly ric_vertical;            ///< Lambda_F / t + eta t
    LaurentPoly ric_vertical_reference;  ///< Lambda_F + eta t^2
    LaurentPoly ric_horizontal;          ///< Lambda_B - 2 zeta t
    LaurentPoly ric_norm_sq;
    LaurentPoly scal;
    LaurentPoly q_curv;
    LaurentPoly alpha;                   ///< coefficient of Delta_B in the reduced Jacobi operator
    LaurentPoly beta;                    ///< -2 Q
};

inline CurvaturePackage curvature_package(const SubmersionData& d) {
    if (auto violations = validate(d); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    const Rational n(d.n);
    const Rational l(d.l);
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly t_inv = LaurentPoly::monomial(Rational(1), -1);

    CurvaturePackage p;
    p.ric_horizontal = LaurentPoly(d.lambda_B) - Rational(2) * d.zeta * t;
    p.kappa = p.ric_horizontal;
    p.ric_vertical = d.lambda_F * t_inv + d.eta * t;
    p.ric_vertical_reference = LaurentPoly(d.lambda_F) + d.eta * LaurentPoly::monomial(Rational(1), 2);
    p.ric_norm_sq = (n - l) * square(p.ric_horizontal) + l * square(p.ric_vertical);
    p.scal = l * d.lambda_F * t_inv + LaurentPoly(d.lambda_B * (n - l)) - d.eta * l * t;

    const Rational n2sq = (n - 2) * (n - 2);
    p.q_curv = -(Rational(2) * (n - l) / n2sq) * square(p.ric_horizontal) -
               (Rational(2) * l / n2sq) * square(p.ric_vertical) + q_scal_coefficient(d.n) * square(p.scal);

    p.alpha = ((n * n - Rational(4) * n + Rational(8)) * p.scal - Rational(8) * (n - 1) * p.kappa) /
              (Rational(4) * (n - 1) * (n - 2));
    p.beta = Rational(-2) * p.q_curv;
    return p;
}

} // namespace qcurv
