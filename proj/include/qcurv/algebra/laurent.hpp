#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable t with exact rational coefficients.
 *
 * Stored sparsely as exponent -> coefficient with no zero entries, so the zero
 * polynomial is the empty map and two polynomials are equal iff their maps are.
 */

#include "rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcurv {

class LaurentPoly {
public:
    using map_type = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(Rational constant) { add_term(0, std::move(constant)); }   // NOLINT(google-explicit-constructor)
    LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}         // NOLINT(google-explicit-constructor)
    LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms) {
        for (const auto& [k, c] : terms) {
            add_term(k, c);
        }
    }

    /// c * t^k
    static LaurentPoly monomial(const Rational& c, int k) {
        LaurentPoly p;
        p.add_term(k, c);
        return p;
    }

    /// The variable t itself.
    static LaurentPoly t() { return monomial(Rational(1), 1); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const map_type& terms() const { return coeffs_; }

    [[nodiscard]] Rational coefficient(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// Smallest exponent present; throws on the zero polynomial.
    [[nodiscard]] int min_exponent() const {
        require_nonzero("min_exponent");
        return coeffs_.begin()->first;
    }
    [[nodiscard]] int max_exponent() const {
        require_nonzero("max_exponent");
        return coeffs_.rbegin()->first;
    }

    [[nodiscard]] bool has_negative_exponents() const { return !is_zero() && min_exponent() < 0; }

    LaurentPoly& add_term(int k, const Rational& c) {
        if (c.is_zero()) {
            return *this;
        }
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs_.erase(it);
            }
        }
        return *this;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.coeffs_) {
            add_term(k, c);
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.coeffs_) {
            add_term(k, -c);
        }
        return *this;
    }
    LaurentPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator/(LaurentPoly a, const Rational& s) { return a *= Rational(1) / s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [i, ci] : a.coeffs_) {
            for (const auto& [j, cj] : b.coeffs_) {
                out.add_term(i + j, ci * cj);
            }
        }
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void require_nonzero(const char* what) const {
        if (coeffs_.empty()) {
            throw std::domain_error(std::string(what) + " of the zero Laurent polynomial");
        }
    }

    map_type coeffs_;
};

inline LaurentPoly square(const LaurentPoly& p) { return p * p; }

/// Exact value of p at t. Throws std::domain_error at t = 0 when p has negative exponents.
inline Rational eval(const LaurentPoly& p, const Rational& t) {
    if (p.is_zero()) {
        return Rational(0);
    }
    if (t.is_zero()) {
        if (p.min_exponent() < 0) {
            throw std::domain_error("Laurent polynomial with negative exponents evaluated at t = 0");
        }
        return p.coefficient(0);
    }
    Rational sum(0);
    for (const auto& [k, c] : p.terms()) {
        sum += c * pow(t, k);
    }
    return sum;
}

/// Floating-point evaluation, used only for sampling output.
inline double eval_double(const LaurentPoly& p, double t) {
    double sum = 0.0;
    for (const auto& [k, c] : p.terms()) {
        double term = c.to_double();
        if (k >= 0) {
            for (int i = 0; i < k; ++i) term *= t;
        } else {
            for (int i = 0; i < -k; ++i) term /= t;
        }
        sum += term;
    }
    return sum;
}

inline LaurentPoly derivative(const LaurentPoly& p) {
    LaurentPoly d;
    for (const auto& [k, c] : p.terms()) {
        if (k != 0) {
            d.add_term(k - 1, c * Rational(k));
        }
    }
    return d;
}

} // namespace qcurv
