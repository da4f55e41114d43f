#pragma once

/**
 * @file quadext.hpp
 * @brief Elements a + b*sqrt(d) of a real quadratic extension of Q, with exact sign.
 */

#include "rational.hpp"

#include <stdexcept>
#include <utility>

namespace qcurv {

struct QuadExtValue {
    Rational a;
    Rational b;
    Rational d;  ///< radicand, d >= 0

    QuadExtValue() = default;
    QuadExtValue(Rational a_, Rational b_, Rational d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        if (d.sign() < 0) {
            throw std::domain_error("quadratic extension with negative radicand");
        }
    }

    /// Conjugate a - b*sqrt(d).
    [[nodiscard]] QuadExtValue conjugate() const { return {a, -b, d}; }

    friend QuadExtValue operator-(const QuadExtValue& v) { return {-v.a, -v.b, v.d}; }

    friend QuadExtValue operator+(const QuadExtValue& v, const Rational& r) { return {v.a + r, v.b, v.d}; }
    friend QuadExtValue operator-(const QuadExtValue& v, const Rational& r) { return {v.a - r, v.b, v.d}; }
    friend QuadExtValue operator*(const QuadExtValue& v, const Rational& r) { return {v.a * r, v.b * r, v.d}; }

    /// Product within the same extension; radicands must agree.
    friend QuadExtValue operator+(const QuadExtValue& x, const QuadExtValue& y) {
        if (x.d != y.d) {
            throw std::domain_error("sum of elements of different quadratic extensions");
        }
        return {x.a + y.a, x.b + y.b, x.d};
    }
    friend QuadExtValue operator*(const QuadExtValue& x, const QuadExtValue& y) {
        if (x.d != y.d) {
            throw std::domain_error("product of elements of different quadratic extensions");
        }
        return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
    }
};

/// Exact sign of a + b*sqrt(d).
inline int sign(const QuadExtValue& v) {
    const int sa = v.a.sign();
    const int sb = v.d.is_zero() ? 0 : v.b.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0) {
        return sb;
    }
    if (sa == sb) {
        return sa;
    }
    // opposite signs: compare a^2 with b^2 d
    const Rational a2 = v.a * v.a;
    const Rational b2d = v.b * v.b * v.d;
    if (a2 == b2d) {
        return 0;
    }
    return a2 > b2d ? sa : sb;
}

} // namespace qcurv
