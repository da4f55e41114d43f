#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored in ascending order of degree without trailing zeros.
 * This is the working representation for root isolation; every operation here
 * is exact.
 */

#include "laurent.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcurv {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }
    IntPoly(std::initializer_list<long long> ascending) {
        coeffs_.reserve(ascending.size());
        for (long long c : ascending) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    /// Degree, or -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Integer>& coefficients() const { return coeffs_; }
    [[nodiscard]] Integer coefficient(int i) const {
        return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : Integer(0);
    }
    [[nodiscard]] const Integer& leading() const {
        if (is_zero()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    /// Exact value at a rational point.
    [[nodiscard]] Rational value_at(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + Rational(*it);
        }
        return acc;
    }

    /// Sign of p(x), computed on the homogenized integer form sum c_i a^i b^(d-i).
    [[nodiscard]] int sign_at(const Rational& x) const {
        if (is_zero()) {
            return 0;
        }
        const Integer a = x.numerator();
        const Integer b = x.denominator();
        Integer acc = 0;
        Integer b_power = 1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * a + *it * b_power;
            b_power *= b;
        }
        return acc.sign();
    }

    [[nodiscard]] long double value_at(long double x) const {
        long double acc = 0.0L;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + it->convert_to<long double>();
        }
        return acc;
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    [[nodiscard]] int sign_variations() const {
        int changes = 0;
        int last = 0;
        for (const auto& c : coeffs_) {
            const int s = c.sign();
            if (s == 0) {
                continue;
            }
            if (last != 0 && s != last) {
                ++changes;
            }
            last = s;
        }
        return changes;
    }

    /// Multiplicity of the root at 0.
    [[nodiscard]] int zero_root_multiplicity() const {
        int k = 0;
        while (k <= degree() && coeffs_[static_cast<std::size_t>(k)] == 0) {
            ++k;
        }
        return k;
    }

    /// p(t) / t^k where k is the multiplicity of the root at 0.
    [[nodiscard]] IntPoly without_zero_roots() const {
        const int k = zero_root_multiplicity();
        return IntPoly(std::vector<Integer>(coeffs_.begin() + k, coeffs_.end()));
    }

    [[nodiscard]] Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
        }
        return g;
    }

    /// Divides by the content and makes the leading coefficient positive.
    [[nodiscard]] IntPoly primitive_part() const {
        if (is_zero()) {
            return {};
        }
        Integer g = content();
        if (leading() < 0) {
            g = -g;
        }
        std::vector<Integer> out(coeffs_);
        for (auto& c : out) {
            c /= g;
        }
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPoly(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Integer> coeffs_;
};

inline IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) {
        return {};
    }
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        out.push_back(p.coefficient(i) * i);
    }
    return IntPoly(std::move(out));
}

namespace detail {

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over the integers.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("pseudo-remainder by the zero polynomial");
    }
    std::vector<Integer> r = a.coefficients();
    const int db = b.degree();
    const Integer& lb = b.leading();
    int dr = a.degree();
    while (dr >= db) {
        const Integer lr = r[static_cast<std::size_t>(dr)];
        for (auto& c : r) {
            c *= lb;
        }
        for (int i = 0; i <= db; ++i) {
            r[static_cast<std::size_t>(dr - db + i)] -= lr * b.coefficient(i);
        }
        // the leading entry is now zero by construction
        r.pop_back();
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
            r.pop_back();
            --dr;
        }
    }
    return IntPoly(std::move(r));
}

} // namespace detail

/// Greatest common divisor, primitive with positive leading coefficient (zero iff both are zero).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        IntPoly r = detail::pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

/**
 * Exact quotient a / b where b is known to divide a over Q. The result is
 * returned as a primitive integer polynomial (the same zero set as a / b).
 */
inline IntPoly divide_primitive(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {};
    }
    std::vector<Rational> rem;
    rem.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) {
        rem.emplace_back(c);
    }
    const int db = b.degree();
    const Rational lb(b.leading());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k + i)] -= q * Rational(b.coefficient(i));
        }
    }
    Integer den = 1;
    for (const auto& q : quot) {
        den = boost::multiprecision::lcm(den, q.denominator());
    }
    std::vector<Integer> out;
    out.reserve(quot.size());
    for (const auto& q : quot) {
        out.push_back(q.numerator() * (den / q.denominator()));
    }
    return IntPoly(std::move(out)).primitive_part();
}

/// p / gcd(p, p'): same roots as p, all simple.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) {
        return p.primitive_part();
    }
    return divide_primitive(p, gcd(p, derivative(p)));
}

/**
 * Polynomial whose positive roots are the images of the roots of p in the open
 * interval (lo, hi) under x = (lo + hi*y) / (1 + y). Its sign variations bound
 * the number of roots of p in (lo, hi) (Descartes' rule).
 */
inline IntPoly interval_transform(const IntPoly& p, const Rational& lo, const Rational& hi) {
    const int d = p.degree();
    if (d <= 0) {
        return p;
    }
    // x = (A + B y) / (C (1 + y)) with integers A, B, C
    const Integer A = lo.numerator() * hi.denominator();
    const Integer B = hi.numerator() * lo.denominator();
    const Integer C = lo.denominator() * hi.denominator();

    // powers of (A + B y) and (C + C y), built incrementally
    std::vector<std::vector<Integer>> num_pow(static_cast<std::size_t>(d + 1));
    std::vector<std::vector<Integer>> den_pow(static_cast<std::size_t>(d + 1));
    num_pow[0] = {Integer(1)};
    den_pow[0] = {Integer(1)};
    auto times_linear = [](const std::vector<Integer>& v, const Integer& c0, const Integer& c1) {
        std::vector<Integer> out(v.size() + 1, Integer(0));
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] += v[i] * c0;
            out[i + 1] += v[i] * c1;
        }
        return out;
    };
    for (int k = 1; k <= d; ++k) {
        num_pow[static_cast<std::size_t>(k)] = times_linear(num_pow[static_cast<std::size_t>(k - 1)], A, B);
        den_pow[static_cast<std::size_t>(k)] = times_linear(den_pow[static_cast<std::size_t>(k - 1)], C, C);
    }
    std::vector<Integer> out(static_cast<std::size_t>(d + 1), Integer(0));
    for (int i = 0; i <= d; ++i) {
        const Integer& ci = p.coefficient(i);
        if (ci == 0) {
            continue;
        }
        const auto& np = num_pow[static_cast<std::size_t>(i)];
        const auto& dp = den_pow[static_cast<std::size_t>(d - i)];
        for (std::size_t u = 0; u < np.size(); ++u) {
            for (std::size_t v = 0; v < dp.size(); ++v) {
                out[u + v] += ci * np[u] * dp[v];
            }
        }
    }
    return IntPoly(std::move(out));
}

/// Result of clearing a Laurent polynomial to an integer polynomial.
struct ClearedPoly {
    IntPoly poly;   ///< m * t^shift * p(t), m = lcm of the coefficient denominators
    int shift = 0;  ///< minimal s >= 0 making every exponent nonnegative
};

inline ClearedPoly clear_denominators(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("clear_denominators of the zero Laurent polynomial");
    }
    const int shift = std::max(0, -p.min_exponent());
    Integer m = 1;
    for (const auto& [k, c] : p.terms()) {
        m = boost::multiprecision::lcm(m, c.denominator());
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(p.max_exponent() + shift + 1), Integer(0));
    for (const auto& [k, c] : p.terms()) {
        coeffs[static_cast<std::size_t>(k + shift)] = c.numerator() * (m / c.denominator());
    }
    return {IntPoly(std::move(coeffs)), shift};
}

/// Integer polynomial as a Laurent polynomial (exponents 0..deg).
inline LaurentPoly to_laurent(const IntPoly& p) {
    LaurentPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        out.add_term(i, Rational(p.coefficient(i)));
    }
    return out;
}

} // namespace qcurv
