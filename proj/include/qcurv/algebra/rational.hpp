#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact rationals.
 *
 * Thin value type over boost::multiprecision::cpp_rational. The backend keeps
 * every value reduced with a positive denominator, so the canonical string
 * form "p/q" ("p" when q = 1) is stable and usable as a serialization key.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcurv {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    using backend_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int v) : value_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(v) {}            // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}       // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        // normalize the sign first; the backend rejects 0/-k
        if (num == 0) {
            value_ = 0;
        } else if (den < 0) {
            value_ = backend_type(Integer(-num), Integer(-den));
        } else {
            value_ = backend_type(num, den);
        }
    }
    explicit Rational(backend_type v) : value_(std::move(v)) {}

    [[nodiscard]] Integer numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] Integer denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] int sign() const { return value_.sign(); }
    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }

    [[nodiscard]] const backend_type& backend() const { return value_; }

    [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }
    [[nodiscard]] long double to_long_double() const { return value_.convert_to<long double>(); }

    /// Canonical "p/q" form, "p" when the denominator is 1.
    [[nodiscard]] std::string str() const {
        std::string out = numerator().str();
        if (!is_integer()) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(backend_type(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    backend_type value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^k for k >= 0, or 1/r^|k| for k < 0 (r must then be nonzero).
inline Rational pow(const Rational& r, int k) {
    if (k < 0) {
        return Rational(1) / pow(r, -k);
    }
    Rational result(1);
    Rational base = r;
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1U) {
        if ((e & 1U) != 0U) {
            result *= base;
        }
        if (e > 1U) {
            base *= base;
        }
    }
    return result;
}

namespace detail {

inline bool is_digit_run(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace detail

/**
 * Parse "p", "-p", "p/q" or "-p/q" with decimal digits only. Decimal points,
 * exponents and whitespace are rejected so that no input is silently rounded.
 */
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!detail::is_digit_run(num) || !detail::is_digit_run(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    }
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "' (zero denominator)");
    }
    if (negative) {
        n = -n;
    }
    return Rational(n, d);
}

} // namespace qcurv

template <>
struct std::hash<qcurv::Rational> {
    std::size_t operator()(const qcurv::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
