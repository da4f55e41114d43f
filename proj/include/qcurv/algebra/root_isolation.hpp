#pragma once

/**
 * @file root_isolation.hpp
 * @brief Exact isolation of positive real roots and exact comparisons of
 *        the real algebraic numbers they define.
 *
 * Isolation runs Descartes' rule of signs on the squarefree part, bisecting
 * rational intervals until each holds exactly one root. No floating point is
 * involved anywhere in a decision.
 */

#include "int_poly.hpp"
#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcurv {

/**
 * A positive real algebraic number: the unique root of `poly` inside
 * (lo, hi), or exactly lo when lo == hi.
 *
 * The squarefree part of `poly` is carried along; for a non-degenerate box it
 * changes sign strictly between lo and hi, which is what refinement relies on.
 */
class RootBox {
public:
    RootBox(IntPoly poly, Rational lo, Rational hi)
        : RootBox(poly, squarefree_part(poly), std::move(lo), std::move(hi)) {}

    RootBox(IntPoly poly, IntPoly squarefree, Rational lo, Rational hi)
        : poly_(std::move(poly)), squarefree_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.sign() <= 0 || hi_ < lo_) {
            throw std::invalid_argument("root box needs 0 < lo <= hi");
        }
        if (is_exact()) {
            if (squarefree_.sign_at(lo_) != 0) {
                throw std::invalid_argument("degenerate root box endpoint is not a root");
            }
        } else if (squarefree_.sign_at(lo_) * squarefree_.sign_at(hi_) >= 0) {
            throw std::invalid_argument("root box does not bracket a sign change");
        }
    }

    [[nodiscard]] const IntPoly& poly() const { return poly_; }
    [[nodiscard]] const IntPoly& squarefree() const { return squarefree_; }
    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] bool is_exact() const { return lo_ == hi_; }

    /// A box of width <= `max_width` around the same root. Hitting the root
    /// exactly yields a width-0 box.
    [[nodiscard]] RootBox refine(const Rational& max_width) const {
        if (is_exact() || width() <= max_width) {
            return *this;
        }
        Rational lo = lo_;
        Rational hi = hi_;
        const int lo_sign = squarefree_.sign_at(lo);
        while (hi - lo > max_width) {
            Rational mid = (lo + hi) / Rational(2);
            const int s = squarefree_.sign_at(mid);
            if (s == 0) {
                lo = mid;
                hi = std::move(mid);
                break;
            }
            if (s == lo_sign) {
                lo = std::move(mid);
            } else {
                hi = std::move(mid);
            }
        }
        return RootBox(poly_, squarefree_, std::move(lo), std::move(hi), unchecked{});
    }

    /// Midpoint of a box refined to relative width ~1e-18; display only.
    [[nodiscard]] double approximate() const {
        const Rational scale = hi_ > Rational(1) ? hi_ : Rational(1);
        const RootBox fine = refine(scale / Rational(Integer(1000000000) * Integer(1000000000)));
        return ((fine.lo_ + fine.hi_) / Rational(2)).to_double();
    }

private:
    struct unchecked {};
    RootBox(IntPoly poly, IntPoly squarefree, Rational lo, Rational hi, unchecked)
        : poly_(std::move(poly)), squarefree_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    friend std::vector<RootBox> isolate_positive_roots(const IntPoly& q);

    IntPoly poly_;
    IntPoly squarefree_;
    Rational lo_;
    Rational hi_;
};

/// Boxes around every positive real root of q, sorted increasingly; each root appears once.
inline std::vector<RootBox> isolate_positive_roots(const IntPoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("isolate_positive_roots of the zero polynomial");
    }
    const IntPoly sqf = squarefree_part(q.without_zero_roots());
    std::vector<RootBox> boxes;
    if (sqf.degree() <= 0 || sqf.sign_variations() == 0) {
        return boxes;
    }

    // Cauchy bound: every root satisfies |r| < 1 + max |c_i / c_d|.
    Integer max_coeff = 0;
    for (int i = 0; i < sqf.degree(); ++i) {
        max_coeff = std::max(max_coeff, Integer(boost::multiprecision::abs(sqf.coefficient(i))));
    }
    const Integer lead = boost::multiprecision::abs(sqf.leading());
    const Rational bound = Rational(2) + Rational(Integer(max_coeff / lead));

    std::vector<std::pair<Rational, Rational>> work{{Rational(0), bound}};
    while (!work.empty()) {
        auto [a, b] = std::move(work.back());
        work.pop_back();
        const int variations = interval_transform(sqf, a, b).sign_variations();
        if (variations == 0) {
            continue;
        }
        if (variations == 1 && a.sign() > 0 && sqf.sign_at(a) != 0 && sqf.sign_at(b) != 0) {
            boxes.push_back(RootBox(q, sqf, std::move(a), std::move(b), RootBox::unchecked{}));
            continue;
        }
        Rational mid = (a + b) / Rational(2);
        if (sqf.sign_at(mid) == 0) {
            boxes.push_back(RootBox(q, sqf, mid, mid, RootBox::unchecked{}));
        }
        work.emplace_back(mid, std::move(b));
        work.emplace_back(std::move(a), std::move(mid));
    }
    std::sort(boxes.begin(), boxes.end(), [](const RootBox& x, const RootBox& y) { return x.lo() < y.lo(); });
    return boxes;
}

/// Sign of (root - x), exact.
inline int compare(const RootBox& r, const Rational& x) {
    if (r.is_exact()) {
        return r.lo() < x ? -1 : (r.lo() > x ? 1 : 0);
    }
    if (x <= r.lo()) {
        return 1;
    }
    if (x >= r.hi()) {
        return -1;
    }
    const int s = r.squarefree().sign_at(x);
    if (s == 0) {
        return 0;
    }
    return s == r.squarefree().sign_at(r.lo()) ? 1 : -1;
}

/// True iff the boxed root is also a root of `other` (exact, via gcd).
inline bool has_common_root(const RootBox& r, const IntPoly& other) {
    if (other.is_zero()) {
        return true;
    }
    const IntPoly g = gcd(r.squarefree(), other);
    if (g.degree() <= 0) {
        return false;
    }
    if (r.is_exact()) {
        return g.sign_at(r.lo()) == 0;
    }
    // g divides the squarefree part, so it has no root at lo or hi and at most
    // one (simple) root inside: a sign change decides.
    return g.sign_at(r.lo()) * g.sign_at(r.hi()) < 0;
}

/// True iff the boxed root is a simple root of the box's defining polynomial.
inline bool root_is_simple(const RootBox& r) {
    const IntPoly g = gcd(r.poly(), derivative(r.poly()));
    if (g.degree() <= 0) {
        return true;
    }
    return !has_common_root(r, g);
}

/// Sign of (root_a - root_b), exact.
inline int compare(const RootBox& a, const RootBox& b) {
    if (a.is_exact()) {
        return -compare(b, a.lo());
    }
    if (b.is_exact()) {
        return compare(a, b.lo());
    }
    const IntPoly g = gcd(a.squarefree(), b.squarefree());
    if (g.degree() >= 1 && has_common_root(a, g) && has_common_root(b, g)) {
        // Both roots are roots of g, and each box holds exactly one root of g.
        // They coincide iff g changes sign on the intersection of the boxes.
        const Rational lo = std::max(a.lo(), b.lo());
        const Rational hi = std::min(a.hi(), b.hi());
        if (lo < hi && g.sign_at(lo) * g.sign_at(hi) < 0) {
            return 0;
        }
    }
    RootBox x = a;
    RootBox y = b;
    while (!(x.hi() <= y.lo() || y.hi() <= x.lo())) {
        x = x.refine(x.width() / Rational(2));
        y = y.refine(y.width() / Rational(2));
        if (x.is_exact() || y.is_exact()) {
            return compare(x, y);
        }
    }
    return x.hi() <= y.lo() ? -1 : 1;
}

} // namespace qcurv
