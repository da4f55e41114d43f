#pragma once

/**
 * @file catalog.hpp
 * @brief The four Hopf bundles: their submersion data, closed-form Berger
 *        metric curvature, base spectra and the table of asymptotic verdicts.
 *
 * The closed forms below are transcribed per family with q substituted and
 * are deliberately not derived from geometry.hpp, so that they can serve as
 * an independent check of curvature_package().
 */

#include "algebra/laurent.hpp"
#include "algebra/rational.hpp"
#include "asymptotics.hpp"
#include "bifurcation.hpp"
#include "geometry.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcurv {

enum class HopfId { i, ii, iii, iv };

inline constexpr std::array<HopfId, 4> all_hopf_ids{HopfId::i, HopfId::ii, HopfId::iii, HopfId::iv};

inline const char* to_string(HopfId id) {
    switch (id) {
    case HopfId::i: return "i";
    case HopfId::ii: return "ii";
    case HopfId::iii: return "iii";
    case HopfId::iv: return "iv";
    }
    return "?";
}

inline HopfId parse_hopf_id(std::string_view s) {
    if (s == "i") return HopfId::i;
    if (s == "ii") return HopfId::ii;
    if (s == "iii") return HopfId::iii;
    if (s == "iv") return HopfId::iv;
    throw std::invalid_argument("unknown Hopf family '" + std::string(s) + "' (expected i, ii, iii or iv)");
}

/// Smallest admissible q: family (i) needs q >= 2 to reach dimension 5.
inline int min_q(HopfId id) { return id == HopfId::i ? 2 : 1; }

/// Bundle F -> M -> B of the family, as plain text.
inline const char* bundle_name(HopfId id) {
    switch (id) {
    case HopfId::i: return "S^1 -> S^(2q+1) -> CP^q";
    case HopfId::ii: return "S^3 -> S^(4q+3) -> HP^q";
    case HopfId::iii: return "CP^1 -> CP^(2q+1) -> HP^q";
    case HopfId::iv: return "S^7 -> S^15 -> S^8(1/2)";
    }
    return "?";
}

struct HopfFamily {
    HopfId id = HopfId::iv;
    int q = 1;  ///< always 1 for (iv)

    HopfFamily(HopfId id_, int q_ = 1) : id(id_), q(id_ == HopfId::iv ? 1 : q_) {  // NOLINT(google-explicit-constructor)
        if (q < min_q(id)) {
            throw std::domain_error(std::string("Hopf family (") + to_string(id) + ") requires q >= " +
                                    std::to_string(min_q(id)));
        }
    }

    [[nodiscard]] std::string label() const {
        return id == HopfId::iv ? std::string("(iv)") : "(" + std::string(to_string(id)) + ") q=" + std::to_string(q);
    }

    friend bool operator==(const HopfFamily&, const HopfFamily&) = default;
};

/// (n, l, zeta, eta, Lambda_F, Lambda_B) for the family.
inline SubmersionData hopf_data(const HopfFamily& f) {
    const int q = f.q;
    switch (f.id) {
    case HopfId::i: return {2 * q + 1, 1, 1, 2 * q, 0, 2 * q + 2};
    case HopfId::ii: return {4 * q + 3, 3, 3, 4 * q, 2, 4 * q + 8};
    case HopfId::iii: return {4 * q + 2, 2, 2, 4 * q, 4, 4 * q + 8};
    case HopfId::iv: return {15, 7, 7, 8, 6, 28};
    }
    throw std::logic_error("unreachable Hopf family");
}

/// Dimension of the base B.
inline int base_dimension(const HopfFamily& f) {
    const SubmersionData d = hopf_data(f);
    return d.n - d.l;
}

/// Ricci eigenvalue of g_t on a g_t-unit vector, with its multiplicity.
struct RicciEigenvalue {
    LaurentPoly value;
    int multiplicity = 0;
};

/// Closed-form Berger metric data for one family member.
struct BergerClosedForm {
    RicciEigenvalue vertical;
    RicciEigenvalue horizontal;
    LaurentPoly ric_norm_sq;
    LaurentPoly scal;
    LaurentPoly q_curv;
};

inline BergerClosedForm berger_closed_form(const HopfFamily& f) {
    using LP = LaurentPoly;
    const Rational q(f.q);
    const Rational q2 = q * q;
    const Rational q3 = q2 * q;
    const Rational q4 = q3 * q;
    const LP t = LP::t();
    const LP t_inv = LP::monomial(Rational(1), -1);
    const LP t2 = LP::monomial(Rational(1), 2);
    const LP t_inv2 = LP::monomial(Rational(1), -2);

    BergerClosedForm out;
    switch (f.id) {
    case HopfId::i: {
        const Rational den = (Rational(2) * q - 1) * (Rational(2) * q - 1);
        out.vertical = {Rational(2) * q * t, 1};
        out.horizontal = {LP(Rational(2) * q + 2) - Rational(2) * t, 2 * f.q};
        out.ric_norm_sq = square(Rational(2) * q * t) + Rational(2) * q * square(LP(Rational(2) * q + 2) - Rational(2) * t);
        out.scal = Rational(2) * q * (LP(Rational(2) * q + 2) - t);
        const Rational c0 = Rational(2) * q2 + Rational(3) * q + 1;
        out.q_curv = (Rational(8) * q3 - Rational(68) * q2 - Rational(106) * q - 3) / (Rational(8) * den) * t2 -
                     (Rational(8) * q4 + Rational(4) * q3 - Rational(46) * q2 - Rational(45) * q - 3) /
                         (Rational(2) * den) * t +
                     LP(c0 * c0 * (Rational(2) * q - 3) / (Rational(2) * den));
        break;
    }
    case HopfId::ii: {
        const Rational den = (Rational(4) * q + 1) * (Rational(4) * q + 1) * (Rational(2) * q + 1) * (Rational(2) * q + 1);
        const Rational q5 = q4 * q;
        const Rational q6 = q5 * q;
        const Rational q7 = q6 * q;
        out.vertical = {Rational(2) * t_inv + Rational(4) * q * t, 3};
        out.horizontal = {LP(Rational(4) * q + 8) - Rational(6) * t, 4 * f.q};
        out.ric_norm_sq = Rational(12) * square(t_inv + Rational(2) * q * t) +
                          Rational(16) * q * square(LP(Rational(2) * q + 4) - Rational(3) * t);
        out.scal = Rational(2) * (Rational(3) * t_inv + LP(Rational(8) * q * (q + 2)) - Rational(6) * q * t);
        const Rational a = Rational(4) * q - 1;
        out.q_curv =
            Rational(3) * a * a * (Rational(12) * q + 5) / (Rational(8) * den) * t_inv2 +
            (Rational(64) * q3 + Rational(80) * q2 + Rational(76) * q + 23) * (Rational(6) * q2 + Rational(12) * q) / den *
                t_inv +
            LP((Rational(1024) * q7 + Rational(5376) * q6 + Rational(9408) * q5 + Rational(4656) * q4 -
                Rational(3600) * q3 - Rational(5100) * q2 - Rational(1423) * q) /
               (Rational(2) * den)) -
            (Rational(64) * q4 + Rational(80) * q3 - Rational(52) * q2 - Rational(105) * q - 32) *
                (Rational(12) * q2 + Rational(24) * q) / den * t +
            (Rational(48) * q3 - Rational(40) * q2 - Rational(169) * q - 64) * (Rational(12) * q2 + Rational(9) * q) /
                (Rational(2) * den) * t2;
        break;
    }
    case HopfId::iii: {
        const Rational s = (Rational(4) * q + 1) * (Rational(4) * q + 1);
        const Rational qs = q * s;
        const Rational q5 = q4 * q;
        const Rational q6 = q5 * q;
        out.vertical = {Rational(4) * t_inv + Rational(4) * q * t, 2};
        out.horizontal = {LP(Rational(4) * q + 8) - Rational(4) * t, 4 * f.q};
        out.ric_norm_sq = Rational(32) * t_inv2 + LP(Rational(64) * q * (q2 + Rational(4) * q + 5)) -
                          Rational(128) * (q2 + Rational(2) * q) * t + Rational(32) * q * (q + 2) * t2;
        out.scal = Rational(2) * (Rational(4) * t_inv + Rational(4) * q * t) +
                   Rational(4) * q * (LP(Rational(4) * q + 8) - Rational(4) * t);
        const Rational p4 = Rational(8) * q4 + Rational(20) * q3 + Rational(14) * q2 + Rational(13) * q + 2;
        out.q_curv =
            Rational(8) * (Rational(4) * q2 - Rational(6) * q - 1) / qs * t_inv2 + Rational(16) * p4 / qs * t_inv +
            LP(Rational(8) *
               (Rational(16) * q6 + Rational(72) * q5 + Rational(92) * q4 + Rational(2) * q3 - Rational(61) * q2 -
                Rational(42) * q - 6) /
               qs) +
            Rational(16) * (Rational(1) - p4 / s + Rational(2) / q) * t -
            Rational(4) * (Rational(1) - (Rational(8) * q3 + Rational(4) * q2 + Rational(6) * q + 1) / s + Rational(2) / q) *
                t2;
        break;
    }
    case HopfId::iv:
        out.vertical = {Rational(6) * t_inv + Rational(8) * t, 7};
        out.horizontal = {LP(28) - Rational(14) * t, 8};
        out.ric_norm_sq = Rational(252) * t_inv2 + LP(6944) - Rational(6272) * t + Rational(2016) * t2;
        out.scal = Rational(42) * t_inv - Rational(56) * t + LP(224);
        out.q_curv = Rational(20259, 1352) * t_inv2 + Rational(32388, 169) * t_inv + LP(Rational(64383, 169)) -
                     Rational(30640, 169) * t + Rational(1366, 169) * t2;
        break;
    }
    return out;
}

/// Closed-form Q-curvature of the Berger metric g_t.
inline LaurentPoly appendix_q_poly(const HopfFamily& f) { return berger_closed_form(f).q_curv; }

/**
 * Base Laplacian spectrum in the normalization Ric_B = Lambda_B g_B:
 * CP^q gives 4k(k+q), HP^q gives 4k(k+2q+1), S^8(1/2) gives 4k(k+7).
 */
inline Spectrum base_spectrum(const HopfFamily& f) {
    int shift = 0;
    switch (f.id) {
    case HopfId::i: shift = f.q; break;
    case HopfId::ii:
    case HopfId::iii: shift = 2 * f.q + 1; break;
    case HopfId::iv: shift = 7; break;
    }
    return Spectrum([shift](int k) { return Rational(4 * static_cast<long long>(k) * (k + shift)); });
}

struct TheoremARow {
    HopfFamily family;
    AsymptoticVerdict verdict;
    bool expected_collapse = false;
    bool expected_expansion = false;

    [[nodiscard]] bool collapse() const { return verdict.collapse.infinite; }
    [[nodiscard]] bool expansion() const { return verdict.expansion.infinite; }
    [[nodiscard]] bool matches() const {
        return collapse() == expected_collapse && expansion() == expected_expansion;
    }
};

/// Reference thresholds: (i) never / q >= 6, (ii) q >= 1 / q >= 2, (iii) q >= 2 / q >= 3, (iv) yes / yes.
inline std::pair<bool, bool> expected_theorem_a(const HopfFamily& f) {
    switch (f.id) {
    case HopfId::i: return {false, f.q >= 6};
    case HopfId::ii: return {f.q >= 1, f.q >= 2};
    case HopfId::iii: return {f.q >= 2, f.q >= 3};
    case HopfId::iv: return {true, true};
    }
    return {false, false};
}

inline TheoremARow theorem_a_row(const HopfFamily& f) {
    const auto [collapse, expansion] = expected_theorem_a(f);
    return {f, classify(hopf_data(f)), collapse, expansion};
}

/// Rows for (i) 2..q_max, (ii) and (iii) 1..q_max, then (iv).
inline std::vector<TheoremARow> theorem_a_table(int q_max) {
    if (q_max < 1) {
        throw std::domain_error("theorem_a_table requires q_max >= 1");
    }
    std::vector<TheoremARow> rows;
    for (HopfId id : {HopfId::i, HopfId::ii, HopfId::iii}) {
        for (int q = min_q(id); q <= q_max; ++q) {
            rows.push_back(theorem_a_row(HopfFamily(id, q)));
        }
    }
    rows.push_back(theorem_a_row(HopfFamily(HopfId::iv)));
    return rows;
}

} // namespace qcurv
