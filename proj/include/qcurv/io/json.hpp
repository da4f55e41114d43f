#pragma once

// JSON forms of the library's values (nlohmann::json, sorted keys).
//
//   Rational       "p/q", or "p" when q = 1
//   LaurentPoly    {"<exponent>": "<rational>", ...}
//   IntPoly        [c0, c1, ...] ascending; a coefficient outside int64 is a decimal string
//   InstantReport  {"lambda", "interval": [lo, hi], "poly", "transversal", "scalar_distinct"}

#include "../algebra/int_poly.hpp"
#include "../algebra/laurent.hpp"
#include "../algebra/rational.hpp"
#include "../algebra/root_isolation.hpp"
#include "../asymptotics.hpp"
#include "../bifurcation.hpp"
#include "../catalog.hpp"
#include "../geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace qcurv {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

inline void from_json(const nlohmann::json& j, Rational& r) { r = parse_rational(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const LaurentPoly& p) {
    j = nlohmann::json::object();
    for (const auto& [k, c] : p.terms()) {
        j[std::to_string(k)] = c.str();
    }
}

inline void from_json(const nlohmann::json& j, LaurentPoly& p) {
    p = LaurentPoly();
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) {
            throw std::invalid_argument("malformed exponent key '" + key + "'");
        }
        p.add_term(k, parse_rational(value.get<std::string>()));
    }
}

inline void to_json(nlohmann::json& j, const IntPoly& p) {
    j = nlohmann::json::array();
    const Integer lo = std::numeric_limits<std::int64_t>::min();
    const Integer hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : p.coefficients()) {
        if (c >= lo && c <= hi) {
            j.push_back(c.convert_to<std::int64_t>());
        } else {
            j.push_back(c.str());
        }
    }
}

inline void to_json(nlohmann::json& j, const SubmersionData& d) {
    j = {{"n", d.n}, {"l", d.l}, {"zeta", d.zeta}, {"eta", d.eta}, {"lambda_F", d.lambda_F}, {"lambda_B", d.lambda_B}};
}

inline void to_json(nlohmann::json& j, const CurvaturePackage& p) {
    j = {{"kappa", p.kappa},
         {"ric_vertical", p.ric_vertical},
         {"ric_vertical_reference", p.ric_vertical_reference},
         {"ric_horizontal", p.ric_horizontal},
         {"ric_norm_sq", p.ric_norm_sq},
         {"scal", p.scal},
         {"q_curv", p.q_curv},
         {"alpha", p.alpha},
         {"beta", p.beta}};
}

/// Exact values of every package field at t.
inline nlohmann::json evaluate_package(const CurvaturePackage& p, const Rational& t) {
    return {{"t", t},
            {"kappa", eval(p.kappa, t)},
            {"ric_vertical", eval(p.ric_vertical, t)},
            {"ric_vertical_reference", eval(p.ric_vertical_reference, t)},
            {"ric_horizontal", eval(p.ric_horizontal, t)},
            {"ric_norm_sq", eval(p.ric_norm_sq, t)},
            {"scal", eval(p.scal, t)},
            {"q_curv", eval(p.q_curv, t)},
            {"alpha", eval(p.alpha, t)},
            {"beta", eval(p.beta, t)}};
}

inline void to_json(nlohmann::json& j, const InstantReport& r) {
    j = {{"lambda", r.lambda},
         {"interval", nlohmann::json::array({r.root.lo(), r.root.hi()})},
         {"poly", r.root.poly()},
         {"transversal", r.transversal},
         {"scalar_distinct", r.scalar_distinct}};
}

inline void to_json(nlohmann::json& j, const SideVerdict& v) {
    j = {{"result", v.infinite}, {"method", to_string(v.method)}};
}

inline void to_json(nlohmann::json& j, const AsymptoticVerdict& v) {
    j = {{"collapse", v.collapse}, {"expansion", v.expansion}};
}

inline void to_json(nlohmann::json& j, const TheoremARow& r) {
    j = {{"family", to_string(r.family.id)},
         {"q", r.family.q},
         {"collapse", r.verdict.collapse},
         {"expansion", r.verdict.expansion},
         {"expected_collapse", r.expected_collapse},
         {"expected_expansion", r.expected_expansion},
         {"matches", r.matches()}};
}

} // namespace qcurv
