#pragma once

// Plain-text renderings of the asymptotic bifurcation table.

#include "../catalog.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qcurv {

/**
 * Summarize one column for a family: "no", "yes", "if q >= k", or an explicit
 * list when the q's with a positive verdict do not form a tail.
 */
inline std::string threshold_summary(const std::vector<std::pair<int, bool>>& by_q, bool parameterless) {
    if (parameterless) {
        return by_q.front().second ? "yes" : "no";
    }
    std::vector<int> yes;
    for (const auto& [q, v] : by_q) {
        if (v) {
            yes.push_back(q);
        }
    }
    if (yes.empty()) {
        return "no";
    }
    const int first = yes.front();
    bool tail = true;
    for (const auto& [q, v] : by_q) {
        if ((q >= first) != v) {
            tail = false;
        }
    }
    if (tail) {
        return "if q >= " + std::to_string(first);
    }
    std::string out = "q in {";
    for (std::size_t i = 0; i < yes.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(yes[i]);
    }
    return out + "}";
}

/// Summary table (one line per family) followed by the per-q detail.
inline std::string theorem_a_markdown(const std::vector<TheoremARow>& rows) {
    std::map<HopfId, std::vector<std::pair<int, bool>>> collapse;
    std::map<HopfId, std::vector<std::pair<int, bool>>> expansion;
    for (const auto& r : rows) {
        collapse[r.family.id].emplace_back(r.family.q, r.collapse());
        expansion[r.family.id].emplace_back(r.family.q, r.expansion());
    }

    std::ostringstream os;
    os << "| Hopf bundle | Infinitely many bifurcations as t -> 0 | Infinitely many bifurcations as t -> +inf |\n";
    os << "|---|---|---|\n";
    for (HopfId id : all_hopf_ids) {
        if (!collapse.contains(id)) {
            continue;
        }
        const bool single = id == HopfId::iv;
        os << "| (" << to_string(id) << ") " << bundle_name(id) << " | " << threshold_summary(collapse[id], single)
           << " | " << threshold_summary(expansion[id], single) << " |\n";
    }

    os << "\n| family | q | n | l | t -> 0 | method | t -> +inf | method | expected | match |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        const SubmersionData d = hopf_data(r.family);
        os << "| (" << to_string(r.family.id) << ") | " << (r.family.id == HopfId::iv ? "-" : std::to_string(r.family.q))
           << " | " << d.n << " | " << d.l << " | " << (r.collapse() ? "yes" : "no") << " | "
           << to_string(r.verdict.collapse.method) << " | " << (r.expansion() ? "yes" : "no") << " | "
           << to_string(r.verdict.expansion.method) << " | " << (r.expected_collapse ? "yes" : "no") << "/"
           << (r.expected_expansion ? "yes" : "no") << " | " << (r.matches() ? "ok" : "MISMATCH") << " |\n";
    }
    return os.str();
}

} // namespace qcurv
