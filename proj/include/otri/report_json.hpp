#pragma once

// Stable JSON encodings for the structured reports. Rationals serialize as
// exact fraction strings "p/q".

#include <json.hpp>

#include <map>
#include <string>

#include "otri/incidence.hpp"
#include "otri/triangles.hpp"
#include "otri/verify.hpp"

namespace otri {

inline std::string fraction_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string line_str(const CanonicalLine& l) {
    return l.a.str() + " " + l.b.str() + " " + l.c.str();
}

inline nlohmann::json to_json(const CheckReport& r) {
    return nlohmann::json{
        {"name", r.name},
        {"hypothesis_met", r.hypothesis_met},
        {"lhs", fraction_str(r.lhs)},
        {"rhs", fraction_str(r.rhs)},
        {"satisfied", r.satisfied ? nlohmann::json(*r.satisfied) : nlohmann::json(nullptr)},
        {"witnesses", r.witnesses},
    };
}

inline nlohmann::json to_json(const Lemma33Report& r) {
    nlohmann::json j{
        {"name", "lemma_3_3"},
        {"hypothesis_met", r.hypothesis_met},
        {"satisfied", r.satisfied ? nlohmann::json(*r.satisfied) : nlohmann::json(nullptr)},
    };
    if (!r.hypothesis_met) {
        j["reason"] = r.reason;
        return j;
    }
    j["line"] = line_str(r.line);
    j["p"] = r.p;
    j["q"] = r.q;
    j["L_size"] = r.L_size;
    j["X_p"] = r.X_p;
    j["X_q"] = r.X_q;
    j["good_r"] = r.good_r;
    j["threshold"] = fraction_str(r.threshold);
    return j;
}

inline nlohmann::json to_json(const CaseIIReport& r) {
    nlohmann::json j{
        {"name", "case_ii"},
        {"hypothesis_met", r.hypothesis_met},
        {"satisfied", r.satisfied ? nlohmann::json(*r.satisfied) : nlohmann::json(nullptr)},
    };
    if (!r.hypothesis_met) {
        j["reason"] = r.reason;
        return j;
    }
    j["x_prime"] = r.x_prime;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& pp : r.per_p)
        per.push_back(nlohmann::json{{"p", pp.p},
                                     {"lines_through", pp.lines_through},
                                     {"ordinary_lines", pp.ordinary_lines},
                                     {"x_p_size", pp.x_p_size},
                                     {"y_p", pp.y_p}});
    j["per_p"] = std::move(per);
    return j;
}

inline nlohmann::json to_json(const TriangleCount& tc) {
    return nlohmann::json{
        {"tau", tc.tau},
        {"count", tc.count},
        {"graph_triangles", tc.graph_triangles},
        {"degenerate", tc.degenerate},
    };
}

inline nlohmann::json histogram_json(const IncidenceMap& map) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [count, lines] : map.incidence_histogram())
        h[std::to_string(count)] = lines;
    return h;
}

}  // namespace otri
