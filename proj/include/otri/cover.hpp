#pragma once

// Exact minimum line cover for small k. Branching: once at most k uncovered
// points remain, each can take its own line; otherwise any valid cover can be
// rearranged so that the line through the first uncovered point p also passes
// through another uncovered point (swap p's line for line(p,q) -- the rest of
// the cover is untouched), so branching over line(p, q) for every uncovered q
// is complete. States with |uncovered| > k * max_collinear are infeasible and
// pruned, since no line covers more than max_collinear points.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "otri/incidence.hpp"

namespace otri {

namespace detail {

inline bool cover_search(const PointSet& X, const std::vector<std::uint32_t>& uncovered, int k,
                         std::uint32_t max_line, std::vector<CanonicalLine>& out) {
    if (uncovered.empty()) return true;
    if (k <= 0) return false;
    if (uncovered.size() <= static_cast<std::size_t>(k)) {
        for (std::uint32_t p : uncovered)  // one (vertical) line per leftover point
            out.push_back(CanonicalLine{Int(1), Int(0), -X[p].x});
        return true;
    }
    if (uncovered.size() > static_cast<std::uint64_t>(k) * max_line) return false;

    const std::uint32_t p = uncovered.front();
    std::set<CanonicalLine> tried;
    for (std::size_t qi = 1; qi < uncovered.size(); ++qi) {
        CanonicalLine line = canonical_line(X[p], X[uncovered[qi]]);
        if (!tried.insert(line).second) continue;

        std::vector<std::uint32_t> rest;
        rest.reserve(uncovered.size());
        for (std::uint32_t u : uncovered)
            if (!line_contains(line, X[u])) rest.push_back(u);

        out.push_back(line);
        if (cover_search(X, rest, k - 1, max_line, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace detail

// A witness of at most k lines jointly covering X, or nullopt if impossible.
// Capped at k <= 6; this is a hypothesis checker, not a general solver.
inline std::optional<std::vector<CanonicalLine>> coverable(const PointSet& X, int k) {
    if (k < 0) throw std::invalid_argument("coverable: k >= 0 violated");
    if (k > 6) throw std::invalid_argument("coverable: capped at k <= 6");
    if (k == 0) return std::nullopt;  // X is never empty

    const std::uint32_t max_line =
        X.size() >= 2 ? build_incidence_map(X).max_collinear() : 1;

    std::vector<std::uint32_t> all(X.size());
    for (std::uint32_t i = 0; i < X.size(); ++i) all[i] = i;

    std::vector<CanonicalLine> witness;
    if (detail::cover_search(X, all, k, std::max<std::uint32_t>(max_line, 1), witness))
        return witness;
    return std::nullopt;
}

// Smallest k <= k_max with a cover, or nullopt.
inline std::optional<int> min_cover_size(const PointSet& X, int k_max) {
    if (k_max > 6) throw std::invalid_argument("min_cover_size: capped at k_max <= 6");
    for (int k = 1; k <= k_max; ++k)
        if (coverable(X, k)) return k;
    return std::nullopt;
}

}  // namespace otri
