#pragma once

// Shared instances and brute-force helpers for the test suites.

#include <cstdint>
#include <set>
#include <vector>

#include "otri/geom.hpp"
#include "otri/rng.hpp"

namespace fixtures {

using otri::Int;
using otri::Point;
using otri::PointSet;

inline PointSet unit_triangle() {
    return otri::make_point_set({Point{0, 0}, Point{1, 0}, Point{0, 1}});
}

inline PointSet grid3() {
    std::vector<Point> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) pts.push_back(Point{x, y});
    return otri::make_point_set(std::move(pts));
}

inline PointSet collinear(int n) {
    std::vector<Point> pts;
    for (int x = 0; x < n; ++x) pts.push_back(Point{x, 0});
    return otri::make_point_set(std::move(pts));
}

// 11 points on two horizontal rails plus one apex; spans exactly 21 ordinary
// triangles (one vertex per level).
inline PointSet two_rail_11() {
    std::vector<Point> pts;
    for (int x = 0; x < 7; ++x) pts.push_back(Point{x, 0});
    for (int x = 0; x < 3; ++x) pts.push_back(Point{x, 1});
    pts.push_back(Point{7, 3});
    return otri::make_point_set(std::move(pts));
}

// Small random set with many accidental collinearities: coordinates in a
// narrow range, duplicates rejected.
inline PointSet random_messy_set(std::uint64_t seed, int n, int range) {
    otri::SplitMix64 rng(seed);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point cand{static_cast<std::int64_t>(rng.below(range)),
                   static_cast<std::int64_t>(rng.below(range))};
        bool dup = false;
        for (const auto& p : pts) dup = dup || p == cand;
        if (!dup) pts.push_back(std::move(cand));
    }
    return otri::make_point_set(std::move(pts));
}

// Independent O(n^3) incidence construction: for every pair, scan all points.
// Returns the set of member-index lists, one per distinct line.
inline std::set<std::vector<std::uint32_t>> brute_lines(const PointSet& X) {
    std::set<std::vector<std::uint32_t>> out;
    const std::uint32_t n = static_cast<std::uint32_t>(X.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::vector<std::uint32_t> members;
            for (std::uint32_t s = 0; s < n; ++s)
                if (otri::orient(X[i], X[j], X[s]) == 0) members.push_back(s);
            out.insert(std::move(members));
        }
    return out;
}

// Number of collinear triples, by direct orientation tests.
inline std::uint64_t collinear_triples(const PointSet& X) {
    std::uint64_t c = 0;
    for (std::uint32_t i = 0; i < X.size(); ++i)
        for (std::uint32_t j = i + 1; j < X.size(); ++j)
            for (std::uint32_t k = j + 1; k < X.size(); ++k)
                if (otri::orient(X[i], X[j], X[k]) == 0) ++c;
    return c;
}

}  // namespace fixtures
