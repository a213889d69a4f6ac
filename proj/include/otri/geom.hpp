#pragma once

// Exact integer predicates and canonical line representation.
//
// All coordinates are arbitrary-precision signed integers; every predicate is
// exact. Small inputs (the common case) take an int64/__int128 fast path, large
// ones fall back to full multiprecision arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace otri {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Point {
    Int x;
    Int y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

namespace detail {

// A cpp_int fits the fast path if it occupies one limb whose magnitude is at
// most `bound`. Differences of two such values then fit int64, and products of
// differences fit __int128.
inline bool fits(const Int& v, std::uint64_t bound) {
    return v.backend().size() == 1 && v.backend().limbs()[0] <= bound;
}

inline std::int64_t to_i64(const Int& v) {
    const auto m = static_cast<std::int64_t>(v.backend().limbs()[0]);
    return v.backend().sign() ? -m : m;
}

inline constexpr std::uint64_t k_fast_bound = std::uint64_t{1} << 61;   // orient / containment
inline constexpr std::uint64_t k_canon_bound = std::uint64_t{1} << 30;  // canonical_line in int64

inline int sign_of(__int128 v) { return (v > 0) - (v < 0); }

}  // namespace detail

// Sign of (qx-px)(ry-py) - (qy-py)(rx-px): +1 counterclockwise, -1 clockwise,
// 0 iff p, q, r are collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    using namespace detail;
    if (fits(p.x, k_fast_bound) && fits(p.y, k_fast_bound) && fits(q.x, k_fast_bound) &&
        fits(q.y, k_fast_bound) && fits(r.x, k_fast_bound) && fits(r.y, k_fast_bound)) {
        const std::int64_t px = to_i64(p.x), py = to_i64(p.y);
        const std::int64_t qx = to_i64(q.x), qy = to_i64(q.y);
        const std::int64_t rx = to_i64(r.x), ry = to_i64(r.y);
        const __int128 det = static_cast<__int128>(qx - px) * (ry - py) -
                             static_cast<__int128>(qy - py) * (rx - px);
        return sign_of(det);
    }
    const Int det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det.sign();
}

// The unique normalized representation of a line {(x,y) : a*x + b*y + c = 0}:
//   - (a,b) != (0,0)
//   - gcd(|a|,|b|,|c|) = 1  (gcd with 0 acts as identity)
//   - a > 0, or a = 0 and b > 0
// Any two distinct point pairs spanning the same geometric line produce
// bit-identical triples, so CanonicalLine doubles as a grouping key.
struct CanonicalLine {
    Int a;
    Int b;
    Int c;

    bool operator==(const CanonicalLine& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const CanonicalLine& o) const { return !(*this == o); }
    bool operator<(const CanonicalLine& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

inline CanonicalLine canonical_line(const Point& p, const Point& q) {
    using namespace detail;
    if (p == q) throw std::invalid_argument("canonical_line: degenerate pair (equal points)");

    if (fits(p.x, k_canon_bound) && fits(p.y, k_canon_bound) && fits(q.x, k_canon_bound) &&
        fits(q.y, k_canon_bound)) {
        const std::int64_t px = to_i64(p.x), py = to_i64(p.y);
        const std::int64_t qx = to_i64(q.x), qy = to_i64(q.y);
        std::int64_t a = qy - py;
        std::int64_t b = px - qx;
        std::int64_t c = -(a * px + b * py);
        std::int64_t g = std::gcd(std::gcd(a, b), c);
        a /= g;
        b /= g;
        c /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
            c = -c;
        }
        return CanonicalLine{Int(a), Int(b), Int(c)};
    }

    Int a = q.y - p.y;
    Int b = p.x - q.x;
    Int c = -(a * p.x + b * p.y);
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return CanonicalLine{std::move(a), std::move(b), std::move(c)};
}

// True iff a*px + b*py + c = 0.
inline bool line_contains(const CanonicalLine& l, const Point& p) {
    using namespace detail;
    if (fits(l.a, k_fast_bound) && fits(l.b, k_fast_bound) && fits(l.c, k_fast_bound) &&
        fits(p.x, k_fast_bound) && fits(p.y, k_fast_bound)) {
        const __int128 s = static_cast<__int128>(to_i64(l.a)) * to_i64(p.x) +
                           static_cast<__int128>(to_i64(l.b)) * to_i64(p.y) + to_i64(l.c);
        return s == 0;
    }
    return l.a * p.x + l.b * p.y + l.c == 0;
}

// A deduplicated, index-addressable point set. Indices 0..n-1 are the stable
// identifiers used by every downstream structure.
class PointSet {
  public:
    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

  private:
    friend PointSet make_point_set(std::vector<Point> points);
    explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}

    std::vector<Point> pts_;
};

inline PointSet make_point_set(std::vector<Point> points) {
    if (points.empty()) throw std::invalid_argument("make_point_set: empty set");

    std::vector<std::uint32_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        return points[i].y < points[j].y;
    });
    for (std::size_t s = 1; s < order.size(); ++s) {
        if (points[order[s - 1]] == points[order[s]]) {
            const auto lo = std::min(order[s - 1], order[s]);
            const auto hi = std::max(order[s - 1], order[s]);
            throw std::invalid_argument("make_point_set: duplicate point at indices " +
                                        std::to_string(lo) + "," + std::to_string(hi));
        }
    }
    return PointSet(std::move(points));
}

}  // namespace otri
