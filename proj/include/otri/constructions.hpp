#pragma once

// Deterministic, seedable generators for the extremal point configurations.
// "Arbitrary" positions on a shared line are laid out as x = 0,1,2,...;
// "generic" positions are rejection-sampled and re-checked with exact
// predicates, so no output ever relies on almost-sure genericity.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "otri/geom.hpp"
#include "otri/incidence.hpp"
#include "otri/rng.hpp"

namespace otri {

enum class ConstructionKind {
    prop_1_1,
    prop_3_1,
    three_parallel,
    general_position,
    bounded_collinear,
};

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::general_position;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t c = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;  // bounded_collinear: max collinear
    std::uint64_t seed = 0;
    std::int64_t bbox = 0;  // side of the sampling box; 0 = auto (max(4n^2, 1024))
};

namespace detail {

struct I64Pt {
    std::int64_t x;
    std::int64_t y;
    bool operator==(const I64Pt& o) const { return x == o.x && y == o.y; }
};

inline int orient64(const I64Pt& p, const I64Pt& q, const I64Pt& r) {
    const __int128 det = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                         static_cast<__int128>(q.y - p.y) * (r.x - p.x);
    return sign_of(det);
}

inline constexpr std::int64_t k_bbox_cap = std::int64_t{1} << 60;
inline constexpr int k_max_rejects = 200000;

[[noreturn]] inline void exhausted() {
    throw std::runtime_error("rejection sampling exhausted; bbox too small for a generic placement");
}

inline PointSet to_point_set(const std::vector<I64Pt>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(Point{Int(p.x), Int(p.y)});
    return make_point_set(std::move(out));
}

}  // namespace detail

// Sampling-box side actually used for a generator call: the request if
// positive, otherwise max(4n^2, 1024).
inline std::int64_t effective_bbox(std::int64_t n, std::int64_t requested) {
    if (requested > 0) {
        if (requested > detail::k_bbox_cap)
            throw std::invalid_argument("bbox too large (must be <= 2^60)");
        return requested;
    }
    const __int128 auto_box = static_cast<__int128>(4) * n * n;
    if (auto_box > detail::k_bbox_cap)
        throw std::invalid_argument("n too large for automatic bbox");
    return std::max<std::int64_t>(static_cast<std::int64_t>(auto_box), 1024);
}

// n points, no 3 collinear (verified against the incidence map before return).
inline PointSet gen_general_position(std::int64_t n, std::int64_t bbox, std::uint64_t seed) {
    using namespace detail;
    if (n < 1) throw std::invalid_argument("gen_general_position: n >= 1 violated");
    const std::int64_t box = effective_bbox(n, bbox);
    if (bbox > 0 && static_cast<__int128>(bbox) < static_cast<__int128>(4) * n * n)
        throw std::invalid_argument("gen_general_position: bbox side >= 4*n^2 violated");

    SplitMix64 rng(seed);
    std::vector<I64Pt> pts;
    pts.reserve(n);
    while (pts.size() < static_cast<std::size_t>(n)) {
        int attempts = 0;
        for (;;) {
            if (++attempts > k_max_rejects) exhausted();
            const I64Pt cand{static_cast<std::int64_t>(rng.below(box)),
                             static_cast<std::int64_t>(rng.below(box))};
            bool ok = true;
            for (const auto& p : pts)
                if (p == cand) {
                    ok = false;
                    break;
                }
            for (std::size_t b = 1; ok && b < pts.size(); ++b)
                for (std::size_t a = 0; a < b; ++a)
                    if (orient64(pts[a], pts[b], cand) == 0) {
                        ok = false;
                        break;
                    }
            if (ok) {
                pts.push_back(cand);
                break;
            }
        }
    }

    PointSet X = to_point_set(pts);
    if (n >= 2 && build_incidence_map(X).max_collinear() > 2)
        throw std::logic_error("gen_general_position: genericity verification failed");
    return X;
}

// n-2k+1 points on the x-axis plus 2k-1 generic points off it: no 3 off-axis
// points collinear, and no line spanned by two off-axis points meets the axis
// points. Axis points come first in the output.
inline PointSet gen_prop_1_1(std::int64_t n, std::int64_t k, std::int64_t c, std::uint64_t seed,
                             std::int64_t bbox = 0) {
    using namespace detail;
    if (k < 2) throw std::invalid_argument("gen_prop_1_1: k >= 2 violated");
    if (c < 2) throw std::invalid_argument("gen_prop_1_1: c >= 2 violated");
    if (n < 2 * k + c)
        throw std::invalid_argument("gen_prop_1_1: n >= 2k+c violated (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ", c=" + std::to_string(c) + ")");
    const std::int64_t box = effective_bbox(n, bbox);
    const std::int64_t n_axis = n - 2 * k + 1;

    std::vector<I64Pt> pts;
    pts.reserve(n);
    for (std::int64_t i = 0; i < n_axis; ++i) pts.push_back(I64Pt{i, 0});

    SplitMix64 rng(seed);
    std::vector<I64Pt> off;
    off.reserve(2 * k - 1);
    while (off.size() < static_cast<std::size_t>(2 * k - 1)) {
        int attempts = 0;
        for (;;) {
            if (++attempts > k_max_rejects) exhausted();
            const I64Pt cand{static_cast<std::int64_t>(rng.below(box)),
                             1 + static_cast<std::int64_t>(rng.below(box - 1))};
            bool ok = true;
            for (const auto& p : off)
                if (p == cand) {
                    ok = false;
                    break;
                }
            for (std::size_t b = 1; ok && b < off.size(); ++b)
                for (std::size_t a = 0; a < b; ++a)
                    if (orient64(off[a], off[b], cand) == 0) {
                        ok = false;
                        break;
                    }
            // no off-axis pair may span a line through an axis point
            for (std::size_t a = 0; ok && a < off.size(); ++a)
                for (std::int64_t i = 0; i < n_axis; ++i)
                    if (orient64(off[a], cand, I64Pt{i, 0}) == 0) {
                        ok = false;
                        break;
                    }
            if (ok) {
                off.push_back(cand);
                break;
            }
        }
    }
    pts.insert(pts.end(), off.begin(), off.end());
    return to_point_set(pts);
}

// Would the t <= 0.1*n guidance be violated? Callers surface this as a
// warning; the generator itself does not fail on it.
inline bool prop_3_1_t_exceeds_guidance(std::int64_t n, std::int64_t t) { return 10 * t > n; }

// n-t points on y=0, t-2k+3 on y=1, and 2k-3 generic points elsewhere; the
// only collinear triples lie inside one of the two horizontal lines.
inline PointSet gen_prop_3_1(std::int64_t n, std::int64_t k, std::int64_t c, std::int64_t t,
                             std::uint64_t seed, std::int64_t bbox = 0) {
    using namespace detail;
    if (k < 2) throw std::invalid_argument("gen_prop_3_1: k >= 2 violated");
    if (c < 2) throw std::invalid_argument("gen_prop_3_1: c >= 2 violated");
    if (t < 2 * k + c - 2)
        throw std::invalid_argument("gen_prop_3_1: t >= 2k+c-2 violated (t=" + std::to_string(t) +
                                    ", k=" + std::to_string(k) + ", c=" + std::to_string(c) + ")");
    if (n - t < 2) throw std::invalid_argument("gen_prop_3_1: n - t >= 2 violated");
    const std::int64_t box = effective_bbox(n, bbox);

    const std::int64_t n0 = n - t;
    const std::int64_t n1 = t - 2 * k + 3;
    const std::int64_t ny = 2 * k - 3;

    std::vector<I64Pt> pts;
    pts.reserve(n);
    for (std::int64_t i = 0; i < n0; ++i) pts.push_back(I64Pt{i, 0});
    for (std::int64_t i = 0; i < n1; ++i) pts.push_back(I64Pt{i, 1});

    SplitMix64 rng(seed);
    std::vector<I64Pt> extra;
    extra.reserve(ny);
    while (extra.size() < static_cast<std::size_t>(ny)) {
        int attempts = 0;
        for (;;) {
            if (++attempts > k_max_rejects) exhausted();
            const I64Pt cand{static_cast<std::int64_t>(rng.below(box)),
                             2 + static_cast<std::int64_t>(rng.below(box - 2))};
            bool ok = true;
            for (const auto& p : extra)
                if (p == cand) {
                    ok = false;
                    break;
                }
            // any pair not lying together on y=0 or on y=1 must miss cand
            const auto placed = [&](std::size_t idx) -> const I64Pt& {
                return idx < pts.size() ? pts[idx] : extra[idx - pts.size()];
            };
            const std::size_t total = pts.size() + extra.size();
            for (std::size_t b = 1; ok && b < total; ++b) {
                const I64Pt& pb = placed(b);
                for (std::size_t a = 0; a < b; ++a) {
                    const I64Pt& pa = placed(a);
                    if (pa.y == pb.y && (pa.y == 0 || pa.y == 1)) continue;
                    if (orient64(pa, pb, cand) == 0) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                extra.push_back(cand);
                break;
            }
        }
    }
    pts.insert(pts.end(), extra.begin(), extra.end());
    return to_point_set(pts);
}

// n points on three horizontal lines with occupancies n/2-t, n/2-t, 2t; no
// collinear triple crosses between the lines.
inline PointSet gen_three_parallel(std::int64_t n, std::int64_t t, std::uint64_t seed,
                                   std::int64_t bbox = 0) {
    using namespace detail;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("gen_three_parallel: n must be even and >= 4");
    if (t < 2) throw std::invalid_argument("gen_three_parallel: t >= 2 violated");
    if (4 * t > n) throw std::invalid_argument("gen_three_parallel: t <= n/4 violated");
    const std::int64_t box = effective_bbox(n, bbox);

    const std::int64_t occ = n / 2 - t;
    std::vector<I64Pt> pts;
    pts.reserve(n);
    for (std::int64_t i = 0; i < occ; ++i) pts.push_back(I64Pt{i, 0});
    for (std::int64_t i = 0; i < occ; ++i) pts.push_back(I64Pt{i, 1});

    SplitMix64 rng(seed);
    std::vector<I64Pt> top;
    top.reserve(2 * t);
    while (top.size() < static_cast<std::size_t>(2 * t)) {
        int attempts = 0;
        for (;;) {
            if (++attempts > k_max_rejects) exhausted();
            const I64Pt cand{static_cast<std::int64_t>(rng.below(box)), 2};
            bool ok = true;
            for (const auto& p : top)
                if (p == cand) {
                    ok = false;
                    break;
                }
            for (std::int64_t a = 0; ok && a < occ; ++a)
                for (std::int64_t b = 0; b < occ; ++b)
                    if (orient64(I64Pt{a, 0}, I64Pt{b, 1}, cand) == 0) {
                        ok = false;
                        break;
                    }
            if (ok) {
                top.push_back(cand);
                break;
            }
        }
    }
    pts.insert(pts.end(), top.begin(), top.end());
    return to_point_set(pts);
}

// m collinear points (on y=0) plus n-m points generic with respect to
// everything: max_collinear(result) = m exactly.
inline PointSet gen_bounded_collinear(std::int64_t n, std::int64_t m, std::uint64_t seed,
                                      std::int64_t bbox = 0) {
    using namespace detail;
    if (m < 2 || m > n) throw std::invalid_argument("gen_bounded_collinear: 2 <= m <= n violated");
    const std::int64_t box = effective_bbox(n, bbox);

    std::vector<I64Pt> pts;
    pts.reserve(n);
    for (std::int64_t i = 0; i < m; ++i) pts.push_back(I64Pt{i, 0});

    SplitMix64 rng(seed);
    while (pts.size() < static_cast<std::size_t>(n)) {
        int attempts = 0;
        for (;;) {
            if (++attempts > k_max_rejects) exhausted();
            const I64Pt cand{static_cast<std::int64_t>(rng.below(box)),
                             1 + static_cast<std::int64_t>(rng.below(box - 1))};
            bool ok = true;
            for (std::size_t p = m; p < pts.size(); ++p)
                if (pts[p] == cand) {
                    ok = false;
                    break;
                }
            // pairs not both on the axis must miss cand
            for (std::size_t b = 1; ok && b < pts.size(); ++b)
                for (std::size_t a = 0; a < b; ++a) {
                    if (pts[a].y == 0 && pts[b].y == 0) continue;
                    if (orient64(pts[a], pts[b], cand) == 0) {
                        ok = false;
                        break;
                    }
                }
            if (ok) {
                pts.push_back(cand);
                break;
            }
        }
    }
    return to_point_set(pts);
}

inline PointSet generate(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::prop_1_1:
            return gen_prop_1_1(spec.n, spec.k, spec.c, spec.seed, spec.bbox);
        case ConstructionKind::prop_3_1:
            return gen_prop_3_1(spec.n, spec.k, spec.c, spec.t, spec.seed, spec.bbox);
        case ConstructionKind::three_parallel:
            return gen_three_parallel(spec.n, spec.t, spec.seed, spec.bbox);
        case ConstructionKind::general_position:
            return gen_general_position(spec.n, spec.bbox > 0 ? spec.bbox : effective_bbox(spec.n, 0),
                                        spec.seed);
        case ConstructionKind::bounded_collinear:
            return gen_bounded_collinear(spec.n, spec.m, spec.seed, spec.bbox);
    }
    throw std::invalid_argument("generate: unknown construction kind");
}

}  // namespace otri
