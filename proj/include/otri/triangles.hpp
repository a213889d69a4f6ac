#pragma once

// Reporting, counting and detecting tau-ordinary triangles.
//
// A tau-ordinary triangle is a noncollinear triple whose three connecting
// lines each hold at most tau points. Counting goes through the tau-ordinary
// graph: trace(A^3)/6 realized as row-AND + popcount over packed bit rows,
// minus the collinear triples living on tau-ordinary lines (which form graph
// triangles but not geometric ones).

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "otri/graph.hpp"
#include "otri/parallel.hpp"

namespace otri {

struct Triangle {
    std::uint32_t i;
    std::uint32_t j;
    std::uint32_t k;  // i < j < k, X[i], X[j], X[k] noncollinear

    bool operator==(const Triangle& o) const { return i == o.i && j == o.j && k == o.k; }
};

struct TriangleCount {
    int tau = 0;
    std::uint64_t count = 0;            // graph_triangles - degenerate
    std::uint64_t graph_triangles = 0;  // raw triangles of the tau-ordinary graph
    std::uint64_t degenerate = 0;       // collinear triples on tau-ordinary lines
};

namespace detail {

// int64 mirror of the coordinates when every value fits the fast-path bound;
// spares the per-call cpp_int unpacking in the cubic loops.
struct NarrowView {
    bool ok = false;
    std::vector<std::array<std::int64_t, 2>> c;

    static NarrowView from(const PointSet& X) {
        NarrowView v;
        v.c.reserve(X.size());
        for (const auto& p : X) {
            if (!fits(p.x, k_fast_bound) || !fits(p.y, k_fast_bound)) return v;
            v.c.push_back({to_i64(p.x), to_i64(p.y)});
        }
        v.ok = true;
        return v;
    }

    bool noncollinear(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        const __int128 det =
            static_cast<__int128>(c[j][0] - c[i][0]) * (c[k][1] - c[i][1]) -
            static_cast<__int128>(c[j][1] - c[i][1]) * (c[k][0] - c[i][0]);
        return det != 0;
    }
};

inline bool noncollinear(const NarrowView& nv, const PointSet& X, std::uint32_t i,
                         std::uint32_t j, std::uint32_t k) {
    if (nv.ok) return nv.noncollinear(i, j, k);
    return orient(X[i], X[j], X[k]) != 0;
}

// Calls fn(k) for every set bit k > floor in (rowA AND rowB).
template <typename F>
void for_each_common_above(const std::uint64_t* a, const std::uint64_t* b, std::size_t words,
                           std::uint32_t floor_idx, F&& fn) {
    std::size_t w = (floor_idx + 1) >> 6;
    if (w >= words) return;
    const unsigned off = (floor_idx + 1) & 63;
    std::uint64_t cur = a[w] & b[w];
    if (off) cur &= ~std::uint64_t{0} << off;
    for (;;) {
        while (cur) {
            fn(static_cast<std::uint32_t>(w * 64 + std::countr_zero(cur)));
            cur &= cur - 1;
        }
        if (++w >= words) return;
        cur = a[w] & b[w];
    }
}

inline std::uint64_t popcount_rows(const std::uint64_t* a, const std::uint64_t* b,
                                   std::size_t words) {
    std::uint64_t s = 0;
    for (std::size_t w = 0; w < words; ++w) s += std::popcount(a[w] & b[w]);
    return s;
}

}  // namespace detail

// All tau-ordinary triangles, in lexicographic (i,j,k) order, no duplicates.
inline std::vector<Triangle> report_all(const PointSet& X, const IncidenceMap& map, int tau) {
    if (X.size() < 3) throw std::invalid_argument("report_all: need at least 3 points");
    const OrdinaryGraph g = build_graph(X, map, tau);
    const auto nv = detail::NarrowView::from(X);
    const std::uint32_t n = g.n();
    const std::size_t words = g.words_per_row();

    std::vector<Triangle> out;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t* ri = g.row(i);
        detail::for_each_common_above(ri, ri, words, i, [&](std::uint32_t j) {
            detail::for_each_common_above(ri, g.row(j), words, j, [&](std::uint32_t k) {
                if (detail::noncollinear(nv, X, i, j, k)) out.push_back(Triangle{i, j, k});
            });
        });
    }
    return out;
}

// Triangle count via boolean-matrix products: sum of common-neighbor popcounts
// over edges i<j equals 3 * trace(A^3)/6. Deterministic for any thread count.
inline TriangleCount count_matmul(const PointSet& X, const IncidenceMap& map, int tau,
                                  int threads = 1) {
    const OrdinaryGraph g = build_graph(X, map, tau);
    const std::uint32_t n = g.n();
    const std::size_t words = g.words_per_row();
    const unsigned nthreads = resolve_threads(threads);

    std::vector<std::uint64_t> partial(nthreads < n ? nthreads : (n ? n : 1), 0);
    parallel_chunks(0, n, nthreads, [&](std::uint32_t lo, std::uint32_t hi, unsigned chunk) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = lo; i < hi; ++i) {
            const std::uint64_t* ri = g.row(i);
            detail::for_each_common_above(ri, ri, words, i, [&](std::uint32_t j) {
                acc += detail::popcount_rows(ri, g.row(j), words);
            });
        }
        partial[chunk] = acc;
    });
    std::uint64_t sum = 0;
    for (std::uint64_t p : partial) sum += p;

    TriangleCount tc;
    tc.tau = tau;
    tc.graph_triangles = sum / 3;
    tc.degenerate = degenerate_triple_count(map, tau);
    tc.count = tc.graph_triangles - tc.degenerate;
    return tc;
}

// Unpacked reference counter: plain triple loop over byte adjacency. Exists as
// the in-module oracle for count_matmul and as the packed/unpacked baseline.
inline TriangleCount count_brute(const OrdinaryGraph& g, const PointSet& X) {
    const std::uint32_t n = g.n();
    if (n != X.size()) throw std::invalid_argument("count_brute: graph was not built from X");
    const auto nv = detail::NarrowView::from(X);

    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            adj[static_cast<std::size_t>(i) * n + j] = g.edge(i, j) ? 1 : 0;

    std::uint64_t all_edges = 0, good = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint8_t* ai = adj.data() + static_cast<std::size_t>(i) * n;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!ai[j]) continue;
            const std::uint8_t* aj = adj.data() + static_cast<std::size_t>(j) * n;
            for (std::uint32_t k = j + 1; k < n; ++k) {
                if (ai[k] & aj[k]) {
                    ++all_edges;
                    if (detail::noncollinear(nv, X, i, j, k)) ++good;
                }
            }
        }
    }

    TriangleCount tc;
    tc.tau = g.tau();
    tc.count = good;
    tc.graph_triangles = all_edges;
    tc.degenerate = all_edges - good;
    return tc;
}

// Lexicographically smallest tau-ordinary triangle, if any.
//
// For an edge (i,j) every point of the connecting line is a common neighbor,
// so a noncollinear witness above j exists iff the masked common-neighbor
// popcount exceeds the number of line members above j. Edges are scanned in
// lex order and candidates ascending, which makes the first hit the smallest
// triple overall.
inline std::optional<Triangle> detect(const PointSet& X, const IncidenceMap& map, int tau) {
    if (X.size() < 3) {
        if (tau < 2) throw std::invalid_argument("detect: tau must be >= 2");
        return std::nullopt;
    }
    const OrdinaryGraph g = build_graph(X, map, tau);
    const std::uint32_t n = g.n();
    const std::size_t words = g.words_per_row();

    std::optional<Triangle> found;
    for (std::uint32_t i = 0; i < n && !found; ++i) {
        const std::uint64_t* ri = g.row(i);
        std::optional<Triangle> local;
        detail::for_each_common_above(ri, ri, words, i, [&](std::uint32_t j) {
            if (local) return;
            const std::uint64_t* rj = g.row(j);

            std::size_t w = (j + 1) >> 6;
            std::uint64_t pc = 0;
            if (w < words) {
                std::uint64_t first = ri[w] & rj[w];
                const unsigned off = (j + 1) & 63;
                if (off) first &= ~std::uint64_t{0} << off;
                pc = std::popcount(first);
                for (std::size_t v = w + 1; v < words; ++v)
                    pc += std::popcount(ri[v] & rj[v]);
            }
            if (pc == 0) return;

            const auto& members = map.line_through(i, j).members;
            const auto above = members.end() - std::upper_bound(members.begin(), members.end(), j);
            if (pc <= static_cast<std::uint64_t>(above)) return;  // all candidates collinear

            detail::for_each_common_above(ri, rj, words, j, [&](std::uint32_t k) {
                if (!local && orient(X[i], X[j], X[k]) != 0) local = Triangle{i, j, k};
            });
        });
        found = local;
    }
    return found;
}

// Smallest tau >= 2 admitting a tau-ordinary triangle: doubling capped at n,
// then binary search (detection is monotone in tau). nullopt iff X is fully
// collinear.
inline std::optional<int> min_tau(const PointSet& X, const IncidenceMap& map) {
    if (X.size() < 3) throw std::invalid_argument("min_tau: need at least 3 points");
    const int n = static_cast<int>(X.size());
    if (map.max_collinear() == X.size()) return std::nullopt;

    const auto has = [&](int tau) { return detect(X, map, tau).has_value(); };

    int lo = 1, hi = 2;  // has(lo) false (tau < 2 admits nothing), probing hi
    while (!has(hi)) {
        if (hi >= n) return std::nullopt;  // unreachable for noncollinear X
        lo = hi;
        hi = std::min(hi * 2, n);
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (has(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace otri
