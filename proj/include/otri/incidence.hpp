#pragma once

// Connecting-line enumeration: every line spanned by the point set together
// with its incidence count and member indices.
//
// Built by keying all n(n-1)/2 point pairs on their canonical line and
// grouping equal keys (sort + run-length), which is exact and O(n^2 log n).
// Entries end up ordered lexicographically by (a,b,c), so iteration order is
// deterministic everywhere it can be observed.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "otri/geom.hpp"

namespace otri {

struct LineRecord {
    std::vector<std::uint32_t> members;  // sorted ascending, distinct

    std::uint32_t count() const { return static_cast<std::uint32_t>(members.size()); }
};

class IncidenceMap {
  public:
    struct Entry {
        CanonicalLine line;
        LineRecord record;
    };

    // Entries sorted lexicographically by (a,b,c).
    const std::vector<Entry>& entries() const { return entries_; }
    std::uint32_t n() const { return n_; }

    const Entry* find(const CanonicalLine& line) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), line,
            [](const Entry& e, const CanonicalLine& l) { return e.line < l; });
        if (it == entries_.end() || !(it->line == line)) return nullptr;
        return &*it;
    }

    // Record of the line through points i and j.
    const LineRecord& line_through(std::uint32_t i, std::uint32_t j) const {
        if (i == j) throw std::invalid_argument("line_through: equal indices");
        if (i >= n_ || j >= n_) throw std::out_of_range("line_through: index out of range");
        const Entry* e = find(canonical_line(pts_[i], pts_[j]));
        if (!e) throw std::logic_error("line_through: map does not match point set");
        return e->record;
    }

    std::uint32_t max_collinear() const {
        std::uint32_t m = 0;
        for (const auto& e : entries_) m = std::max(m, e.record.count());
        return m;
    }

    // count -> number of lines with that incidence count.
    std::map<std::uint32_t, std::uint64_t> incidence_histogram() const {
        std::map<std::uint32_t, std::uint64_t> h;
        for (const auto& e : entries_) ++h[e.record.count()];
        return h;
    }

  private:
    friend IncidenceMap build_incidence_map(const PointSet& X);

    std::vector<Entry> entries_;
    std::vector<Point> pts_;  // copy of the source coordinates, for line_through
    std::uint32_t n_ = 0;
};

inline const LineRecord& line_through(const IncidenceMap& map, std::uint32_t i, std::uint32_t j) {
    return map.line_through(i, j);
}

inline std::uint32_t max_collinear(const IncidenceMap& map) { return map.max_collinear(); }

inline std::map<std::uint32_t, std::uint64_t> incidence_histogram(const IncidenceMap& map) {
    return map.incidence_histogram();
}

inline IncidenceMap build_incidence_map(const PointSet& X) {
    const std::size_t n = X.size();
    if (n < 2) throw std::invalid_argument("build_incidence_map: need at least 2 points");

    struct PairItem {
        CanonicalLine line;
        std::uint32_t i;
        std::uint32_t j;
    };
    std::vector<PairItem> items;
    items.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            items.push_back(PairItem{canonical_line(X[i], X[j]), i, j});

    std::sort(items.begin(), items.end(),
              [](const PairItem& u, const PairItem& v) { return u.line < v.line; });

    IncidenceMap map;
    map.n_ = static_cast<std::uint32_t>(n);
    map.pts_ = X.points();
    std::size_t lo = 0;
    while (lo < items.size()) {
        std::size_t hi = lo + 1;
        while (hi < items.size() && items[hi].line == items[lo].line) ++hi;
        LineRecord rec;
        rec.members.reserve(2 * (hi - lo));
        for (std::size_t s = lo; s < hi; ++s) {
            rec.members.push_back(items[s].i);
            rec.members.push_back(items[s].j);
        }
        std::sort(rec.members.begin(), rec.members.end());
        rec.members.erase(std::unique(rec.members.begin(), rec.members.end()),
                          rec.members.end());
        map.entries_.push_back(IncidenceMap::Entry{std::move(items[lo].line), std::move(rec)});
        lo = hi;
    }
    return map;
}

}  // namespace otri
