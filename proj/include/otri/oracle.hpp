#pragma once

// Independent reference counter used by the test and acceptance suites. On
// purpose this shares nothing with the incidence/triangle machinery beyond
// Point and orient: no canonical keys, no hashing, no precomputed map. Every
// triple is judged by scanning the whole set three times. O(n^4).

#include <cstdint>
#include <stdexcept>

#include "otri/geom.hpp"

namespace otri {

inline std::uint64_t count_reference(const PointSet& X, int tau) {
    if (X.size() < 3) throw std::invalid_argument("count_reference: need at least 3 points");
    if (tau < 2) throw std::invalid_argument("count_reference: tau must be >= 2");

    const std::size_t n = X.size();
    // Incidences of the line through a and b, counting a and b themselves;
    // bails out once the count exceeds tau.
    const auto line_ordinary = [&](std::size_t a, std::size_t b) {
        int cnt = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (orient(X[a], X[b], X[s]) == 0) {
                if (++cnt > tau) return false;
            }
        }
        return true;
    };

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orient(X[i], X[j], X[k]) == 0) continue;
                if (line_ordinary(i, j) && line_ordinary(j, k) && line_ordinary(k, i)) ++total;
            }
    return total;
}

}  // namespace otri
