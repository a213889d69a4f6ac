#pragma once

// The tau-ordinary graph: vertices are point indices, an edge joins i and j
// exactly when the connecting line of X[i], X[j] has at most tau incidences.
// Adjacency is bit-packed so that row AND + popcount yields common-neighbor
// counts at word speed.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "otri/incidence.hpp"

namespace otri {

class OrdinaryGraph {
  public:
    std::uint32_t n() const { return n_; }
    int tau() const { return tau_; }
    std::size_t words_per_row() const { return words_; }

    bool edge(std::uint32_t i, std::uint32_t j) const {
        return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    const std::uint64_t* row(std::uint32_t i) const { return bits_.data() + i * words_; }

    std::uint64_t edge_count() const { return edges_; }

  private:
    friend OrdinaryGraph build_graph(const PointSet& X, const IncidenceMap& map, int tau);

    void set(std::uint32_t i, std::uint32_t j) {
        bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }

    std::uint32_t n_ = 0;
    int tau_ = 0;
    std::size_t words_ = 0;
    std::uint64_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline OrdinaryGraph build_graph(const PointSet& X, const IncidenceMap& map, int tau) {
    if (tau < 2) throw std::invalid_argument("build_graph: tau must be >= 2");
    if (map.n() != X.size()) throw std::invalid_argument("build_graph: map was not built from X");

    OrdinaryGraph g;
    g.n_ = static_cast<std::uint32_t>(X.size());
    g.tau_ = tau;
    g.words_ = (g.n_ + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(g.n_) * g.words_, 0);

    for (const auto& e : map.entries()) {
        if (e.record.count() > static_cast<std::uint32_t>(tau)) continue;
        const auto& m = e.record.members;
        for (std::size_t s = 0; s < m.size(); ++s) {
            for (std::size_t t = s + 1; t < m.size(); ++t) {
                g.set(m[s], m[t]);
                g.set(m[t], m[s]);
                ++g.edges_;
            }
        }
    }
    return g;
}

// Number of collinear vertex triples whose line is tau-ordinary: these form
// triangles in the graph but are geometrically degenerate, and every triangle
// count downstream subtracts them.
inline std::uint64_t degenerate_triple_count(const IncidenceMap& map, int tau) {
    if (tau < 2) throw std::invalid_argument("degenerate_triple_count: tau must be >= 2");
    std::uint64_t total = 0;
    for (const auto& e : map.entries()) {
        const std::uint64_t c = e.record.count();
        if (c >= 3 && c <= static_cast<std::uint64_t>(tau))
            total += c * (c - 1) * (c - 2) / 6;
    }
    return total;
}

}  // namespace otri
