#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempoviz/path_collection.hpp"

namespace tempoviz {

// k-th-order graph over a path collection: vertices are observed node tuples
// of k base vertices, edges connect tuples overlapping in k-1 positions and
// are weighted by length-k path frequency. Order 1 reproduces the weighted
// aggregate graph.
struct HigherOrderGraph {
    int order = 1;
    std::map<std::pair<PathKey, PathKey>, std::uint64_t> edges;
    std::set<PathKey> vertices;  // tuples incident to at least one edge

    std::uint64_t total_weight() const {
        std::uint64_t total = 0;
        for (const auto& [e, w] : edges) total += w;
        return total;
    }
};

// Returns an empty graph when no paths of length k were observed.
inline HigherOrderGraph build_higher_order(const PathCollection& pc, int k) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    if (k > pc.max_length())
        throw std::invalid_argument("order exceeds the collection's max path length");

    HigherOrderGraph g;
    g.order = k;
    for (const auto& [nodes, count] : pc.paths_of_length(k)) {
        PathKey prefix(nodes.begin(), nodes.end() - 1);
        PathKey suffix(nodes.begin() + 1, nodes.end());
        g.edges[{prefix, suffix}] += count;
        g.vertices.insert(std::move(prefix));
        g.vertices.insert(std::move(suffix));
    }
    return g;
}

// m_k: the number of distinct paths of length k with count >= 1.
inline std::uint64_t unique_path_count(const PathCollection& pc, int k) {
    return pc.paths_of_length(k).size();
}

// Default force coefficients alpha_k = 1 / m_k for k = 2..K, or 0 when no
// paths of that length exist.
inline std::map<int, double> default_alphas(const PathCollection& pc, int max_order) {
    if (max_order > pc.max_length())
        throw std::invalid_argument("max_order exceeds the collection's max path length");
    std::map<int, double> alphas;
    for (int k = 2; k <= max_order; ++k) {
        const std::uint64_t m = unique_path_count(pc, k);
        alphas[k] = m == 0 ? 0.0 : 1.0 / static_cast<double>(m);
    }
    return alphas;
}

}  // namespace tempoviz
