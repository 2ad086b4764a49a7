#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/higher_order.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/rng.hpp"

namespace tempoviz {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Superimposed attractive force coefficients between base vertex pairs,
// accumulated over all orders 1..K. Keys are ordered (path start, path end)
// pairs over the owning table's ids.
struct ForceMap {
    VertexTable vertices;
    std::map<std::pair<VertexId, VertexId>, double> attraction;

    double at(const std::string& from, const std::string& to) const {
        if (!vertices.contains(from) || !vertices.contains(to)) return 0.0;
        auto it = attraction.find({vertices.id_of(from), vertices.id_of(to)});
        return it == attraction.end() ? 0.0 : it->second;
    }
};

struct LayoutConfig {
    int max_order = 1;
    int iterations = 1000;
    // Force coefficients per order k >= 2; empty means alpha_k = 1/m_k
    // resolved against the collection the layout is computed from.
    std::map<int, double> alphas;
    // Count each distinct path once instead of using its frequency.
    bool uniform_path_weights = true;
    std::uint64_t seed = 0;
    // 0 selects sqrt(1 / vertex count) for the unit-square layout area.
    double ideal_length = 0.0;
    double initial_temperature = 0.1;
};

struct LayoutProvenance {
    LayoutConfig config;  // with alphas resolved
    double resolved_ideal_length = 0.0;
    std::uint64_t data_fingerprint = 0;
};

// Vertex positions plus the configuration that produced them. Names are
// sorted; positions is parallel to names.
struct Layout {
    std::vector<std::string> names;
    std::vector<Vec2> positions;
    LayoutProvenance provenance;

    std::size_t index_of(const std::string& name) const {
        auto it = std::lower_bound(names.begin(), names.end(), name);
        if (it == names.end() || *it != name)
            throw std::out_of_range("vertex not in layout: " + name);
        return static_cast<std::size_t>(it - names.begin());
    }

    bool contains(const std::string& name) const {
        auto it = std::lower_bound(names.begin(), names.end(), name);
        return it != names.end() && *it == name;
    }

    const Vec2& position_of(const std::string& name) const {
        return positions[index_of(name)];
    }
};

namespace detail {

constexpr double kCoincidenceEps = 1e-9;

struct SymmetricAttraction {
    std::uint32_t a = 0;  // a < b
    std::uint32_t b = 0;
    double coeff = 0.0;
};

// Unit vector and distance from one point to another. Coincident points get
// a pseudo-random direction derived from the pair identity and the seed;
// swapping the endpoints negates the vector exactly either way.
struct Separation {
    double ux = 0.0;
    double uy = 0.0;
    double dist = kCoincidenceEps;
};

inline Vec2 fallback_direction(std::uint64_t seed, std::uint32_t lo, std::uint32_t hi) {
    std::uint64_t state = seed ^ (static_cast<std::uint64_t>(lo) << 32 | hi);
    for (;;) {
        const double x = 2.0 * static_cast<double>(rng::mix64(state) >> 11) * 0x1.0p-53 - 1.0;
        const double y = 2.0 * static_cast<double>(rng::mix64(state + 1) >> 11) * 0x1.0p-53 - 1.0;
        const double norm2 = x * x + y * y;
        if (norm2 > 1e-6 && norm2 <= 1.0) {
            const double norm = std::sqrt(norm2);
            return {x / norm, y / norm};
        }
        state += 2;
    }
}

inline Separation separation(const Vec2& from, const Vec2& to, std::uint32_t from_id,
                             std::uint32_t to_id, std::uint64_t seed) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    if (d < kCoincidenceEps) {
        const Vec2 u = fallback_direction(seed, std::min(from_id, to_id),
                                          std::max(from_id, to_id));
        const double sign = from_id < to_id ? 1.0 : -1.0;
        return {sign * u.x, sign * u.y, kCoincidenceEps};
    }
    return {dx / d, dy / d, d};
}

// All-pairs repulsion c^2/d accumulated from a position snapshot. Exposed so
// tests can assert the action-reaction zero sum directly.
inline void accumulate_repulsion(const std::vector<Vec2>& pos, double c,
                                 std::uint64_t seed, std::vector<Vec2>& disp) {
    const std::size_t n = pos.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v) continue;
            const Separation s = separation(pos[v], pos[w], static_cast<std::uint32_t>(v),
                                            static_cast<std::uint32_t>(w), seed);
            const double f = c * c / s.dist;
            disp[v].x -= s.ux * f;
            disp[v].y -= s.uy * f;
        }
    }
}

// Attraction coeff * d^2 / c applied with opposite signs to both endpoints.
inline void accumulate_attraction(const std::vector<Vec2>& pos,
                                  const std::vector<SymmetricAttraction>& pairs, double c,
                                  std::uint64_t seed, std::vector<Vec2>& disp) {
    for (const auto& p : pairs) {
        const Separation s = separation(pos[p.a], pos[p.b], p.a, p.b, seed);
        const double f = p.coeff * s.dist * s.dist / c;
        disp[p.a].x += s.ux * f;
        disp[p.a].y += s.uy * f;
        disp[p.b].x -= s.ux * f;
        disp[p.b].y -= s.uy * f;
    }
}

inline double linear_temperature(double t0, int iteration, int total) {
    return t0 * (1.0 - static_cast<double>(iteration) / static_cast<double>(total));
}

// Many-body simulation: per iteration, displacements are accumulated from a
// consistent position snapshot and then applied with the temperature cap.
inline std::vector<Vec2> simulate(std::size_t n,
                                  const std::vector<SymmetricAttraction>& pairs,
                                  int iterations, double c, double t0,
                                  std::uint64_t seed) {
    std::vector<Vec2> pos(n);
    rng::Engine eng(seed);
    for (auto& p : pos) {
        p.x = rng::uniform_unit(eng);
        p.y = rng::uniform_unit(eng);
    }

    std::vector<Vec2> disp(n);
    for (int it = 0; it < iterations; ++it) {
        const double temp = linear_temperature(t0, it, iterations);
        std::fill(disp.begin(), disp.end(), Vec2{});
        accumulate_repulsion(pos, c, seed, disp);
        accumulate_attraction(pos, pairs, c, seed, disp);
        for (std::size_t v = 0; v < n; ++v) {
            const double len = std::sqrt(disp[v].x * disp[v].x + disp[v].y * disp[v].y);
            if (len == 0.0) continue;
            const double factor = std::min(len, temp) / len;
            pos[v].x += disp[v].x * factor;
            pos[v].y += disp[v].y * factor;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!std::isfinite(pos[v].x) || !std::isfinite(pos[v].y))
                throw DataError("layout position became non-finite at iteration " +
                                std::to_string(it));
        }
    }
    return pos;
}

inline std::uint64_t fingerprint_of(const PathCollection& pc,
                                    const std::vector<std::string>& names) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    for (const auto& name : names) feed(name);
    for (int l = 1; l <= pc.max_length(); ++l) {
        for (const auto& [nodes, count] : pc.paths_of_length(l)) {
            feed(pc.format_path(nodes));
            feed(std::to_string(count));
        }
    }
    return h;
}

}  // namespace detail

// Accumulates alpha_k-scaled edge weights of every k-th-order graph,
// k = 1..max_order, onto base vertex pairs (path start, path end). alpha_1
// is fixed at 1; orders with alpha_k = 0 contribute nothing and leave no
// zero-valued entries behind. With uniform weights each distinct path
// contributes 1 instead of its frequency.
inline ForceMap superimpose_forces(const PathCollection& pc, int max_order,
                                   const std::map<int, double>& alphas,
                                   bool uniform_path_weights = true) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    if (max_order > pc.max_length())
        throw std::invalid_argument("max_order exceeds the collection's max path length");

    ForceMap fm;
    fm.vertices = pc.vertices();
    for (int k = 1; k <= max_order; ++k) {
        double alpha = 1.0;
        if (k >= 2) {
            auto it = alphas.find(k);
            alpha = it == alphas.end() ? 0.0 : it->second;
            if (alpha < 0.0) throw std::invalid_argument("alpha coefficients must be >= 0");
        }
        if (alpha == 0.0) continue;
        const HigherOrderGraph hog = build_higher_order(pc, k);
        for (const auto& [edge, weight] : hog.edges) {
            const VertexId v0 = edge.first.front();
            const VertexId vk = edge.second.back();
            const double w = uniform_path_weights ? 1.0 : static_cast<double>(weight);
            fm.attraction[{v0, vk}] += alpha * w;
        }
    }
    return fm;
}

namespace detail {

inline std::vector<std::string> sorted_unique(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

// Fold a directed force map into unordered pairs over layout indices.
// Self-pairs exert no net force under the symmetric treatment and are
// dropped.
inline std::vector<SymmetricAttraction> symmetrize(const ForceMap& fm,
                                                   const Layout& layout) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> folded;
    for (const auto& [key, coeff] : fm.attraction) {
        if (key.first == key.second) continue;
        const std::string& from = fm.vertices.name_of(key.first);
        const std::string& to = fm.vertices.name_of(key.second);
        if (!layout.contains(from) || !layout.contains(to))
            throw std::invalid_argument("force endpoint not in layout vertex set: " +
                                        (layout.contains(from) ? to : from));
        auto i = static_cast<std::uint32_t>(layout.index_of(from));
        auto j = static_cast<std::uint32_t>(layout.index_of(to));
        if (i > j) std::swap(i, j);
        folded[{i, j}] += coeff;
    }
    std::vector<SymmetricAttraction> pairs;
    pairs.reserve(folded.size());
    for (const auto& [key, coeff] : folded)
        pairs.push_back({key.first, key.second, coeff});
    return pairs;
}

inline Layout run_simulation(const PathCollection& pc, std::vector<std::string> names,
                             const LayoutConfig& cfg,
                             const std::vector<SymmetricAttraction>& pairs) {
    Layout layout;
    layout.names = std::move(names);
    const std::size_t n = layout.names.size();
    const double c =
        cfg.ideal_length > 0.0 ? cfg.ideal_length : std::sqrt(1.0 / static_cast<double>(n));
    layout.positions =
        simulate(n, pairs, cfg.iterations, c, cfg.initial_temperature, cfg.seed);
    layout.provenance.config = cfg;
    layout.provenance.resolved_ideal_length = c;
    layout.provenance.data_fingerprint = fingerprint_of(pc, layout.names);
    return layout;
}

}  // namespace detail

// Time-aware layout: attractive forces superimposed over orders 1..max_order,
// then the force-directed simulation. Vertices lists every vertex to place
// (it may be a superset of the traversed ones). Identical inputs and seed
// give bit-identical positions.
inline Layout compute_layout(const PathCollection& pc,
                             const std::vector<std::string>& vertices,
                             const LayoutConfig& cfg) {
    if (vertices.empty()) throw std::invalid_argument("vertex set must be non-empty");
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (cfg.initial_temperature <= 0.0)
        throw std::invalid_argument("initial temperature must be positive");

    LayoutConfig resolved = cfg;
    if (resolved.alphas.empty()) resolved.alphas = default_alphas(pc, cfg.max_order);
    const ForceMap fm =
        superimpose_forces(pc, resolved.max_order, resolved.alphas, resolved.uniform_path_weights);

    Layout layout;
    layout.names = detail::sorted_unique(vertices);
    const auto pairs = detail::symmetrize(fm, layout);
    return detail::run_simulation(pc, std::move(layout.names), resolved, pairs);
}

// Plain first-order force-directed baseline: edge forces only, built
// directly from length-1 path counts. Equals compute_layout with all
// alpha_k (k >= 2) set to zero, bit for bit.
inline Layout fruchterman_reingold(const PathCollection& pc,
                                   const std::vector<std::string>& vertices,
                                   const LayoutConfig& cfg) {
    if (vertices.empty()) throw std::invalid_argument("vertex set must be non-empty");
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (cfg.initial_temperature <= 0.0)
        throw std::invalid_argument("initial temperature must be positive");

    LayoutConfig resolved = cfg;
    resolved.max_order = 1;
    resolved.alphas.clear();

    Layout layout;
    layout.names = detail::sorted_unique(vertices);

    std::map<std::pair<std::uint32_t, std::uint32_t>, double> folded;
    for (const auto& [nodes, count] : pc.paths_of_length(1)) {
        if (nodes.front() == nodes.back()) continue;
        const std::string& from = pc.vertices().name_of(nodes.front());
        const std::string& to = pc.vertices().name_of(nodes.back());
        if (!layout.contains(from) || !layout.contains(to))
            throw std::invalid_argument("force endpoint not in layout vertex set: " +
                                        (layout.contains(from) ? to : from));
        auto i = static_cast<std::uint32_t>(layout.index_of(from));
        auto j = static_cast<std::uint32_t>(layout.index_of(to));
        if (i > j) std::swap(i, j);
        folded[{i, j}] +=
            resolved.uniform_path_weights ? 1.0 : static_cast<double>(count);
    }
    std::vector<detail::SymmetricAttraction> pairs;
    pairs.reserve(folded.size());
    for (const auto& [key, coeff] : folded)
        pairs.push_back({key.first, key.second, coeff});

    return detail::run_simulation(pc, std::move(layout.names), resolved, pairs);
}

}  // namespace tempoviz
