#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempoviz/geometry.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/path_collection.hpp"

namespace tempoviz {

struct MetricReport {
    std::uint64_t edge_crossings = 0;
    double dispersion = 0.0;
    std::map<double, double> eccentricity;  // keyed by percentile gamma
    std::map<std::string, double> closeness;
};

inline Vec2 barycentre(const std::vector<Vec2>& points) {
    if (points.empty()) throw std::invalid_argument("barycentre of an empty point set");
    Vec2 sum;
    for (const auto& p : points) {
        sum.x += p.x;
        sum.y += p.y;
    }
    const auto n = static_cast<double>(points.size());
    return {sum.x / n, sum.y / n};
}

inline double distance(const Vec2& a, const Vec2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Number of unordered edge pairs whose drawn open segments intersect.
// Directed duplicates collapse to one undirected segment, loops are dropped,
// and pairs sharing an endpoint vertex are never counted.
inline std::uint64_t edge_crossing(const Layout& layout,
                                   const std::vector<std::pair<std::string, std::string>>& edges) {
    std::set<std::pair<std::string, std::string>> undirected;
    for (const auto& [from, to] : edges) {
        if (from == to) continue;
        undirected.insert(from < to ? std::make_pair(from, to) : std::make_pair(to, from));
    }

    struct Segment {
        geometry::SnappedPoint a, b;
        const std::string* from;
        const std::string* to;
    };
    std::vector<Segment> segments;
    segments.reserve(undirected.size());
    for (const auto& [from, to] : undirected)
        segments.push_back({geometry::snap(layout.position_of(from)),
                            geometry::snap(layout.position_of(to)), &from, &to});

    std::uint64_t crossings = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            const Segment& s = segments[i];
            const Segment& t = segments[j];
            if (*s.from == *t.from || *s.from == *t.to || *s.to == *t.from || *s.to == *t.to)
                continue;
            if (geometry::open_segments_intersect(s.a, s.b, t.a, t.b)) ++crossings;
        }
    }
    return crossings;
}

// Spatial spread of traversed vertices around their own path's barycentre,
// relative to the spread of the whole vertex set around the global
// barycentre. Each path occurrence contributes the mean distance of its
// vertices (with multiplicity) to the path barycentre; values below 1 mean
// causally connected vertices sit closer together than vertices in general.
inline double causal_path_dispersion(const Layout& layout, const PathCollection& pc) {
    if (pc.empty()) throw std::invalid_argument("dispersion of an empty path collection");

    double weighted_sum = 0.0;
    double total_weight = 0.0;
    std::vector<Vec2> path_points;
    for (int len = 1; len <= pc.max_length(); ++len) {
        for (const auto& [nodes, count] : pc.paths_of_length(len)) {
            path_points.clear();
            for (VertexId v : nodes) path_points.push_back(layout.position_of(pc.vertices().name_of(v)));
            const Vec2 centre = barycentre(path_points);
            double spread = 0.0;
            for (const auto& p : path_points) spread += distance(p, centre);
            spread /= static_cast<double>(path_points.size());
            weighted_sum += static_cast<double>(count) * spread;
            total_weight += static_cast<double>(count);
        }
    }

    std::vector<Vec2> all_points;
    all_points.reserve(pc.vertices().size());
    for (const auto& name : pc.vertices().sorted_names())
        all_points.push_back(layout.position_of(name));
    const Vec2 global = barycentre(all_points);
    double global_spread = 0.0;
    for (const auto& p : all_points) global_spread += distance(p, global);
    global_spread /= static_cast<double>(all_points.size());
    if (global_spread == 0.0)
        throw std::invalid_argument("dispersion undefined: all vertices coincide");

    return (weighted_sum / total_weight) / global_spread;
}

// Path-based closeness: for each other vertex w, the number of path
// occurrences containing both v and w divided by the summed first-occurrence
// index distance between them along those occurrences. Vertices sharing no
// path contribute nothing; a vertex on no path has closeness 0.
inline std::map<std::string, double> temporal_closeness(const PathCollection& pc,
                                                        const std::set<std::string>& vertices) {
    std::map<std::string, double> cc;
    std::set<VertexId> universe;
    if (vertices.empty()) {
        for (const auto& name : pc.vertices().sorted_names()) {
            cc.emplace(name, 0.0);
            universe.insert(pc.vertices().id_of(name));
        }
    } else {
        for (const auto& name : vertices) {
            cc.emplace(name, 0.0);
            if (pc.vertices().contains(name)) universe.insert(pc.vertices().id_of(name));
        }
    }

    // Per unordered pair: co-occurrence count and summed distance.
    std::map<std::pair<VertexId, VertexId>, std::pair<double, double>> pair_terms;
    std::map<VertexId, std::size_t> first_index;
    for (int len = 1; len <= pc.max_length(); ++len) {
        for (const auto& [nodes, count] : pc.paths_of_length(len)) {
            first_index.clear();
            for (std::size_t i = 0; i < nodes.size(); ++i)
                first_index.emplace(nodes[i], i);
            const auto freq = static_cast<double>(count);
            for (auto it = first_index.begin(); it != first_index.end(); ++it) {
                if (!universe.count(it->first)) continue;
                for (auto jt = std::next(it); jt != first_index.end(); ++jt) {
                    if (!universe.count(jt->first)) continue;
                    const auto gap = static_cast<double>(
                        it->second > jt->second ? it->second - jt->second
                                                : jt->second - it->second);
                    auto& term = pair_terms[{it->first, jt->first}];
                    term.first += freq;
                    term.second += freq * gap;
                }
            }
        }
    }

    for (const auto& [pair, term] : pair_terms) {
        if (term.second == 0.0) continue;
        const double contribution = term.first / term.second;
        cc[pc.vertices().name_of(pair.first)] += contribution;
        cc[pc.vertices().name_of(pair.second)] += contribution;
    }
    return cc;
}

namespace detail {

// Vertices ranked by score descending, ties by name ascending.
inline std::vector<std::pair<std::string, double>> rank_by_score(
    const std::map<std::string, double>& score) {
    std::vector<std::pair<std::string, double>> ranked(score.begin(), score.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

inline std::size_t percentile_count(std::size_t n, double gamma) {
    return static_cast<std::size_t>(
        std::ceil(gamma * static_cast<double>(n) / 100.0));
}

}  // namespace detail

// The top-gamma-percent vertices by score (ceil(gamma*n/100) of them), ties
// at the boundary broken by lexicographic name.
inline std::vector<std::string> top_percentile(const std::map<std::string, double>& score,
                                               double gamma) {
    if (gamma <= 0.0 || gamma > 100.0)
        throw std::invalid_argument("percentile must lie in (0, 100]");
    const auto ranked = detail::rank_by_score(score);
    const std::size_t take = std::min(ranked.size(), detail::percentile_count(ranked.size(), gamma));
    std::vector<std::string> top;
    top.reserve(take);
    for (std::size_t i = 0; i < take; ++i) top.push_back(ranked[i].first);
    return top;
}

// Mean barycentre-distance of the top-gamma-percentile closeness vertices
// relative to the mean over all vertices: < 1 means the temporally most
// central vertices are also drawn centrally.
inline double closeness_eccentricity(const Layout& layout,
                                     const std::map<std::string, double>& closeness,
                                     double gamma) {
    if (gamma <= 0.0 || gamma > 100.0)
        throw std::invalid_argument("percentile must lie in (0, 100]");
    if (closeness.empty())
        throw std::invalid_argument("eccentricity of an empty vertex set");

    const auto ranked = detail::rank_by_score(closeness);
    std::vector<Vec2> points;
    points.reserve(ranked.size());
    for (const auto& [name, unused] : ranked) points.push_back(layout.position_of(name));
    const Vec2 centre = barycentre(points);

    // Both means run over the same ranked sequence, so gamma = 100 yields
    // exactly 1.
    const std::size_t take = detail::percentile_count(ranked.size(), gamma);
    double top_sum = 0.0;
    double all_sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = distance(points[i], centre);
        if (i < take) top_sum += d;
        all_sum += d;
    }
    if (all_sum == 0.0)
        throw std::invalid_argument("eccentricity undefined: all vertices coincide");
    const double top_mean = top_sum / static_cast<double>(take);
    const double all_mean = all_sum / static_cast<double>(points.size());
    return top_mean / all_mean;
}

}  // namespace tempoviz
