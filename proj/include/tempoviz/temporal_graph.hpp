#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/rng.hpp"

namespace tempoviz {

using VertexId = std::uint32_t;
using Timestamp = std::int64_t;

// Bidirectional mapping between external vertex names and dense indices.
// Indices are assigned in first-encounter order.
class VertexTable {
public:
    VertexId intern(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        const VertexId id = static_cast<VertexId>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    VertexId id_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::out_of_range("unknown vertex: " + name);
        return it->second;
    }

    const std::string& name_of(VertexId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<std::string> sorted_names() const {
        std::vector<std::string> out = names_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
};

struct TimestampedEdge {
    VertexId source;
    VertexId target;
    Timestamp time;
};

// A dynamic graph: a vertex set plus a multiset of directed, instantaneous
// time-stamped edges. Duplicate (source, target, time) triples are kept and
// count with multiplicity. Immutable after construction.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // Edges as (source name, target name, time); extra_vertices adds
    // vertices that never appear on an edge.
    TemporalGraph(const std::vector<std::tuple<std::string, std::string, Timestamp>>& edges,
                  const std::vector<std::string>& extra_vertices = {}) {
        for (const auto& name : extra_vertices) table_.intern(name);
        edges_.reserve(edges.size());
        for (const auto& [src, dst, t] : edges) {
            if (t < 0) throw DataError("negative timestamp on edge " + src + " -> " + dst);
            edges_.push_back({table_.intern(src), table_.intern(dst), t});
        }
    }

    const VertexTable& vertices() const { return table_; }
    const std::vector<TimestampedEdge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return table_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

private:
    friend TemporalGraph shuffle_timestamps(const TemporalGraph&, std::uint64_t);
    VertexTable table_;
    std::vector<TimestampedEdge> edges_;
};

// Weighted time-aggregated projection: w(v, w) counts how many time-stamped
// edges (v, w; .) the dynamic graph contains.
struct AggregateGraph {
    VertexTable vertices;
    std::map<std::pair<VertexId, VertexId>, std::uint64_t> weights;

    std::uint64_t weight(const std::string& src, const std::string& dst) const {
        if (!vertices.contains(src) || !vertices.contains(dst)) return 0;
        auto it = weights.find({vertices.id_of(src), vertices.id_of(dst)});
        return it == weights.end() ? 0 : it->second;
    }
};

inline AggregateGraph aggregate(const TemporalGraph& g) {
    AggregateGraph out;
    out.vertices = g.vertices();
    for (const auto& e : g.edges()) ++out.weights[{e.source, e.target}];
    return out;
}

// Reassigns the multiset of timestamps to the edges via a uniformly random
// permutation. Vertex set and (source, target) multiset are untouched.
inline TemporalGraph shuffle_timestamps(const TemporalGraph& g, std::uint64_t seed) {
    std::vector<Timestamp> stamps;
    stamps.reserve(g.edge_count());
    for (const auto& e : g.edges()) stamps.push_back(e.time);
    rng::Engine eng(seed);
    rng::shuffle(stamps, eng);
    TemporalGraph out;
    out.table_ = g.vertices();
    out.edges_ = g.edges();
    for (std::size_t i = 0; i < out.edges_.size(); ++i) out.edges_[i].time = stamps[i];
    return out;
}

}  // namespace tempoviz
