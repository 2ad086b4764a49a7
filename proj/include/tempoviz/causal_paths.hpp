#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/rng.hpp"
#include "tempoviz/temporal_graph.hpp"

namespace tempoviz {

struct ExtractOptions {
    // Abort extraction once this many distinct partial paths are active.
    std::uint64_t partial_path_cap = 100'000'000;
};

namespace detail {

struct PathKeyHash {
    std::size_t operator()(const PathKey& key) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (VertexId v : key) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Partial paths created at one timestamp, grouped by their final vertex.
using PartialBucket =
    std::unordered_map<VertexId, std::unordered_map<PathKey, std::uint64_t, PathKeyHash>>;

}  // namespace detail

// Counts every time-respecting window: a path occurrence is a sequence of
// edge instances with strictly increasing timestamps whose consecutive gaps
// are at most delta. Sub-windows of longer sequences count as their own
// occurrences, so length-1 counts equal the aggregate edge weights.
inline PathCollection extract_causal_paths(const TemporalGraph& g, Timestamp delta,
                                           int max_length,
                                           const ExtractOptions& opts = {}) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");

    PathCollection pc(g.vertices(), max_length, delta);

    // Edge instances grouped by timestamp, identical triples collapsed into
    // a multiplicity.
    std::map<Timestamp, std::map<std::pair<VertexId, VertexId>, std::uint64_t>> by_time;
    for (const auto& e : g.edges()) ++by_time[e.time][{e.source, e.target}];

    // Sliding window of partial paths whose last timestamp is within delta.
    std::deque<std::pair<Timestamp, detail::PartialBucket>> window;
    std::uint64_t active = 0;

    for (const auto& [t, edges_at_t] : by_time) {
        while (!window.empty() && window.front().first < t - delta) {
            for (const auto& [v, paths] : window.front().second) active -= paths.size();
            window.pop_front();
        }

        detail::PartialBucket created;
        for (const auto& [pair, mult] : edges_at_t) {
            const auto [src, dst] = pair;
            PathKey base{src, dst};
            pc.add(base, mult);
            if (max_length >= 2) created[dst][std::move(base)] += mult;

            for (const auto& [prev_t, bucket] : window) {
                (void)prev_t;
                auto it = bucket.find(src);
                if (it == bucket.end()) continue;
                for (const auto& [nodes, count] : it->second) {
                    PathKey extended = nodes;
                    extended.push_back(dst);
                    const std::uint64_t c = count * mult;
                    pc.add(extended, c);
                    if (static_cast<int>(extended.size()) - 1 < max_length)
                        created[dst][std::move(extended)] += c;
                }
            }
        }

        if (!created.empty()) {
            for (const auto& [v, paths] : created) active += paths.size();
            if (active > opts.partial_path_cap)
                throw ResourceCapError("active partial paths exceeded cap of " +
                                       std::to_string(opts.partial_path_cap));
            window.emplace_back(t, std::move(created));
        }
    }
    return pc;
}

// Counts every contiguous sub-path (length 1..max_length) of each trajectory,
// weighted by the trajectory's frequency.
inline PathCollection window_trajectories(
    const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>& trajectories,
    int max_length) {
    if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");

    VertexTable table;
    for (const auto& [nodes, freq] : trajectories) {
        if (nodes.size() < 2)
            throw DataError("trajectory must have at least 2 nodes");
        if (freq == 0) throw DataError("trajectory frequency must be positive");
        for (const auto& n : nodes) table.intern(n);
    }

    PathCollection pc(table, max_length, std::nullopt);
    for (const auto& [nodes, freq] : trajectories) {
        PathKey ids;
        ids.reserve(nodes.size());
        for (const auto& n : nodes) ids.push_back(pc.vertices().id_of(n));
        const int traj_len = static_cast<int>(ids.size()) - 1;
        for (int l = 1; l <= std::min(traj_len, max_length); ++l) {
            for (std::size_t start = 0; start + l < ids.size(); ++start) {
                PathKey sub(ids.begin() + static_cast<std::ptrdiff_t>(start),
                            ids.begin() + static_cast<std::ptrdiff_t>(start + l) + 1);
                pc.add(sub, freq);
            }
        }
    }
    return pc;
}

// Assigns each path occurrence independently to the train side with the
// given probability. Counts are conserved: train + test equals the input.
inline std::pair<PathCollection, PathCollection> split(const PathCollection& pc,
                                                       double train_fraction,
                                                       std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must be in (0, 1)");
    if (pc.empty()) throw std::invalid_argument("cannot split an empty path collection");

    PathCollection train(pc.vertices(), pc.max_length(), pc.delta());
    PathCollection test(pc.vertices(), pc.max_length(), pc.delta());
    rng::Engine eng(seed);
    for (int l = 1; l <= pc.max_length(); ++l) {
        for (const auto& [nodes, count] : pc.paths_of_length(l)) {
            std::uint64_t to_train = 0;
            for (std::uint64_t i = 0; i < count; ++i)
                if (rng::uniform_unit(eng) < train_fraction) ++to_train;
            if (to_train > 0) train.add(nodes, to_train);
            if (count - to_train > 0) test.add(nodes, count - to_train);
        }
    }
    return {std::move(train), std::move(test)};
}

}  // namespace tempoviz
