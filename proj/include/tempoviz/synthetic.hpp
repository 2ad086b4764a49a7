#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/rng.hpp"
#include "tempoviz/temporal_graph.hpp"

namespace tempoviz {

// Dynamic graphs with planted temporal clusters: a random regular topology
// carries two-edge sequences whose timestamps are then swapped so that
// length-2 causal paths preferentially stay within clusters. The aggregate
// topology and the timestamp multiset never change; only the temporal
// ordering does.
struct ClusterModelParams {
    std::uint32_t n = 30;          // vertex count, multiple of 3
    std::uint32_t degree = 4;      // regular degree of the static topology
    std::uint64_t num_sequences = 2000;
    std::uint64_t seed = 0;
    std::uint64_t swap_attempts = 0;  // 0 selects one attempt per sequence
};

struct SwapStats {
    std::uint64_t attempted = 0;
    std::uint64_t performed = 0;
    std::uint64_t skipped = 0;  // attempts with an empty candidate pool
};

struct ClusterModelResult {
    TemporalGraph graph;
    std::map<std::string, int> clusters;  // vertex name -> {0, 1, 2}
    SwapStats swaps;
};

namespace detail {

// Simple random regular graph via the pairing method: clone each vertex
// `degree` times, shuffle, pair consecutive stubs, reject pairings with
// loops or duplicate edges.
inline std::vector<std::vector<std::uint32_t>> random_regular_graph(std::uint32_t n,
                                                                    std::uint32_t degree,
                                                                    rng::Engine& eng) {
    constexpr int kMaxPairingAttempts = 1000;
    std::vector<std::uint32_t> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
        stubs.clear();
        for (std::uint32_t v = 0; v < n; ++v)
            stubs.insert(stubs.end(), degree, v);
        rng::shuffle(stubs, eng);

        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        bool simple = true;
        for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
            const std::uint32_t a = std::min(stubs[i], stubs[i + 1]);
            const std::uint32_t b = std::max(stubs[i], stubs[i + 1]);
            simple = a != b && seen.insert({a, b}).second;
        }
        if (!simple) continue;

        std::vector<std::vector<std::uint32_t>> adjacency(n);
        for (const auto& [a, b] : seen) {
            adjacency[a].push_back(b);
            adjacency[b].push_back(a);
        }
        for (auto& neighbours : adjacency) std::sort(neighbours.begin(), neighbours.end());
        return adjacency;
    }
    throw DataError("failed to generate a simple regular graph after " +
                    std::to_string(kMaxPairingAttempts) + " pairing attempts");
}

inline std::string synthetic_vertex_name(std::uint32_t v, std::uint32_t n) {
    std::size_t width = 1;
    for (std::uint32_t limit = 10; n > limit; limit *= 10) ++width;
    std::string digits = std::to_string(v);
    return "v" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace detail

inline ClusterModelResult generate_cluster_graph(const ClusterModelParams& params) {
    if (params.n < 6 || params.n % 3 != 0)
        throw std::invalid_argument("vertex count must be >= 6 and divisible by 3");
    if (params.degree < 2) throw std::invalid_argument("degree must be >= 2");
    if (params.degree >= params.n)
        throw std::invalid_argument("degree must be smaller than the vertex count");
    if (static_cast<std::uint64_t>(params.n) * params.degree % 2 != 0)
        throw std::invalid_argument("n * degree must be even for a regular graph");
    if (params.num_sequences < 1)
        throw std::invalid_argument("at least one sequence is required");

    rng::Engine eng(params.seed);
    const auto adjacency = detail::random_regular_graph(params.n, params.degree, eng);

    // Random assignment to three equal clusters.
    std::vector<std::uint32_t> order(params.n);
    for (std::uint32_t v = 0; v < params.n; ++v) order[v] = v;
    rng::shuffle(order, eng);
    std::vector<int> cluster_of(params.n);
    for (std::uint32_t i = 0; i < params.n; ++i)
        cluster_of[order[i]] = static_cast<int>(i / (params.n / 3));

    // Sequence i occupies base time 3i, so at a maximum time difference of 1
    // the only length-2 causal paths are the generated sequences themselves.
    struct Sequence {
        std::uint32_t v0, v1, v2;
    };
    std::vector<Sequence> sequences;
    sequences.reserve(params.num_sequences);
    for (std::uint64_t i = 0; i < params.num_sequences; ++i) {
        const auto v1 = static_cast<std::uint32_t>(rng::uniform_index(eng, params.n));
        const auto& neighbours = adjacency[v1];
        const std::uint64_t a = rng::uniform_index(eng, neighbours.size());
        std::uint64_t b = rng::uniform_index(eng, neighbours.size() - 1);
        if (b >= a) ++b;
        sequences.push_back({neighbours[a], v1, neighbours[b]});
    }

    // Candidate pools per middle vertex: sequences whose source stays in the
    // middle vertex's cluster while the target leaves it, and vice versa. A
    // swap exchanges the out-edge timestamps of one sequence from each pool,
    // turning them into one fully-within and one fully-cross path.
    std::vector<std::vector<std::uint64_t>> same_in_pool(params.n);
    std::vector<std::vector<std::uint64_t>> same_out_pool(params.n);
    auto classify = [&](std::uint64_t idx) {
        const Sequence& s = sequences[idx];
        const bool same_in = cluster_of[s.v0] == cluster_of[s.v1];
        const bool same_out = cluster_of[s.v2] == cluster_of[s.v1];
        if (same_in && !same_out) same_in_pool[s.v1].push_back(idx);
        if (!same_in && same_out) same_out_pool[s.v1].push_back(idx);
    };
    for (std::uint64_t i = 0; i < params.num_sequences; ++i) classify(i);

    auto remove_from = [](std::vector<std::uint64_t>& pool, std::uint64_t idx) {
        auto it = std::find(pool.begin(), pool.end(), idx);
        if (it != pool.end()) {
            *it = pool.back();
            pool.pop_back();
        }
    };

    SwapStats stats;
    const std::uint64_t attempts =
        params.swap_attempts == 0 ? params.num_sequences : params.swap_attempts;
    for (std::uint64_t attempt = 0; attempt < attempts; ++attempt) {
        ++stats.attempted;
        const std::uint32_t hub = sequences[attempt % params.num_sequences].v1;
        auto& outgoing = same_in_pool[hub];   // (u, v1, w): C(u) = C(v1) != C(w)
        auto& incoming = same_out_pool[hub];  // (x, v1, z): C(x) != C(v1) = C(z)
        if (outgoing.empty() || incoming.empty()) {
            ++stats.skipped;
            continue;
        }
        const std::uint64_t a = outgoing[rng::uniform_index(eng, outgoing.size())];
        const std::uint64_t b = incoming[rng::uniform_index(eng, incoming.size())];
        remove_from(outgoing, a);
        remove_from(incoming, b);
        // Exchanging the second timestamps moves target w to the sequence at
        // base time 3b and target z to the one at 3a; neither re-enters a
        // pool: one is now fully within-cluster, the other fully cross.
        std::swap(sequences[a].v2, sequences[b].v2);
        ++stats.performed;
    }

    std::vector<std::tuple<std::string, std::string, Timestamp>> edges;
    edges.reserve(2 * sequences.size());
    for (std::uint64_t i = 0; i < sequences.size(); ++i) {
        const Sequence& s = sequences[i];
        const auto t = static_cast<Timestamp>(3 * i);
        edges.emplace_back(detail::synthetic_vertex_name(s.v0, params.n),
                           detail::synthetic_vertex_name(s.v1, params.n), t);
        edges.emplace_back(detail::synthetic_vertex_name(s.v1, params.n),
                           detail::synthetic_vertex_name(s.v2, params.n), t + 1);
    }
    std::vector<std::string> all_names;
    all_names.reserve(params.n);
    for (std::uint32_t v = 0; v < params.n; ++v)
        all_names.push_back(detail::synthetic_vertex_name(v, params.n));

    ClusterModelResult result{TemporalGraph(edges, all_names), {}, stats};
    for (std::uint32_t v = 0; v < params.n; ++v)
        result.clusters[detail::synthetic_vertex_name(v, params.n)] = cluster_of[v];
    return result;
}

// Mean pairwise distance between vertices of the same cluster divided by the
// mean pairwise distance between vertices of different clusters; well below
// 1 means the drawing separates the clusters.
inline double intra_inter_distance_ratio(const Layout& layout,
                                         const std::map<std::string, int>& clusters) {
    std::set<int> distinct;
    for (const auto& [name, c] : clusters) distinct.insert(c);
    if (distinct.size() < 2)
        throw std::invalid_argument("distance ratio requires at least two clusters");

    std::vector<std::pair<std::string, int>> members(clusters.begin(), clusters.end());
    double intra_sum = 0.0, inter_sum = 0.0;
    std::uint64_t intra_count = 0, inter_count = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Vec2& pi = layout.position_of(members[i].first);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Vec2& pj = layout.position_of(members[j].first);
            const double dx = pi.x - pj.x;
            const double dy = pi.y - pj.y;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (members[i].second == members[j].second) {
                intra_sum += d;
                ++intra_count;
            } else {
                inter_sum += d;
                ++inter_count;
            }
        }
    }
    if (intra_count == 0)
        throw std::invalid_argument("distance ratio requires a cluster with >= 2 members");
    const double inter_mean = inter_sum / static_cast<double>(inter_count);
    if (inter_mean == 0.0)
        throw std::invalid_argument("distance ratio undefined: all positions coincide");
    return (intra_sum / static_cast<double>(intra_count)) / inter_mean;
}

}  // namespace tempoviz
