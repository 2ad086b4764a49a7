#include "tempoviz/causal_paths.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/temporal_graph.hpp"

namespace tv = tempoviz;

namespace {

using Edge = std::tuple<std::string, std::string, tv::Timestamp>;

// Independent oracle: enumerate every chain of edge instances whose
// consecutive timestamps satisfy 0 < dt <= delta, by depth-first extension
// over the raw instance list. Counts occurrences per vertex sequence.
struct InstanceEdge {
    std::string src, dst;
    tv::Timestamp t;
};

using OracleCounts = std::map<std::vector<std::string>, std::uint64_t>;

void oracle_extend(const std::vector<InstanceEdge>& instances, std::vector<std::string>& nodes,
                   tv::Timestamp last_t, tv::Timestamp delta, int max_length,
                   OracleCounts& counts) {
    if (static_cast<int>(nodes.size()) - 1 >= max_length) return;
    for (const auto& e : instances) {
        if (e.src != nodes.back()) continue;
        const tv::Timestamp dt = e.t - last_t;
        if (dt <= 0 || dt > delta) continue;
        nodes.push_back(e.dst);
        ++counts[nodes];
        oracle_extend(instances, nodes, e.t, delta, max_length, counts);
        nodes.pop_back();
    }
}

OracleCounts oracle_enumerate(const std::vector<Edge>& edges, tv::Timestamp delta,
                              int max_length) {
    std::vector<InstanceEdge> instances;
    for (const auto& [s, d, t] : edges) instances.push_back({s, d, t});
    OracleCounts counts;
    for (const auto& e : instances) {
        std::vector<std::string> nodes{e.src, e.dst};
        ++counts[nodes];
        oracle_extend(instances, nodes, e.t, delta, max_length, counts);
    }
    return counts;
}

OracleCounts to_named_counts(const tv::PathCollection& pc) {
    OracleCounts out;
    for (int l = 1; l <= pc.max_length(); ++l) {
        for (const auto& [key, count] : pc.paths_of_length(l)) {
            std::vector<std::string> named;
            for (tv::VertexId v : key) named.push_back(pc.vertices().name_of(v));
            out[named] = count;
        }
    }
    return out;
}

std::uint64_t count_of(const tv::PathCollection& pc, std::initializer_list<const char*> names) {
    tv::PathKey key;
    for (const char* n : names) key.push_back(pc.vertices().id_of(n));
    return pc.count_of(key);
}

TEST(ExtractCausalPaths, TwoEdgeChainWithinDelta) {
    tv::TemporalGraph g({{"a", "b", 1}, {"b", "c", 2}}, {});
    const auto pc = tv::extract_causal_paths(g, 1, 2);
    EXPECT_EQ(count_of(pc, {"a", "b"}), 1u);
    EXPECT_EQ(count_of(pc, {"b", "c"}), 1u);
    EXPECT_EQ(count_of(pc, {"a", "b", "c"}), 1u);
}

TEST(ExtractCausalPaths, GapBeyondDeltaBreaksTheChain) {
    tv::TemporalGraph g({{"a", "b", 1}, {"b", "c", 5}}, {});
    const auto pc = tv::extract_causal_paths(g, 3, 2);
    EXPECT_EQ(count_of(pc, {"a", "b", "c"}), 0u);
    EXPECT_EQ(pc.total_occurrences_of_length(2), 0u);
}

TEST(ExtractCausalPaths, EqualTimestampsDoNotChain) {
    tv::TemporalGraph g({{"a", "b", 4}, {"b", "c", 4}}, {});
    const auto pc = tv::extract_causal_paths(g, 2, 2);
    EXPECT_EQ(count_of(pc, {"a", "b", "c"}), 0u);
}

TEST(ExtractCausalPaths, MultiplicitiesMultiplyAlongTheChain) {
    // 2 copies of a->b at t=1 and 3 copies of b->c at t=2: 6 chained walks.
    tv::TemporalGraph g({{"a", "b", 1}, {"a", "b", 1}, {"b", "c", 2}, {"b", "c", 2},
                         {"b", "c", 2}},
                        {});
    const auto pc = tv::extract_causal_paths(g, 1, 2);
    EXPECT_EQ(count_of(pc, {"a", "b"}), 2u);
    EXPECT_EQ(count_of(pc, {"b", "c"}), 3u);
    EXPECT_EQ(count_of(pc, {"a", "b", "c"}), 6u);
}

TEST(ExtractCausalPaths, LengthOneCountsEqualAggregateWeights) {
    std::vector<Edge> edges{{"a", "b", 0}, {"a", "b", 9}, {"b", "a", 3}, {"c", "c", 5}};
    tv::TemporalGraph g(edges, {});
    const auto pc = tv::extract_causal_paths(g, 2, 3);
    const auto agg = tv::aggregate(g);
    EXPECT_EQ(count_of(pc, {"a", "b"}), agg.weight("a", "b"));
    EXPECT_EQ(count_of(pc, {"b", "a"}), agg.weight("b", "a"));
    EXPECT_EQ(count_of(pc, {"c", "c"}), agg.weight("c", "c"));
    EXPECT_EQ(pc.total_occurrences_of_length(1), g.edge_count());
}

TEST(ExtractCausalPaths, RepeatedVerticesAllowedInWalks) {
    tv::TemporalGraph g({{"a", "b", 1}, {"b", "a", 2}, {"a", "b", 3}}, {});
    const auto pc = tv::extract_causal_paths(g, 1, 3);
    EXPECT_EQ(count_of(pc, {"a", "b", "a"}), 1u);
    EXPECT_EQ(count_of(pc, {"a", "b", "a", "b"}), 1u);
}

TEST(ExtractCausalPaths, ValidatesArguments) {
    tv::TemporalGraph g({{"a", "b", 1}}, {});
    EXPECT_THROW(tv::extract_causal_paths(g, 0, 2), std::invalid_argument);
    EXPECT_THROW(tv::extract_causal_paths(g, -3, 2), std::invalid_argument);
    EXPECT_THROW(tv::extract_causal_paths(g, 1, 0), std::invalid_argument);
}

TEST(ExtractCausalPaths, PartialPathCapAborts) {
    std::vector<Edge> edges;
    for (int t = 0; t < 10; ++t)
        for (int v = 0; v < 4; ++v)
            for (int w = 0; w < 4; ++w)
                if (v != w)
                    edges.push_back({"v" + std::to_string(v), "v" + std::to_string(w), t});
    tv::TemporalGraph g(edges, {});
    tv::ExtractOptions opts;
    opts.partial_path_cap = 10;
    EXPECT_THROW(tv::extract_causal_paths(g, 2, 5, opts), tv::ResourceCapError);
}

TEST(ExtractCausalPaths, MatchesOracleOnRandomGraphs) {
    std::mt19937_64 eng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(eng() % 6);
        const int m = 1 + static_cast<int>(eng() % 16);
        const tv::Timestamp delta = 1 + static_cast<tv::Timestamp>(eng() % 3);
        const int max_length = 1 + static_cast<int>(eng() % 4);
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            edges.push_back({"v" + std::to_string(eng() % n), "v" + std::to_string(eng() % n),
                             static_cast<tv::Timestamp>(eng() % 12)});
        tv::TemporalGraph g(edges, {});
        const auto pc = tv::extract_causal_paths(g, delta, max_length);
        EXPECT_EQ(to_named_counts(pc), oracle_enumerate(edges, delta, max_length))
            << "trial " << trial << " n=" << n << " m=" << m << " delta=" << delta
            << " K=" << max_length;
    }
}

TEST(WindowTrajectories, CountsEveryContiguousSubPath) {
    const auto pc = tv::window_trajectories({{{"a", "b", "c"}, 2}}, 2);
    EXPECT_EQ(count_of(pc, {"a", "b"}), 2u);
    EXPECT_EQ(count_of(pc, {"b", "c"}), 2u);
    EXPECT_EQ(count_of(pc, {"a", "b", "c"}), 2u);
    EXPECT_EQ(pc.total_occurrences(), 6u);
    EXPECT_FALSE(pc.delta().has_value());
}

TEST(WindowTrajectories, TruncatesAtMaxLength) {
    const auto pc = tv::window_trajectories({{{"a", "b", "c", "d"}, 1}}, 2);
    EXPECT_EQ(pc.total_occurrences_of_length(1), 3u);
    EXPECT_EQ(pc.total_occurrences_of_length(2), 2u);
    EXPECT_EQ(pc.max_length(), 2);
}

TEST(WindowTrajectories, RejectsDegenerateInput) {
    EXPECT_THROW(tv::window_trajectories({{{"a"}, 1}}, 2), tv::DataError);
    EXPECT_THROW(tv::window_trajectories({{{"a", "b"}, 0}}, 2), tv::DataError);
    EXPECT_THROW(tv::window_trajectories({{{"a", "b"}, 1}}, 0), std::invalid_argument);
}

TEST(Split, ConservesCountsPerPath) {
    tv::TemporalGraph g({{"a", "b", 1}, {"b", "c", 2}, {"a", "b", 3}, {"b", "c", 4}}, {});
    const auto pc = tv::extract_causal_paths(g, 1, 2);
    for (std::uint64_t seed : {0ULL, 1ULL, 77ULL}) {
        const auto [train, test] = tv::split(pc, 0.7, seed);
        for (int l = 1; l <= pc.max_length(); ++l) {
            for (const auto& [key, count] : pc.paths_of_length(l)) {
                EXPECT_EQ(train.count_of(key) + test.count_of(key), count);
            }
        }
        EXPECT_EQ(train.max_length(), pc.max_length());
        EXPECT_EQ(train.delta(), pc.delta());
        EXPECT_EQ(train.vertices().size(), pc.vertices().size());
    }
}

TEST(Split, DeterministicPerSeed) {
    tv::TemporalGraph g({{"a", "b", 1}, {"b", "c", 2}, {"c", "a", 3}}, {});
    tv::PathCollection big = tv::extract_causal_paths(g, 1, 2);
    // amplify counts so the split has room to differ between seeds
    tv::PathCollection pc(big.vertices(), big.max_length(), big.delta());
    for (int l = 1; l <= big.max_length(); ++l)
        for (const auto& [key, count] : big.paths_of_length(l)) pc.add(key, count * 50);

    const auto [tr1, te1] = tv::split(pc, 0.5, 42);
    const auto [tr2, te2] = tv::split(pc, 0.5, 42);
    const auto [tr3, te3] = tv::split(pc, 0.5, 43);
    for (int l = 1; l <= pc.max_length(); ++l) {
        EXPECT_EQ(tr1.paths_of_length(l), tr2.paths_of_length(l));
    }
    bool any_diff = false;
    for (int l = 1; l <= pc.max_length(); ++l)
        if (tr1.paths_of_length(l) != tr3.paths_of_length(l)) any_diff = true;
    EXPECT_TRUE(any_diff);
}

TEST(Split, ValidatesArguments) {
    tv::TemporalGraph g({{"a", "b", 1}}, {});
    const auto pc = tv::extract_causal_paths(g, 1, 1);
    EXPECT_THROW(tv::split(pc, 0.0, 1), std::invalid_argument);
    EXPECT_THROW(tv::split(pc, 1.0, 1), std::invalid_argument);
    tv::PathCollection empty(tv::VertexTable{}, 2, std::nullopt);
    EXPECT_THROW(tv::split(empty, 0.5, 1), std::invalid_argument);
}

}  // namespace
