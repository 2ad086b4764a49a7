#include "tempoviz/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tempoviz/layout.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/temporal_graph.hpp"

namespace tv = tempoviz;

namespace {

tv::Layout make_layout(std::vector<std::tuple<std::string, double, double>> entries) {
    std::sort(entries.begin(), entries.end());
    tv::Layout layout;
    for (const auto& [name, x, y] : entries) {
        layout.names.push_back(name);
        layout.positions.push_back({x, y});
    }
    return layout;
}

tv::PathCollection make_collection(
    int max_length,
    const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>& paths) {
    tv::VertexTable table;
    for (const auto& [nodes, count] : paths) {
        (void)count;
        for (const auto& n : nodes) table.intern(n);
    }
    tv::PathCollection pc(table, max_length, std::nullopt);
    for (const auto& [nodes, count] : paths) {
        tv::PathKey key;
        for (const auto& n : nodes) key.push_back(pc.vertices().id_of(n));
        pc.add(key, count);
    }
    return pc;
}

TEST(Barycentre, MeanOfPointsAndEmptyGuard) {
    const tv::Vec2 c = tv::barycentre({{0, 0}, {2, 0}, {1, 3}});
    EXPECT_DOUBLE_EQ(c.x, 1.0);
    EXPECT_DOUBLE_EQ(c.y, 1.0);
    EXPECT_THROW(tv::barycentre({}), std::invalid_argument);
}

TEST(Distance, Euclidean) {
    EXPECT_DOUBLE_EQ(tv::distance({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(tv::distance({1, 1}, {1, 1}), 0.0);
}

TEST(EdgeCrossing, CountsProperCrossings) {
    const auto layout = make_layout({{"a", 0, 0}, {"b", 1, 1}, {"c", 0, 1}, {"d", 1, 0}});
    EXPECT_EQ(tv::edge_crossing(layout, {{"a", "b"}, {"c", "d"}}), 1u);
    // parallel horizontals never cross
    const auto flat = make_layout({{"a", 0, 0}, {"b", 1, 0}, {"c", 0, 1}, {"d", 1, 1}});
    EXPECT_EQ(tv::edge_crossing(flat, {{"a", "b"}, {"c", "d"}}), 0u);
}

TEST(EdgeCrossing, SharedVertexPairsAreExcluded) {
    const auto layout = make_layout({{"a", 0, 0}, {"b", 2, 2}, {"c", 2, 0}});
    EXPECT_EQ(tv::edge_crossing(layout, {{"a", "b"}, {"a", "c"}, {"b", "c"}}), 0u);
}

TEST(EdgeCrossing, DirectedDuplicatesCollapseAndLoopsDrop) {
    const auto layout = make_layout({{"a", 0, 0}, {"b", 1, 1}, {"c", 0, 1}, {"d", 1, 0}});
    const std::vector<std::pair<std::string, std::string>> edges{
        {"a", "b"}, {"b", "a"}, {"a", "b"}, {"c", "d"}, {"d", "d"}};
    EXPECT_EQ(tv::edge_crossing(layout, edges), 1u);
}

TEST(EdgeCrossing, EndpointTouchIsNotACrossing) {
    // cd ends exactly on the interior of ab
    const auto layout = make_layout({{"a", 0, 0}, {"b", 2, 0}, {"c", 1, 0}, {"d", 1, 5}});
    EXPECT_EQ(tv::edge_crossing(layout, {{"a", "b"}, {"c", "d"}}), 0u);
}

TEST(Dispersion, SinglePathCoveringAllVerticesIsOne) {
    const auto pc = make_collection(2, {{{"a", "b", "c"}, 1}});
    const auto layout = make_layout({{"a", 0, 0}, {"b", 3, 1}, {"c", -2, 4}});
    EXPECT_NEAR(tv::causal_path_dispersion(layout, pc), 1.0, 1e-12);
}

TEST(Dispersion, HandComputedExample) {
    const auto pc = make_collection(2, {{{"a", "b"}, 2}, {{"a", "b", "c"}, 1}});
    const auto layout = make_layout({{"a", 0, 0}, {"b", 2, 0}, {"c", 0, 2}});
    // path ab: barycentre (1,0), spread 1. path abc: barycentre (2/3, 2/3),
    // spread = (sqrt(8)/3 + 2*sqrt(20)/3) / 3. global equals the abc spread.
    const double abc = (std::sqrt(8.0) / 3.0 + 2.0 * std::sqrt(20.0) / 3.0) / 3.0;
    const double expected = ((2.0 * 1.0 + abc) / 3.0) / abc;
    EXPECT_NEAR(tv::causal_path_dispersion(layout, pc), expected, 1e-12);
}

TEST(Dispersion, InvariantUnderFrequencyScaling) {
    const auto pc1 = make_collection(2, {{{"a", "b"}, 3}, {{"b", "c"}, 5}, {{"a", "b", "c"}, 2}});
    const auto pc2 = make_collection(2, {{{"a", "b"}, 6}, {{"b", "c"}, 10}, {{"a", "b", "c"}, 4}});
    const auto layout = make_layout({{"a", 0.3, 1.7}, {"b", 2.2, 0.4}, {"c", 1.1, 3.9}});
    EXPECT_EQ(tv::causal_path_dispersion(layout, pc1), tv::causal_path_dispersion(layout, pc2));
}

TEST(Dispersion, InvariantUnderSimilarityTransforms) {
    const auto pc = make_collection(2, {{{"a", "b"}, 1}, {{"b", "c"}, 2}, {{"a", "b", "c"}, 1}});
    const auto base = make_layout({{"a", 0.1, 0.9}, {"b", 1.4, 0.3}, {"c", 0.7, 2.2}});
    const double ref = tv::causal_path_dispersion(base, pc);

    auto transformed = base;
    for (auto& p : transformed.positions) p = {p.x + 10.0, p.y - 3.0};  // translate
    EXPECT_NEAR(tv::causal_path_dispersion(transformed, pc), ref, 1e-12);

    transformed = base;
    for (auto& p : transformed.positions) p = {-p.y, p.x};  // rotate 90 degrees
    EXPECT_NEAR(tv::causal_path_dispersion(transformed, pc), ref, 1e-12);

    transformed = base;
    for (auto& p : transformed.positions) p = {3.0 * p.x, 3.0 * p.y};  // uniform scale
    EXPECT_NEAR(tv::causal_path_dispersion(transformed, pc), ref, 1e-12);
}

TEST(Dispersion, Guards) {
    tv::PathCollection empty(tv::VertexTable{}, 2, std::nullopt);
    const auto layout = make_layout({{"a", 0, 0}});
    EXPECT_THROW(tv::causal_path_dispersion(layout, empty), std::invalid_argument);

    const auto pc = make_collection(1, {{{"a", "b"}, 1}});
    const auto flat = make_layout({{"a", 1, 1}, {"b", 1, 1}});
    EXPECT_THROW(tv::causal_path_dispersion(flat, pc), std::invalid_argument);
}

TEST(TemporalCloseness, SinglePathFixedPoint) {
    const auto pc = make_collection(2, {{{"a", "b", "c"}, 1}});
    const auto cc = tv::temporal_closeness(pc, {});
    ASSERT_EQ(cc.size(), 3u);
    EXPECT_EQ(cc.at("a"), 1.5);
    EXPECT_EQ(cc.at("b"), 2.0);
    EXPECT_EQ(cc.at("c"), 1.5);
}

TEST(TemporalCloseness, InvariantUnderDuplication) {
    const auto once = tv::temporal_closeness(make_collection(2, {{{"a", "b", "c"}, 1}}), {});
    const auto many = tv::temporal_closeness(make_collection(2, {{{"a", "b", "c"}, 7}}), {});
    EXPECT_EQ(once, many);
}

TEST(TemporalCloseness, AccumulatesAcrossPaths) {
    const auto pc = make_collection(2, {{{"a", "c"}, 1}, {{"a", "b", "c"}, 1}});
    const auto cc = tv::temporal_closeness(pc, {});
    // pair (a,c): 2 co-occurrences over gaps 1+2; pairs (a,b) and (b,c): 1/1
    EXPECT_DOUBLE_EQ(cc.at("a"), 1.0 + 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(cc.at("b"), 2.0);
    EXPECT_DOUBLE_EQ(cc.at("c"), 1.0 + 2.0 / 3.0);
}

TEST(TemporalCloseness, RestrictsToRequestedVertices) {
    const auto pc = make_collection(2, {{{"a", "b", "c"}, 1}});
    const auto cc = tv::temporal_closeness(pc, {"a", "c"});
    ASSERT_EQ(cc.size(), 2u);
    EXPECT_EQ(cc.count("b"), 0u);
    EXPECT_DOUBLE_EQ(cc.at("a"), 0.5);  // only the (a,c) pair remains
    EXPECT_DOUBLE_EQ(cc.at("c"), 0.5);
}

TEST(TemporalCloseness, PathlessVerticesScoreZero) {
    auto pc = make_collection(1, {{{"a", "b"}, 1}});
    pc.mutable_vertices().intern("ghost");
    const auto cc = tv::temporal_closeness(pc, {});
    EXPECT_DOUBLE_EQ(cc.at("ghost"), 0.0);
    EXPECT_GT(cc.at("a"), 0.0);
}

TEST(TemporalCloseness, WalksUseFirstOccurrenceIndices) {
    const auto pc = make_collection(2, {{{"a", "b", "a"}, 1}});
    const auto cc = tv::temporal_closeness(pc, {});
    EXPECT_DOUBLE_EQ(cc.at("a"), 1.0);
    EXPECT_DOUBLE_EQ(cc.at("b"), 1.0);
}

TEST(TopPercentile, CeilCountAndTieBreaks) {
    const std::map<std::string, double> score{{"a", 3}, {"b", 2}, {"c", 2}, {"d", 1}};
    EXPECT_EQ(tv::top_percentile(score, 50),
              (std::vector<std::string>{"a", "b"}));  // tie b/c broken by name
    EXPECT_EQ(tv::top_percentile(score, 1), (std::vector<std::string>{"a"}));
    EXPECT_EQ(tv::top_percentile(score, 100).size(), 4u);
    EXPECT_EQ(tv::top_percentile(score, 75).size(), 3u);
    EXPECT_THROW(tv::top_percentile(score, 0.0), std::invalid_argument);
    EXPECT_THROW(tv::top_percentile(score, 100.5), std::invalid_argument);
}

TEST(TopPercentile, CountFormula) {
    EXPECT_EQ(tv::detail::percentile_count(10, 10), 1u);
    EXPECT_EQ(tv::detail::percentile_count(30, 10), 3u);
    EXPECT_EQ(tv::detail::percentile_count(10, 25), 3u);  // ceil(2.5)
    EXPECT_EQ(tv::detail::percentile_count(4, 100), 4u);
}

TEST(ClosenessEccentricity, FullPercentileIsExactlyOne) {
    const auto layout =
        make_layout({{"a", 0.2, 0.9}, {"b", 1.7, 0.1}, {"c", 0.4, 1.3}, {"d", 2.2, 2.0}});
    const std::map<std::string, double> cc{{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}};
    EXPECT_EQ(tv::closeness_eccentricity(layout, cc, 100.0), 1.0);
}

TEST(ClosenessEccentricity, HandComputedExample) {
    const auto layout = make_layout({{"a", 1, 1}, {"b", 0, 0}, {"c", 2, 0}, {"d", 0, 2}});
    const std::map<std::string, double> cc{{"a", 10}, {"b", 5}, {"c", 1}, {"d", 0}};
    // barycentre (0.75, 0.75); top-25% = {a}
    const double da = std::sqrt(2 * 0.25 * 0.25);
    const double db = std::sqrt(2 * 0.75 * 0.75);
    const double dc = std::sqrt(1.25 * 1.25 + 0.75 * 0.75);
    const double dd = dc;
    const double expected = da / ((da + db + dc + dd) / 4.0);
    EXPECT_NEAR(tv::closeness_eccentricity(layout, cc, 25.0), expected, 1e-12);
    EXPECT_LT(tv::closeness_eccentricity(layout, cc, 25.0), 1.0);
}

TEST(ClosenessEccentricity, Guards) {
    const auto layout = make_layout({{"a", 1, 1}, {"b", 1, 1}});
    const std::map<std::string, double> cc{{"a", 2}, {"b", 1}};
    EXPECT_THROW(tv::closeness_eccentricity(layout, cc, 50.0), std::invalid_argument);
    EXPECT_THROW(tv::closeness_eccentricity(layout, {}, 50.0), std::invalid_argument);
    const auto ok = make_layout({{"a", 0, 0}, {"b", 1, 1}});
    EXPECT_THROW(tv::closeness_eccentricity(ok, cc, 0.0), std::invalid_argument);
    EXPECT_THROW(tv::closeness_eccentricity(ok, cc, 101.0), std::invalid_argument);
}

}  // namespace
