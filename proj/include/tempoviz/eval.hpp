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

#include "tempoviz/causal_paths.hpp"
#include "tempoviz/errors.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/metrics.hpp"
#include "tempoviz/path_collection.hpp"

namespace tempoviz {

// Repeated cross-validation protocol: split the path occurrences into train
// and test, lay out the training share at several maximum orders, then score
// the drawing against the held-out share.
struct ExperimentPlan {
    std::vector<int> orders;
    int repetitions = 100;
    double train_fraction = 0.7;
    double gamma = 10.0;  // percentile for the closeness prediction task
    std::uint64_t base_seed = 0;
};

struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (false positive rate, true positive rate)
    double auc = 0.0;
};

struct ExperimentRow {
    int order = 1;
    int repetition = 0;
    std::uint64_t edge_crossings = 0;
    double dispersion = 0.0;
    double eccentricity = 0.0;
    RocCurve roc;
};

struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation
};

struct OrderSummary {
    SummaryStats edge_crossings;
    SummaryStats dispersion;
    SummaryStats eccentricity;
    SummaryStats auc;
};

struct ExperimentReport {
    ExperimentPlan plan;
    std::vector<ExperimentRow> rows;  // sorted by (order, repetition)
    std::map<int, OrderSummary> summaries;
};

// Predict the top-gamma-percent closeness vertices from their distance to the
// layout barycentre (closer scores higher). Returns the threshold-sweep ROC
// and the Mann-Whitney AUC, which handles tied scores by average ranks.
inline RocCurve closeness_roc(const Layout& layout,
                              const std::map<std::string, double>& test_closeness,
                              double gamma) {
    if (test_closeness.empty())
        throw std::invalid_argument("closeness prediction needs at least one vertex");

    const std::vector<std::string> top = top_percentile(test_closeness, gamma);
    const std::set<std::string> positives(top.begin(), top.end());
    const std::size_t p = positives.size();
    const std::size_t q = test_closeness.size() - p;
    if (q == 0)
        throw std::invalid_argument("closeness prediction needs a non-empty negative class");

    const Vec2 centre = barycentre(layout.positions);
    std::map<std::string, double> score;
    for (const auto& [name, unused] : test_closeness)
        score[name] = -distance(layout.position_of(name), centre);

    // Ascending by score for rank assignment; ties get their average rank.
    auto ranked = detail::rank_by_score(score);
    std::reverse(ranked.begin(), ranked.end());
    double positive_rank_sum = 0.0;
    for (std::size_t i = 0; i < ranked.size();) {
        std::size_t j = i;
        while (j < ranked.size() && ranked[j].second == ranked[i].second) ++j;
        const double mean_rank = static_cast<double>(i + 1 + j) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (positives.count(ranked[k].first)) positive_rank_sum += mean_rank;
        i = j;
    }
    const double u_statistic =
        positive_rank_sum - static_cast<double>(p) * static_cast<double>(p + 1) / 2.0;

    RocCurve curve;
    curve.auc = u_statistic / (static_cast<double>(p) * static_cast<double>(q));

    // Sweep thresholds from the highest score down, one point per distinct
    // score value.
    std::reverse(ranked.begin(), ranked.end());
    curve.points.emplace_back(0.0, 0.0);
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < ranked.size();) {
        std::size_t j = i;
        while (j < ranked.size() && ranked[j].second == ranked[i].second) ++j;
        for (std::size_t k = i; k < j; ++k) {
            if (positives.count(ranked[k].first))
                ++tp;
            else
                ++fp;
        }
        curve.points.emplace_back(static_cast<double>(fp) / static_cast<double>(q),
                                  static_cast<double>(tp) / static_cast<double>(p));
        i = j;
    }
    return curve;
}

namespace detail {

inline SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double squares = 0.0;
        for (double v : values) squares += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(squares / static_cast<double>(values.size() - 1));
    }
    return s;
}

}  // namespace detail

inline ExperimentReport run_experiment(const PathCollection& pc, const ExperimentPlan& plan,
                                       const LayoutConfig& cfg) {
    if (plan.orders.empty()) throw std::invalid_argument("at least one order is required");
    for (int k : plan.orders)
        if (k < 1) throw std::invalid_argument("orders must be >= 1");
    if (plan.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    const int max_order = *std::max_element(plan.orders.begin(), plan.orders.end());
    if (max_order > pc.max_length())
        throw std::invalid_argument("an order exceeds the collection's max path length");

    // Edge crossings are always measured on the drawing of the first-order
    // edges of the full data, whatever order produced the layout.
    std::vector<std::pair<std::string, std::string>> aggregate_edges;
    for (const auto& [nodes, unused] : pc.paths_of_length(1))
        aggregate_edges.emplace_back(pc.vertices().name_of(nodes.front()),
                                     pc.vertices().name_of(nodes.back()));

    const std::vector<std::string> universe = pc.vertices().sorted_names();
    const std::set<std::string> universe_set(universe.begin(), universe.end());

    ExperimentReport report;
    report.plan = plan;
    for (int r = 0; r < plan.repetitions; ++r) {
        const std::uint64_t seed = plan.base_seed ^ static_cast<std::uint64_t>(r);
        const auto [train, test] = split(pc, plan.train_fraction, seed);
        const std::map<std::string, double> test_closeness =
            temporal_closeness(test, universe_set);
        for (int k : plan.orders) {
            try {
                LayoutConfig order_cfg = cfg;
                order_cfg.max_order = k;
                order_cfg.seed = seed;
                const Layout layout = compute_layout(train, universe, order_cfg);

                ExperimentRow row;
                row.order = k;
                row.repetition = r;
                row.edge_crossings = edge_crossing(layout, aggregate_edges);
                row.dispersion = causal_path_dispersion(layout, test);
                row.eccentricity = closeness_eccentricity(layout, test_closeness, plan.gamma);
                row.roc = closeness_roc(layout, test_closeness, plan.gamma);
                report.rows.push_back(std::move(row));
            } catch (const std::exception& e) {
                throw DataError("experiment failed at order " + std::to_string(k) +
                                ", repetition " + std::to_string(r) + ": " + e.what());
            }
        }
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.repetition < b.repetition;
    });

    for (int k : plan.orders) {
        if (report.summaries.count(k)) continue;
        std::vector<double> crossings, dispersion, eccentricity, auc;
        for (const auto& row : report.rows) {
            if (row.order != k) continue;
            crossings.push_back(static_cast<double>(row.edge_crossings));
            dispersion.push_back(row.dispersion);
            eccentricity.push_back(row.eccentricity);
            auc.push_back(row.roc.auc);
        }
        OrderSummary summary;
        summary.edge_crossings = detail::summarize(crossings);
        summary.dispersion = detail::summarize(dispersion);
        summary.eccentricity = detail::summarize(eccentricity);
        summary.auc = detail::summarize(auc);
        report.summaries.emplace(k, summary);
    }
    return report;
}

}  // namespace tempoviz
