#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tempoviz/errors.hpp"
#include "tempoviz/eval.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/metrics.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/temporal_graph.hpp"

namespace tempoviz::io {

// 17 significant digits: enough for any double to survive a write/read
// round trip bit-exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_fingerprint(std::uint64_t fp) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fp));
    return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(static_cast<char>(c));
                }
        }
    }
    return out;
}

inline std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

inline std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("failed to read input stream");
    return buf.str();
}

inline std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == delim) {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

inline std::int64_t parse_int64(const std::string& s, const std::string& what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DataError(what + ": not an integer: '" + s + "'");
    return value;
}

inline std::uint64_t parse_uint64(const std::string& s, const std::string& what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DataError(what + ": not a non-negative integer: '" + s + "'");
    return value;
}

inline double parse_number(const std::string& s, const std::string& what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DataError(what + ": not a number: '" + s + "'");
    return value;
}

// SAX handler that only checks for duplicate keys; nlohmann's DOM parser
// silently keeps the last duplicate, which would mask data corruption.
struct DuplicateKeyChecker {
    std::vector<std::set<std::string>> scopes;
    std::string error;

    bool null() { return true; }
    bool boolean(bool) { return true; }
    bool number_integer(nlohmann::json::number_integer_t) { return true; }
    bool number_unsigned(nlohmann::json::number_unsigned_t) { return true; }
    bool number_float(nlohmann::json::number_float_t, const std::string&) { return true; }
    bool string(std::string&) { return true; }
    bool binary(nlohmann::json::binary_t&) { return true; }
    bool start_object(std::size_t) {
        scopes.emplace_back();
        return true;
    }
    bool key(std::string& k) {
        if (!scopes.back().insert(k).second) {
            error = "duplicate key '" + k + "'";
            return false;
        }
        return true;
    }
    bool end_object() {
        scopes.pop_back();
        return true;
    }
    bool start_array(std::size_t) { return true; }
    bool end_array() { return true; }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
        error = ex.what();
        return false;
    }
};

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
    DuplicateKeyChecker checker;
    if (!nlohmann::json::sax_parse(text, &checker))
        throw DataError(what + ": " + checker.error);
    return nlohmann::json::parse(text);
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw DataError(message);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Temporal edge lists: one "source target time" row per line, delimiter
// tab/comma/space (auto-detected from the first data row unless forced),
// '#' starts a comment line.
// ---------------------------------------------------------------------------

struct EdgeParseOptions {
    bool directed = true;   // false emits both orientations per row
    char delimiter = '\0';  // '\0' = auto-detect
};

inline TemporalGraph parse_temporal_edges(std::istream& in, const EdgeParseOptions& opts = {}) {
    std::vector<std::tuple<std::string, std::string, Timestamp>> edges;
    char delim = opts.delimiter;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (delim == '\0') {
            if (line.find('\t') != std::string::npos) delim = '\t';
            else if (line.find(',') != std::string::npos) delim = ',';
            else if (line.find(' ') != std::string::npos) delim = ' ';
            else
                throw DataError("line " + std::to_string(line_no) +
                                ": no delimiter found in '" + line + "'");
        }
        const auto fields = detail::split_fields(line, delim);
        if (fields.size() != 3)
            throw DataError("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                            std::to_string(fields.size()) + " in '" + line + "'");
        if (fields[0].empty() || fields[1].empty())
            throw DataError("line " + std::to_string(line_no) + ": empty vertex name in '" +
                            line + "'");
        const std::int64_t t =
            detail::parse_int64(fields[2], "line " + std::to_string(line_no));
        if (t < 0)
            throw DataError("line " + std::to_string(line_no) + ": negative timestamp in '" +
                            line + "'");
        edges.emplace_back(fields[0], fields[1], t);
        if (!opts.directed && fields[0] != fields[1])
            edges.emplace_back(fields[1], fields[0], t);
    }
    return TemporalGraph(edges);
}

inline void write_temporal_edges(std::ostream& out, const TemporalGraph& g,
                                 char delimiter = ',') {
    for (const auto& e : g.edges()) {
        const std::string& src = g.vertices().name_of(e.source);
        const std::string& dst = g.vertices().name_of(e.target);
        for (const std::string* name : {&src, &dst})
            if (name->find(delimiter) != std::string::npos ||
                name->find('\n') != std::string::npos)
                throw DataError("vertex name contains the delimiter or a newline: '" + *name +
                                "'");
        out << src << delimiter << dst << delimiter << e.time << '\n';
    }
}

// ---------------------------------------------------------------------------
// Trajectory lists: comma-separated node names per line, optionally followed
// by a tab and an integer frequency (default 1).
// ---------------------------------------------------------------------------

inline std::vector<std::pair<std::vector<std::string>, std::uint64_t>> parse_trajectories(
    std::istream& in) {
    std::vector<std::pair<std::vector<std::string>, std::uint64_t>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const std::string where = "line " + std::to_string(line_no);

        std::uint64_t freq = 1;
        std::string nodes_part = line;
        if (const auto tab = line.find('\t'); tab != std::string::npos) {
            nodes_part = line.substr(0, tab);
            const std::string freq_part = line.substr(tab + 1);
            freq = detail::parse_uint64(freq_part, where);
            if (freq == 0) throw DataError(where + ": frequency must be positive");
        }
        const auto nodes = detail::split_fields(nodes_part, ',');
        if (nodes.size() < 2)
            throw DataError(where + ": a trajectory needs at least 2 nodes: '" + line + "'");
        for (const auto& n : nodes)
            if (n.empty()) throw DataError(where + ": empty node name in '" + line + "'");
        out.emplace_back(nodes, freq);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path collection JSON: the interchange format between extraction and all
// downstream commands. Canonical key order makes serialization stable under
// re-parsing.
// ---------------------------------------------------------------------------

inline void write_path_collection(std::ostream& out, const PathCollection& pc) {
    for (const auto& name : pc.vertices().names())
        if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
            throw DataError("vertex name contains a comma or newline: '" + name + "'");

    out << "{\n";
    out << "  \"format\": \"path-collection/v1\",\n";
    out << "  \"max_length\": " << pc.max_length() << ",\n";
    if (pc.delta()) out << "  \"delta\": " << *pc.delta() << ",\n";

    const auto names = pc.vertices().sorted_names();
    out << "  \"vertices\": [";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << (i ? ", " : "") << detail::quoted(names[i]);
    out << "],\n";

    out << "  \"paths\": {";
    bool first_group = true;
    for (int len = 1; len <= pc.max_length(); ++len) {
        const auto& group = pc.paths_of_length(len);
        if (group.empty()) continue;
        std::vector<std::pair<std::string, std::uint64_t>> rows;
        rows.reserve(group.size());
        for (const auto& [nodes, count] : group)
            rows.emplace_back(pc.format_path(nodes), count);
        std::sort(rows.begin(), rows.end());

        out << (first_group ? "" : ",") << "\n    \"" << len << "\": {";
        first_group = false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            out << (i ? "," : "") << "\n      " << detail::quoted(rows[i].first) << ": "
                << rows[i].second;
        out << "\n    }";
    }
    out << (first_group ? "}" : "\n  }") << "\n}\n";
}

inline PathCollection read_path_collection(std::istream& in) {
    const auto doc = detail::parse_json(detail::read_all(in), "path collection");
    detail::require(doc.is_object(), "path collection: top level must be an object");
    detail::require(doc.value("format", "") == "path-collection/v1",
                    "path collection: unknown format tag");
    detail::require(doc.contains("max_length") && doc["max_length"].is_number_integer(),
                    "path collection: missing integer max_length");
    const int max_length = doc["max_length"].get<int>();
    detail::require(max_length >= 1, "path collection: max_length must be >= 1");

    std::optional<Timestamp> delta;
    if (doc.contains("delta") && !doc["delta"].is_null()) {
        detail::require(doc["delta"].is_number_integer(),
                        "path collection: delta must be an integer");
        delta = doc["delta"].get<Timestamp>();
        detail::require(*delta > 0, "path collection: delta must be positive");
    }

    detail::require(doc.contains("vertices") && doc["vertices"].is_array(),
                    "path collection: missing vertices array");
    VertexTable table;
    for (const auto& v : doc["vertices"]) {
        detail::require(v.is_string(), "path collection: vertex names must be strings");
        const auto name = v.get<std::string>();
        detail::require(!name.empty(), "path collection: empty vertex name");
        detail::require(!table.contains(name), "path collection: duplicate vertex '" + name + "'");
        table.intern(name);
    }

    PathCollection pc(std::move(table), max_length, delta);
    detail::require(doc.contains("paths") && doc["paths"].is_object(),
                    "path collection: missing paths object");
    for (const auto& [len_key, group] : doc["paths"].items()) {
        const std::int64_t len = detail::parse_int64(len_key, "path collection length key");
        detail::require(len >= 1 && len <= max_length,
                        "path collection: length group " + len_key + " out of range");
        detail::require(group.is_object(), "path collection: length group must be an object");
        for (const auto& [path_key, count_json] : group.items()) {
            const auto parts = detail::split_fields(path_key, ',');
            detail::require(static_cast<std::int64_t>(parts.size()) == len + 1,
                            "path collection: path '" + path_key + "' does not have " +
                                std::to_string(len + 1) + " nodes");
            PathKey nodes;
            nodes.reserve(parts.size());
            for (const auto& part : parts) {
                detail::require(pc.vertices().contains(part),
                                "path collection: unknown vertex '" + part + "' in path '" +
                                    path_key + "'");
                nodes.push_back(pc.vertices().id_of(part));
            }
            detail::require(count_json.is_number_unsigned() || count_json.is_number_integer(),
                            "path collection: count of '" + path_key + "' must be an integer");
            const auto count = count_json.get<std::int64_t>();
            detail::require(count >= 1,
                            "path collection: count of '" + path_key + "' must be >= 1");
            pc.add(nodes, static_cast<std::uint64_t>(count));
        }
    }
    return pc;
}

// ---------------------------------------------------------------------------
// Layouts: JSON with a provenance block, or bare vertex,x,y CSV. Both round-
// trip positions bit-exactly.
// ---------------------------------------------------------------------------

inline void write_layout_json(std::ostream& out, const Layout& layout) {
    out << "{\n";
    out << "  \"format\": \"layout/v1\",\n";
    out << "  \"positions\": {";
    for (std::size_t i = 0; i < layout.names.size(); ++i) {
        out << (i ? "," : "") << "\n    " << detail::quoted(layout.names[i]) << ": ["
            << format_double(layout.positions[i].x) << ", "
            << format_double(layout.positions[i].y) << "]";
    }
    out << (layout.names.empty() ? "}" : "\n  }") << ",\n";

    const LayoutProvenance& prov = layout.provenance;
    out << "  \"provenance\": {\n";
    out << "    \"seed\": " << prov.config.seed << ",\n";
    out << "    \"max_order\": " << prov.config.max_order << ",\n";
    out << "    \"iterations\": " << prov.config.iterations << ",\n";
    out << "    \"uniform_weights\": " << (prov.config.uniform_path_weights ? "true" : "false")
        << ",\n";
    out << "    \"alphas\": {";
    bool first = true;
    for (const auto& [k, alpha] : prov.config.alphas) {
        out << (first ? "" : ", ") << "\"" << k << "\": " << format_double(alpha);
        first = false;
    }
    out << "},\n";
    out << "    \"ideal_length\": " << format_double(prov.config.ideal_length) << ",\n";
    out << "    \"initial_temperature\": " << format_double(prov.config.initial_temperature)
        << ",\n";
    out << "    \"resolved_ideal_length\": " << format_double(prov.resolved_ideal_length)
        << ",\n";
    out << "    \"data_fingerprint\": \"" << format_fingerprint(prov.data_fingerprint)
        << "\"\n";
    out << "  }\n}\n";
}

inline Layout read_layout_json(std::istream& in) {
    const auto doc = detail::parse_json(detail::read_all(in), "layout");
    detail::require(doc.is_object(), "layout: top level must be an object");
    detail::require(doc.value("format", "") == "layout/v1", "layout: unknown format tag");
    detail::require(doc.contains("positions") && doc["positions"].is_object(),
                    "layout: missing positions object");

    Layout layout;
    for (const auto& [name, pos] : doc["positions"].items()) {
        detail::require(pos.is_array() && pos.size() == 2 && pos[0].is_number() &&
                            pos[1].is_number(),
                        "layout: position of '" + name + "' must be [x, y]");
        layout.names.push_back(name);
        layout.positions.push_back({pos[0].get<double>(), pos[1].get<double>()});
    }
    // nlohmann objects iterate in sorted key order already; keep the
    // invariant explicit.
    std::vector<std::size_t> order(layout.names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return layout.names[a] < layout.names[b];
    });
    Layout sorted;
    sorted.names.reserve(order.size());
    sorted.positions.reserve(order.size());
    for (std::size_t i : order) {
        sorted.names.push_back(std::move(layout.names[i]));
        sorted.positions.push_back(layout.positions[i]);
    }

    if (doc.contains("provenance")) {
        const auto& prov = doc["provenance"];
        detail::require(prov.is_object(), "layout: provenance must be an object");
        LayoutProvenance& p = sorted.provenance;
        if (prov.contains("seed")) p.config.seed = prov["seed"].get<std::uint64_t>();
        if (prov.contains("max_order")) p.config.max_order = prov["max_order"].get<int>();
        if (prov.contains("iterations")) p.config.iterations = prov["iterations"].get<int>();
        if (prov.contains("uniform_weights"))
            p.config.uniform_path_weights = prov["uniform_weights"].get<bool>();
        if (prov.contains("alphas"))
            for (const auto& [k, v] : prov["alphas"].items())
                p.config.alphas[static_cast<int>(detail::parse_int64(k, "layout alpha key"))] =
                    v.get<double>();
        if (prov.contains("ideal_length"))
            p.config.ideal_length = prov["ideal_length"].get<double>();
        if (prov.contains("initial_temperature"))
            p.config.initial_temperature = prov["initial_temperature"].get<double>();
        if (prov.contains("resolved_ideal_length"))
            p.resolved_ideal_length = prov["resolved_ideal_length"].get<double>();
        if (prov.contains("data_fingerprint")) {
            const auto hex = prov["data_fingerprint"].get<std::string>();
            p.data_fingerprint = 0;
            for (char c : hex) {
                int digit;
                if (c >= '0' && c <= '9') digit = c - '0';
                else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
                else
                    throw DataError("layout: malformed data fingerprint");
                p.data_fingerprint = p.data_fingerprint << 4 | static_cast<std::uint64_t>(digit);
            }
        }
    }
    return sorted;
}

inline void write_layout_csv(std::ostream& out, const Layout& layout) {
    out << "vertex,x,y\n";
    for (std::size_t i = 0; i < layout.names.size(); ++i) {
        const std::string& name = layout.names[i];
        if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
            throw DataError("vertex name contains a comma or newline: '" + name + "'");
        out << name << ',' << format_double(layout.positions[i].x) << ','
            << format_double(layout.positions[i].y) << '\n';
    }
}

inline Layout read_layout_csv(std::istream& in) {
    std::map<std::string, Vec2> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line_no == 1 && line == "vertex,x,y") continue;
        const std::string where = "line " + std::to_string(line_no);
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 3)
            throw DataError(where + ": expected vertex,x,y, got '" + line + "'");
        if (fields[0].empty()) throw DataError(where + ": empty vertex name");
        const Vec2 pos{detail::parse_number(fields[1], where),
                       detail::parse_number(fields[2], where)};
        if (!rows.emplace(fields[0], pos).second)
            throw DataError(where + ": duplicate vertex '" + fields[0] + "'");
    }
    Layout layout;
    layout.names.reserve(rows.size());
    layout.positions.reserve(rows.size());
    for (const auto& [name, pos] : rows) {
        layout.names.push_back(name);
        layout.positions.push_back(pos);
    }
    return layout;
}

// ---------------------------------------------------------------------------
// Metric and experiment reports.
// ---------------------------------------------------------------------------

inline void write_metric_report(std::ostream& out, const MetricReport& report) {
    out << "{\n";
    out << "  \"edge_crossings\": " << report.edge_crossings << ",\n";
    out << "  \"dispersion\": " << format_double(report.dispersion) << ",\n";
    out << "  \"eccentricity\": {";
    bool first = true;
    for (const auto& [gamma, value] : report.eccentricity) {
        out << (first ? "" : ", ") << "\"" << format_double(gamma)
            << "\": " << format_double(value);
        first = false;
    }
    out << "},\n";
    out << "  \"closeness\": {";
    first = true;
    for (const auto& [name, value] : report.closeness) {
        out << (first ? "" : ",") << "\n    " << detail::quoted(name) << ": "
            << format_double(value);
        first = false;
    }
    out << (report.closeness.empty() ? "}" : "\n  }") << "\n}\n";
}

namespace detail {

inline void write_summary_stats(std::ostream& out, const char* key, const SummaryStats& s,
                                bool trailing_comma) {
    out << "      \"" << key << "\": {\"mean\": " << format_double(s.mean)
        << ", \"sd\": " << format_double(s.sd) << "}" << (trailing_comma ? "," : "") << "\n";
}

}  // namespace detail

inline void write_experiment_report(std::ostream& out, const ExperimentReport& report) {
    out << "{\n";
    out << "  \"format\": \"experiment/v1\",\n";
    out << "  \"plan\": {\n";
    out << "    \"orders\": [";
    for (std::size_t i = 0; i < report.plan.orders.size(); ++i)
        out << (i ? ", " : "") << report.plan.orders[i];
    out << "],\n";
    out << "    \"repetitions\": " << report.plan.repetitions << ",\n";
    out << "    \"train_fraction\": " << format_double(report.plan.train_fraction) << ",\n";
    out << "    \"gamma\": " << format_double(report.plan.gamma) << ",\n";
    out << "    \"base_seed\": " << report.plan.base_seed << "\n";
    out << "  },\n";

    out << "  \"summaries\": {";
    bool first = true;
    for (const auto& [order, summary] : report.summaries) {
        out << (first ? "" : ",") << "\n    \"" << order << "\": {\n";
        first = false;
        detail::write_summary_stats(out, "edge_crossings", summary.edge_crossings, true);
        detail::write_summary_stats(out, "dispersion", summary.dispersion, true);
        detail::write_summary_stats(out, "eccentricity", summary.eccentricity, true);
        detail::write_summary_stats(out, "auc", summary.auc, false);
        out << "    }";
    }
    out << (report.summaries.empty() ? "}" : "\n  }") << ",\n";

    out << "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ExperimentRow& row = report.rows[i];
        out << (i ? "," : "") << "\n    {\"order\": " << row.order
            << ", \"repetition\": " << row.repetition
            << ", \"edge_crossings\": " << row.edge_crossings
            << ", \"dispersion\": " << format_double(row.dispersion)
            << ", \"eccentricity\": " << format_double(row.eccentricity)
            << ", \"auc\": " << format_double(row.roc.auc) << ", \"roc\": [";
        for (std::size_t j = 0; j < row.roc.points.size(); ++j)
            out << (j ? ", " : "") << "[" << format_double(row.roc.points[j].first) << ", "
                << format_double(row.roc.points[j].second) << "]";
        out << "]}";
    }
    out << (report.rows.empty() ? "]" : "\n  ]") << "\n}\n";
}

inline void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
    out << "order,repetition,edge_crossings,dispersion,eccentricity,auc\n";
    for (const auto& row : report.rows)
        out << row.order << ',' << row.repetition << ',' << row.edge_crossings << ','
            << format_double(row.dispersion) << ',' << format_double(row.eccentricity) << ','
            << format_double(row.roc.auc) << '\n';
}

// ---------------------------------------------------------------------------
// Small CSV sidecar formats: cluster maps, color maps, vertex sets.
// ---------------------------------------------------------------------------

inline void write_cluster_map(std::ostream& out, const std::map<std::string, int>& clusters) {
    out << "vertex,cluster\n";
    for (const auto& [name, cluster] : clusters) {
        if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
            throw DataError("vertex name contains a comma or newline: '" + name + "'");
        out << name << ',' << cluster << '\n';
    }
}

inline std::map<std::string, int> read_cluster_map(std::istream& in) {
    std::map<std::string, int> clusters;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line_no == 1 && line == "vertex,cluster") continue;
        const std::string where = "line " + std::to_string(line_no);
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 2)
            throw DataError(where + ": expected vertex,cluster, got '" + line + "'");
        if (fields[0].empty()) throw DataError(where + ": empty vertex name");
        const auto cluster = detail::parse_int64(fields[1], where);
        if (!clusters.emplace(fields[0], static_cast<int>(cluster)).second)
            throw DataError(where + ": duplicate vertex '" + fields[0] + "'");
    }
    return clusters;
}

inline std::map<std::string, std::string> read_color_map(std::istream& in) {
    std::map<std::string, std::string> colors;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line_no == 1 && line == "vertex,color") continue;
        const std::string where = "line " + std::to_string(line_no);
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 2)
            throw DataError(where + ": expected vertex,color, got '" + line + "'");
        if (fields[0].empty() || fields[1].empty())
            throw DataError(where + ": empty field in '" + line + "'");
        if (!colors.emplace(fields[0], fields[1]).second)
            throw DataError(where + ": duplicate vertex '" + fields[0] + "'");
    }
    return colors;
}

inline std::set<std::string> read_vertex_set(std::istream& in) {
    std::set<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        names.insert(line);
    }
    return names;
}

}  // namespace tempoviz::io
