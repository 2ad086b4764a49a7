#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempoviz/errors.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/metrics.hpp"

namespace tempoviz {

struct RenderStyle {
    double node_radius = 4.0;
    double edge_width = 1.0;
    std::map<std::string, std::string> color_map;  // vertex -> CSS color
    std::set<std::string> highlight_set;           // drawn in the highlight color
    double canvas_width = 800.0;
    double canvas_height = 800.0;
    // When set, draws a circle around the barycentre containing the
    // closest circle_gamma percent of vertices.
    std::optional<double> circle_gamma;

    std::string default_color = "#1f77b4";
    std::string highlight_color = "#d62728";
    std::string edge_color = "#999999";
};

namespace detail {

inline std::string svg_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline void validate_css_color(const std::string& color) {
    if (color.empty()) throw DataError("empty color literal");
    for (char c : color) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '#' || c == '(' || c == ')' ||
                        c == ',' || c == '.' || c == '%' || c == '-' || c == ' ';
        if (!ok) throw DataError("invalid character in color literal '" + color + "'");
    }
}

}  // namespace detail

// Deterministic SVG drawing of a layout: edges as lines beneath node
// circles, positions uniformly scaled into the canvas with a 5% margin.
// Identical inputs produce byte-identical documents.
inline std::string render_svg(const Layout& layout,
                              const std::vector<std::pair<std::string, std::string>>& edges,
                              const RenderStyle& style) {
    if (style.canvas_width <= 0.0 || style.canvas_height <= 0.0)
        throw std::invalid_argument("canvas dimensions must be positive");
    if (style.node_radius <= 0.0 || style.edge_width <= 0.0)
        throw std::invalid_argument("node radius and edge width must be positive");
    if (style.circle_gamma && (*style.circle_gamma <= 0.0 || *style.circle_gamma > 100.0))
        throw std::invalid_argument("circle percentile must lie in (0, 100]");
    detail::validate_css_color(style.default_color);
    detail::validate_css_color(style.highlight_color);
    detail::validate_css_color(style.edge_color);
    for (const auto& [name, color] : style.color_map) detail::validate_css_color(color);

    for (std::size_t i = 0; i < layout.names.size(); ++i)
        if (!std::isfinite(layout.positions[i].x) || !std::isfinite(layout.positions[i].y))
            throw DataError("non-finite position for vertex '" + layout.names[i] + "'");

    std::set<std::pair<std::string, std::string>> undirected;
    for (const auto& [from, to] : edges) {
        if (!layout.contains(from) || !layout.contains(to))
            throw DataError("edge endpoint not in layout: " +
                            (layout.contains(from) ? to : from));
        if (from == to) continue;
        undirected.insert(from < to ? std::make_pair(from, to) : std::make_pair(to, from));
    }

    // Uniform scale into the canvas, 5% of the smaller dimension as margin.
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    if (!layout.positions.empty()) {
        min_x = max_x = layout.positions.front().x;
        min_y = max_y = layout.positions.front().y;
        for (const auto& p : layout.positions) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double margin = 0.05 * std::min(style.canvas_width, style.canvas_height);
    const double avail_w = style.canvas_width - 2.0 * margin;
    const double avail_h = style.canvas_height - 2.0 * margin;
    const double extent_x = max_x - min_x;
    const double extent_y = max_y - min_y;
    double scale = 0.0;
    if (extent_x > 0.0 && extent_y > 0.0)
        scale = std::min(avail_w / extent_x, avail_h / extent_y);
    else if (extent_x > 0.0)
        scale = avail_w / extent_x;
    else if (extent_y > 0.0)
        scale = avail_h / extent_y;
    const double offset_x = margin + (avail_w - scale * extent_x) / 2.0;
    const double offset_y = margin + (avail_h - scale * extent_y) / 2.0;
    auto to_px = [&](const Vec2& p) -> Vec2 {
        // Flip y so that larger layout y is drawn higher.
        return {offset_x + scale * (p.x - min_x),
                style.canvas_height - (offset_y + scale * (p.y - min_y))};
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           detail::svg_number(style.canvas_width) + "\" height=\"" +
           detail::svg_number(style.canvas_height) + "\" viewBox=\"0 0 " +
           detail::svg_number(style.canvas_width) + " " +
           detail::svg_number(style.canvas_height) + "\">\n";

    out += "  <g stroke=\"" + style.edge_color + "\" stroke-width=\"" +
           detail::svg_number(style.edge_width) + "\">\n";
    for (const auto& [from, to] : undirected) {
        const Vec2 a = to_px(layout.position_of(from));
        const Vec2 b = to_px(layout.position_of(to));
        out += "    <line x1=\"" + detail::svg_number(a.x) + "\" y1=\"" +
               detail::svg_number(a.y) + "\" x2=\"" + detail::svg_number(b.x) + "\" y2=\"" +
               detail::svg_number(b.y) + "\"/>\n";
    }
    out += "  </g>\n";

    out += "  <g>\n";
    for (std::size_t i = 0; i < layout.names.size(); ++i) {
        const std::string& name = layout.names[i];
        const Vec2 p = to_px(layout.positions[i]);
        std::string color = style.default_color;
        if (auto it = style.color_map.find(name); it != style.color_map.end())
            color = it->second;
        if (style.highlight_set.count(name)) color = style.highlight_color;
        out += "    <circle cx=\"" + detail::svg_number(p.x) + "\" cy=\"" +
               detail::svg_number(p.y) + "\" r=\"" + detail::svg_number(style.node_radius) +
               "\" fill=\"" + color + "\"><title>" + detail::xml_escape(name) +
               "</title></circle>\n";
    }
    out += "  </g>\n";

    if (style.circle_gamma && !layout.positions.empty()) {
        // Radius of the smallest circle around the barycentre containing the
        // closest ceil(gamma * n / 100) vertices.
        const Vec2 centre = barycentre(layout.positions);
        std::vector<double> dists;
        dists.reserve(layout.positions.size());
        for (const auto& p : layout.positions) dists.push_back(distance(p, centre));
        std::sort(dists.begin(), dists.end());
        const std::size_t k = std::min(
            dists.size(), detail::percentile_count(dists.size(), *style.circle_gamma));
        const double radius = dists[k - 1];
        const Vec2 c = to_px(centre);
        out += "  <circle cx=\"" + detail::svg_number(c.x) + "\" cy=\"" +
               detail::svg_number(c.y) + "\" r=\"" + detail::svg_number(radius * scale) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.000\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tempoviz
