// SVG rendering: deterministic structure, coordinate mapping, styling, and
// input validation.

#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

#include "tempoviz/svg.hpp"

namespace {

using namespace tempoviz;

std::size_t count_substr(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

Layout triangle_layout() {
    Layout layout;
    layout.names = {"a", "b", "c"};
    layout.positions = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    return layout;
}

TEST(RenderSvg, DrawsUniqueNonLoopEdgesBeneathCircles) {
    const Layout layout = triangle_layout();
    // Duplicates, reversed duplicates, and loops collapse away.
    const std::vector<std::pair<std::string, std::string>> edges = {
        {"a", "b"}, {"b", "a"}, {"a", "a"}, {"b", "c"}};
    const std::string svg = render_svg(layout, edges, RenderStyle{});

    EXPECT_EQ(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n", 0), 0u);
    EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
    EXPECT_EQ(count_substr(svg, "<line "), 2u);
    EXPECT_EQ(count_substr(svg, "<circle "), 3u);
    // Edge group opens before the first circle.
    EXPECT_LT(svg.find("<line "), svg.find("<circle "));
}

TEST(RenderSvg, MapsCoordinatesUniformlyWithFlippedY) {
    // 800x800 canvas: margin 40, drawable span 720, unit square scales by 720.
    const std::string svg = render_svg(triangle_layout(), {}, RenderStyle{});
    EXPECT_NE(svg.find("cx=\"40.000\" cy=\"760.000\""), std::string::npos);   // (0,0)
    EXPECT_NE(svg.find("cx=\"760.000\" cy=\"760.000\""), std::string::npos);  // (1,0)
    EXPECT_NE(svg.find("cx=\"40.000\" cy=\"40.000\""), std::string::npos);    // (0,1) drawn on top
}

TEST(RenderSvg, CentresDegenerateExtents) {
    Layout layout;
    layout.names = {"only"};
    layout.positions = {{123.0, -456.0}};
    const std::string svg = render_svg(layout, {}, RenderStyle{});
    EXPECT_NE(svg.find("cx=\"400.000\" cy=\"400.000\""), std::string::npos);
}

TEST(RenderSvg, AppliesColorMapThenHighlightOverride) {
    RenderStyle style;
    style.color_map = {{"b", "#00ff00"}, {"c", "rgb(1, 2, 3)"}};
    style.highlight_set = {"c"};
    const std::string svg = render_svg(triangle_layout(), {}, style);

    const std::size_t a_pos = svg.find("<title>a</title>");
    const std::size_t b_pos = svg.find("<title>b</title>");
    const std::size_t c_pos = svg.find("<title>c</title>");
    ASSERT_NE(a_pos, std::string::npos);
    auto fill_before = [&](std::size_t title_pos) {
        const std::size_t fill = svg.rfind("fill=\"", title_pos);
        const std::size_t end = svg.find('"', fill + 6);
        return svg.substr(fill + 6, end - fill - 6);
    };
    EXPECT_EQ(fill_before(a_pos), "#1f77b4");       // default
    EXPECT_EQ(fill_before(b_pos), "#00ff00");       // from the color map
    EXPECT_EQ(fill_before(c_pos), "#d62728");       // highlight wins
}

TEST(RenderSvg, EscapesVertexNamesInTitles) {
    Layout layout;
    layout.names = {"x<&>\"y"};
    layout.positions = {{0.0, 0.0}};
    const std::string svg = render_svg(layout, {}, RenderStyle{});
    EXPECT_NE(svg.find("<title>x&lt;&amp;&gt;&quot;y</title>"), std::string::npos);
}

TEST(RenderSvg, DrawsBarycentreCircleForRequestedPercentile) {
    Layout layout;
    layout.names = {"a", "b", "c"};
    layout.positions = {{0.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}};
    RenderStyle style;
    style.circle_gamma = 40.0;  // ceil(0.4 * 3) = 2 closest vertices
    const std::string svg = render_svg(layout, {}, style);
    // Barycentre (2, 0) maps to the canvas centre; the second-closest vertex
    // sits at distance 2, scaled by 720 / 4 = 180 into a 360px radius.
    EXPECT_NE(svg.find("<circle cx=\"400.000\" cy=\"400.000\" r=\"360.000\" fill=\"none\""),
              std::string::npos);
    EXPECT_EQ(count_substr(svg, "<circle "), 4u);
}

TEST(RenderSvg, IsByteDeterministic) {
    RenderStyle style;
    style.circle_gamma = 50.0;
    style.highlight_set = {"b"};
    const std::vector<std::pair<std::string, std::string>> edges = {{"a", "b"}, {"c", "a"}};
    const std::string first = render_svg(triangle_layout(), edges, style);
    const std::string second = render_svg(triangle_layout(), edges, style);
    EXPECT_EQ(first, second);
}

TEST(RenderSvg, RejectsUnknownEdgeEndpoints) {
    try {
        render_svg(triangle_layout(), {{"a", "zz"}}, RenderStyle{});
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
    }
}

TEST(RenderSvg, RejectsNonFinitePositions) {
    Layout layout = triangle_layout();
    layout.positions[1].y = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(render_svg(layout, {}, RenderStyle{}), DataError);
}

TEST(RenderSvg, RejectsBadStyleParameters) {
    {
        RenderStyle style;
        style.canvas_width = 0.0;
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), std::invalid_argument);
    }
    {
        RenderStyle style;
        style.node_radius = -1.0;
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), std::invalid_argument);
    }
    {
        RenderStyle style;
        style.circle_gamma = 0.0;
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), std::invalid_argument);
    }
    {
        RenderStyle style;
        style.circle_gamma = 120.0;
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), std::invalid_argument);
    }
}

TEST(RenderSvg, RejectsUnsafeColorLiterals) {
    {
        RenderStyle style;
        style.default_color = "#ff0000\"/><script>";
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), DataError);
    }
    {
        RenderStyle style;
        style.color_map = {{"a", ""}};
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), DataError);
    }
    {
        RenderStyle style;
        style.edge_color = "url(javascript:x);";
        EXPECT_THROW(render_svg(triangle_layout(), {}, style), DataError);
    }
}

}  // namespace
