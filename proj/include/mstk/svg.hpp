#pragma once

#include <cstdio>
#include <string>

#include "mstk/errors.hpp"
#include "mstk/vector_space.hpp"

namespace mstk {
namespace detail {

/// Fixed six-decimal rendering, with the "-0.000000" artifact folded to
/// "0.000000" so output is a pure function of the rounded value.
inline std::string fixed6(double value) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.6f", value);
    if (n <= 0) throw Error("fixed6: formatting failed");
    std::string s(buf, static_cast<std::size_t>(n));
    if (s == "-0.000000") return "0.000000";
    return s;
}

}  // namespace detail

/// Renders a ball polygon as a standalone SVG document. Geometry uses the
/// mathematical convention (y up), so y is negated on the way out; the
/// viewport frames the ball with half a radius of margin on each side.
/// Output is deterministic: same polygon, same bytes.
inline std::string ball_svg(const BallPolygon& ball) {
    if (ball.vertices.size() < 3) throw InputError("ball_svg: polygon needs at least 3 vertices");
    const double cx = ball.center[0];
    const double cy = ball.center[1];
    const double r = ball.radius;

    const auto f = detail::fixed6;
    std::string svg;
    svg.reserve(1024 + ball.vertices.size() * 24);

    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += f(cx - 1.5 * r) + " " + f(-cy - 1.5 * r) + " " + f(3.0 * r) + " " + f(3.0 * r) + "\">\n";

    svg += "  <line x1=\"" + f(cx - 1.4 * r) + "\" y1=\"" + f(-cy) + "\" x2=\"" + f(cx + 1.4 * r) +
           "\" y2=\"" + f(-cy) + "\" stroke=\"#999999\" stroke-width=\"" + f(0.01 * r) + "\" />\n";
    svg += "  <line x1=\"" + f(cx) + "\" y1=\"" + f(-cy - 1.4 * r) + "\" x2=\"" + f(cx) + "\" y2=\"" +
           f(-cy + 1.4 * r) + "\" stroke=\"#999999\" stroke-width=\"" + f(0.01 * r) + "\" />\n";

    svg += "  <polygon points=\"";
    bool first = true;
    for (const Point& v : ball.vertices) {
        if (!first) svg += " ";
        first = false;
        svg += f(v[0]) + "," + f(-v[1]);
    }
    svg += "\" fill=\"#4477aa\" fill-opacity=\"0.35\" stroke=\"#223355\" stroke-width=\"" + f(0.02 * r) +
           "\" />\n";

    svg += "  <circle cx=\"" + f(cx) + "\" cy=\"" + f(-cy) + "\" r=\"" + f(0.025 * r) +
           "\" fill=\"#223355\" />\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace mstk
