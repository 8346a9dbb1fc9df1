#include "ballpoly/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ballpoly::io {

namespace {

constexpr double kScale = 100.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string svg_document(const std::vector<SvgArc>& arcs, const std::vector<Vec>& circles,
                         double circle_radius) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](double x, double y, double r) {
        xmin = std::min(xmin, x - r);
        xmax = std::max(xmax, x + r);
        ymin = std::min(ymin, y - r);
        ymax = std::max(ymax, y + r);
    };
    for (const auto& a : arcs) grow(a.center(0), a.center(1), a.radius);
    for (const auto& c : circles) grow(c(0), c(1), circle_radius);
    if (arcs.empty() && circles.empty()) grow(0, 0, 1);

    // screen coordinates: x' = scale * x, y' = -scale * y
    const double W = (xmax - xmin) * kScale + 40.0;
    const double H = (ymax - ymin) * kScale + 40.0;
    auto sx = [&](double x) { return (x - xmin) * kScale + 20.0; };
    auto sy = [&](double y) { return (ymax - y) * kScale + 20.0; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(W) +
           "\" height=\"" + num(H) + "\">\n";
    for (const auto& c : circles)
        out += "  <circle cx=\"" + num(sx(c(0))) + "\" cy=\"" + num(sy(c(1))) + "\" r=\"" +
               num(circle_radius * kScale) +
               "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    for (const auto& a : arcs) {
        const double t0 = a.mid - a.half, t1 = a.mid + a.half;
        const double x0 = a.center(0) + a.radius * std::cos(t0);
        const double y0 = a.center(1) + a.radius * std::sin(t0);
        const double x1 = a.center(0) + a.radius * std::cos(t1);
        const double y1 = a.center(1) + a.radius * std::sin(t1);
        const int large = (2.0 * a.half > 3.14159265358979323846) ? 1 : 0;
        // ccw in math coordinates becomes sweep=0 after the y flip
        out += "  <path d=\"M " + num(sx(x0)) + " " + num(sy(y0)) + " A " +
               num(a.radius * kScale) + " " + num(a.radius * kScale) + " 0 " +
               std::to_string(large) + " 0 " + num(sx(x1)) + " " + num(sy(y1)) +
               "\" fill=\"none\" stroke=\"#202020\" stroke-width=\"1.5\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ballpoly::io
