#include "vmr/svg.hpp"

#include <cstdio>

namespace vmr {

namespace {

// fixed viewport [-0.35, 1.1] x [-0.25, 1.1], 400 px per unit
constexpr double kX0 = -0.35, kX1 = 1.10;
constexpr double kY0 = -0.25, kY1 = 1.10;
constexpr double kScale = 400.0;

void map_point(Vec2 v, double& sx, double& sy) {
    sx = (v.x - kX0) * kScale;
    sy = (kY1 - v.y) * kScale;
}

void append_path(std::string& out, const ConvexRegion& r, const char* style) {
    if (r.is_empty()) return;
    out += "  <path d=\"";
    char buf[64];
    bool first = true;
    for (Vec2 v : r.vertices()) {
        double sx, sy;
        map_point(v, sx, sy);
        std::snprintf(buf, sizeof buf, "%c%.3f %.3f ", first ? 'M' : 'L', sx, sy);
        out += buf;
        first = false;
    }
    out += "Z\" ";
    out += style;
    out += "/>\n";
}

void append_line(std::string& out, Vec2 a, Vec2 b, const char* style) {
    double x1, y1, x2, y2;
    map_point(a, x1, y1);
    map_point(b, x2, y2);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" %s/>\n",
                  x1, y1, x2, y2, style);
    out += buf;
}

} // namespace

std::string figure_svg(const ConvexRegion& range, const ConvexRegion& shifted,
                       const ConvexRegion& qset, const std::string& title) {
    double w = (kX1 - kX0) * kScale;
    double h = (kY1 - kY0) * kScale;
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  w, h, w, h);
    out += buf;
    out += "  <!-- ";
    out += kVersionString;
    out += " -->\n";
    std::snprintf(buf, sizeof buf, "  <title>%s</title>\n", title.c_str());
    out += buf;
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    append_line(out, {kX0, 0.0}, {kX1, 0.0}, "stroke=\"#bbbbbb\" stroke-width=\"1\"");
    append_line(out, {0.0, kY0}, {0.0, kY1}, "stroke=\"#bbbbbb\" stroke-width=\"1\"");

    append_path(out, qset, "fill=\"#9ecae1\" fill-opacity=\"0.8\" stroke=\"none\"");
    append_path(out, range,
                "fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"10,6\"");
    append_path(out, shifted,
                "fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"2,5\"");
    out += "</svg>\n";
    return out;
}

} // namespace vmr
