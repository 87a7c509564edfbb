#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "planarinv/invariant.hpp"

namespace planarinv {

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace detail

// Deterministic SVG: the curve path, an orientation arrow at the start point,
// one labeled marker per crossing, and the Whitney number in the legend.
inline std::string render_svg(const PlanarCurve& c, const ToleranceConfig& cfg = {}) {
    double lox = c.point(0).x, hix = lox, loy = c.point(0).y, hiy = loy;
    for (std::size_t i = 0; i < c.size(); ++i) {
        lox = std::min(lox, c.point(i).x);
        hix = std::max(hix, c.point(i).x);
        loy = std::min(loy, c.point(i).y);
        hiy = std::max(hiy, c.point(i).y);
    }
    double pad = 0.08 * std::max(hix - lox, hiy - loy);
    double w = hix - lox + 2 * pad, h = hiy - loy + 2 * pad;
    double scale = 640.0 / std::max(w, h);
    auto X = [&](double x) { return (x - lox + pad) * scale; };
    auto Y = [&](double y) { return (hiy + pad - y) * scale; };  // flip y for SVG

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(w * scale) + "\" height=\"" +
           detail::fmt(h * scale) + "\" viewBox=\"0 0 " + detail::fmt(w * scale) + " " +
           detail::fmt(h * scale) + "\">\n";
    svg += "<path fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" d=\"M ";
    for (std::size_t i = 0; i < c.size(); ++i) {
        Vec2 p = c.point(i);
        svg += detail::fmt(X(p.x)) + " " + detail::fmt(Y(p.y)) + (i + 1 < c.size() ? " L " : " Z");
    }
    svg += "\"/>\n";

    // orientation arrow at the start point
    {
        Vec2 p = c.point(0);
        Vec2 d = c.seg_dir(0);
        Vec2 n = d.perp();
        double a = 10.0;
        Vec2 tip{X(p.x) + d.x * a, Y(p.y) - d.y * a};
        Vec2 l{X(p.x) - n.x * a * 0.4, Y(p.y) + n.y * a * 0.4};
        Vec2 r{X(p.x) + n.x * a * 0.4, Y(p.y) - n.y * a * 0.4};
        svg += "<polygon fill=\"#c0392b\" points=\"" + detail::fmt(tip.x) + "," + detail::fmt(tip.y) + " " +
               detail::fmt(l.x) + "," + detail::fmt(l.y) + " " + detail::fmt(r.x) + "," + detail::fmt(r.y) +
               "\"/>\n";
    }

    std::string legend;
    try {
        InvariantResult res = compute_invariant(c, cfg);
        for (const CrossingIndices& ci : res.per_crossing) {
            double cx = X(ci.crossing.location.x), cy = Y(ci.crossing.location.y);
            svg += "<circle cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) +
                   "\" r=\"3.5\" fill=\"#c0392b\"/>\n";
            svg += "<text x=\"" + detail::fmt(cx + 6) + "\" y=\"" + detail::fmt(cy - 6) +
                   "\" font-size=\"12\" font-family=\"monospace\">(" + std::to_string(ci.first.i1) + "," +
                   std::to_string(ci.first.i2) + "|" + std::to_string(ci.second.i1) + "," +
                   std::to_string(ci.second.i2) + ")</text>\n";
        }
        legend = "w = " + std::to_string(res.whitney) + ", F-hat = " + to_text(res.f_hat);
    } catch (const std::exception& e) {
        legend = std::string("not stable: ") + e.what();
    }
    svg += "<text x=\"10\" y=\"18\" font-size=\"14\" font-family=\"monospace\">" + legend + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

inline void render_svg_file(const PlanarCurve& c, const std::string& path, const ToleranceConfig& cfg = {}) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << render_svg(c, cfg);
}

}  // namespace planarinv
