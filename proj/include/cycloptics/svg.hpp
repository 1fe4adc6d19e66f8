#pragma once

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cycloptics/curve.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

/// Collects polylines, circles and dots and emits a self-contained SVG.
/// 1 meter = 100 user units; the viewBox is fitted to the content with a 5%
/// margin. With `flip_y` the data's y-axis points up (Cartesian fronts);
/// without it, down (depth-coordinate slides), matching SVG's own axis.
class SvgCanvas {
  public:
    explicit SvgCanvas(double pixels_per_meter = 100.0, bool flip_y = false)
        : scale_(pixels_per_meter), flip_y_(flip_y) {}

    void add_polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                      double stroke_width = 1.5) {
        Polyline p{{}, stroke, stroke_width};
        p.pts.reserve(pts.size());
        for (Vec2 v : pts) p.pts.push_back(map(v));
        polylines_.push_back(std::move(p));
    }

    void add_curve(const PlanarCurve& c, const std::string& stroke,
                   double stroke_width = 1.5) {
        add_polyline(c.points(), stroke, stroke_width);
    }

    void add_circle(Vec2 center, double radius, const std::string& stroke,
                    double stroke_width = 1.0) {
        circles_.push_back({map(center), radius * scale_, stroke, stroke_width});
    }

    void add_dot(Vec2 p, const std::string& fill, double radius_px = 3.0) {
        dots_.push_back({map(p), radius_px, fill});
    }

    void write(std::ostream& out) const {
        double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x;
        double hi_x = std::numeric_limits<double>::lowest(), hi_y = hi_x;
        auto grow = [&](Vec2 p, double pad) {
            lo_x = std::min(lo_x, p.x - pad);
            lo_y = std::min(lo_y, p.y - pad);
            hi_x = std::max(hi_x, p.x + pad);
            hi_y = std::max(hi_y, p.y + pad);
        };
        for (const auto& p : polylines_)
            for (Vec2 v : p.pts) grow(v, 0.0);
        for (const auto& c : circles_) grow(c.center, c.radius_px);
        for (const auto& d : dots_) grow(d.center, d.radius_px);
        if (lo_x > hi_x) lo_x = lo_y = 0.0, hi_x = hi_y = 1.0;
        const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 1.0;
        lo_x -= margin, lo_y -= margin;
        const double width = hi_x - lo_x + margin;
        const double height = hi_y - lo_y + margin;

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x)
            << ' ' << num(lo_y) << ' ' << num(width) << ' ' << num(height) << "\">\n";
        for (const auto& p : polylines_) {
            out << "  <polyline fill=\"none\" stroke=\"" << p.stroke
                << "\" stroke-width=\"" << num(p.stroke_width) << "\" points=\"";
            for (std::size_t i = 0; i < p.pts.size(); ++i)
                out << (i ? " " : "") << num(p.pts[i].x) << ',' << num(p.pts[i].y);
            out << "\"/>\n";
        }
        for (const auto& c : circles_) {
            out << "  <circle fill=\"none\" stroke=\"" << c.stroke
                << "\" stroke-width=\"" << num(c.stroke_width) << "\" cx=\""
                << num(c.center.x) << "\" cy=\"" << num(c.center.y) << "\" r=\""
                << num(c.radius_px) << "\"/>\n";
        }
        for (const auto& d : dots_) {
            out << "  <circle fill=\"" << d.fill << "\" cx=\"" << num(d.center.x)
                << "\" cy=\"" << num(d.center.y) << "\" r=\"" << num(d.radius_px)
                << "\"/>\n";
        }
        out << "</svg>\n";
    }

  private:
    struct Polyline {
        std::vector<Vec2> pts;
        std::string stroke;
        double stroke_width;
    };
    struct Circle {
        Vec2 center;
        double radius_px;
        std::string stroke;
        double stroke_width;
    };
    struct Dot {
        Vec2 center;
        double radius_px;
        std::string fill;
    };

    Vec2 map(Vec2 p) const { return {p.x * scale_, (flip_y_ ? -p.y : p.y) * scale_}; }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return buf;
    }

    double scale_;
    bool flip_y_;
    std::vector<Polyline> polylines_;
    std::vector<Circle> circles_;
    std::vector<Dot> dots_;
};

}  // namespace cycloptics
