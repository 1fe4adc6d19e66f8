#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "cycloptics/curve.hpp"
#include "cycloptics/cycloid.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

/// Horizontal slab discretization of the gravity medium: layer i spans depths
/// [i, i+1] * depth / N and carries the speed of its midpoint,
/// v_i = sqrt(2 g y_i). Speeds increase strictly with depth.
class LayeredMedium {
  public:
    LayeredMedium(double depth, int layer_count, double g = 9.81)
        : depth_(depth), layer_count_(layer_count), g_(g) {
        if (!(depth > 0.0)) throw DomainError("medium depth must be positive");
        if (layer_count < 1) throw DomainError("need at least one layer");
        if (!(g > 0.0)) throw DomainError("g must be positive");
    }

    double depth() const { return depth_; }
    int layer_count() const { return layer_count_; }
    double g() const { return g_; }
    double thickness() const { return depth_ / layer_count_; }

    double layer_midpoint_depth(int i) const {
        return (i + 0.5) * thickness();
    }

    double layer_speed(int i) const {
        return std::sqrt(2.0 * g_ * layer_midpoint_depth(i));
    }

    double max_speed() const { return layer_speed(layer_count_ - 1); }

  private:
    double depth_;
    int layer_count_;
    double g_;
};

/// Piecewise-linear ray through a layered medium, one vertex per interface.
/// sin(alpha_i) / v_i = 1 / snell_constant holds in every layer by
/// construction.
struct RayPath {
    std::vector<Vec2> vertices;
    double snell_constant;

    /// Curve view with depth as the parameter.
    PlanarCurve to_curve() const {
        std::vector<double> params(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) params[i] = vertices[i].y;
        return PlanarCurve(std::move(params), vertices);
    }
};

/// Traces the ray with Snell constant c from (0, 0) downward: in layer i the
/// ray is straight at angle alpha_i from the vertical with sin(alpha_i) =
/// v_i / c, advancing dx_i = dy tan(alpha_i).
inline RayPath trace_ray(const LayeredMedium& medium, double c) {
    if (!(c > 0.0)) throw DomainError("snell constant must be positive");
    const double dy = medium.thickness();
    RayPath path;
    path.snell_constant = c;
    path.vertices.reserve(medium.layer_count() + 1);
    path.vertices.push_back({0.0, 0.0});
    double x = 0.0;
    for (int i = 0; i < medium.layer_count(); ++i) {
        const double sin_a = medium.layer_speed(i) / c;
        if (sin_a >= 1.0) {
            const double critical = c * c / (2.0 * medium.g());
            throw TurningPointError(
                "ray turns before layer " + std::to_string(i) +
                    "; critical depth y* = " + std::to_string(critical),
                critical);
        }
        x += dy * sin_a / std::sqrt(1.0 - sin_a * sin_a);
        path.vertices.push_back({x, (i + 1) * dy});
    }
    return path;
}

struct ShootResult {
    double snell_constant;
    RayPath path;
};

/// Euclidean distance from p to the cycloid arc x = a (t - sin t),
/// y = a (1 - cos t), t in [0, t_max]: coarse grid then ternary refinement.
inline double distance_to_cycloid_arc(Vec2 p, double a, double t_max) {
    auto point = [a](double t) {
        return Vec2{a * (t - std::sin(t)), a * (1.0 - std::cos(t))};
    };
    auto dist_sq = [&](double t) { return (point(t) - p).squared_norm(); };
    constexpr int kGrid = 512;
    int best = 0;
    double best_val = dist_sq(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double val = dist_sq(t_max * i / kGrid);
        if (val < best_val) {
            best_val = val;
            best = i;
        }
    }
    double lo = t_max * std::max(best - 1, 0) / kGrid;
    double hi = t_max * std::min(best + 1, kGrid) / kGrid;
    for (int iter = 0; iter < 120; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (dist_sq(m1) < dist_sq(m2))
            hi = m2;
        else
            lo = m1;
    }
    return std::sqrt(dist_sq(0.5 * (lo + hi)));
}

/// Largest distance from the ray's vertices to the fitted cycloid arc
/// (extended a little past t_B so near-endpoint vertices measure cleanly).
inline double sup_deviation(const RayPath& path, const CycloidFit& fit) {
    const double t_max = std::min(fit.t_b + 0.5, 2.0 * std::numbers::pi);
    double sup = 0.0;
    for (const Vec2& v : path.vertices)
        sup = std::max(sup, distance_to_cycloid_arc(v, fit.a, t_max));
    return sup;
}

/// Bisection on the Snell constant until the ray's terminal x matches b1 to
/// 1e-9 at depth b2. Descending targets only (t_B <= pi).
inline ShootResult shoot(const FitTarget& target, int layer_count, double g = 9.81) {
    if (!target.monotone())
        throw UnsupportedTargetError("shoot: target below the monotone slope b2 >= 2 b1 / pi");
    const LayeredMedium medium(target.b2, layer_count, g);

    auto terminal_miss = [&](double c) {
        return trace_ray(medium, c).vertices.back().x - target.b1;
    };

    // c just above the deepest layer speed sends the ray far right; growing c
    // straightens it toward vertical. Expand until the target is bracketed.
    const double lo = medium.max_speed() * (1.0 + 1e-14);
    if (!(terminal_miss(lo) > 0.0))
        throw ShootingError("shoot: target beyond the grazing ray");
    double hi = 2.0 * lo;
    int doublings = 0;
    while (terminal_miss(hi) > 0.0) {
        hi *= 2.0;
        if (++doublings > 60) throw ShootingError("shoot: no upper bracket");
    }
    const double c = bisect(terminal_miss, lo, hi, 200);
    RayPath path = trace_ray(medium, c);
    if (std::abs(path.vertices.back().x - target.b1) > 1e-9)
        throw ShootingError("shoot: terminal x did not converge");
    return {c, std::move(path)};
}

struct ConvergenceRow {
    int layer_count;
    double sup_deviation;
};

/// Shoots the target for each layer count and measures the sup distance of
/// the traced ray to the fitted cycloid.
inline std::vector<ConvergenceRow> convergence_report(const FitTarget& target,
                                                      const std::vector<int>& layer_counts,
                                                      double g = 9.81) {
    const CycloidFit fit = fit_cycloid(target);
    std::vector<ConvergenceRow> rows;
    rows.reserve(layer_counts.size());
    for (int n : layer_counts) {
        const ShootResult shot = shoot(target, n, g);
        rows.push_back({n, sup_deviation(shot.path, fit)});
    }
    return rows;
}

}  // namespace cycloptics
