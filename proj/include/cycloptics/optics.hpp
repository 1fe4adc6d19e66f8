#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cycloptics/errors.hpp"
#include "cycloptics/numeric.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {
namespace optics {

/// Horizontal interface y = y0 between two homogeneous media.
/// Angles are always measured from the interface normal (the vertical).
struct Interface {
    double y0;
    double v_above;
    double v_below;

    Interface(double y0_, double v_above_, double v_below_)
        : y0(y0_), v_above(v_above_), v_below(v_below_) {
        if (!(v_above > 0.0) || !(v_below > 0.0))
            throw DomainError("medium speeds must be positive");
    }
};

/// Reflection point on the mirror y = mirror_y for the path A -> P -> B,
/// found by intersecting the segment from A to the mirror image B' of B.
/// Incidence and reflection angles are equal by construction, and
/// |A - P| + |P - B| = |A - B'|.
inline Vec2 reflect(Vec2 a, Vec2 b, double mirror_y) {
    const double da = a.y - mirror_y;
    const double db = b.y - mirror_y;
    if (da == 0.0 || db == 0.0 || (da > 0.0) != (db > 0.0))
        throw DomainError("reflect: A and B must lie strictly on the same side of the mirror");
    const Vec2 b_img{b.x, 2.0 * mirror_y - b.y};
    const double w = (mirror_y - a.y) / (b_img.y - a.y);
    return {a.x + w * (b_img.x - a.x), mirror_y};
}

/// Snell's law: sin(alpha1) / v1 = sin(alpha2) / v2.
inline double refract(double alpha1, double v1, double v2) {
    if (alpha1 < 0.0 || alpha1 >= 0.5 * std::numbers::pi)
        throw DomainError("incidence angle must lie in [0, pi/2)");
    if (!(v1 > 0.0) || !(v2 > 0.0)) throw DomainError("medium speeds must be positive");
    const double sin2 = v2 * std::sin(alpha1) / v1;
    if (sin2 > 1.0)
        throw TotalInternalReflectionError("sin(alpha2) = " + std::to_string(sin2) +
                                           " exceeds 1");
    return std::asin(sin2);
}

struct FermatReport {
    Vec2 p;                ///< travel-time minimizer on the interface
    double min_time;       ///< t(A->P) + t(P->B)
    int samples_checked;   ///< interface points Q != P tested
    double max_violation;  ///< max over Q of t(P) - t(Q); strictly negative when P is the unique minimum
};

/// Finds the Snell point P minimizing t(x) = |A-(x,y0)|/v1 + |(x,y0)-B|/v2
/// (convex; bisection on t'), then checks that every sampled Q != P on the
/// interface takes strictly longer.
inline FermatReport fermat_certificate(Vec2 a, Vec2 b, const Interface& interface,
                                       int sample_count) {
    if (!(a.y > interface.y0)) throw DomainError("A must lie above the interface");
    if (!(b.y < interface.y0)) throw DomainError("B must lie below the interface");
    if (sample_count < 1) throw DomainError("sample_count must be positive");

    auto travel_time = [&](double x) {
        const Vec2 q{x, interface.y0};
        return distance(a, q) / interface.v_above + distance(q, b) / interface.v_below;
    };
    auto slope = [&](double x) {
        const Vec2 q{x, interface.y0};
        return (x - a.x) / (interface.v_above * distance(a, q)) +
               (x - b.x) / (interface.v_below * distance(q, b));
    };

    double px;
    if (a.x == b.x) {
        px = a.x;
    } else {
        const double lo = std::min(a.x, b.x);
        const double hi = std::max(a.x, b.x);
        px = bisect(slope, lo, hi, 200);
    }
    const Vec2 p{px, interface.y0};
    const double t_min = travel_time(px);

    // sample Q over a window around P wide enough to dwarf the geometry
    const double radius = 2.0 * (distance(a, p) + distance(p, b));
    const double exclusion = 1e-6 * radius;
    FermatReport report{p, t_min, 0, -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < sample_count; ++i) {
        const double qx =
            px - radius + 2.0 * radius * (i + 0.5) / static_cast<double>(sample_count);
        if (std::abs(qx - px) < exclusion) continue;
        report.max_violation = std::max(report.max_violation, t_min - travel_time(qx));
        ++report.samples_checked;
    }
    return report;
}

/// Refracted plane-front direction constructed from elementary waves: seeds
/// along the interface are struck at times staggered by x sin(alpha1) / v1;
/// their circles below the interface have radii v2 (dt - strike time), and the
/// refracted front is their common tangent. The tangent slope comes from
/// circle pairs: sin(beta) = (r_i - r_j) / (x_j - x_i).
inline double huygens_refraction(double front_angle, const Interface& interface,
                                 double dt) {
    if (front_angle < 0.0 || front_angle >= 0.5 * std::numbers::pi)
        throw DomainError("incidence angle must lie in [0, pi/2)");
    if (!(dt > 0.0)) throw DomainError("dt must be positive");

    const double sin1 = std::sin(front_angle);
    // seed span: up to the point struck exactly at dt (radius zero), or an
    // arbitrary window at normal incidence where all radii are equal
    const double span = sin1 > 0.0 ? interface.v_above * dt / sin1
                                   : (interface.v_above + interface.v_below) * dt;
    constexpr int kSeeds = 9;
    std::vector<double> xs(kSeeds), radii(kSeeds);
    for (int i = 0; i < kSeeds; ++i) {
        xs[i] = span * i / (kSeeds - 1);
        radii[i] = interface.v_below * (dt - xs[i] * sin1 / interface.v_above);
    }

    double sin_beta = 0.0;
    for (int i = 1; i < kSeeds; ++i) {
        const double pair_sin = (radii[0] - radii[i]) / (xs[i] - xs[0]);
        if (pair_sin > 1.0)
            throw TotalInternalReflectionError(
                "no common tangent below the interface: sin(beta) = " +
                std::to_string(pair_sin));
        sin_beta += pair_sin;
    }
    return std::asin(sin_beta / (kSeeds - 1));
}

/// Reflected plane-front direction from the same construction run on the
/// incidence side; returns an angle equal to the incidence angle.
inline double huygens_reflection(double front_angle, double v, double dt) {
    if (front_angle < 0.0 || front_angle >= 0.5 * std::numbers::pi)
        throw DomainError("incidence angle must lie in [0, pi/2)");
    if (!(v > 0.0)) throw DomainError("medium speed must be positive");
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    const double sin1 = std::sin(front_angle);
    const double span = sin1 > 0.0 ? v * dt / sin1 : 2.0 * v * dt;
    constexpr int kSeeds = 9;
    double sin_beta = 0.0;
    for (int i = 1; i < kSeeds; ++i) {
        const double x = span * i / (kSeeds - 1);
        const double r0 = v * dt;
        const double ri = v * (dt - x * sin1 / v);
        sin_beta += (r0 - ri) / x;
    }
    return std::asin(std::min(sin_beta / (kSeeds - 1), 1.0));
}

}  // namespace optics
}  // namespace cycloptics
