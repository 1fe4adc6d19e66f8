#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "cycloptics/curve.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

/// Rolling-circle construction labels for the cycloidal-pendulum picture.
///
/// Two congruent cycloids of radius a, rolling lines 2a apart and phase pi
/// apart. The pendulum string is anchored at the upper cusp B' = (0, 2a),
/// wraps along the upper cycloid, leaves it tangentially at M' and runs
/// straight to the pendulum mass M on the lower cycloid. At construction
/// parameter t0 the two rolling circles are vertically aligned and touch at
/// P'; O is the lower circle's center and P its lowest point.
struct CycloidPairWitness {
    Vec2 m;        ///< mass point, on the lower cycloid
    Vec2 m_prime;  ///< string departure point, on the upper cycloid
    Vec2 p;        ///< lowest point of the lower rolling circle
    Vec2 p_prime;  ///< contact point of the two rolling circles
    Vec2 o;        ///< lower rolling-circle center
    double t0;     ///< construction parameter in [0, pi]
};

/// Upper cycloid of the pair, parametrized from A = (pi a, 0) to the string
/// anchor B' = (0, 2a):  U(s) = (a (pi - s - sin s), a (1 - cos s)).
/// The parameter s = pi end is the cusp at B'.
inline PlanarCurve pair_upper_cycloid(double a, std::size_t samples,
                                      double s_end = std::numbers::pi) {
    if (!(a > 0.0)) throw DomainError("cycloid radius must be positive");
    AnalyticCurve f;
    f.position = [a](double s) {
        return Vec2{a * (std::numbers::pi - s - std::sin(s)), a * (1.0 - std::cos(s))};
    };
    f.d1 = [a](double s) { return Vec2{-a * (1.0 + std::cos(s)), a * std::sin(s)}; };
    f.d2 = [a](double s) { return Vec2{a * std::sin(s), a * std::cos(s)}; };
    return PlanarCurve::sample(std::move(f), 0.0, s_end, samples);
}

/// Lower cycloid of the pair (the pendulum path), from A = (pi a, 0) down to
/// B = (0, -2a):  L(t) = (a (pi - t + sin t), -a (1 - cos t)).
/// This is the involute of the upper cycloid unwound from A, congruent to it:
/// the translate by (pi a, -2a) of the upper curve's continuation past its
/// cusp, so the two rolling lines sit 2a apart with a phase shift of pi.
inline PlanarCurve pair_lower_cycloid(double a, std::size_t samples,
                                      double t_end = std::numbers::pi) {
    if (!(a > 0.0)) throw DomainError("cycloid radius must be positive");
    AnalyticCurve f;
    f.position = [a](double t) {
        return Vec2{a * (std::numbers::pi - t + std::sin(t)), -a * (1.0 - std::cos(t))};
    };
    f.d1 = [a](double t) { return Vec2{a * (std::cos(t) - 1.0), -a * std::sin(t)}; };
    f.d2 = [a](double t) { return Vec2{-a * std::sin(t), -a * std::cos(t)}; };
    return PlanarCurve::sample(std::move(f), 0.0, t_end, samples);
}

/// Witness points at construction parameter t0. The defining identities
///   M'M = 2 P'M = 4 a sin(t0 / 2),
///   M' P' M collinear, M'M orthogonal to the lower tangent at M,
/// hold by construction and are what the tests assert.
inline CycloidPairWitness cycloid_pair_witness(double a, double t0) {
    if (!(a > 0.0)) throw DomainError("cycloid radius must be positive");
    if (t0 < 0.0 || t0 > std::numbers::pi)
        throw DomainError("witness parameter must lie in [0, pi]");
    const double pi = std::numbers::pi;
    CycloidPairWitness w;
    w.t0 = t0;
    w.m = {a * (pi - t0 + std::sin(t0)), -a * (1.0 - std::cos(t0))};
    w.m_prime = {a * (pi - t0 - std::sin(t0)), a * (1.0 - std::cos(t0))};
    w.o = {a * (pi - t0), -a};
    w.p_prime = {a * (pi - t0), 0.0};
    w.p = {a * (pi - t0), -2.0 * a};
    return w;
}

}  // namespace cycloptics
