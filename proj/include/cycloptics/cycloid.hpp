#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "cycloptics/curve.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/numeric.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

/// Cycloid traced by a point on the rim of a circle of radius `a` rolling
/// along the x-axis:
///
///   x(t) = a (t - sin t),   y(t) = a (1 - cos t).
///
/// With `y_down` set, the y-coordinate is negated: the same slide drawn in an
/// upward-y frame. Descent formulas work in the downward-y (depth) convention,
/// which is the plain-equation form.
class Cycloid {
  public:
    explicit Cycloid(double a, bool y_down = false) : a_(a), y_down_(y_down) {
        if (!(a > 0.0)) throw DomainError("cycloid radius must be positive");
    }

    double radius() const { return a_; }
    bool y_down() const { return y_down_; }

    Vec2 point(double t) const {
        return {a_ * (t - std::sin(t)), sign() * a_ * (1.0 - std::cos(t))};
    }

    Vec2 velocity(double t) const {
        return {a_ * (1.0 - std::cos(t)), sign() * a_ * std::sin(t)};
    }

    Vec2 acceleration(double t) const {
        return {a_ * std::sin(t), sign() * a_ * std::cos(t)};
    }

    /// |velocity| = 2 a |sin(t/2)|.
    double speed(double t) const { return 2.0 * a_ * std::abs(std::sin(0.5 * t)); }

    PlanarCurve to_curve(double t0, double t1, std::size_t samples) const {
        AnalyticCurve f;
        const Cycloid self = *this;
        f.position = [self](double t) { return self.point(t); };
        f.d1 = [self](double t) { return self.velocity(t); };
        f.d2 = [self](double t) { return self.acceleration(t); };
        return PlanarCurve::sample(std::move(f), t0, t1, samples);
    }

  private:
    double sign() const { return y_down_ ? -1.0 : 1.0; }

    double a_;
    bool y_down_;
};

/// Slide endpoint B = (b1, b2), measured from A = (0, 0) with depth positive.
struct FitTarget {
    double b1;
    double b2;

    FitTarget(double b1_, double b2_) : b1(b1_), b2(b2_) {
        if (!(b1 > 0.0)) throw DomainError("b1 must be positive");
        if (b2 < 0.0) throw DomainError("b2 must be nonnegative");
    }

    /// True when the connecting cycloid has t_B <= pi, i.e. the slide never
    /// runs uphill. Equivalent to b2 >= 2 b1 / pi.
    bool monotone() const { return b2 >= 2.0 * b1 / std::numbers::pi; }
};

struct CycloidFit {
    double a;    ///< rolling-circle radius
    double t_b;  ///< parameter of the endpoint, in (0, 2 pi]
};

namespace detail {

/// t - sin t, evaluated by series for small t where the direct form cancels.
inline double t_minus_sin(double t) {
    if (t >= 0.1) return t - std::sin(t);
    const double t2 = t * t;
    return t * t2 *
           (1.0 / 6.0 -
            t2 * (1.0 / 120.0 - t2 * (1.0 / 5040.0 - t2 / 362880.0)));
}

/// psi(t) = (1 - cos t) / (t - sin t) in cancellation-free form.
inline double cycloid_slope_ratio(double t) {
    const double s = std::sin(0.5 * t);
    return 2.0 * s * s / t_minus_sin(t);
}

}  // namespace detail

/// The unique cycloid through (0,0) and (b1, b2): solves
///   psi(t) = (1 - cos t) / (t - sin t) = b2 / b1
/// by bisection on (0, 2 pi], where psi decreases strictly from +inf to 0,
/// then scales a = b1 / (t_B - sin t_B).
inline CycloidFit fit_cycloid(const FitTarget& target) {
    const double two_pi = 2.0 * std::numbers::pi;
    if (target.b2 == 0.0) return {target.b1 / two_pi, two_pi};

    const double ratio = target.b2 / target.b1;
    const double lo = 1e-9;
    if (detail::cycloid_slope_ratio(lo) <= ratio)
        throw DomainError("fit_cycloid: target too steep for the bisection bracket");
    const double t_b = bisect(
        [&](double t) { return detail::cycloid_slope_ratio(t) - ratio; }, lo, two_pi, 200);
    return {target.b1 / detail::t_minus_sin(t_b), t_b};
}

/// Closed-form time to slide from rest at parameter t0 to t1 on the cycloid
/// under gravity g, depth measured downward:
///
///   T = sqrt(a/g) * (pi - 2 asin(cos(t1/2) / cos(t0/2))),
///
/// obtained from the substitution cos(t/2) = cos(t0/2) sin(phi). For t0 = 0
/// this reduces to t1 * sqrt(a/g); for t1 = pi it is pi * sqrt(a/g)
/// independently of t0 -- the tautochrone property.
inline double descent_time_closed(const Cycloid& c, double t0, double t1, double g) {
    if (!(g > 0.0)) throw DomainError("g must be positive");
    if (t0 == t1) return 0.0;
    if (t0 < 0.0 || t0 >= std::numbers::pi)
        throw DomainError("start parameter must lie in [0, pi)");
    if (t1 <= t0 || t1 > std::numbers::pi)
        throw DomainError("end parameter must lie in (t0, pi]");
    const double scale = std::sqrt(c.radius() / g);
    if (t0 == 0.0) return t1 * scale;
    const double ratio =
        std::clamp(std::cos(0.5 * t1) / std::cos(0.5 * t0), -1.0, 1.0);
    return scale * (std::numbers::pi - 2.0 * std::asin(ratio));
}

}  // namespace cycloptics
