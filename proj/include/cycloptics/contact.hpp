#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "cycloptics/curve.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {
namespace contact {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2 pi).
inline double wrap_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

/// Reduced difference a - b in (-pi, pi]; all angle comparisons go through it.
inline double angle_difference(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d <= -std::numbers::pi) d += kTwoPi;
    if (d > std::numbers::pi) d -= kTwoPi;
    return d;
}

/// A point of the plane together with an oriented line direction through it:
/// one point of R^2 x S^1. theta is stored reduced to [0, 2 pi).
struct ContactElement {
    double x;
    double y;
    double theta;

    ContactElement(double x_, double y_, double theta_)
        : x(x_), y(y_), theta(wrap_angle(theta_)) {}
};

/// Tangent vector (dx, dy, dtheta) at a contact element.
struct ContactTangent {
    double dx;
    double dy;
    double dtheta;
};

/// Geodesic flow on the space of contact elements:
///   phi_t (x, y, theta) = (x - t sin theta, y + t cos theta, theta).
/// Each element travels along the straight line positively orthogonal to its
/// direction; theta is unchanged, so the group law holds in closed form.
inline ContactElement flow(const ContactElement& e, double t) {
    return {e.x - t * std::sin(e.theta), e.y + t * std::cos(e.theta), e.theta};
}

/// Defect of a tangent vector against the contact plane at e, which is
/// spanned by d/dtheta and cos(theta) d/dx + sin(theta) d/dy:
///   residual = sin(theta) dx - cos(theta) dy.
/// Zero iff the vector lies in the plane. Only zero/nonzero and comparisons
/// against a fixed normalization are meaningful.
inline double contact_residual(const ContactElement& e, const ContactTangent& v) {
    return std::sin(e.theta) * v.dx - std::cos(e.theta) * v.dy;
}

/// A regular front together with its Legendrian lift: theta(s) is the unique
/// angle making (x'(s), y'(s)) a positive multiple of (cos theta, sin theta).
struct LiftedFront {
    PlanarCurve base;
    std::vector<double> theta;  ///< per sample, reduced to [0, 2 pi)

    /// Lift angle at an arbitrary parameter (from the base derivative).
    double theta_at(double s) const {
        const Vec2 d = base.derivative(s);
        if (d.norm() < kRegularityThreshold)
            throw RegularityError("lift: front derivative vanishes at s = " +
                                  std::to_string(s));
        return wrap_angle(std::atan2(d.y, d.x));
    }
};

/// Legendrian lift of a regular front.
inline LiftedFront lift(const PlanarCurve& front) {
    std::vector<double> theta(front.size());
    for (std::size_t i = 0; i < front.size(); ++i) {
        const Vec2 d = front.derivative(front.params()[i]);
        if (d.norm() < kRegularityThreshold)
            throw RegularityError("lift: front derivative vanishes at s = " +
                                  std::to_string(front.params()[i]));
        theta[i] = wrap_angle(std::atan2(d.y, d.x));
    }
    return {front, std::move(theta)};
}

namespace detail {

/// dtheta/ds of a lift, (x' y'' - y' x'') / |f'|^2.
inline double theta_rate(const PlanarCurve& base, double s) {
    const Vec2 d1 = base.derivative(s);
    const Vec2 d2 = base.second_derivative(s);
    return cross(d1, d2) / d1.squared_norm();
}

}  // namespace detail

/// Front at time t: the flow applied pointwise, theta dropped. Every output
/// point lies at distance |t| from its source along (-sin theta, cos theta).
/// Carries closed-form derivatives when the base front does.
inline PlanarCurve propagate_front(const LiftedFront& lf, double t) {
    std::vector<double> params = lf.base.params();
    std::vector<Vec2> points(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double th = lf.theta[i];
        points[i] = lf.base.points()[i] + t * Vec2{-std::sin(th), std::cos(th)};
    }
    if (lf.base.has_analytic() && lf.base.has_analytic_second()) {
        const AnalyticCurve base = lf.base.analytic();
        AnalyticCurve out;
        out.position = [base, t](double s) {
            const Vec2 d = base.d1(s);
            const double th = std::atan2(d.y, d.x);
            return base.position(s) + t * Vec2{-std::sin(th), std::cos(th)};
        };
        out.d1 = [base, t](double s) {
            const Vec2 d1 = base.d1(s);
            const Vec2 d2 = base.d2(s);
            const double th = std::atan2(d1.y, d1.x);
            const double rate = cross(d1, d2) / d1.squared_norm();
            return d1 + t * rate * Vec2{-std::cos(th), -std::sin(th)};
        };
        return PlanarCurve(std::move(params), std::move(points), std::move(out));
    }
    return PlanarCurve(std::move(params), std::move(points));
}

/// Elementary wave of radius |t| around p: the circle of all contact elements
/// at p pushed through the flow and projected,
///   theta -> p + t (-sin theta, cos theta),
/// sampled uniformly over theta in [0, 2 pi].
inline PlanarCurve elementary_wave(Vec2 p, double t, std::size_t sample_count) {
    if (sample_count < 3) throw DomainError("elementary wave needs at least 3 samples");
    AnalyticCurve f;
    f.position = [p, t](double th) {
        return p + t * Vec2{-std::sin(th), std::cos(th)};
    };
    f.d1 = [t](double th) { return t * Vec2{-std::cos(th), -std::sin(th)}; };
    f.d2 = [t](double th) { return t * Vec2{std::sin(th), -std::cos(th)}; };
    return PlanarCurve::sample(std::move(f), 0.0, kTwoPi, sample_count);
}

struct TangencyReport {
    double s0;
    double t;
    double angle_error;  ///< line angle between the two tangents, in [0, pi/2]
    double point_error;  ///< distance between the propagated point and the wave point
    bool certified;      ///< both errors below 1e-8
};

/// Certifies that the propagated front and the elementary wave seeded at the
/// base point of s0 are tangent at time t. Refuses at or past the caustic,
/// |t| >= curvature radius of the front at s0.
inline TangencyReport tangency_certificate(const LiftedFront& lf, double s0, double t) {
    if (t == 0.0) throw DomainError("tangency needs a nonzero propagation time");
    const double kappa = detail::theta_rate(lf.base, s0) / lf.base.derivative(s0).norm();
    if (kappa != 0.0 && std::abs(t) >= 1.0 / std::abs(kappa))
        throw CausticError("tangency not certified at |t| >= curvature radius " +
                           std::to_string(1.0 / std::abs(kappa)));

    const double theta0 = lf.theta_at(s0);
    const PlanarCurve moved = propagate_front(lf, t);
    const PlanarCurve wave = elementary_wave(lf.base.position(s0), t, 64);

    Vec2 front_tangent;
    try {
        front_tangent = tangent(moved, s0);
    } catch (const RegularityError&) {
        // the propagated tangent vanishes only where the normals focus
        throw CausticError("tangency not certified: propagated front degenerates at s0 = " +
                           std::to_string(s0));
    }
    const Vec2 wave_tangent = tangent(wave, theta0);
    const double angle = std::atan2(std::abs(cross(front_tangent, wave_tangent)),
                                    std::abs(dot(front_tangent, wave_tangent)));
    const double point_err = distance(moved.position(s0), wave.position(theta0));
    return {s0, t, angle, point_err, angle < 1e-8 && point_err < 1e-8};
}

/// Pushes the tangent field of each lifted curve through the flow and returns
/// the largest contact-plane residual at the image elements. The flow is a
/// contact transformation, so this stays at rounding level for exact lifts.
inline double verify_contact_transformation(const std::vector<LiftedFront>& lifts,
                                            double t) {
    double worst = 0.0;
    for (const LiftedFront& lf : lifts) {
        for (std::size_t i = 0; i < lf.base.size(); ++i) {
            const double s = lf.base.params()[i];
            const Vec2 d1 = lf.base.derivative(s);
            const double rate = detail::theta_rate(lf.base, s);
            const double th = lf.theta[i];
            const ContactElement image = flow({lf.base.points()[i].x,
                                               lf.base.points()[i].y, th}, t);
            const ContactTangent pushed{d1.x - t * rate * std::cos(th),
                                        d1.y - t * rate * std::sin(th), rate};
            worst = std::max(worst, std::abs(contact_residual(image, pushed)));
        }
    }
    return worst;
}

}  // namespace contact
}  // namespace cycloptics
