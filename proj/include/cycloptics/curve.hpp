#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cycloptics/errors.hpp"
#include "cycloptics/numeric.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

/// Derivative magnitudes below this are treated as a vanishing derivative.
inline constexpr double kRegularityThreshold = 1e-12;

/// Closed-form evaluators a curve may carry alongside its samples.
/// `position` and `d1` must cover (a neighborhood of) the parameter range;
/// `d2` may be left empty, in which case second derivatives fall back to a
/// centered difference of `d1`.
struct AnalyticCurve {
    std::function<Vec2(double)> position;
    std::function<Vec2(double)> d1;
    std::function<Vec2(double)> d2;
};

/// Parametric planar curve: ordered (param, point) samples, optionally backed
/// by closed-form callbacks.
///
/// Parameters are strictly increasing and there are at least two samples.
/// Regularity (non-vanishing derivative) is demanded by the operations that
/// need it rather than at construction, so degenerate curves -- a zero-radius
/// elementary wave, a cycloid arch including its cusps -- remain representable.
class PlanarCurve {
  public:
    PlanarCurve(std::vector<double> params, std::vector<Vec2> points)
        : params_(std::move(params)), points_(std::move(points)) {
        validate();
    }

    PlanarCurve(std::vector<double> params, std::vector<Vec2> points,
                AnalyticCurve analytic)
        : params_(std::move(params)),
          points_(std::move(points)),
          analytic_(std::move(analytic)) {
        validate();
    }

    /// Samples `analytic` uniformly on [s0, s1] with `count` points.
    static PlanarCurve sample(AnalyticCurve analytic, double s0, double s1,
                              std::size_t count) {
        if (count < 2) throw DomainError("PlanarCurve: need at least 2 samples");
        if (!(s1 > s0)) throw DomainError("PlanarCurve: empty parameter range");
        std::vector<double> params(count);
        std::vector<Vec2> points(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double s =
                s0 + (s1 - s0) * static_cast<double>(i) / static_cast<double>(count - 1);
            params[i] = s;
            points[i] = analytic.position(s);
        }
        return PlanarCurve(std::move(params), std::move(points), std::move(analytic));
    }

    std::size_t size() const { return params_.size(); }
    const std::vector<double>& params() const { return params_; }
    const std::vector<Vec2>& points() const { return points_; }
    double param_front() const { return params_.front(); }
    double param_back() const { return params_.back(); }
    Vec2 front() const { return points_.front(); }
    Vec2 back() const { return points_.back(); }

    bool has_analytic() const { return static_cast<bool>(analytic_.d1); }
    bool has_analytic_second() const { return static_cast<bool>(analytic_.d2); }
    const AnalyticCurve& analytic() const { return analytic_; }

    void require_in_range(double s) const {
        const double slack = 1e-12 * (1.0 + std::abs(param_front()) + std::abs(param_back()));
        if (s < param_front() - slack || s > param_back() + slack)
            throw DomainError("parameter " + std::to_string(s) + " outside curve range");
    }

    /// Point at parameter s: closed form when available, otherwise linear
    /// interpolation between the bracketing samples.
    Vec2 position(double s) const {
        if (analytic_.position) return analytic_.position(s);
        require_in_range(s);
        const std::size_t k = segment_index(s);
        const double h = params_[k + 1] - params_[k];
        const double w = (s - params_[k]) / h;
        return points_[k] * (1.0 - w) + points_[k + 1] * w;
    }

    /// First derivative. Without closed forms this is a centered difference
    /// at sample parameters (one-sided at the ends) and the chord slope of
    /// the containing segment elsewhere.
    Vec2 derivative(double s) const {
        if (analytic_.d1) return analytic_.d1(s);
        require_in_range(s);
        const std::size_t k = nearest_sample(s);
        if (std::abs(s - params_[k]) <= snap_tolerance()) return sample_derivative(k);
        const std::size_t seg = segment_index(s);
        return (points_[seg + 1] - points_[seg]) / (params_[seg + 1] - params_[seg]);
    }

    /// Second derivative: closed form, else a centered difference of the
    /// analytic first derivative, else a three-point difference on samples.
    Vec2 second_derivative(double s) const {
        if (analytic_.d2) return analytic_.d2(s);
        if (analytic_.d1) {
            const double h = fd_step(s);
            return (analytic_.d1(s + h) - analytic_.d1(s - h)) / (2.0 * h);
        }
        require_in_range(s);
        std::size_t k = nearest_sample(s);
        k = std::clamp<std::size_t>(k, 1, params_.size() - 2);
        // three-point formula valid on non-uniform grids
        const double h0 = params_[k] - params_[k - 1];
        const double h1 = params_[k + 1] - params_[k];
        const Vec2 a = points_[k - 1], b = points_[k], c = points_[k + 1];
        return (a * h1 - b * (h0 + h1) + c * h0) * (2.0 / (h0 * h1 * (h0 + h1)));
    }

    /// Index of the segment [params[k], params[k+1]] containing s.
    std::size_t segment_index(double s) const {
        auto it = std::upper_bound(params_.begin(), params_.end(), s);
        std::size_t k = (it == params_.begin()) ? 0 : static_cast<std::size_t>(it - params_.begin()) - 1;
        return std::min(k, params_.size() - 2);
    }

  private:
    void validate() const {
        if (params_.size() != points_.size())
            throw DomainError("PlanarCurve: params/points size mismatch");
        if (params_.size() < 2)
            throw DomainError("PlanarCurve: need at least 2 samples");
        for (std::size_t i = 1; i < params_.size(); ++i)
            if (!(params_[i] > params_[i - 1]))
                throw DomainError("PlanarCurve: params must be strictly increasing");
    }

    double snap_tolerance() const {
        return 1e-9 * (std::abs(param_back() - param_front()) + 1.0);
    }

    static double fd_step(double s) {
        return 6e-6 * (1.0 + std::abs(s));
    }

    std::size_t nearest_sample(double s) const {
        const std::size_t k = segment_index(s);
        return (s - params_[k] > params_[k + 1] - s) ? k + 1 : k;
    }

    /// Finite-difference derivative at sample k with step = local spacing.
    Vec2 sample_derivative(std::size_t k) const {
        const std::size_t n = params_.size();
        if (k == 0)
            return (points_[1] - points_[0]) / (params_[1] - params_[0]);
        if (k == n - 1)
            return (points_[n - 1] - points_[n - 2]) / (params_[n - 1] - params_[n - 2]);
        return (points_[k + 1] - points_[k - 1]) / (params_[k + 1] - params_[k - 1]);
    }

    std::vector<double> params_;
    std::vector<Vec2> points_;
    AnalyticCurve analytic_;
};

/// Unit tangent at parameter s.
inline Vec2 tangent(const PlanarCurve& c, double s) {
    const Vec2 d = c.derivative(s);
    const double n = d.norm();
    if (n < kRegularityThreshold)
        throw RegularityError("tangent: derivative vanishes at s = " + std::to_string(s));
    return d / n;
}

namespace detail {

/// Polyline length between two parameters, with linear interpolation for
/// partial end segments.
inline double polyline_length(const PlanarCurve& c, double s1, double s2) {
    const auto& pts = c.points();
    double total = 0.0;
    const std::size_t k1 = c.segment_index(s1);
    const std::size_t k2 = c.segment_index(s2);
    if (k1 == k2) return (c.position(s2) - c.position(s1)).norm();
    total += (pts[k1 + 1] - c.position(s1)).norm();
    for (std::size_t k = k1 + 1; k < k2; ++k) total += (pts[k + 1] - pts[k]).norm();
    total += (c.position(s2) - pts[k2]).norm();
    return total;
}

/// Signed curvature cross(c', c'') / |c'|^3.
inline double signed_curvature(const PlanarCurve& c, double s) {
    const Vec2 d1 = c.derivative(s);
    const double n = d1.norm();
    if (n < kRegularityThreshold)
        throw RegularityError("curvature: derivative vanishes at s = " + std::to_string(s));
    const Vec2 d2 = c.second_derivative(s);
    return cross(d1, d2) / (n * n * n);
}

}  // namespace detail

/// Arc length between parameters s1 <= s2: adaptive quadrature of |c'| when
/// closed-form derivatives exist, otherwise the sampled polyline length.
inline double arc_length(const PlanarCurve& c, double s1, double s2) {
    c.require_in_range(s1);
    c.require_in_range(s2);
    if (s1 > s2) throw DomainError("arc_length: s1 must not exceed s2");
    if (s1 == s2) return 0.0;
    if (c.has_analytic()) {
        const auto& d1 = c.analytic().d1;
        return integrate([&](double s) { return d1(s).norm(); }, s1, s2);
    }
    return detail::polyline_length(c, s1, s2);
}

/// Radius of the osculating circle, |c'|^3 / |cross(c', c'')|.
inline double curvature_radius(const PlanarCurve& c, double s) {
    const double kappa = detail::signed_curvature(c, s);
    if (std::abs(kappa) < 1e-14)
        throw CurvatureSingularError("curvature_radius: zero curvature at s = " +
                                     std::to_string(s));
    return 1.0 / std::abs(kappa);
}

/// Center of the osculating circle, point + radius * unit normal.
inline Vec2 curvature_center(const PlanarCurve& c, double s) {
    const double kappa = detail::signed_curvature(c, s);
    if (std::abs(kappa) < 1e-14)
        throw CurvatureSingularError("curvature_center: zero curvature at s = " +
                                     std::to_string(s));
    return c.position(s) + tangent(c, s).rot90() / kappa;
}

/// Involute of c unwound from parameter s0:
///   I(s) = C(s) - ell(s0, s) * T(s),
/// the track of a taut string end initially at C(s0) and laid along the curve.
/// Sampled on the curve's own parameter grid restricted to [s0, end]; carries a
/// closed-form first derivative I'(s) = -ell(s) * T'(s) when the base does.
inline PlanarCurve involute(const PlanarCurve& c, double s0) {
    c.require_in_range(s0);
    std::vector<double> params;
    for (double s : c.params())
        if (s >= s0) params.push_back(s);
    if (params.empty() || params.front() > s0) params.insert(params.begin(), s0);
    if (params.size() < 2)
        throw DomainError("involute: fewer than two samples past s0");

    // cumulative string length along the grid
    std::vector<double> ell(params.size(), 0.0);
    for (std::size_t i = 1; i < params.size(); ++i)
        ell[i] = ell[i - 1] + arc_length(c, params[i - 1], params[i]);

    std::vector<Vec2> points(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        points[i] = (ell[i] == 0.0) ? c.position(params[i])
                                    : c.position(params[i]) - ell[i] * tangent(c, params[i]);
    }

    if (c.has_analytic()) {
        AnalyticCurve base = c.analytic();
        auto length_from = [base, s0](double s) {
            return integrate([&](double u) { return base.d1(u).norm(); }, s0, s);
        };
        auto unit_tangent = [base](double s) {
            const Vec2 d = base.d1(s);
            const double n = d.norm();
            if (n < kRegularityThreshold)
                throw RegularityError("involute: derivative vanishes at s = " +
                                      std::to_string(s));
            return d / n;
        };
        AnalyticCurve out;
        out.position = [base, length_from, unit_tangent, s0](double s) {
            if (s == s0) return base.position(s);
            return base.position(s) - length_from(s) * unit_tangent(s);
        };
        // I'(s) = -ell(s) T'(s) with T' = (d2 - T (T . d2)) / |d1|
        out.d1 = [base, length_from, unit_tangent](double s) {
            const Vec2 t = unit_tangent(s);
            const Vec2 d2 = base.d2 ? base.d2(s)
                                    : (base.d1(s + 6e-6) - base.d1(s - 6e-6)) / 1.2e-5;
            const Vec2 tp = (d2 - t * dot(t, d2)) / base.d1(s).norm();
            return -length_from(s) * tp;
        };
        return PlanarCurve(std::move(params), std::move(points), std::move(out));
    }
    return PlanarCurve(std::move(params), std::move(points));
}

/// Evolute of c: its centers of curvature, sampled on the same grid.
/// Throws CurvatureSingularError at flat points; callers exclude cusp
/// parameters by an interior margin.
inline PlanarCurve evolute(const PlanarCurve& c) {
    std::vector<double> params = c.params();
    std::vector<Vec2> points(params.size());
    for (std::size_t i = 0; i < params.size(); ++i)
        points[i] = curvature_center(c, params[i]);
    return PlanarCurve(std::move(params), std::move(points));
}

}  // namespace cycloptics
