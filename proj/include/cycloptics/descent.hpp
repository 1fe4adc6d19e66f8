#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cycloptics/curve.hpp"
#include "cycloptics/cycloid.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/numeric.hpp"
#include "cycloptics/vec2.hpp"

namespace cycloptics {

struct DescentParams {
    double g = 9.81;  ///< gravitational acceleration, m/s^2
};

namespace detail {

/// Exact gravity-descent time along a polyline: within each straight segment
/// the acceleration is constant, so the segment times are closed-form.
inline double polyline_descent_time(const std::vector<Vec2>& pts, double y0, double g) {
    double total = 0.0;
    double v = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Vec2 d = pts[i + 1] - pts[i];
        const double len = d.norm();
        if (len == 0.0) continue;
        const double v_end_sq = 2.0 * g * (pts[i + 1].y - y0);
        if (v_end_sq < 0.0)
            throw NotDescendingError("slide rises above its start height");
        const double v_end = std::sqrt(v_end_sq);
        if (d.y == 0.0) {
            if (v == 0.0)
                throw NotDescendingError("slide stalls at its start height");
            total += len / v;
        } else {
            total += len * (v_end - v) / (g * d.y);
        }
        v = v_end;
    }
    return total;
}

}  // namespace detail

/// Time for a point mass released from rest at `start_param` to reach the end
/// of the slide, with y measured downward so that v = sqrt(2 g (y - y0)):
///
///   T = integral |C'(s)| / sqrt(2 g (y(s) - y0)) ds.
///
/// The inverse-square-root start singularity is absorbed by substituting
/// u = sqrt(s - s0). Curves without closed-form evaluators are integrated as
/// polylines, which is exact for piecewise-linear slides.
inline double descent_time(const PlanarCurve& slide, double start_param,
                           const DescentParams& params = {}) {
    if (!(params.g > 0.0)) throw DomainError("g must be positive");
    slide.require_in_range(start_param);
    const double s0 = start_param;
    const double s1 = slide.param_back();
    if (s0 >= s1) return 0.0;

    const double y0 = slide.position(s0).y;
    const auto& sample_params = slide.params();
    const auto& sample_points = slide.points();
    for (std::size_t i = 0; i < sample_params.size(); ++i) {
        if (sample_params[i] <= s0) continue;
        if (sample_points[i].y <= y0)
            throw NotDescendingError("slide rises above its start height at s = " +
                                     std::to_string(sample_params[i]));
        if (i + 1 < sample_params.size() &&
            slide.derivative(sample_params[i]).norm() < kRegularityThreshold)
            throw RegularityError("slide is not regular at s = " +
                                  std::to_string(sample_params[i]));
    }

    if (!slide.has_analytic()) {
        std::vector<Vec2> pts;
        pts.push_back(slide.position(s0));
        for (std::size_t i = 0; i < sample_params.size(); ++i)
            if (sample_params[i] > s0) pts.push_back(sample_points[i]);
        return detail::polyline_descent_time(pts, y0, params.g);
    }

    const double g = params.g;
    const double span = s1 - s0;
    auto integrand = [&](double u) {
        const double s = s0 + u * u;
        const double dy = slide.position(s).y - y0;
        if (dy <= 0.0) {
            if (u * u <= 1e-12 * span) return 0.0;  // removable start neighborhood
            throw NotDescendingError("slide rises above its start height at s = " +
                                     std::to_string(s));
        }
        return 2.0 * u * slide.derivative(s).norm() / std::sqrt(2.0 * g * dy);
    };
    QuadratureControl ctl;
    ctl.abs_tol = 1e-9;
    ctl.rel_tol = 1e-10;
    return integrate(integrand, 0.0, std::sqrt(span), ctl);
}

struct SlideRanking {
    std::size_t slide_index;  ///< position in the input list
    double time_seconds;
};

/// Descent times of slides connecting (0,0) to (b1, b2), sorted ascending.
/// Ties keep the input order. Every slide must match the endpoints to 1e-9.
inline std::vector<SlideRanking> compare_slides(const FitTarget& target,
                                                const std::vector<PlanarCurve>& slides,
                                                const DescentParams& params = {}) {
    const Vec2 a{0.0, 0.0};
    const Vec2 b{target.b1, target.b2};
    std::vector<SlideRanking> ranking;
    ranking.reserve(slides.size());
    for (std::size_t i = 0; i < slides.size(); ++i) {
        if (distance(slides[i].front(), a) > 1e-9 || distance(slides[i].back(), b) > 1e-9)
            throw EndpointError("slide " + std::to_string(i) +
                                " does not connect (0,0) to the target");
        ranking.push_back({i, descent_time(slides[i], slides[i].param_front(), params)});
    }
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const SlideRanking& lhs, const SlideRanking& rhs) {
                         return lhs.time_seconds < rhs.time_seconds;
                     });
    return ranking;
}

/// Seeded normal displacement of a slide by a sine series that vanishes at
/// both endpoints,
///
///   delta(xi) = amplitude * w(xi) * sum_k c_k sin(k pi xi),   xi in [0, 1],
///
/// with taper w(xi) = (1 - cos(pi xi)) / 2. The taper vanishes quadratically
/// at the start so a slide leaving a cusp keeps its vertical start direction;
/// an untapered normal displacement would tilt the start horizontal and make
/// the descent-time integral diverge. Draws violating y > 0 on the interior
/// are resampled, up to 100 times.
inline PlanarCurve perturb_slide(const PlanarCurve& base, double amplitude,
                                 int mode_count, unsigned int seed) {
    if (amplitude < 0.0) throw DomainError("amplitude must be nonnegative");
    if (mode_count < 1) throw DomainError("mode_count must be at least 1");
    if (amplitude == 0.0) return base;
    if (!base.has_analytic() || !base.has_analytic_second())
        throw DomainError("perturb_slide needs closed-form curve derivatives");

    const double sa = base.param_front();
    const double sb = base.param_back();
    const double width = sb - sa;
    const AnalyticCurve f = base.analytic();

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> coeffs(static_cast<std::size_t>(mode_count));
        double norm_sq = 0.0;
        for (double& ck : coeffs) {
            ck = uniform(rng);
            norm_sq += ck * ck;
        }
        if (norm_sq == 0.0) continue;
        const double scale = amplitude / std::sqrt(norm_sq);
        for (double& ck : coeffs) ck *= scale;

        auto delta = [coeffs, sa, width](double s) {
            const double xi = (s - sa) / width;
            const double w = 0.5 * (1.0 - std::cos(std::numbers::pi * xi));
            double series = 0.0;
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                series += coeffs[k] * std::sin((k + 1) * std::numbers::pi * xi);
            return w * series;
        };
        auto delta_prime = [coeffs, sa, width](double s) {
            const double xi = (s - sa) / width;
            const double w = 0.5 * (1.0 - std::cos(std::numbers::pi * xi));
            const double wp = 0.5 * std::numbers::pi * std::sin(std::numbers::pi * xi);
            double series = 0.0, series_p = 0.0;
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                const double freq = (k + 1) * std::numbers::pi;
                series += coeffs[k] * std::sin(freq * xi);
                series_p += coeffs[k] * freq * std::cos(freq * xi);
            }
            return (wp * series + w * series_p) / width;
        };
        auto normal = [f](double s) { return (f.d1(s) / f.d1(s).norm()).rot90(); };
        auto normal_prime = [f](double s) {
            const Vec2 d1 = f.d1(s);
            const double n = d1.norm();
            const Vec2 t = d1 / n;
            const Vec2 tp = (f.d2(s) - t * dot(t, f.d2(s))) / n;
            return tp.rot90();
        };

        AnalyticCurve out;
        out.position = [f, delta, normal](double s) {
            const double d = delta(s);
            if (d == 0.0) return f.position(s);
            return f.position(s) + d * normal(s);
        };
        out.d1 = [f, delta, delta_prime, normal, normal_prime](double s) {
            const double d = delta(s);
            const double dp = delta_prime(s);
            if (d == 0.0 && dp == 0.0) return f.d1(s);
            return f.d1(s) + dp * normal(s) + d * normal_prime(s);
        };

        std::vector<double> params = base.params();
        std::vector<Vec2> points(params.size());
        bool admissible = true;
        for (std::size_t i = 0; i < params.size(); ++i) {
            points[i] = out.position(params[i]);
            const bool interior = i > 0 && i + 1 < params.size();
            if (interior && points[i].y <= 0.0) {
                admissible = false;
                break;
            }
        }
        if (!admissible) continue;
        return PlanarCurve(std::move(params), std::move(points), std::move(out));
    }
    throw PerturbationError("no admissible perturbation after 100 resamples");
}

}  // namespace cycloptics
