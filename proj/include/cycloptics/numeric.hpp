#pragma once

#include <cmath>
#include <utility>

#include "cycloptics/errors.hpp"

namespace cycloptics {

/// Tolerances for adaptive quadrature. An interval is accepted once its
/// local error estimate drops below max(abs_tol_share, rel_tol * |value|).
struct QuadratureControl {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 52;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr double kk15_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kk15_weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478541,
    0.20443294007529889, 0.20948214108472783};
inline constexpr double kg7_weights[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346938};

struct GkResult {
    double kronrod;
    double gauss;
};

template <class F>
GkResult gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kron = kk15_weights[7] * fc;
    double gauss = kg7_weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kk15_nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += kk15_weights[i] * fsum;
        if (i % 2 == 1) gauss += kg7_weights[i / 2] * fsum;
    }
    return {kron * half, gauss * half};
}

template <class F>
double integrate_adaptive(F& f, double a, double b, double abs_tol,
                          double rel_tol, int depth) {
    const GkResult est = gk15(f, a, b);
    const double err = std::abs(est.kronrod - est.gauss);
    if (depth <= 0 || err <= std::max(abs_tol, rel_tol * std::abs(est.kronrod)))
        return est.kronrod;
    const double mid = 0.5 * (a + b);
    return integrate_adaptive(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1) +
           integrate_adaptive(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7-15) quadrature of f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, QuadratureControl ctl = {}) {
    if (a == b) return 0.0;
    if (b < a) return -integrate(std::forward<F>(f), b, a, ctl);
    return detail::integrate_adaptive(f, a, b, ctl.abs_tol, ctl.rel_tol,
                                      ctl.max_depth);
}

/// Bisection on a bracketing interval. f(lo) and f(hi) must differ in sign
/// (infinities are fine). Returns the midpoint of the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, int iterations = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw DomainError("bisect: root not bracketed");
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cycloptics
