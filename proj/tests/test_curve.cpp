#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <cycloptics/curve.hpp>
#include <cycloptics/cycloid.hpp>
#include <cycloptics/cycloid_pair.hpp>

#include "oracles.hpp"

using namespace cycloptics;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;

PlanarCurve unit_circle(std::size_t n = 257, double s0 = 0.0, double s1 = 2.0 * pi) {
    AnalyticCurve f;
    f.position = [](double s) { return Vec2{std::cos(s), std::sin(s)}; };
    f.d1 = [](double s) { return Vec2{-std::sin(s), std::cos(s)}; };
    f.d2 = [](double s) { return Vec2{-std::cos(s), -std::sin(s)}; };
    return PlanarCurve::sample(std::move(f), s0, s1, n);
}

PlanarCurve horizontal_line(std::size_t n = 11) {
    AnalyticCurve f;
    f.position = [](double s) { return Vec2{s, 0.0}; };
    f.d1 = [](double) { return Vec2{1.0, 0.0}; };
    f.d2 = [](double) { return Vec2{0.0, 0.0}; };
    return PlanarCurve::sample(std::move(f), 0.0, 3.0, n);
}

}  // namespace

TEST_CASE("PlanarCurve validation") {
    std::vector<double> params{0.0, 1.0};
    std::vector<Vec2> pts{{0.0, 0.0}, {1.0, 0.0}};
    REQUIRE_NOTHROW(PlanarCurve(params, pts));
    REQUIRE_THROWS_AS(PlanarCurve({0.0}, {{0.0, 0.0}}), DomainError);
    REQUIRE_THROWS_AS(PlanarCurve({0.0, 0.0}, pts), DomainError);
    REQUIRE_THROWS_AS(PlanarCurve({1.0, 0.0}, pts), DomainError);
    REQUIRE_THROWS_AS(PlanarCurve({0.0, 1.0, 2.0}, pts), DomainError);
}

TEST_CASE("tangent") {
    SECTION("constant-direction line") {
        const auto line = horizontal_line();
        for (double s : {0.0, 0.7, 2.9}) {
            const Vec2 t = tangent(line, s);
            REQUIRE_THAT(t.x, WithinAbs(1.0, 1e-15));
            REQUIRE_THAT(t.y, WithinAbs(0.0, 1e-15));
        }
    }

    SECTION("unit circle at s = 0") {
        const Vec2 t = tangent(unit_circle(), 0.0);
        REQUIRE_THAT(t.x, WithinAbs(0.0, 1e-15));
        REQUIRE_THAT(t.y, WithinAbs(1.0, 1e-15));
    }

    SECTION("cycloid at t = pi moves horizontally") {
        const Cycloid cyc(1.0);
        const auto curve = cyc.to_curve(0.0, 2.0 * pi, 201);
        const Vec2 t = tangent(curve, pi);
        REQUIRE_THAT(t.x, WithinAbs(1.0, 1e-15));
        REQUIRE_THAT(t.y, WithinAbs(0.0, 1e-15));
    }

    SECTION("degenerate derivative") {
        const Cycloid cyc(1.0);
        const auto curve = cyc.to_curve(0.0, 2.0 * pi, 201);
        REQUIRE_THROWS_AS(tangent(curve, 0.0), RegularityError);
    }

    SECTION("finite-difference fallback matches the analytic direction") {
        const auto analytic = unit_circle(601);
        PlanarCurve sampled(analytic.params(), analytic.points());
        for (std::size_t k : {50u, 180u, 420u}) {
            const double s = sampled.params()[k];
            const Vec2 ta = tangent(analytic, s);
            const Vec2 tf = tangent(sampled, s);  // centered difference at a sample
            REQUIRE_THAT((ta - tf).norm(), WithinAbs(0.0, 1e-4));
        }
    }
}

TEST_CASE("arc_length") {
    const Cycloid cyc(1.0);
    const auto curve = cyc.to_curve(0.0, 2.0 * pi, 201);

    SECTION("empty interval") {
        REQUIRE(arc_length(curve, 1.0, 1.0) == 0.0);
    }

    SECTION("cycloid segment: 4 a sin(t0/2) with t0 = pi/2") {
        const double len = arc_length(curve, pi - pi / 2.0, pi);
        REQUIRE_THAT(len, WithinAbs(2.0 * std::sqrt(2.0), 1e-10));
    }

    SECTION("full arch, against a Simpson oracle of the speed") {
        const double oracle =
            oracles::simpson([&](double t) { return cyc.speed(t); }, 0.0, 2.0 * pi, 4000);
        const double len = arc_length(curve, 0.0, 2.0 * pi);
        REQUIRE_THAT(len, WithinAbs(8.0, 1e-9));
        REQUIRE_THAT(len, WithinAbs(oracle, 1e-7));
    }

    SECTION("additive over subdivisions") {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
        for (int i = 0; i < 20; ++i) {
            double s1 = u(rng), s2 = u(rng), s3 = u(rng);
            if (s1 > s2) std::swap(s1, s2);
            if (s2 > s3) std::swap(s2, s3);
            if (s1 > s2) std::swap(s1, s2);
            const double whole = arc_length(curve, s1, s3);
            const double split = arc_length(curve, s1, s2) + arc_length(curve, s2, s3);
            REQUIRE_THAT(split, WithinAbs(whole, 1e-9));
        }
    }

    SECTION("bad parameters") {
        REQUIRE_THROWS_AS(arc_length(curve, -1.0, 1.0), DomainError);
        REQUIRE_THROWS_AS(arc_length(curve, 0.0, 7.0), DomainError);
        REQUIRE_THROWS_AS(arc_length(curve, 2.0, 1.0), DomainError);
    }

    SECTION("sampled polyline length converges to the analytic value") {
        const auto fine = cyc.to_curve(0.0, 2.0 * pi, 20001);
        PlanarCurve sampled(fine.params(), fine.points());
        REQUIRE_THAT(arc_length(sampled, 0.0, 2.0 * pi), WithinAbs(8.0, 1e-6));
    }
}

TEST_CASE("curvature_radius") {
    SECTION("circle of radius r") {
        for (double r : {0.5, 1.0, 3.0}) {
            AnalyticCurve f;
            f.position = [r](double s) { return Vec2{r * std::cos(s), r * std::sin(s)}; };
            f.d1 = [r](double s) { return Vec2{-r * std::sin(s), r * std::cos(s)}; };
            f.d2 = [r](double s) { return Vec2{-r * std::cos(s), -r * std::sin(s)}; };
            const auto circle = PlanarCurve::sample(std::move(f), 0.0, 2.0 * pi, 65);
            REQUIRE_THAT(curvature_radius(circle, 1.1), WithinAbs(r, 1e-12));
        }
    }

    SECTION("cycloid: 4 a sin(t/2)") {
        const Cycloid cyc(1.0);
        const auto curve = cyc.to_curve(0.0, 2.0 * pi, 201);
        REQUIRE_THAT(curvature_radius(curve, pi), WithinAbs(4.0, 1e-12));
        REQUIRE_THAT(curvature_radius(curve, pi / 2.0),
                     WithinAbs(2.0 * std::sqrt(2.0), 1e-12));
    }

    SECTION("matches the osculating-circle estimate as h -> 0") {
        const Cycloid cyc(1.0);
        const auto curve = cyc.to_curve(0.0, 2.0 * pi, 201);
        auto pos = [&](double t) { return cyc.point(t); };
        const double exact = curvature_radius(curve, 2.0);
        const double coarse = std::abs(oracles::circumradius_curvature(pos, 2.0, 1e-2) - exact);
        const double fine = std::abs(oracles::circumradius_curvature(pos, 2.0, 5e-3) - exact);
        REQUIRE(fine < coarse);
        REQUIRE(coarse / fine > 3.0);  // O(h^2)
        REQUIRE_THAT(oracles::circumradius_curvature(pos, 2.0, 1e-4), WithinAbs(exact, 1e-6));
    }

    SECTION("zero curvature") {
        REQUIRE_THROWS_AS(curvature_radius(horizontal_line(), 1.0), CurvatureSingularError);
    }
}

TEST_CASE("involute") {
    SECTION("zero unwound string returns the base point") {
        const auto circle = unit_circle();
        const auto inv = involute(circle, 0.5);
        REQUIRE_THAT(distance(inv.front(), circle.position(0.5)), WithinAbs(0.0, 1e-15));
    }

    SECTION("unit circle involute closed form") {
        const auto inv = involute(unit_circle(2001, 0.0, 4.0), 0.0);
        for (std::size_t i = 0; i < inv.size(); i += 100) {
            const double s = inv.params()[i];
            const Vec2 expected{std::cos(s) + s * std::sin(s), std::sin(s) - s * std::cos(s)};
            REQUIRE_THAT(distance(inv.points()[i], expected), WithinAbs(0.0, 1e-9));
        }
    }

    SECTION("pendulum-plate cycloid unwinds to the congruent pendulum path") {
        // cusp of the upper curve excluded by the interior margin
        const auto upper = pair_upper_cycloid(1.0, 10001, pi - 1e-6);
        const auto inv = involute(upper, 0.0);
        const auto lower = pair_lower_cycloid(1.0, 2);
        for (std::size_t i = 0; i < inv.size(); i += 500) {
            const Vec2 expected = lower.position(inv.params()[i]);
            REQUIRE_THAT(distance(inv.points()[i], expected), WithinAbs(0.0, 1e-6));
        }
    }

    SECTION("string is tangent to the base and normal to the involute") {
        const auto circle = unit_circle(801, 0.0, 5.0);
        const auto inv = involute(circle, 0.2);
        for (double s : {0.8, 1.7, 3.1, 4.6}) {
            REQUIRE_THAT(dot(tangent(circle, s), tangent(inv, s)), WithinAbs(0.0, 1e-8));
            // the unwound segment points along the base tangent
            const Vec2 seg = circle.position(s) - inv.position(s);
            REQUIRE_THAT(std::abs(cross(seg / seg.norm(), tangent(circle, s))),
                         WithinAbs(0.0, 1e-8));
        }
    }

    SECTION("unwound length equals the arc length") {
        const auto circle = unit_circle(801, 0.0, 5.0);
        const auto inv = involute(circle, 0.2);
        for (double s : {0.9, 2.0, 4.9}) {
            const double gap = distance(circle.position(s), inv.position(s));
            REQUIRE_THAT(gap, WithinAbs(arc_length(circle, 0.2, s), 1e-10));
        }
    }

    SECTION("discretized unwinding error shrinks as O(h^2)") {
        const auto lower_dense = pair_lower_cycloid(1.0, 40001, pi).points();
        auto sup_error = [&](std::size_t n) {
            const auto upper = pair_upper_cycloid(1.0, n + 1, pi);
            PlanarCurve sampled(upper.params(), upper.points());  // drop closed forms
            const auto inv = involute(sampled, 0.0);
            double sup = 0.0;
            for (const Vec2& p : inv.points())
                sup = std::max(sup, oracles::distance_to_polyline(p, lower_dense));
            return sup;
        };
        const double at_h = sup_error(500);
        const double at_half_h = sup_error(1000);
        REQUIRE(at_half_h < at_h);
        REQUIRE(at_h / at_half_h >= 3.5);
    }

    SECTION("regularity failures propagate") {
        // the interior cusp at t = 2 pi sits exactly on this grid
        const auto arches = Cycloid(1.0).to_curve(0.0, 4.0 * pi, 201);
        REQUIRE_THROWS_AS(involute(arches, 1.0), RegularityError);
    }

    SECTION("library involute agrees with the polyline-unwinding oracle") {
        const auto upper = pair_upper_cycloid(1.0, 2001, pi);
        PlanarCurve sampled(upper.params(), upper.points());
        const auto inv = involute(sampled, 0.0);
        const auto oracle = oracles::polyline_involute(upper.points());
        for (std::size_t i = 0; i < inv.size(); i += 100)
            REQUIRE_THAT(distance(inv.points()[i], oracle[i]), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("evolute") {
    SECTION("flat curves have no centers of curvature") {
        REQUIRE_THROWS_AS(evolute(horizontal_line()), CurvatureSingularError);
    }

    SECTION("circle collapses to its center") {
        const auto ev = evolute(unit_circle(65));
        for (const Vec2& p : ev.points())
            REQUIRE_THAT(p.norm(), WithinAbs(0.0, 1e-12));
    }

    SECTION("cycloid evolute is the cycloid translated by (pi a, -2a)") {
        const Cycloid cyc(1.0);
        const auto curve = cyc.to_curve(0.2, 2.0 * pi - 0.2, 301);
        const auto ev = evolute(curve);
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const double t = ev.params()[i];
            const Vec2 shifted = cyc.point(t - pi) + Vec2{pi, -2.0};
            REQUIRE_THAT(distance(ev.points()[i], shifted), WithinAbs(0.0, 1e-9));
        }
    }

    SECTION("evolute of an involute reproduces the base curve") {
        const auto circle = unit_circle(801, 0.5, 5.5);
        const auto inv = involute(circle, 0.5);
        // skip the start where the involute itself is singular
        std::vector<double> params(inv.params().begin() + 40, inv.params().end());
        std::vector<Vec2> pts(inv.points().begin() + 40, inv.points().end());
        const PlanarCurve tail(params, pts, inv.analytic());
        const auto ev = evolute(tail);
        for (std::size_t i = 0; i < ev.size(); i += 60) {
            const Vec2 base_point = circle.position(ev.params()[i]);
            REQUIRE_THAT(distance(ev.points()[i], base_point), WithinAbs(0.0, 1e-6));
        }
    }
}

TEST_CASE("cycloid pair witness") {
    const double a = 1.0;
    for (double t0 : {0.3, 0.5 * pi, 2.2, pi}) {
        const auto w = cycloid_pair_witness(a, t0);
        const double string = 4.0 * a * std::sin(0.5 * t0);

        REQUIRE_THAT(distance(w.m_prime, w.m), WithinAbs(string, 1e-12));
        REQUIRE_THAT(distance(w.p_prime, w.m), WithinAbs(0.5 * string, 1e-12));

        // M' P' M collinear with P' the midpoint
        REQUIRE_THAT(distance(0.5 * (w.m + w.m_prime), w.p_prime), WithinAbs(0.0, 1e-12));

        // the witness points sit on their curves
        const auto lower = pair_lower_cycloid(a, 2);
        const auto upper = pair_upper_cycloid(a, 2);
        REQUIRE_THAT(distance(w.m, lower.position(t0)), WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(distance(w.m_prime, upper.position(t0)), WithinAbs(0.0, 1e-12));

        // angle M O P' equals t0
        const Vec2 om = w.m - w.o;
        const Vec2 op = w.p_prime - w.o;
        const double angle = std::acos(std::clamp(dot(om, op) / (om.norm() * op.norm()), -1.0, 1.0));
        REQUIRE_THAT(angle, WithinAbs(t0, 1e-9));

        if (t0 > 0.0 && t0 < pi) {
            // MP is tangent to the pendulum path, M'M normal to it
            const Vec2 tang = tangent(lower, t0);
            const Vec2 mp = w.p - w.m;
            REQUIRE_THAT(cross(mp / mp.norm(), tang), WithinAbs(0.0, 1e-12));
            const Vec2 mm = w.m_prime - w.m;
            REQUIRE_THAT(dot(mm / mm.norm(), tang), WithinAbs(0.0, 1e-12));
            // and M'M is tangent to the plate curve at M'
            const Vec2 plate_tangent = tangent(upper, t0);
            REQUIRE_THAT(cross(mm / mm.norm(), plate_tangent), WithinAbs(0.0, 1e-12));
        }
    }

    REQUIRE_THROWS_AS(cycloid_pair_witness(0.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(cycloid_pair_witness(1.0, -0.1), DomainError);
    REQUIRE_THROWS_AS(cycloid_pair_witness(1.0, 4.0), DomainError);
}
