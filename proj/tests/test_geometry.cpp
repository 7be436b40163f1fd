#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scat2d/geometry.hpp"
#include "scat2d/random.hpp"

using namespace scat2d;

namespace {
const Ellipse kUnitCircle{{0.0, 0.0}, 1.0, 1.0, 0.0};
}

TEST_CASE("ray_ellipse_intersect classifies chord, tangent, miss") {
    const Direction px(1.0, 0.0);

    const HitClass chord = ray_ellipse_intersect({-3.0, 0.0}, px, kUnitCircle);
    const auto& tr = std::get<Transversal>(chord);
    CHECK(tr.t_enter == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tr.t_exit == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(tr.p_enter.x == doctest::Approx(-1.0));
    CHECK(tr.p_exit.x == doctest::Approx(1.0));

    const HitClass tangent = ray_ellipse_intersect({-3.0, 1.0}, px, kUnitCircle);
    const auto& tg = std::get<Tangent>(tangent);
    CHECK(tg.t == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(tg.point.x == doctest::Approx(0.0));
    CHECK(tg.point.y == doctest::Approx(1.0));

    CHECK(std::holds_alternative<Miss>(ray_ellipse_intersect({-3.0, 2.0}, px, kUnitCircle)));
}

TEST_CASE("ray_ellipse_intersect reports forward hits only") {
    const Direction px(1.0, 0.0);
    // Both intersections behind the origin.
    CHECK(std::holds_alternative<Miss>(ray_ellipse_intersect({3.0, 0.0}, px, kUnitCircle)));
    // Entry point behind (origin inside): not reported.
    CHECK(std::holds_alternative<Miss>(ray_ellipse_intersect({0.0, 0.0}, px, kUnitCircle)));
}

TEST_CASE("transversal hit points satisfy the implicit equation") {
    DeterministicRng rng(7);
    const Ellipse e{{0.4, -0.2}, 1.7, 0.6, 0.9};
    int hits = 0;
    for (int i = 0; i < 500; ++i) {
        const Vec2 o{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        if (e.implicit_value(o) < 0.1) continue;
        const Direction d = direction_from_angle(rng.uniform(0.0, 2.0 * M_PI));
        const HitClass hit = ray_ellipse_intersect(o, d, e);
        if (const auto* tr = std::get_if<Transversal>(&hit)) {
            ++hits;
            CHECK(std::abs(e.implicit_value(tr->p_enter)) < 1e-9);
            CHECK(std::abs(e.implicit_value(tr->p_exit)) < 1e-9);
            CHECK(tr->t_enter < tr->t_exit);
            CHECK(tr->t_enter > 0.0);
        }
    }
    CHECK(hits > 50);
}

TEST_CASE("disc intersection is invariant under representation rotation") {
    DeterministicRng rng(11);
    for (int i = 0; i < 100; ++i) {
        const double rot = rng.uniform(0.0, M_PI);
        const Ellipse rotated{{0.5, 0.5}, 1.2, 1.2, rot};
        const Ellipse plain{{0.5, 0.5}, 1.2, 1.2, 0.0};
        const Vec2 o{rng.uniform(-5.0, -3.0), rng.uniform(-1.0, 2.0)};
        const Direction d = direction_from_angle(rng.uniform(-0.4, 0.4));
        const HitClass ha = ray_ellipse_intersect(o, d, plain);
        const HitClass hb = ray_ellipse_intersect(o, d, rotated);
        REQUIRE(ha.index() == hb.index());
        if (const auto* ta = std::get_if<Transversal>(&ha)) {
            const auto& tb = std::get<Transversal>(hb);
            CHECK(ta->t_enter == doctest::Approx(tb.t_enter).epsilon(1e-9));
            CHECK(ta->t_exit == doctest::Approx(tb.t_exit).epsilon(1e-9));
        }
    }
}

TEST_CASE("outward_normal at axis endpoints") {
    const Ellipse e{{0.0, 0.0}, 2.0, 1.0, 0.0};
    CHECK(outward_normal(kUnitCircle, {1.0, 0.0}).vx == doctest::Approx(1.0));
    CHECK(outward_normal(e, {2.0, 0.0}).vx == doctest::Approx(1.0));
    CHECK(outward_normal(e, {2.0, 0.0}).vy == doctest::Approx(0.0));
    CHECK(outward_normal(e, {0.0, 1.0}).vy == doctest::Approx(1.0));
    CHECK_THROWS_AS(outward_normal(e, {1.0, 1.0}), internal_error);
}

TEST_CASE("outward_normal points away from the center") {
    DeterministicRng rng(3);
    const Ellipse e{{-1.0, 2.0}, 1.9, 0.7, 2.1};
    for (int i = 0; i < 200; ++i) {
        const Vec2 p = e.boundary_point(rng.uniform(0.0, 2.0 * M_PI));
        CHECK(outward_normal(e, p).dot(p - e.center) > 0.0);
    }
}

TEST_CASE("boundary_curvature matches closed forms and the fd oracle") {
    CHECK(boundary_curvature(kUnitCircle, {0.0, -1.0}) == doctest::Approx(1.0));

    const Ellipse e{{0.0, 0.0}, 2.0, 1.0, 0.0};
    // semi_major / semi_minor^2 at the major-axis endpoint and
    // semi_minor / semi_major^2 at the minor-axis endpoint, cross-checked
    // against finite differences of the parametrization.
    CHECK(boundary_curvature(e, {2.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(boundary_curvature(e, {0.0, 1.0}) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(testing::fd_boundary_curvature(e, 0.0) == doctest::Approx(2.0).epsilon(1e-6));

    DeterministicRng rng(5);
    const Ellipse g{{0.3, -0.4}, 1.6, 0.9, 0.7};
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(0.0, 2.0 * M_PI);
        const double kappa = boundary_curvature(g, g.boundary_point(u));
        CHECK(kappa == doctest::Approx(testing::fd_boundary_curvature(g, u)).epsilon(1e-5));
        CHECK(kappa > 0.0);
    }
}

TEST_CASE("ellipse_area") {
    CHECK(ellipse_area(kUnitCircle) == doctest::Approx(M_PI));
    CHECK(ellipse_area({{0, 0}, 2.0, 1.0, 0.0}) == doctest::Approx(2.0 * M_PI));
    CHECK(ellipse_area({{0, 0}, 3.0, 0.5, 0.0}) == doctest::Approx(1.5 * M_PI));
}

TEST_CASE("ray_circle_exit") {
    const auto center = ray_circle_exit({0.0, 0.0}, Direction(1.0, 0.0), 3.0);
    CHECK(center.t == doctest::Approx(3.0));
    CHECK(center.point.x == doctest::Approx(3.0));

    const auto diameter = ray_circle_exit({-3.0, 0.0}, Direction(1.0, 0.0), 3.0);
    CHECK(diameter.t == doctest::Approx(6.0));

    const auto pyth = ray_circle_exit({2.0, 0.0}, Direction(0.0, 1.0), 3.0);
    CHECK(pyth.t == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(pyth.point.y == doctest::Approx(std::sqrt(5.0)));

    CHECK_THROWS_AS(ray_circle_exit({4.0, 0.0}, Direction(1.0, 0.0), 3.0), internal_error);

    DeterministicRng rng(13);
    for (int i = 0; i < 200; ++i) {
        const double r = rng.uniform(0.0, 2.99);
        const double ang = rng.uniform(0.0, 2.0 * M_PI);
        const Vec2 o{r * std::cos(ang), r * std::sin(ang)};
        const Direction d = direction_from_angle(rng.uniform(0.0, 2.0 * M_PI));
        const auto exit = ray_circle_exit(o, d, 3.0);
        CHECK(exit.point.norm() == doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("validate_scene accepts a well separated pair") {
    const Scene s{5.0,
                  {Ellipse{{-2.0, 0.0}, 1.0, 1.0, 0.0}, Ellipse{{2.0, 0.0}, 1.0, 1.0, 0.0}}};
    CHECK(validate_scene(s).valid());
}

TEST_CASE("validate_scene flags overlap with the obstacle pair") {
    const Scene s{3.0,
                  {Ellipse{{0.0, 0.0}, 1.0, 1.0, 0.0}, Ellipse{{1.0, 0.0}, 1.0, 1.0, 0.0}}};
    const auto rep = validate_scene(s);
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].kind == SceneIssue::Kind::Overlap);
    CHECK(rep.issues[0].i == 1);
    CHECK(rep.issues[0].j == 2);
}

TEST_CASE("validate_scene flags an obstacle poking out of the ball") {
    const Scene s{3.0, {Ellipse{{2.5, 0.0}, 1.0, 1.0, 0.0}}};
    const auto rep = validate_scene(s);
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].kind == SceneIssue::Kind::TooCloseToBall);
    CHECK(rep.issues[0].i == 1);
}

TEST_CASE("validate_scene catches near-touching ellipses and containment") {
    // Boundaries 1e-8 apart: below the 1e-6*a clearance floor.
    const Scene close{3.0,
                      {Ellipse{{-1.0, 0.0}, 1.0, 0.5, 0.0}, Ellipse{{1.0 + 1e-8, 0.0}, 1.0, 0.5, 0.0}}};
    CHECK_FALSE(validate_scene(close).valid());
    // One ellipse strictly inside the other.
    const Scene nested{3.0,
                       {Ellipse{{0.0, 0.0}, 2.0, 1.5, 0.0}, Ellipse{{0.0, 0.0}, 0.5, 0.3, 0.0}}};
    CHECK_FALSE(validate_scene(nested).valid());
}

TEST_CASE("boundary_distance agrees with a dense scan") {
    const Ellipse a{{-2.0, 0.3}, 1.0, 0.6, 0.4};
    const Ellipse b{{1.5, -0.2}, 0.8, 0.5, 2.0};
    double scan = 1e300;
    for (int i = 0; i < 2000; ++i)
        for (int j = 0; j < 2000; j += 7) {
            const double d = (a.boundary_point(2 * M_PI * i / 2000.0) -
                              b.boundary_point(2 * M_PI * j / 2000.0))
                                 .norm();
            scan = std::min(scan, d);
        }
    CHECK(boundary_distance(a, b) == doctest::Approx(scan).epsilon(1e-4));
    CHECK(boundary_distance(a, b) <= scan + 1e-12);
}
