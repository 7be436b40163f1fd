#include <cmath>
#include <limits>

#include "doctest.h"
#include "scat2d/random.hpp"
#include "scat2d/scene_io.hpp"

using namespace scat2d;

TEST_CASE("parse_scene basics") {
    const Scene one = parse_scene("ball 3.0\nellipse 0 0 1 1 0\n");
    CHECK(one.ball_radius == 3.0);
    REQUIRE(one.obstacles.size() == 1);
    CHECK(one.obstacles[0].semi_major == 1.0);

    const Scene two = parse_scene("ball 5\nellipse -2 0 1 1 0\nellipse 2 0 1 1 0\n");
    CHECK(two.obstacles.size() == 2);
    CHECK(two.obstacles[0].center.x == -2.0);
    CHECK(two.obstacles[1].center.x == 2.0);

    CHECK_THROWS_AS(parse_scene("ellipse 0 0 1 1 0\n"), input_error);
}

TEST_CASE("parse_scene comments, blanks, and errors carry line numbers") {
    const Scene s = parse_scene("# a scene\n\nball 4.0  # radius\n  ellipse 0 0 1 0.5 0\n");
    CHECK(s.ball_radius == 4.0);
    CHECK(s.obstacles.size() == 1);

    try {
        parse_scene("ball 3\nellipse 0 0 oops 1 0\n");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_scene("ball 3\nball 4\n"), input_error);
    CHECK_THROWS_AS(parse_scene("ball 3\ncircle 0 0 1\n"), input_error);
    CHECK_THROWS_AS(parse_scene("ball 3\nellipse 0 0 1 1\n"), input_error);
}

TEST_CASE("parse_scene applies validation") {
    CHECK_THROWS_AS(parse_scene("ball 3\nellipse 0 0 1 1 0\nellipse 1 0 1 1 0\n"),
                    input_error);
    CHECK_THROWS_AS(parse_scene("ball 3\nellipse 2.5 0 1 1 0\n"), input_error);
    CHECK_THROWS_AS(parse_scene("ball 3\nellipse 0 0 0.5 1 0\n"), input_error);
}

TEST_CASE("scene round-trips exactly through serialize/parse") {
    DeterministicRng rng(61);
    for (int i = 0; i < 50; ++i) {
        Scene s;
        s.ball_radius = rng.uniform(2.0, 17.0);
        const int n = 1 + static_cast<int>(rng.uniform(0.0, 3.0));
        for (int k = 0; k < n; ++k) {
            const double r = rng.uniform(0.05, 0.2) * s.ball_radius;
            const double ang = rng.uniform(0.0, 2.0 * M_PI);
            const double d = rng.uniform(0.3, 0.7) * s.ball_radius;
            s.obstacles.emplace_back(Vec2{d * std::cos(ang) , d * std::sin(ang)}, r,
                                     r * rng.uniform(0.4, 1.0), rng.uniform(0.0, M_PI));
        }
        if (!validate_scene(s).valid()) continue;
        const Scene back = parse_scene(serialize_scene(s));
        CHECK(back.ball_radius == s.ball_radius);
        REQUIRE(back.obstacles.size() == s.obstacles.size());
        for (std::size_t k = 0; k < s.obstacles.size(); ++k) {
            CHECK(back.obstacles[k].center.x == s.obstacles[k].center.x);
            CHECK(back.obstacles[k].center.y == s.obstacles[k].center.y);
            CHECK(back.obstacles[k].semi_major == s.obstacles[k].semi_major);
            CHECK(back.obstacles[k].semi_minor == s.obstacles[k].semi_minor);
            CHECK(back.obstacles[k].rotation == s.obstacles[k].rotation);
        }
        // Serialization is idempotent byte for byte.
        CHECK(serialize_scene(back) == serialize_scene(s));
    }
}

TEST_CASE("format_double survives the round trip") {
    DeterministicRng rng(67);
    for (int i = 0; i < 2000; ++i) {
        double v;
        switch (i % 4) {
            case 0: v = rng.uniform(-1.0, 1.0); break;
            case 1: v = rng.uniform(-1e9, 1e9); break;
            case 2: v = rng.uniform(0.0, 1.0) * 1e-7; break;
            default: v = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform(-60, 60)));
        }
        const double back = parse_double(format_double(v), 1);
        CHECK(back == v);
    }
    CHECK(parse_double(format_double(M_PI), 1) == M_PI);
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(parse_double("0.1", 1)) == "0.1");
}
