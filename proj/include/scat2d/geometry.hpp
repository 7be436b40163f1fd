// Planar primitives for exterior billiards: vectors, ellipses as strictly
// convex obstacles, ray-conic intersection with tangency classification,
// and scene validation.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace scat2d {

// Raised for malformed user input (scene files, flag values, domain limits
// of a requested computation). The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant is violated (a geometry bug upstream).
// The CLI maps this to exit code 4.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    // z-component of the 3-D cross product; positive when o is CCW from *this.
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    // CCW quarter turn.
    constexpr Vec2 perp() const { return {-y, x}; }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

// Unit vector. Construction normalizes; a near-zero input is rejected.
struct Direction {
    double vx = 1.0;
    double vy = 0.0;

    Direction() = default;
    Direction(double vx_, double vy_) {
        const double n = std::hypot(vx_, vy_);
        if (!(n > 1e-300) || !std::isfinite(n))
            throw internal_error("Direction: zero or non-finite vector");
        vx = vx_ / n;
        vy = vy_ / n;
    }
    explicit Direction(Vec2 v) : Direction(v.x, v.y) {}

    constexpr Vec2 vec() const { return {vx, vy}; }
    constexpr double dot(Vec2 o) const { return vx * o.x + vy * o.y; }
    constexpr double dot(Direction o) const { return vx * o.vx + vy * o.vy; }
    constexpr double cross(Direction o) const { return vx * o.vy - vy * o.vx; }
    Direction reversed() const {
        Direction d;
        d.vx = -vx;
        d.vy = -vy;
        return d;
    }
    // CCW quarter turn.
    Direction perp() const {
        Direction d;
        d.vx = -vy;
        d.vy = vx;
        return d;
    }
    double angle() const { return std::atan2(vy, vx); }
};

inline Direction direction_from_angle(double theta) {
    Direction d;
    d.vx = std::cos(theta);
    d.vy = std::sin(theta);
    return d;
}

inline Direction rotate(Direction d, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Direction r;
    r.vx = c * d.vx - s * d.vy;
    r.vy = s * d.vx + c * d.vy;
    return r;
}

// Strictly convex obstacle. semi_major >= semi_minor > 0; rotation in [0, pi).
struct Ellipse {
    Vec2 center;
    double semi_major = 1.0;
    double semi_minor = 1.0;
    double rotation = 0.0;

    Ellipse() = default;
    Ellipse(Vec2 c, double a, double b, double rot);

    // World point of boundary parameter u (standard angle parametrization).
    Vec2 boundary_point(double u) const;
    // d/du of boundary_point.
    Vec2 boundary_velocity(double u) const;
    // Implicit value F(p) = |scaled local p|^2 - 1; zero on the boundary,
    // negative inside.
    double implicit_value(Vec2 p) const;
    // Unnormalized gradient of the implicit function at p (world frame).
    Vec2 implicit_gradient(Vec2 p) const;
    // World -> unrotated, centered frame.
    Vec2 to_local(Vec2 p) const;
    Vec2 local_dir(Vec2 d) const;
};

// Ray-ellipse hit classification. All reported parameters are > 0.
struct Miss {};
struct Tangent {
    double t = 0.0;
    Vec2 point;
};
struct Transversal {
    double t_enter = 0.0;
    double t_exit = 0.0;
    Vec2 p_enter;
    Vec2 p_exit;
};
using HitClass = std::variant<Miss, Tangent, Transversal>;

inline constexpr double kDefaultEpsTan = 1e-10;

// Discriminant-based classification after affine normalization to the unit
// circle. eps_tan is relative to the squared quadratic coefficient.
HitClass ray_ellipse_intersect(Vec2 origin, Direction dir, const Ellipse& e,
                               double eps_tan = kDefaultEpsTan);

// Outward unit normal at a boundary point. Throws internal_error if p is not
// on the boundary.
Direction outward_normal(const Ellipse& e, Vec2 p);

// Boundary curvature (always positive) at a boundary point.
double boundary_curvature(const Ellipse& e, Vec2 p);

double ellipse_area(const Ellipse& e);

// Smallest t > 0 with |origin + t*dir| = a. origin must satisfy |origin| <= a
// within 1e-9. Returns 0 for an on-circle origin pointing outward.
struct CircleExit {
    double t = 0.0;
    Vec2 point;
};
CircleExit ray_circle_exit(Vec2 origin, Direction dir, double a);

// The ball M (radius a at the origin) plus disjoint obstacles strictly inside
// it. Obstacle indices are 1-based everywhere.
struct Scene {
    double ball_radius = 1.0;
    std::vector<Ellipse> obstacles;

    Scene() = default;
    Scene(double a, std::vector<Ellipse> obs)
        : ball_radius(a), obstacles(std::move(obs)) {}

    const Ellipse& obstacle(int index_1based) const {
        if (index_1based < 1 || index_1based > static_cast<int>(obstacles.size()))
            throw internal_error("Scene: obstacle index out of range");
        return obstacles[static_cast<std::size_t>(index_1based - 1)];
    }
};

struct SceneIssue {
    enum class Kind { Overlap, TooCloseToBall, DegenerateEllipse };
    Kind kind;
    int i = 0;  // offending obstacle (1-based)
    int j = 0;  // second obstacle for Overlap
    std::string message;
};

struct ValidationReport {
    std::vector<SceneIssue> issues;
    bool valid() const { return issues.empty(); }
};

// Checks containment (strictly inside the ball, clearance 1e-6*a) and
// pairwise disjointness (gap 1e-6*a). Boundary-boundary distances are found
// by multi-start minimization to 1e-9.
ValidationReport validate_scene(const Scene& s);

// Throws input_error with the full issue list if the scene is invalid.
void require_valid(const Scene& s);

// Maximum |p| over the boundary of e (used by containment checks).
double max_radius_from_origin(const Ellipse& e);

// Minimum distance between the boundaries of two ellipses.
double boundary_distance(const Ellipse& a, const Ellipse& b);

}  // namespace scat2d
