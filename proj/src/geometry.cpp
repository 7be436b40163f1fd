#include "scat2d/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace scat2d {

Ellipse::Ellipse(Vec2 c, double a, double b, double rot)
    : center(c), semi_major(a), semi_minor(b), rotation(rot) {
    if (!is_finite(c) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(rot))
        throw input_error("Ellipse: non-finite parameter");
    if (!(b > 0.0) || !(a >= b))
        throw input_error("Ellipse: requires semi_major >= semi_minor > 0");
    // Normalize rotation into [0, pi); an ellipse has period pi.
    double r = std::fmod(rot, M_PI);
    if (r < 0.0) r += M_PI;
    rotation = r;
}

Vec2 Ellipse::to_local(Vec2 p) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    const Vec2 d = p - center;
    return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

Vec2 Ellipse::local_dir(Vec2 d) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

Vec2 Ellipse::boundary_point(double u) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    const double lx = semi_major * std::cos(u);
    const double ly = semi_minor * std::sin(u);
    return {center.x + c * lx - s * ly, center.y + s * lx + c * ly};
}

Vec2 Ellipse::boundary_velocity(double u) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    const double lx = -semi_major * std::sin(u);
    const double ly = semi_minor * std::cos(u);
    return {c * lx - s * ly, s * lx + c * ly};
}

double Ellipse::implicit_value(Vec2 p) const {
    const Vec2 u = to_local(p);
    const double wx = u.x / semi_major;
    const double wy = u.y / semi_minor;
    return wx * wx + wy * wy - 1.0;
}

Vec2 Ellipse::implicit_gradient(Vec2 p) const {
    const Vec2 u = to_local(p);
    // Local gradient of (x/a)^2 + (y/b)^2, rotated back to world.
    const Vec2 g{2.0 * u.x / (semi_major * semi_major),
                 2.0 * u.y / (semi_minor * semi_minor)};
    const double c = std::cos(rotation), s = std::sin(rotation);
    return {c * g.x - s * g.y, s * g.x + c * g.y};
}

namespace {

// Approximate distance from p to the boundary via |F| / |grad F|.
double boundary_defect(const Ellipse& e, Vec2 p) {
    const double f = e.implicit_value(p);
    const double g = e.implicit_gradient(p).norm();
    if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
    return std::abs(f) / g;
}

void require_on_boundary(const Ellipse& e, Vec2 p, const char* who) {
    if (boundary_defect(e, p) > 1e-7)
        throw internal_error(std::string(who) + ": point not on ellipse boundary");
}

}  // namespace

HitClass ray_ellipse_intersect(Vec2 origin, Direction dir, const Ellipse& e,
                               double eps_tan) {
    if (!(eps_tan > 0.0)) throw internal_error("ray_ellipse_intersect: eps_tan <= 0");
    // Normalize to the unit circle; the ray parameter t is unchanged.
    const Vec2 ol = e.to_local(origin);
    const Vec2 dl = e.local_dir(dir.vec());
    const Vec2 o{ol.x / e.semi_major, ol.y / e.semi_minor};
    const Vec2 d{dl.x / e.semi_major, dl.y / e.semi_minor};

    const double qa = d.norm2();
    const double qb = 2.0 * o.dot(d);
    const double qc = o.norm2() - 1.0;
    const double disc = qb * qb - 4.0 * qa * qc;
    const double scale = qa * qa;

    if (disc < -eps_tan * scale) return Miss{};
    if (std::abs(disc) <= eps_tan * scale) {
        const double t = -qb / (2.0 * qa);
        if (!(t > 0.0)) return Miss{};
        return Tangent{t, origin + t * dir.vec()};
    }
    const double sq = std::sqrt(disc);
    // Numerically stable root pair.
    const double q = -0.5 * (qb + std::copysign(sq, qb));
    double t1 = q / qa;
    double t2 = (q != 0.0) ? qc / q : -qb / (2.0 * qa);
    if (t1 > t2) std::swap(t1, t2);
    if (!(t1 > 0.0)) return Miss{};
    return Transversal{t1, t2, origin + t1 * dir.vec(), origin + t2 * dir.vec()};
}

Direction outward_normal(const Ellipse& e, Vec2 p) {
    require_on_boundary(e, p, "outward_normal");
    const Vec2 g = e.implicit_gradient(p);
    Direction n(g);
    // The implicit function grows outward, so the gradient already points
    // away from the center; assert rather than trust rounding.
    if (n.dot(p - e.center) <= 0.0)
        throw internal_error("outward_normal: gradient points inward");
    return n;
}

double boundary_curvature(const Ellipse& e, Vec2 p) {
    require_on_boundary(e, p, "boundary_curvature");
    const Vec2 u = e.to_local(p);
    const double A = e.semi_major, B = e.semi_minor;
    const double ct = u.x / A;
    const double st = u.y / B;
    const double w = A * A * st * st + B * B * ct * ct;
    return A * B / (w * std::sqrt(w));
}

double ellipse_area(const Ellipse& e) { return M_PI * e.semi_major * e.semi_minor; }

CircleExit ray_circle_exit(Vec2 origin, Direction dir, double a) {
    if (!(a > 0.0)) throw internal_error("ray_circle_exit: nonpositive radius");
    const double r2 = origin.norm2();
    if (r2 > a * a + 2e-9 * a)
        throw internal_error("ray_circle_exit: origin outside the ball");
    const double od = dir.dot(origin);
    const double disc = od * od + (a * a - r2);
    const double sq = std::sqrt(std::max(disc, 0.0));
    // Larger root, computed without cancellation.
    double t;
    if (od <= 0.0)
        t = -od + sq;
    else
        t = (a * a - r2) / (od + sq);
    t = std::max(t, 0.0);
    return {t, origin + t * dir.vec()};
}

namespace {

// Golden-section polish of a 1-D function on [lo, hi] (minimization).
template <typename F>
double golden_min(F f, double lo, double hi, double tol) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Parameter of the boundary point closest to p, by coarse scan plus golden
// polish.
double closest_param(const Ellipse& e, Vec2 p) {
    constexpr int kScan = 64;
    double best_u = 0.0, best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScan; ++i) {
        const double u = 2.0 * M_PI * i / kScan;
        const double d = (e.boundary_point(u) - p).norm2();
        if (d < best_d) {
            best_d = d;
            best_u = u;
        }
    }
    const double h = 2.0 * M_PI / kScan;
    auto f = [&](double u) { return (e.boundary_point(u) - p).norm2(); };
    return golden_min(f, best_u - h, best_u + h, 1e-12);
}

}  // namespace

double max_radius_from_origin(const Ellipse& e) {
    constexpr int kScan = 256;
    double best_u = 0.0, best = -1.0;
    for (int i = 0; i < kScan; ++i) {
        const double u = 2.0 * M_PI * i / kScan;
        const double d = e.boundary_point(u).norm2();
        if (d > best) {
            best = d;
            best_u = u;
        }
    }
    const double h = 2.0 * M_PI / kScan;
    auto negr = [&](double u) { return -e.boundary_point(u).norm2(); };
    const double u = golden_min(negr, best_u - h, best_u + h, 1e-12);
    return e.boundary_point(u).norm();
}

double boundary_distance(const Ellipse& a, const Ellipse& b) {
    // Multi-start alternating closest-point projection. The distance between
    // two disjoint convex boundaries is attained at a unique pair, but the
    // coarse grid keeps us safe near symmetric configurations.
    constexpr int kGrid = 24;
    double best = std::numeric_limits<double>::infinity();
    std::array<std::pair<double, double>, 4> starts{};
    std::array<double, 4> start_d{};
    start_d.fill(std::numeric_limits<double>::infinity());
    for (int i = 0; i < kGrid; ++i) {
        const double ua = 2.0 * M_PI * i / kGrid;
        const Vec2 pa = a.boundary_point(ua);
        for (int j = 0; j < kGrid; ++j) {
            const double ub = 2.0 * M_PI * j / kGrid;
            const double d = (pa - b.boundary_point(ub)).norm2();
            for (std::size_t k = 0; k < starts.size(); ++k) {
                if (d < start_d[k]) {
                    for (std::size_t m = starts.size() - 1; m > k; --m) {
                        start_d[m] = start_d[m - 1];
                        starts[m] = starts[m - 1];
                    }
                    start_d[k] = d;
                    starts[k] = {ua, ub};
                    break;
                }
            }
        }
    }
    for (auto [ua, ub] : starts) {
        Vec2 pa = a.boundary_point(ua);
        Vec2 pb = b.boundary_point(ub);
        double prev = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 100; ++it) {
            ub = closest_param(b, pa);
            pb = b.boundary_point(ub);
            ua = closest_param(a, pb);
            pa = a.boundary_point(ua);
            const double d = (pa - pb).norm();
            if (std::abs(prev - d) < 1e-12) break;
            prev = d;
        }
        best = std::min(best, (pa - pb).norm());
    }
    return best;
}

ValidationReport validate_scene(const Scene& s) {
    ValidationReport rep;
    const double a = s.ball_radius;
    if (!(a > 0.0) || !std::isfinite(a))
        throw input_error("Scene: ball radius must be positive and finite");
    const double clearance = 1e-6 * a;
    const int n = static_cast<int>(s.obstacles.size());

    for (int i = 0; i < n; ++i) {
        const Ellipse& e = s.obstacles[static_cast<std::size_t>(i)];
        if (!(e.semi_minor > 0.0) || !(e.semi_major >= e.semi_minor) ||
            !std::isfinite(e.semi_major) || !is_finite(e.center)) {
            rep.issues.push_back({SceneIssue::Kind::DegenerateEllipse, i + 1, 0,
                                  "obstacle " + std::to_string(i + 1) + " is degenerate"});
            continue;
        }
        const double rmax = max_radius_from_origin(e);
        if (!(rmax < a - clearance)) {
            rep.issues.push_back({SceneIssue::Kind::TooCloseToBall, i + 1, 0,
                                  "obstacle " + std::to_string(i + 1) +
                                      " reaches |p| = " + std::to_string(rmax) +
                                      " against ball radius " + std::to_string(a)});
        }
    }

    for (int i = 0; i < n; ++i) {
        const Ellipse& ei = s.obstacles[static_cast<std::size_t>(i)];
        if (!(ei.semi_minor > 0.0)) continue;
        for (int j = i + 1; j < n; ++j) {
            const Ellipse& ej = s.obstacles[static_cast<std::size_t>(j)];
            if (!(ej.semi_minor > 0.0)) continue;
            // Bounding-circle rejection first.
            const double cd = (ei.center - ej.center).norm();
            if (cd > ei.semi_major + ej.semi_major + clearance) continue;
            const bool center_inside = ei.implicit_value(ej.center) < 0.0 ||
                                       ej.implicit_value(ei.center) < 0.0;
            const double gap = center_inside ? 0.0 : boundary_distance(ei, ej);
            if (center_inside || !(gap >= clearance)) {
                rep.issues.push_back({SceneIssue::Kind::Overlap, i + 1, j + 1,
                                      "obstacles " + std::to_string(i + 1) + " and " +
                                          std::to_string(j + 1) + " overlap or touch"});
            }
        }
    }
    return rep;
}

void require_valid(const Scene& s) {
    const ValidationReport rep = validate_scene(s);
    if (rep.valid()) return;
    std::string msg = "invalid scene:";
    for (const auto& issue : rep.issues) msg += "\n  " + issue.message;
    throw input_error(msg);
}

}  // namespace scat2d
