#include "scat2d/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace scat2d {

namespace {

double speed(const Ellipse& e, double u) { return e.boundary_velocity(u).norm(); }

// Adaptive Simpson quadrature of the boundary speed.
double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const Ellipse& e, double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = speed(e, lm), frm = speed(e, rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(e, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(e, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double ellipse_arclength(const Ellipse& e, double u) {
    if (u == 0.0) return 0.0;
    const double fa = speed(e, 0.0), fb = speed(e, u), fm = speed(e, 0.5 * u);
    const double whole = simpson(0.0, u, fa, fm, fb);
    return adaptive(e, 0.0, u, fa, fm, fb, whole, 1e-10, 40);
}

double ellipse_param_at_arclength(const Ellipse& e, double s) {
    // Newton on L(u) - s with L' = |P'(u)| > 0, seeded by the mean speed.
    const double total = ellipse_arclength(e, 2.0 * M_PI);
    double u = s * 2.0 * M_PI / total;
    for (int it = 0; it < 60; ++it) {
        const double f = ellipse_arclength(e, u) - s;
        const double df = speed(e, u);
        const double step = f / df;
        u -= step;
        if (std::abs(step) < 1e-13) break;
    }
    return u;
}

namespace {

struct ArcFrame {
    Vec2 point;
    Direction tangent;  // unit d/ds with the requested orientation
};

ArcFrame arc_frame(const Ellipse& e, double s, int orientation) {
    const double u = ellipse_param_at_arclength(e, orientation * s);
    const Vec2 vel = e.boundary_velocity(u);
    return {e.boundary_point(u), Direction(orientation * vel.x, orientation * vel.y)};
}

}  // namespace

SampledCurve involute(const Ellipse& e, double s0, double eps0, double delta,
                      int orientation, int n_samples) {
    if (!(delta > 0.0) || !(delta < eps0))
        throw input_error("involute: requires 0 < delta < eps0");
    if (n_samples < 3) throw input_error("involute: n_samples must be >= 3");
    if (orientation != 1 && orientation != -1)
        throw input_error("involute: orientation must be +1 or -1");

    const double c = s0 + eps0;
    // The string length t(s) = c - s must stay in [delta, eps0], which clips
    // the window to [s0, s0 + eps0 - delta].
    const double s_lo = s0;
    const double s_hi = s0 + (eps0 - delta);

    SampledCurve out;
    out.params.reserve(static_cast<std::size_t>(n_samples));
    out.points.reserve(static_cast<std::size_t>(n_samples));
    out.normals.reserve(static_cast<std::size_t>(n_samples));
    out.curvatures.reserve(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double s = s_lo + (s_hi - s_lo) * k / (n_samples - 1);
        const double t = c - s;
        const ArcFrame f = arc_frame(e, s, orientation);
        out.params.push_back(s);
        out.points.push_back(f.point + t * f.tangent.vec());
        out.normals.push_back(f.tangent);
        out.curvatures.push_back(1.0 / t);
    }
    return out;
}

double check_normal_tangency(const SampledCurve& y, const Ellipse& e) {
    if (y.size() < 1) throw input_error("check_normal_tangency: empty curve");
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Vec2 o = y.points[i];
        const Direction d = y.normals[i];
        // The implicit value along the line is a quadratic; its minimizer is
        // where the line comes closest to tangency.
        const Vec2 ol = e.to_local(o);
        const Vec2 dl = e.local_dir(d.vec());
        const Vec2 on{ol.x / e.semi_major, ol.y / e.semi_minor};
        const Vec2 dn{dl.x / e.semi_major, dl.y / e.semi_minor};
        const double qa = dn.norm2();
        const double qb = 2.0 * on.dot(dn);
        const double tau = -qb / (2.0 * qa);
        const Vec2 touch = o + tau * d.vec();
        const Direction grad(e.implicit_gradient(touch));
        worst = std::max(worst, std::abs(grad.dot(d)));
    }
    return worst;
}

namespace {

double fly(double kappa, double t) { return kappa / (1.0 + t * kappa); }

}  // namespace

std::vector<FrontState> propagate_front(const Scene& s, const FrontState& start,
                                        const Caps& caps) {
    if (!(start.kappa >= 0.0) || !std::isfinite(start.kappa))
        throw input_error("propagate_front: kappa must be finite and >= 0");
    std::vector<FrontState> out;
    PhasePoint cur{start.point, start.dir};
    double kappa = start.kappa;
    double now = 0.0;
    int reflections = 0;

    for (;;) {
        const Event ev = next_event(s, cur, caps.eps_tan);
        if (const auto* exit = std::get_if<ExitBall>(&ev)) {
            double t = exit->t;
            if (now + t > caps.max_time) {
                t = caps.max_time - now;
                out.push_back({cur.q + t * cur.v.vec(), cur.v, fly(kappa, t)});
                return out;
            }
            out.push_back({exit->exit.q, exit->exit.v, fly(kappa, t)});
            return out;
        }
        if (std::holds_alternative<TangencyPass>(ev))
            throw input_error("front propagation undefined at grazing");
        const ReflectionEvent& rev = std::get<Reflection>(ev).event;
        if (now + rev.time > caps.max_time) {
            const double t = caps.max_time - now;
            out.push_back({cur.q + t * cur.v.vec(), cur.v, fly(kappa, t)});
            return out;
        }
        now += rev.time;
        kappa = fly(kappa, rev.time);
        const Ellipse& obstacle = s.obstacle(rev.obstacle_index);
        kappa += 2.0 * boundary_curvature(obstacle, rev.point) / rev.cos_incidence;
        if (!(kappa >= 0.0))
            throw internal_error("propagate_front: dispersing front lost convexity");
        cur = PhasePoint{rev.point, reflect(cur.v, outward_normal(obstacle, rev.point))};
        out.push_back({cur.q, cur.v, kappa});
        if (++reflections >= caps.max_reflections) return out;
    }
}

namespace {

struct EvolveResult {
    PhasePoint end;
    Itinerary itinerary;
    bool tangency = false;
};

// Advances a ray for exactly time T; straight-line beyond the ball (nothing
// scatters outside it).
EvolveResult evolve_to_time(const Scene& s, PhasePoint x, double T, double eps_tan) {
    EvolveResult res;
    double remaining = T;
    for (;;) {
        const Event ev = next_event(s, x, eps_tan);
        if (std::holds_alternative<ExitBall>(ev)) {
            // Leaving the ball: free flight for all remaining time.
            res.end = PhasePoint{x.q + remaining * x.v.vec(), x.v};
            return res;
        }
        const ReflectionEvent& rev = std::holds_alternative<Reflection>(ev)
                                         ? std::get<Reflection>(ev).event
                                         : std::get<TangencyPass>(ev).event;
        if (rev.time >= remaining) {
            res.end = PhasePoint{x.q + remaining * x.v.vec(), x.v};
            return res;
        }
        remaining -= rev.time;
        if (rev.tangential) {
            res.tangency = true;
            x = PhasePoint{rev.point, x.v};
            continue;
        }
        res.itinerary.push_back(rev.obstacle_index);
        x = PhasePoint{rev.point,
                       reflect(x.v, outward_normal(s.obstacle(rev.obstacle_index), rev.point))};
    }
}

}  // namespace

double finite_difference_curvature(const Scene& s, const FrontState& start, double T,
                                   double h, const Caps& caps) {
    if (!(h > 0.0)) throw input_error("finite_difference_curvature: h must be > 0");
    if (!(start.kappa >= 0.0))
        throw input_error("finite_difference_curvature: kappa must be >= 0");

    PhasePoint plus, minus;
    if (start.kappa > 0.0) {
        // Exact points of the osculating circle at arc offsets +-h.
        const double radius = 1.0 / start.kappa;
        const Vec2 center = start.point - radius * start.dir.vec();
        const Direction up = rotate(start.dir, h * start.kappa);
        const Direction un = rotate(start.dir, -h * start.kappa);
        plus = {center + radius * up.vec(), up};
        minus = {center + radius * un.vec(), un};
    } else {
        const Vec2 w = start.dir.perp().vec();
        plus = {start.point + h * w, start.dir};
        minus = {start.point - h * w, start.dir};
    }

    const EvolveResult rc = evolve_to_time(s, {start.point, start.dir}, T, caps.eps_tan);
    const EvolveResult rp = evolve_to_time(s, plus, T, caps.eps_tan);
    const EvolveResult rm = evolve_to_time(s, minus, T, caps.eps_tan);
    if (rc.tangency || rp.tangency || rm.tangency)
        throw input_error("non-smooth variation: tangency along an offset ray");
    if (rc.itinerary != rp.itinerary || rc.itinerary != rm.itinerary)
        throw input_error("non-smooth variation: offset rays have different itineraries");

    // Equal-time points lie on the evolved front with normals equal to the
    // ray directions; curvature = direction spread / transverse separation.
    const Direction vp = rp.end.v, vm = rm.end.v;
    const double dalpha = std::atan2(vm.cross(vp), vm.dot(vp));
    const Vec2 w = rc.end.v.perp().vec();
    const double ds = (rp.end.q - rm.end.q).dot(w);
    if (std::abs(ds) < 1e-300)
        throw input_error("finite_difference_curvature: degenerate separation");
    return dalpha / ds;
}

namespace {

// Proper intersection test for segments ab and cd.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
        return (q - p).cross(r - p);
    };
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

struct RayCrossing {
    double g = std::numeric_limits<double>::quiet_NaN();  // orthogonality defect
    double param_x = 0.0;
    bool valid = false;
};

RayCrossing cross_curve(Vec2 o, Direction d, const SampledCurve& x) {
    RayCrossing best;
    double best_tau = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const Vec2 p = x.points[k];
        const Vec2 seg = x.points[k + 1] - p;
        const double den = d.vec().cross(seg);
        if (std::abs(den) < 1e-300) continue;
        const Vec2 rel = p - o;
        const double tau = rel.cross(seg) / den;
        const double u = rel.cross(d.vec()) / den;
        if (!(tau > 1e-12) || u < 0.0 || u > 1.0) continue;
        if (tau < best_tau) {
            best_tau = tau;
            const Vec2 n_lerp{x.normals[k].vx + u * (x.normals[k + 1].vx - x.normals[k].vx),
                              x.normals[k].vy + u * (x.normals[k + 1].vy - x.normals[k].vy)};
            const Direction n(n_lerp);
            best.g = d.dot(n.perp().vec());
            best.param_x = x.params[k] + u * (x.params[k + 1] - x.params[k]);
            best.valid = true;
        }
    }
    return best;
}

}  // namespace

std::vector<std::pair<double, double>> perpendicular_hits(const SampledCurve& y,
                                                          const SampledCurve& x_target,
                                                          double tol) {
    if (y.size() < 3 || x_target.size() < 3)
        throw input_error("perpendicular_hits: curves need at least 3 samples");
    if (!(tol > 0.0)) throw input_error("perpendicular_hits: tol must be > 0");
    for (double k : y.curvatures)
        if (!(k > 0.0)) throw input_error("perpendicular_hits: y is not strictly convex");
    for (double k : x_target.curvatures)
        if (!(k > 0.0)) throw input_error("perpendicular_hits: x is not strictly convex");
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        for (std::size_t k = 0; k + 1 < x_target.size(); ++k)
            if (segments_intersect(y.points[i], y.points[i + 1], x_target.points[k],
                                   x_target.points[k + 1]))
                throw input_error("perpendicular_hits: curves intersect");

    const std::size_t n = y.size();
    std::vector<RayCrossing> cr(n);
    for (std::size_t i = 0; i < n; ++i)
        cr[i] = cross_curve(y.points[i], y.normals[i], x_target);

    std::vector<std::pair<double, double>> hits;
    std::vector<bool> consumed(n, false);
    // Isolated orthogonal crossings: sign change with at least one side
    // clearly nonzero; linear interpolation polishes the root.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!cr[i].valid || !cr[i + 1].valid) continue;
        const double g0 = cr[i].g, g1 = cr[i + 1].g;
        if (!(g0 * g1 < 0.0)) continue;
        if (std::abs(g0) <= tol && std::abs(g1) <= tol) continue;
        const double lam = g0 / (g0 - g1);
        hits.emplace_back(y.params[i] + lam * (y.params[i + 1] - y.params[i]),
                          cr[i].param_x + lam * (cr[i + 1].param_x - cr[i].param_x));
        consumed[i] = consumed[i + 1] = true;
    }
    // Samples already orthogonal within tol and not explained by a root.
    for (std::size_t i = 0; i < n; ++i) {
        if (consumed[i] || !cr[i].valid) continue;
        if (std::abs(cr[i].g) <= tol) hits.emplace_back(y.params[i], cr[i].param_x);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace scat2d
