#include "scat2d/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scat2d {

Direction reflect(Direction v, Direction n) {
    const double vn = v.dot(n);
    if (!(vn < 0.0)) throw internal_error("reflect: direction not incoming");
    return Direction(v.vx - 2.0 * vn * n.vx, v.vy - 2.0 * vn * n.vy);
}

namespace {

// Far crossing of the ball boundary, or nullopt when the ray misses it.
// Works from inside (the exit) and from outside (the re-crossing).
std::optional<CircleExit> ball_crossing(Vec2 origin, Direction dir, double a) {
    const double od = dir.dot(origin);
    const double disc = od * od + (a * a - origin.norm2());
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    double t;
    if (od <= 0.0)
        t = -od + sq;
    else
        t = (a * a - origin.norm2()) / (od + sq);
    if (!(t > kDepartureGuard)) return std::nullopt;
    return CircleExit{t, origin + t * dir.vec()};
}

ReflectionEvent make_event(const Scene& s, const PhasePoint& x, int idx, double t,
                           Vec2 point, bool discriminant_tangent) {
    const Ellipse& e = s.obstacle(idx);
    const Direction n = outward_normal(e, point);
    const double ci = std::clamp(-x.v.dot(n.vec()), 0.0, 1.0);
    ReflectionEvent ev;
    ev.time = t;  // caller rebases to cumulative time
    ev.obstacle_index = idx;
    ev.point = point;
    ev.cos_incidence = ci;
    ev.tangential = discriminant_tangent || ci <= kTangencyCosThreshold;
    return ev;
}

}  // namespace

Event next_event(const Scene& s, const PhasePoint& x, double eps_tan) {
    double best_t = std::numeric_limits<double>::infinity();
    int best_idx = 0;
    Vec2 best_point;
    bool best_tangent = false;

    for (int i = 1; i <= static_cast<int>(s.obstacles.size()); ++i) {
        const HitClass hit = ray_ellipse_intersect(x.q, x.v, s.obstacle(i), eps_tan);
        double t = 0.0;
        Vec2 p;
        bool tangent = false;
        if (const auto* tr = std::get_if<Transversal>(&hit)) {
            t = tr->t_enter;
            p = tr->p_enter;
        } else if (const auto* tg = std::get_if<Tangent>(&hit)) {
            t = tg->t;
            p = tg->point;
            tangent = true;
        } else {
            continue;
        }
        if (t <= kDepartureGuard) continue;
        if (t < best_t) {
            best_t = t;
            best_idx = i;
            best_point = p;
            best_tangent = tangent;
        }
    }

    const auto exit = ball_crossing(x.q, x.v, s.ball_radius);
    // Obstacles are strictly inside the ball, so a genuine obstacle hit
    // always precedes the ball crossing; ties go to the obstacle.
    if (best_idx != 0 && (!exit || best_t <= exit->t + 1e-12)) {
        ReflectionEvent ev = make_event(s, x, best_idx, best_t, best_point, best_tangent);
        if (ev.tangential) return TangencyPass{ev};
        return Reflection{ev};
    }
    if (exit) return ExitBall{exit->t, PhasePoint{exit->point, x.v}};
    throw internal_error("next_event: no forward event");
}

Trajectory trace(const Scene& s, const PhasePoint& x, const Caps& caps) {
    if (caps.max_reflections < 1 || !(caps.max_time > 0.0))
        throw input_error("trace: caps must be positive");
    for (std::size_t i = 0; i < s.obstacles.size(); ++i)
        if (s.obstacles[i].implicit_value(x.q) < -1e-12)
            throw input_error("trace: start point lies inside obstacle " +
                              std::to_string(i + 1));
    Trajectory tr;
    tr.start = x;
    PhasePoint cur = x;
    double now = 0.0;
    int reflections = 0;

    for (;;) {
        Event ev = next_event(s, cur, caps.eps_tan);
        if (auto* exit = std::get_if<ExitBall>(&ev)) {
            const double t_exit = now + exit->t;
            if (t_exit > caps.max_time) {
                tr.status = CutoffTime{caps.max_time};
                tr.interior_time = caps.max_time;
                return tr;
            }
            tr.status = Exited{t_exit, exit->exit};
            tr.interior_time = t_exit;
            return tr;
        }
        ReflectionEvent rev =
            std::holds_alternative<Reflection>(ev) ? std::get<Reflection>(ev).event
                                                   : std::get<TangencyPass>(ev).event;
        const double t_abs = now + rev.time;
        if (t_abs > caps.max_time) {
            tr.status = CutoffTime{caps.max_time};
            tr.interior_time = caps.max_time;
            return tr;
        }
        now = t_abs;
        rev.time = t_abs;
        tr.events.push_back(rev);
        if (rev.tangential) {
            cur = PhasePoint{rev.point, cur.v};
            continue;
        }
        const Direction n = outward_normal(s.obstacle(rev.obstacle_index), rev.point);
        cur = PhasePoint{rev.point, reflect(cur.v, n)};
        ++reflections;
        if (reflections >= caps.max_reflections) {
            tr.status = CutoffReflections{reflections};
            tr.interior_time = now;
            return tr;
        }
    }
}

PhasePoint boundary_phase_point(double a, double psi, double phi) {
    const Vec2 q{a * std::cos(psi), a * std::sin(psi)};
    Direction inward;
    inward.vx = -std::cos(psi);
    inward.vy = -std::sin(psi);
    return {q, rotate(inward, phi)};
}

TravellingTime travelling_time(const Scene& s, double psi, double phi, const Caps& caps) {
    if (std::abs(std::abs(phi) - M_PI_2) <= 1e-12) return Grazing{};
    const Trajectory tr = trace(s, boundary_phase_point(s.ball_radius, psi, phi), caps);
    if (tr.exited()) return Finite{tr.interior_time};
    return Cutoff{};
}

Itinerary itinerary(const Trajectory& tr) {
    Itinerary out;
    out.reserve(tr.events.size());
    for (const auto& e : tr.events)
        if (!e.tangential) out.push_back(e.obstacle_index);
    return out;
}

TrappedFlags classify_trapped(const Scene& s, const PhasePoint& x, const Caps& caps) {
    TrappedFlags flags;
    flags.forward_trapped_candidate = !trace(s, x, caps).exited();
    flags.backward_trapped_candidate =
        !trace(s, PhasePoint{x.q, x.v.reversed()}, caps).exited();
    return flags;
}

}  // namespace scat2d
