// Exterior billiard flow inside the ball M: event detection, specular
// reflection, tangency pass-through, travelling time, trapping candidates,
// symbolic itineraries.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "scat2d/geometry.hpp"

namespace scat2d {

// A transversal hit counts as tangential once the incidence cosine drops to
// the scale the discriminant classifier can resolve.
inline constexpr double kTangencyCosThreshold = 1e-5;
// Events closer than this to the current position are the event just left.
inline constexpr double kDepartureGuard = 1e-9;

struct Caps {
    int max_reflections = 10'000;
    double max_time = 1e6;
    double eps_tan = kDefaultEpsTan;
};

struct PhasePoint {
    Vec2 q;
    Direction v;
};

struct ReflectionEvent {
    double time = 0.0;       // cumulative along the trajectory
    int obstacle_index = 0;  // 1-based
    Vec2 point;
    double cos_incidence = 0.0;  // <-v, n> at impact, clamped to [0,1]
    bool tangential = false;
};

struct Exited {
    double exit_time = 0.0;
    PhasePoint exit;
};
struct CutoffReflections {
    int n = 0;
};
struct CutoffTime {
    double t = 0.0;
};
using TrajectoryStatus = std::variant<Exited, CutoffReflections, CutoffTime>;

struct Trajectory {
    PhasePoint start;
    std::vector<ReflectionEvent> events;
    TrajectoryStatus status = Exited{};
    double interior_time = 0.0;

    bool exited() const { return std::holds_alternative<Exited>(status); }
    int reflection_count() const {
        int n = 0;
        for (const auto& e : events) n += e.tangential ? 0 : 1;
        return n;
    }
    int tangency_count() const {
        int n = 0;
        for (const auto& e : events) n += e.tangential ? 1 : 0;
        return n;
    }
};

using Itinerary = std::vector<int>;

// Specular reflection v - 2<v,n>n, renormalized. Requires <v,n> < 0.
Direction reflect(Direction v, Direction n);

// One step of the flow.
struct Reflection {
    ReflectionEvent event;
};
struct TangencyPass {
    ReflectionEvent event;
};
struct ExitBall {
    double t = 0.0;
    PhasePoint exit;
};
using Event = std::variant<Reflection, TangencyPass, ExitBall>;

// Nearest forward event among obstacle hits and the ball crossing. Hits with
// t <= kDepartureGuard are discarded. Phase points outside the ball are
// allowed (SLS rays start on a tangent line); the ball event is then the far
// crossing.
Event next_event(const Scene& s, const PhasePoint& x, double eps_tan = kDefaultEpsTan);

Trajectory trace(const Scene& s, const PhasePoint& x, const Caps& caps = {});

// Phase point of the boundary sample (psi, phi) on the circle of radius a:
// q = a(cos psi, sin psi), v = inward normal rotated CCW by phi.
PhasePoint boundary_phase_point(double a, double psi, double phi);

struct Finite {
    double t = 0.0;
};
struct Grazing {};
struct Cutoff {};
using TravellingTime = std::variant<Finite, Grazing, Cutoff>;

// Time spent inside the ball before exit, t = 0 at grazing starts
// (|phi| = pi/2 within 1e-12).
TravellingTime travelling_time(const Scene& s, double psi, double phi,
                               const Caps& caps = {});

Itinerary itinerary(const Trajectory& tr);

struct TrappedFlags {
    bool forward_trapped_candidate = false;
    bool backward_trapped_candidate = false;
};

// Candidate flags only: a tripped cap never certifies trapping of the true
// infinite trajectory.
TrappedFlags classify_trapped(const Scene& s, const PhasePoint& x, const Caps& caps = {});

}  // namespace scat2d
