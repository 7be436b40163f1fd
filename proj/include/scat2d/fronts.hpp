// Convex wavefront machinery: curvature propagation along billiard
// trajectories (free flight and the dispersing mirror law), the involute of
// an obstacle boundary, and perpendicular-hit detection between two convex
// fronts.
#pragma once

#include <utility>
#include <vector>

#include "scat2d/billiard.hpp"

namespace scat2d {

// A convex front germ: a point moving along dir with signed curvature
// kappa >= 0 (0 = flat, > 0 = dispersing).
struct FrontState {
    Vec2 point;
    Direction dir;
    double kappa = 0.0;
};

struct SampledCurve {
    std::vector<double> params;      // increasing; generator arc length for involutes
    std::vector<Vec2> points;
    std::vector<Direction> normals;  // unit; the propagation direction of the front
    std::vector<double> curvatures;

    std::size_t size() const { return points.size(); }
};

// Arc length of the boundary of e from angle parameter 0 to u, traversed
// CCW; negative u gives negative length. Adaptive quadrature to 1e-10.
double ellipse_arclength(const Ellipse& e, double u);

// Inverse of ellipse_arclength.
double ellipse_param_at_arclength(const Ellipse& e, double s);

// Involute y(s) = x(s) + (c - s) x'(s), c = s0 + eps0, sampled over the
// window where the string length c - s stays in [delta, eps0]. x is the
// arc-length parametrization of the boundary of e (orientation +1 = CCW).
// The normals of the result are the generator tangents x'(s) and its
// curvature is 1/(c - s).
SampledCurve involute(const Ellipse& e, double s0, double eps0, double delta,
                      int orientation, int n_samples);

// Max over samples of |<ellipse normal at touch point, line direction>| for
// the line through each sample along its normal; zero means every normal
// line is tangent to the generator.
double check_normal_tangency(const SampledCurve& y, const Ellipse& e);

// Evolves the front germ along its trajectory: free flight maps
// kappa -> kappa/(1 + t kappa), a reflection with boundary curvature k_b and
// incidence cosine c maps kappa -> kappa + 2 k_b / c. Returns the state
// after each reflection plus the final state (ball exit or cap). Throws
// input_error on a grazing reflection, where the mirror law diverges.
std::vector<FrontState> propagate_front(const Scene& s, const FrontState& start,
                                        const Caps& caps = {});

// Independent oracle: evolves two orthogonal offsets of the front through
// the scene for time T and estimates the evolved curvature from the
// divergence of endpoints and end-directions. Throws input_error when the
// offset rays change topology (different itinerary or a tangency).
double finite_difference_curvature(const Scene& s, const FrontState& start, double T,
                                   double h = 1e-5, const Caps& caps = {});

// For each sample of y, shoots the ray along its normal and reports the
// parameter pairs where it meets x_target orthogonally (within tol).
// Isolated orthogonal crossings are located by sign change and polished;
// adjacent duplicates are merged. A configuration where the orthogonality
// defect vanishes along whole stretches (concentric arcs) reports every
// such sample, which callers should treat as degenerate.
std::vector<std::pair<double, double>> perpendicular_hits(const SampledCurve& y,
                                                          const SampledCurve& x_target,
                                                          double tol);

}  // namespace scat2d
