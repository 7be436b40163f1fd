// Travelling-time spectrum sampling on the inward phase cylinder over the
// ball boundary, and scattering-length-spectrum sampling via rays launched
// from tangent lines with sojourn times.
#pragma once

#include <vector>

#include "scat2d/billiard.hpp"

namespace scat2d {

enum class SampleStatus { Finite, Grazing, Cutoff };

struct SpectrumRecord {
    double psi = 0.0;
    double phi = 0.0;
    SampleStatus status = SampleStatus::Finite;
    double t = 0.0;  // travelling time; for Cutoff records the elapsed time
    int reflections = 0;
    int tangencies = 0;
};

struct SLSRecord {
    double omega_angle = 0.0;
    double b = 0.0;  // impact parameter along the tangent line
    Direction theta;
    double sojourn = 0.0;  // NaN when the ray tripped a cap
    int reflections = 0;
    bool tangential = false;
};

// Midpoint grid psi_i = 2pi(i+1/2)/n_psi, phi_j = -pi/2 + pi(j+1/2)/n_phi,
// row-major with psi outer.
std::vector<SpectrumRecord> travelling_time_spectrum(const Scene& s, int n_psi,
                                                     int n_phi, const Caps& caps = {});

// Launches from p0 = -a*omega + b*omega_perp on the tangent line Z_omega in
// direction omega; returns the ball-clipped trajectory and the SLS record.
std::pair<Trajectory, SLSRecord> shoot_from_zline(const Scene& s, double omega_angle,
                                                  double b, const Caps& caps = {});

// T = <q_first, omega> + (polyline length between first and last reflection)
// - <q_last, theta>. Zero-reflection rays give 0. The value does not depend
// on the ball radius; `a` is kept for interface symmetry.
double sojourn_time(const Trajectory& tr, Direction omega, Direction theta, double a);

// Product midpoint grid over omega_angle in [0,2pi) and b in (-a,a),
// row-major with omega outer.
std::vector<SLSRecord> sls_sample(const Scene& s, int n_omega, int n_b,
                                  const Caps& caps = {});

}  // namespace scat2d
