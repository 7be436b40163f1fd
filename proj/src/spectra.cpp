#include "scat2d/spectra.hpp"

#include <cmath>
#include <limits>

namespace scat2d {

std::vector<SpectrumRecord> travelling_time_spectrum(const Scene& s, int n_psi,
                                                     int n_phi, const Caps& caps) {
    if (n_psi < 1 || n_phi < 1) throw input_error("spectrum: grid sizes must be >= 1");
    std::vector<SpectrumRecord> out;
    out.reserve(static_cast<std::size_t>(n_psi) * static_cast<std::size_t>(n_phi));
    for (int i = 0; i < n_psi; ++i) {
        const double psi = 2.0 * M_PI * (i + 0.5) / n_psi;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = -M_PI_2 + M_PI * (j + 0.5) / n_phi;
            SpectrumRecord rec;
            rec.psi = psi;
            rec.phi = phi;
            if (std::abs(std::abs(phi) - M_PI_2) <= 1e-12) {
                rec.status = SampleStatus::Grazing;
                rec.t = 0.0;
            } else {
                const Trajectory tr =
                    trace(s, boundary_phase_point(s.ball_radius, psi, phi), caps);
                rec.status = tr.exited() ? SampleStatus::Finite : SampleStatus::Cutoff;
                rec.t = tr.interior_time;
                rec.reflections = tr.reflection_count();
                rec.tangencies = tr.tangency_count();
            }
            out.push_back(rec);
        }
    }
    return out;
}

double sojourn_time(const Trajectory& tr, Direction omega, Direction theta, double a) {
    (void)a;  // cancels in T'_gamma - 2a; see the header
    if (!tr.exited()) throw input_error("sojourn_time: trajectory did not exit");
    if (tr.events.empty()) return 0.0;
    const Vec2 q_first = tr.events.front().point;
    const Vec2 q_last = tr.events.back().point;
    double between = 0.0;
    for (std::size_t k = 1; k < tr.events.size(); ++k)
        between += (tr.events[k].point - tr.events[k - 1].point).norm();
    return omega.dot(q_first) + between - theta.dot(q_last);
}

std::pair<Trajectory, SLSRecord> shoot_from_zline(const Scene& s, double omega_angle,
                                                  double b, const Caps& caps) {
    const double a = s.ball_radius;
    if (!(std::abs(b) < a)) throw input_error("shoot_from_zline: |b| must be < ball radius");
    const Direction omega = direction_from_angle(omega_angle);
    const Vec2 p0 = -a * omega.vec() + b * omega.perp().vec();

    // The launch point sits on the tangent line Z_omega, outside the ball;
    // next_event handles the outside start and nothing scatters beyond M.
    const Trajectory tr = trace(s, PhasePoint{p0, omega}, caps);

    SLSRecord rec;
    rec.omega_angle = omega_angle;
    rec.b = b;
    rec.reflections = tr.reflection_count();
    rec.tangential = tr.tangency_count() > 0;
    if (tr.exited()) {
        rec.theta = std::get<Exited>(tr.status).exit.v;
        rec.sojourn = sojourn_time(tr, omega, rec.theta, a);
    } else {
        rec.theta = omega;
        rec.sojourn = std::numeric_limits<double>::quiet_NaN();
    }
    return {tr, rec};
}

std::vector<SLSRecord> sls_sample(const Scene& s, int n_omega, int n_b,
                                  const Caps& caps) {
    if (n_omega < 1 || n_b < 1) throw input_error("sls: grid sizes must be >= 1");
    const double a = s.ball_radius;
    std::vector<SLSRecord> out;
    out.reserve(static_cast<std::size_t>(n_omega) * static_cast<std::size_t>(n_b));
    for (int i = 0; i < n_omega; ++i) {
        const double w = 2.0 * M_PI * (i + 0.5) / n_omega;
        for (int j = 0; j < n_b; ++j) {
            const double b = -a + 2.0 * a * (j + 0.5) / n_b;
            out.push_back(shoot_from_zline(s, w, b, caps).second);
        }
    }
    return out;
}

}  // namespace scat2d
