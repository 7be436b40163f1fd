#include "scat2d/compare.hpp"

#include <cmath>

namespace scat2d {

DisagreementReport compare_spectra(const std::vector<SpectrumRecord>& rec_a,
                                   const std::vector<SpectrumRecord>& rec_b,
                                   double tol) {
    if (!(tol > 0.0)) throw input_error("compare_spectra: tol must be > 0");
    if (rec_a.size() != rec_b.size())
        throw input_error("compare_spectra: grid size mismatch");
    DisagreementReport rep;
    for (std::size_t k = 0; k < rec_a.size(); ++k) {
        const SpectrumRecord& a = rec_a[k];
        const SpectrumRecord& b = rec_b[k];
        if (a.psi != b.psi || a.phi != b.phi)
            throw input_error("compare_spectra: grids have different nodes");
        if (a.status != b.status) {
            ++rep.status_mismatches;
            continue;
        }
        if (a.status != SampleStatus::Finite) continue;
        ++rep.compared;
        const double delta = std::abs(a.t - b.t);
        if (delta > tol) {
            ++rep.disagreements;
            if (delta > rep.max_abs_delta) {
                rep.max_abs_delta = delta;
                rep.witness = DisagreementWitness{a.psi, a.phi, a.t, b.t};
            }
        }
    }
    rep.disagree_fraction =
        rep.compared > 0 ? static_cast<double>(rep.disagreements) / rep.compared : 0.0;
    return rep;
}

Verdict distinguish(const Scene& scene_a, const Scene& scene_b, int n_psi, int n_phi,
                    const Caps& caps, double tol) {
    if (scene_a.ball_radius != scene_b.ball_radius)
        throw input_error("distinguish: scenes use different ball radii");
    auto rec_a = travelling_time_spectrum(scene_a, n_psi, n_phi, caps);
    auto rec_b = travelling_time_spectrum(scene_b, n_psi, n_phi, caps);
    DisagreementReport rep = compare_spectra(rec_a, rec_b, tol);
    rep.n_psi = n_psi;
    rep.n_phi = n_phi;
    if (rep.different()) return Different{rep};
    return IndistinguishableAtGrid{};
}

}  // namespace scat2d
