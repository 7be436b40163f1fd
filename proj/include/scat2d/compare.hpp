// Travelling-time distinguisher: decide from sampled spectra whether two
// scenes are numerically indistinguishable at a grid or provably different.
#pragma once

#include <optional>
#include <variant>

#include "scat2d/spectra.hpp"

namespace scat2d {

struct DisagreementWitness {
    double psi = 0.0;
    double phi = 0.0;
    double t_a = 0.0;
    double t_b = 0.0;
};

struct DisagreementReport {
    int n_psi = 0;
    int n_phi = 0;
    long compared = 0;           // nodes Finite in both scenes
    long disagreements = 0;      // compared nodes with |delta t| > tol
    long status_mismatches = 0;  // nodes whose status differs between scenes
    double disagree_fraction = 0.0;
    double max_abs_delta = 0.0;
    std::optional<DisagreementWitness> witness;

    bool different() const { return disagreements > 0 || status_mismatches > 0; }
};

// Node-wise comparison over a shared grid. Status mismatches (Finite in one
// scene, Cutoff/Grazing in the other) are the strongest disagreements and
// are counted separately from the |delta t| fraction.
DisagreementReport compare_spectra(const std::vector<SpectrumRecord>& rec_a,
                                   const std::vector<SpectrumRecord>& rec_b,
                                   double tol = 1e-7);

struct IndistinguishableAtGrid {};
struct Different {
    DisagreementReport report;
};
using Verdict = std::variant<IndistinguishableAtGrid, Different>;

// Computes both spectra on the same grid and compares. The verdict is
// grid-relative; it never claims the obstacles are equal.
Verdict distinguish(const Scene& scene_a, const Scene& scene_b, int n_psi, int n_phi,
                    const Caps& caps = {}, double tol = 1e-7);

}  // namespace scat2d
