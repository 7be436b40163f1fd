#include <cmath>

#include "doctest.h"
#include "scat2d/compare.hpp"

using namespace scat2d;

namespace {

Scene disc(double r, Vec2 c = {0.0, 0.0}, double rot = 0.0) {
    return {3.0, {Ellipse{c, r, r, rot}}};
}

}  // namespace

TEST_CASE("identical scenes are indistinguishable") {
    const Scene two{5.0,
                    {Ellipse{{-2.0, 0.0}, 1.0, 1.0, 0.0}, Ellipse{{2.0, 0.0}, 1.0, 1.0, 0.0}}};
    const Verdict v = distinguish(two, two, 60, 60);
    CHECK(std::holds_alternative<IndistinguishableAtGrid>(v));
}

TEST_CASE("representation invariance: a rotated disc is the same disc") {
    const Verdict v = distinguish(disc(1.0), disc(1.0, {0.0, 0.0}, 0.3), 100, 100);
    CHECK(std::holds_alternative<IndistinguishableAtGrid>(v));
}

TEST_CASE("radius perturbation is detected with a large witness delta") {
    const Verdict v = distinguish(disc(1.0), disc(1.05), 200, 200);
    const auto* d = std::get_if<Different>(&v);
    REQUIRE(d != nullptr);
    CHECK(d->report.disagree_fraction > 0.0);
    // The radial node alone shifts by 2 * 0.05 and near-tangential nodes by
    // much more.
    CHECK(d->report.max_abs_delta >= 0.19);
    REQUIRE(d->report.witness.has_value());
    CHECK(std::abs(d->report.witness->t_a - d->report.witness->t_b) ==
          doctest::Approx(d->report.max_abs_delta));
}

TEST_CASE("translation is detected") {
    const Verdict v = distinguish(disc(1.0), disc(1.0, {0.1, 0.0}), 200, 200);
    const auto* d = std::get_if<Different>(&v);
    REQUIRE(d != nullptr);
    CHECK(d->report.max_abs_delta > 0.01);
}

TEST_CASE("verdict symmetry") {
    const auto ra = distinguish(disc(1.0), disc(1.05), 100, 100);
    const auto rb = distinguish(disc(1.05), disc(1.0), 100, 100);
    const auto& da = std::get<Different>(ra).report;
    const auto& db = std::get<Different>(rb).report;
    CHECK(da.disagree_fraction == doctest::Approx(db.disagree_fraction));
    CHECK(da.max_abs_delta == doctest::Approx(db.max_abs_delta));
    CHECK(da.status_mismatches == db.status_mismatches);
}

TEST_CASE("detection survives grid refinement") {
    for (int n : {50, 100, 200}) {
        const Verdict v = distinguish(disc(1.0), disc(1.05), n, n);
        CHECK(std::holds_alternative<Different>(v));
    }
}

TEST_CASE("status mismatches are counted separately and force a verdict") {
    // Tight caps cut corridor nodes in the two-disc scene; the empty scene
    // keeps every node finite.
    const Scene two{5.0,
                    {Ellipse{{-2.0, 0.0}, 1.0, 1.0, 0.0}, Ellipse{{2.0, 0.0}, 1.0, 1.0, 0.0}}};
    const Scene empty{5.0, {}};
    const Caps tight{2, 1e6, kDefaultEpsTan};
    auto rec_a = travelling_time_spectrum(two, 100, 100, tight);
    auto rec_b = travelling_time_spectrum(empty, 100, 100, tight);
    const auto rep = compare_spectra(rec_a, rec_b, 1e-7);
    CHECK(rep.status_mismatches > 0);
    CHECK(rep.different());
    CHECK(rep.compared + rep.status_mismatches == 100 * 100);
}

TEST_CASE("grid mismatch and bad tolerance are rejected") {
    auto a = travelling_time_spectrum(disc(1.0), 10, 10);
    auto b = travelling_time_spectrum(disc(1.0), 10, 12);
    CHECK_THROWS_AS(compare_spectra(a, b, 1e-7), input_error);
    auto c = travelling_time_spectrum(disc(1.0), 12, 10);
    CHECK_THROWS_AS(compare_spectra(a, c, 1e-7), input_error);
    CHECK_THROWS_AS(compare_spectra(a, a, 0.0), input_error);
}

TEST_CASE("spectra over different reference circles cannot be compared") {
    const Scene small = disc(1.0);
    const Scene big{5.0, {Ellipse{{0.0, 0.0}, 1.0, 1.0, 0.0}}};
    CHECK_THROWS_AS(distinguish(small, big, 20, 20), input_error);
}
