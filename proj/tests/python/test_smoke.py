"""Smoke tests for the python bindings and the installed CLI."""

import math
import os
import subprocess

import pytest

import scat2d


def unit_disc_scene(a=3.0):
    return scat2d.Scene(a, [scat2d.Ellipse(0.0, 0.0, 1.0, 1.0, 0.0)])


def test_empty_scene_diameter():
    s = scat2d.Scene(3.0, [])
    assert scat2d.travelling_time(s, math.pi, 0.0) == pytest.approx(6.0)


def test_parse_trace_itinerary():
    s = scat2d.parse_scene("ball 3\nellipse 0 0 1 1 0\n")
    x = scat2d.boundary_phase_point(3.0, math.pi, 0.0)
    tr = scat2d.trace(s, x)
    assert tr.exited
    assert tr.reflections == 1
    assert tr.interior_time == pytest.approx(4.0)
    assert tr.itinerary == [1]
    assert tr.exit.v.vx == pytest.approx(-1.0)


def test_grazing_convention():
    assert scat2d.travelling_time(unit_disc_scene(), 0.3, math.pi / 2) == 0.0


def test_spectrum_rows():
    recs = scat2d.travelling_time_spectrum(scat2d.Scene(3.0, []), 10, 10)
    assert len(recs) == 100
    for r in recs:
        assert r.status == "finite"
        assert r.t == pytest.approx(6.0 * math.cos(r.phi), abs=1e-9)


def test_santalo_identity():
    rep = scat2d.santalo_defect(unit_disc_scene(), 200, 200)
    assert rep.phase_volume == pytest.approx(16 * math.pi**2)
    assert abs(rep.defect) < 5e-3 * rep.phase_volume
    assert rep.excluded_weight == 0.0


def test_backscatter_sojourn():
    tr, rec = scat2d.shoot_from_zline(unit_disc_scene(), 0.0, 0.0)
    assert rec.reflections == 1
    assert rec.sojourn == pytest.approx(-2.0)
    assert rec.theta.vx == pytest.approx(-1.0)


def test_trapped_fraction_single_disc():
    fr = scat2d.trapped_fraction(unit_disc_scene(), 5000, 1, [2, 5])
    assert fr == [(2, 0.0), (5, 0.0)]


def test_distinguish():
    a = unit_disc_scene()
    b = scat2d.Scene(3.0, [scat2d.Ellipse(0.0, 0.0, 1.05, 1.05, 0.0)])
    assert scat2d.distinguish(a, a, 60, 60) is None
    rep = scat2d.distinguish(a, b, 100, 100)
    assert rep is not None
    assert rep.max_abs_delta > 0.19


def test_involute_and_front():
    circle = scat2d.Ellipse(0.0, 0.0, 1.0, 1.0, 0.0)
    y = scat2d.involute(circle, 0.0, 0.5, 0.05, 1, 64)
    assert len(y) == 64
    assert y.curvatures[0] == pytest.approx(2.0)
    assert scat2d.check_normal_tangency(y, circle) < 1e-8

    s = scat2d.Scene(2.0, [circle])
    start = scat2d.FrontState(scat2d.Vec2(-2.0, 0.0), scat2d.Direction(1.0, 0.0), 0.0)
    states = scat2d.propagate_front(s, start)
    assert states[0].kappa == pytest.approx(2.0)
    assert states[-1].kappa == pytest.approx(2.0 / 3.0)
    assert scat2d.finite_difference_curvature(s, start, 1.0 + 1e-6) == pytest.approx(
        2.0, rel=1e-4
    )


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        scat2d.parse_scene("ball 3\nellipse 0 0 1 1 0\nellipse 1 0 1 1 0\n")
    with pytest.raises(ValueError):
        scat2d.parse_scene("ellipse 0 0 1 1 0\n")


def test_cli_santalo(tmp_path):
    cli = os.environ.get("SCAT2D_CLI")
    if not cli:
        pytest.skip("SCAT2D_CLI not set")
    scn = tmp_path / "one.scn"
    scn.write_text("ball 3\nellipse 0 0 1 1 0\n")
    out = subprocess.run(
        [cli, "santalo", "--scene", str(scn), "--n-psi", "100", "--n-phi", "100"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    integral = next(
        float(line.split()[1])
        for line in out.stdout.splitlines()
        if line.startswith("integral ")
    )
    assert integral == pytest.approx(16 * math.pi**2, rel=1e-3)
