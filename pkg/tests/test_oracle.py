import numpy as np
import pytest

from elliptica.oracle import (OdeProblem, finite_diff, integrate, periodic_quadrature, quad_K,
                              second_diff_5pt)


def test_harmonic_oscillator():
    traj = integrate(OdeProblem(lambda t, s: 1.0, 1.0, 0.0, (0.0, 10.0), tol=1e-10))
    t = np.linspace(0, 10, 501)
    assert np.abs(traj(t) - np.cos(t)).max() < 1e-9
    assert np.abs(traj.derivative(t) + np.sin(t)).max() < 1e-9


def test_energy_conserved_for_constant_frequency():
    W = 2.5
    traj = integrate(OdeProblem(lambda t, s: W, 0.3, 1.1, (0.0, 20.0), tol=1e-12))
    energy = 0.5 * traj.dy**2 + 0.5 * W * traj.y**2
    assert np.ptp(energy) < 1e-10


def test_green_problem_encodes_unit_slope():
    prob = OdeProblem.green(lambda t, s: 4.0, 3.0)
    assert (prob.y0, prob.dy0) == (0.0, 1.0)
    traj = integrate(prob)
    t = np.linspace(0, 3, 50)
    assert np.abs(traj(t) - np.sin(2 * t) / 2).max() < 1e-9


def test_background_requires_flag():
    traj = integrate(OdeProblem(lambda t, s: 1.0, 1.0, 0.0, (0.0, 1.0)))
    with pytest.raises(AttributeError):
        traj.background(0.5)


@pytest.mark.parametrize("tol", [1e-15, 1e-5])
def test_tolerance_range(tol):
    with pytest.raises(ValueError):
        OdeProblem(lambda t, s: 1.0, 1.0, 0.0, (0.0, 1.0), tol=tol)


def test_quad_K_circular():
    assert quad_K(0.0) == pytest.approx(np.pi / 2, abs=1e-15)


def test_periodic_quadrature_trivial():
    T = 3.7
    assert periodic_quadrature(lambda t: np.cos(2 * np.pi * t / T), T, 1) == pytest.approx(1.0, abs=1e-14)
    assert periodic_quadrature(lambda t: np.sin(4 * np.pi * t / T), T, 2, "sin") == pytest.approx(1.0, abs=1e-14)
    assert periodic_quadrature(lambda t: 2.0 + 0 * t, T, 0) == pytest.approx(2.0, abs=1e-14)
    with pytest.raises(ValueError):
        periodic_quadrature(np.cos, T, 1, kind="tan")


def test_finite_diff_polynomials():
    assert finite_diff(lambda x: x**2, 1.3, order=2) == pytest.approx(2.0, abs=1e-10)
    assert finite_diff(lambda x: x**3, 0.5, order=1, h=1e-2) == pytest.approx(0.75, abs=1e-12)
    with pytest.raises(ValueError):
        finite_diff(np.sin, 0.0, order=3)
    with pytest.raises(ValueError):
        finite_diff(np.sin, 0.0, h=0.0)


def test_five_point_stencil_is_fourth_order():
    errs = [abs(second_diff_5pt(np.sin, 0.7, h) + np.sin(0.7)) for h in (0.1, 0.05)]
    assert errs[0] / errs[1] == pytest.approx(16.0, rel=0.05)
