"""Independent numerical oracles: ODE integration, quadrature and finite differences.

Nothing here knows about closed forms.  The ODE oracle integrates oscillators
with a time-varying frequency

    y'' + W(t, s) * y = 0

where ``W`` may depend on a background ``s(t)`` that is integrated alongside
from its own autonomous second-order equation, so an elliptic potential such
as ``6 sn(t|-1)**2`` can be reproduced without calling any Jacobi routine.
A point source at ``t = 0`` is encoded as the initial slope jump ``y'(0+) = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad, solve_ivp

__all__ = [
    "Background",
    "OdeProblem",
    "Trajectory",
    "integrate",
    "quad_K",
    "periodic_quadrature",
    "finite_diff",
    "second_diff_5pt",
]


@dataclass(frozen=True)
class Background:
    """Autonomous background ``s'' = accel(s)`` with initial data ``(s0, ds0)``."""

    accel: Callable[[float], float]
    s0: float
    ds0: float


@dataclass(frozen=True)
class OdeProblem:
    W: Callable[[float, float], float]
    y0: float
    dy0: float
    t_span: tuple[float, float]
    tol: float = 1e-10
    background: Background | None = None

    def __post_init__(self):
        if not 1e-14 <= self.tol <= 1e-6:
            raise ValueError(f"tol must lie in [1e-14, 1e-6], got {self.tol}")

    @classmethod
    def green(cls, W, t_end, tol=1e-10, background=None):
        """Retarded response to a unit point source at ``t = 0``."""
        return cls(W, 0.0, 1.0, (0.0, t_end), tol, background)


class Trajectory:
    """Dense-output solution; call with ``t`` to get ``y(t)``."""

    def __init__(self, sol, has_background):
        self._sol = sol
        self._bg = has_background
        self.t = sol.t
        self.y = sol.y[0]
        self.dy = sol.y[1]

    def __call__(self, t):
        return self._sol.sol(t)[0]

    def derivative(self, t):
        return self._sol.sol(t)[1]

    def background(self, t):
        if not self._bg:
            raise AttributeError("problem was integrated without a background")
        return self._sol.sol(t)[2]


def integrate(problem: OdeProblem) -> Trajectory:
    """Integrate ``y'' + W y = 0`` with an adaptive embedded 8(5,3) pair."""
    bg = problem.background

    if bg is None:
        def rhs(t, z):
            return [z[1], -problem.W(t, None) * z[0]]
        z0 = [problem.y0, problem.dy0]
    else:
        def rhs(t, z):
            return [z[1], -problem.W(t, z[2]) * z[0], z[3], bg.accel(z[2])]
        z0 = [problem.y0, problem.dy0, bg.s0, bg.ds0]

    sol = solve_ivp(
        rhs, problem.t_span, z0, method="DOP853", dense_output=True,
        rtol=problem.tol, atol=problem.tol * 1e-2,
    )
    if not sol.success:
        raise RuntimeError(f"ODE integration failed: {sol.message}")
    return Trajectory(sol, bg is not None)


def quad_K(m: float) -> float:
    """``K(m)`` by adaptive quadrature of its defining integral."""
    val, _ = quad(lambda th: 1.0 / np.sqrt(1.0 - m * np.sin(th) ** 2),
                  0.0, 0.5 * np.pi, epsabs=0.0, epsrel=1e-13, limit=200)
    return val


def periodic_quadrature(f, period, index, kind="cos", n=512):
    """Fourier coefficient of a smooth periodic ``f`` by the trapezoidal rule.

    Index 0 returns the mean.  For ``index >= 1`` returns ``a_k`` (``kind='cos'``)
    or ``b_k`` (``kind='sin'``) in ``f = a_0 + sum a_k cos(2 pi k t/T) + b_k sin(...)``.
    """
    if kind not in ("cos", "sin"):
        raise ValueError("kind must be 'cos' or 'sin'")
    t = np.arange(n) * (period / n)
    ft = np.asarray(f(t), dtype=float)
    if index == 0:
        return float(ft.mean()) if kind == "cos" else 0.0
    arg = 2.0 * np.pi * index * t / period
    basis = np.cos(arg) if kind == "cos" else np.sin(arg)
    return float(2.0 * np.mean(ft * basis))


def _central(f, x, order, h):
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def finite_diff(f, x, order=1, h=None):
    """Central difference of order 1 or 2 with one Richardson step (error O(h**4)).

    Default steps are 1e-3 (first derivative) and 1e-2 (second derivative),
    roughly where truncation and roundoff balance for O(1) functions.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if h is None:
        h = 1e-3 if order == 1 else 1e-2
    if h <= 0:
        raise ValueError("step h must be positive")
    coarse = _central(f, x, order, h)
    fine = _central(f, x, order, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def second_diff_5pt(f, x, h):
    """Fourth-order five-point stencil for ``f''(x)``."""
    if h <= 0:
        raise ValueError("step h must be positive")
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)
