"""Linearised operators around the exact solutions and their Lame-type eigenpairs.

For fluctuations depending on ``u = p.x`` only, ``L = -box + V''(phi0)``
reduces to ``p^2 g''(u) + W(u) g(u)`` with

    massless:  W = 3 lam A^2 sn^2(u|-1)      = p^2 * 6 sn^2
    SSB:       W = -mu0^2 + 3 lam v^2 dn^2    = p^2 * (-3 + 6 dn^2)

The modes are not normalisable on the line, so inner products are averages
over one period ``4K``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._io import dumps_csv
from .elliptic_core import complete_K, jacobi
from .solutions import (Family, FieldConfig, WaveFrame, check_on_shell, dispersion,
                        modulus, profile, profile_derivative)

__all__ = [
    "PRODUCTS",
    "LinearizedOperator",
    "ModeFunction",
    "FixedPhase",
    "claimed_modes",
    "apply_reduced",
    "eigenvalue_check",
    "fixed_phase_form",
    "zero_mode",
    "mode_table_csv",
    "MIN_POINTS",
]

MIN_POINTS = 64
DEFAULT_POINTS = 1024

PRODUCTS = {
    "cn_dn": lambda sn, cn, dn: cn * dn,
    "sn_dn": lambda sn, cn, dn: sn * dn,
    "sn_cn": lambda sn, cn, dn: sn * cn,
}


@dataclass(frozen=True)
class LinearizedOperator:
    """``-box + V''(phi0)`` around the solution selected by ``config`` and ``frame``."""

    config: FieldConfig
    frame: WaveFrame

    def __post_init__(self):
        check_on_shell(self.config, self.frame)

    @property
    def p_squared(self) -> float:
        return dispersion(self.config)

    @property
    def period(self) -> float:
        return 4.0 * complete_K(modulus(self.config).m)

    def potential(self, u):
        """``W(u) = s mu0^2 + 3 lam phi0(u)^2``; independent of the sign branch."""
        c = self.config
        phi = profile(c, u)
        return c.mass_sign * c.mu0**2 + 3.0 * c.lam * phi * phi

    def reduced_potential(self, u):
        return self.potential(u) / self.p_squared

    def grid(self, n: int = DEFAULT_POINTS) -> np.ndarray:
        return np.arange(n) * (self.period / n)


@dataclass(frozen=True)
class ModeFunction:
    product: str
    normalization: float = 1.0
    claimed_eigenvalue: float = 0.0

    def __post_init__(self):
        if self.product not in PRODUCTS:
            raise ValueError(f"product must be one of {sorted(PRODUCTS)}")

    def __call__(self, u, m: float = -1.0):
        return self.normalization * PRODUCTS[self.product](*jacobi(u, m))


def claimed_modes(config: FieldConfig) -> dict[str, ModeFunction]:
    """The zero mode and the non-zero mode asserted for each family."""
    if config.kind is Family.MASSLESS:
        eps = 3.0 * config.mu**2 * np.sqrt(config.lam / 2.0)
        return {"zero": ModeFunction("cn_dn", 1.0, 0.0),
                "nonzero": ModeFunction("sn_dn", 1.0, eps)}
    if config.kind is Family.SSB:
        return {"zero": ModeFunction("sn_cn", 1.0, 0.0),
                "nonzero": ModeFunction("cn_dn", 1.0, config.mu0**2)}
    raise ValueError("eigenpairs are tabulated for the massless and ssb families")


def _second_derivative(g, period):
    n = g.shape[-1]
    if n < MIN_POINTS:
        raise ValueError(f"grid too coarse: {n} points per period, need at least {MIN_POINTS}")
    k = 2.0 * np.pi * np.fft.fftfreq(n, d=period / n)
    return np.fft.ifft(-(k * k) * np.fft.fft(g)).real


def apply_reduced(op: LinearizedOperator, g) -> np.ndarray:
    """``p^2 g'' + W g`` for ``g`` sampled on ``op.grid(len(g))`` (spectral derivative)."""
    g = np.asarray(g, dtype=float)
    u = op.grid(g.shape[-1])
    return op.p_squared * _second_derivative(g, op.period) + op.potential(u) * g


def eigenvalue_check(op: LinearizedOperator, mode: ModeFunction, n: int = DEFAULT_POINTS):
    """Rayleigh-quotient eigenvalue and relative residual ``max|L chi - eps chi| / max|chi|``."""
    u = op.grid(n)
    chi = mode(u, modulus(op.config).m)
    Lchi = apply_reduced(op, chi)
    eps = float(np.mean(chi * Lchi) / np.mean(chi * chi))
    resid = float(np.max(np.abs(Lchi - eps * chi)) / np.max(np.abs(chi)))
    return eps, resid


class FixedPhase(NamedTuple):
    shifted: np.ndarray | float
    closed_form: np.ndarray | float
    factor_two: np.ndarray | float


def fixed_phase_form(family: Family | str, u) -> FixedPhase:
    """Zero mode with its phase pinned to ``K``, next to its closed forms (unit norm).

    massless: ``cn dn(u + K) = -2 sn/dn^2``;
    SSB:      ``sn cn(u + K) = -sqrt(2) sn cn/dn^2``.

    ``factor_two`` is the same shape written with ``-2``; for SSB it differs
    from the exact shift by the normalisation ``sqrt(2)``.
    """
    family = Family(family)
    K = complete_K(-1.0)
    s1, c1, d1 = jacobi(np.asarray(u, dtype=float) + K, -1.0)
    sn, cn, dn = jacobi(u, -1.0)
    if family is Family.MASSLESS:
        form = -2.0 * sn / dn**2
        return FixedPhase(c1 * d1, form, form)
    if family is Family.SSB:
        base = sn * cn / dn**2
        return FixedPhase(s1 * c1, -np.sqrt(2.0) * base, -2.0 * base)
    raise ValueError("fixed-phase zero modes exist for the massless and ssb families")


def zero_mode(config: FieldConfig, u, branch: int = 1):
    """``d phi0 / du``: the translation zero mode, scaled with the background amplitude."""
    return profile_derivative(config, u, branch)


def mode_table_csv(op: LinearizedOperator, mode: ModeFunction, n: int = DEFAULT_POINTS) -> str:
    """CSV columns ``u, mode, residual`` with residual ``L chi - eps chi``."""
    u = op.grid(n)
    chi = mode(u, modulus(op.config).m)
    Lchi = apply_reduced(op, chi)
    resid = Lchi - mode.claimed_eigenvalue * chi
    return dumps_csv(["u", "mode", "residual"], zip(u, chi, resid))
