"""Rest-frame Green functions, mass spectra and pole-sum propagators.

The rest-frame Green function solves

    d_t^2 G(t) + W(t) G(t) = delta(t),   G = 0 for t < 0,

with ``W = mu0^2 + 3 lam phi0^2`` (massive / massless) or
``W = mu0^2 (2 dn^2 - 1)`` (SSB), so ``G(0+) = 0`` and ``G'(0+) = 1``.  The
closed forms are

    massive, massless:  G(t) = -Z cn dn(M t + (4n+1) K | m)
    SSB:                G(t) = -sqrt(3/2)/mu0 sn cn(mu0 t/sqrt(3) + (2n+1) K | -1)

Expanding ``G`` in its sine series ``sum_r (rho_r / m_r) sin(m_r t)`` gives the
poles ``m_r`` and Kallen-Lehmann weights ``rho_r``; the unit slope at
``t = 0+`` is the sum rule ``sum_r rho_r = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._io import dumps_csv, dumps_json, loads_csv
from .elliptic_core import complete_K, jacobi, nome
from .solutions import ConfigError, Family, FieldConfig, amplitude, modulus

__all__ = [
    "PoleSum",
    "effective_mass",
    "z_delta",
    "z_delta_reduced",
    "z_delta_jump",
    "green_normalization",
    "green_phase",
    "green_potential",
    "rest_frame_green",
    "mass_spectrum",
    "kl_weights",
    "propagator",
    "DEFAULT_TERMS",
]

DEFAULT_TERMS = 16


def effective_mass(config: FieldConfig) -> float:
    """``sqrt(mu0^2 + mu^2 sqrt(lam/2))``, or the SSB scale ``mu0/sqrt(3)``."""
    return config.effective_mass


def _require_sn(config):
    if config.kind is Family.SSB:
        raise ConfigError("Z_Delta is defined for the massive and massless families only")


def z_delta(config: FieldConfig) -> float:
    """Green-function normalisation in its expanded polynomial form."""
    _require_sn(config)
    mu0, mu, lam = config.mu0, config.mu, config.lam
    m2 = effective_mass(config) ** 2
    denom = (np.sqrt(2.0) * 9 * mu0**4 * mu**4 * lam
             + np.sqrt(8.0) * mu0**8
             + 10 * mu0**6 * mu**2 * np.sqrt(lam)
             + np.sqrt(2.0) * mu**8 * lam**2
             + 7 * mu0**2 * mu**6 * lam**1.5)
    return float((2.0 * m2) ** 3.5 / (4.0 * denom))


def z_delta_reduced(config: FieldConfig) -> float:
    """``M / (mu0^2 + sqrt(2 lam) mu^2)``."""
    _require_sn(config)
    return effective_mass(config) / (config.mu0**2 + np.sqrt(2.0 * config.lam) * config.mu**2)


def z_delta_jump(config: FieldConfig) -> float:
    """``1 / (M (1 - m))``: the value giving a unit slope jump at the source."""
    _require_sn(config)
    return 1.0 / (effective_mass(config) * (1.0 - modulus(config).m))


def green_normalization(config: FieldConfig) -> float:
    """Prefactor of the elliptic product: ``Z`` or ``sqrt(3/2)/mu0`` (SSB)."""
    if config.kind is Family.SSB:
        return np.sqrt(1.5) / config.mu0
    return z_delta_reduced(config)


def green_phase(config: FieldConfig, n: int = 0) -> float:
    """``(4n+1) K(m)`` for the sn families, ``(2n+1) K(-1)`` for SSB."""
    K = modulus(config).K
    return (2 * n + 1) * K if config.kind is Family.SSB else (4 * n + 1) * K


def green_potential(config: FieldConfig, t, n: int = 0):
    """``W(t)`` along the background whose phase is pinned to the source."""
    m = modulus(config).m
    u = effective_mass(config) * np.asarray(t, dtype=float) + green_phase(config, n)
    sn, _, dn = jacobi(u, m)
    if config.kind is Family.SSB:
        return config.mu0**2 * (2.0 * dn * dn - 1.0)
    return config.mu0**2 + 3.0 * config.lam * (amplitude(config) * sn) ** 2


def rest_frame_green(config: FieldConfig, t, n: int = 0):
    """Retarded rest-frame Green function ``G(t)``; zero for ``t <= 0``."""
    t = np.asarray(t, dtype=float)
    m = modulus(config).m
    u = effective_mass(config) * t + green_phase(config, n)
    sn, cn, dn = jacobi(u, m)
    shape = sn * cn if config.kind is Family.SSB else cn * dn
    out = np.where(t > 0, -green_normalization(config) * shape, 0.0)
    return float(out) if out.ndim == 0 else out


def mass_spectrum(config: FieldConfig, N: int) -> np.ndarray:
    """Pole masses: ``(2n+1) pi/(2K) M`` (sn families) or ``k pi/K(-1) mu0/sqrt(3)`` (SSB)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    K = complete_K(modulus(config).m)
    idx = np.arange(N, dtype=float)
    if config.kind is Family.SSB:
        return idx * (np.pi / K) * (config.mu0 / np.sqrt(3.0))
    return (2 * idx + 1) * (np.pi / (2 * K)) * effective_mass(config)


@dataclass(frozen=True)
class PoleSum:
    """Propagator as a finite sum of simple poles ``rho_r / (p^2 - m_r^2 + i eps)``."""

    masses: np.ndarray
    residues: np.ndarray
    epsilon: float = 1e-9

    def __post_init__(self):
        masses = np.asarray(self.masses, dtype=float)
        residues = np.asarray(self.residues, dtype=float)
        if masses.shape != residues.shape or masses.ndim != 1:
            raise ValueError("masses and residues must be 1-d arrays of equal length")
        if np.any(np.diff(masses) <= 0):
            raise ValueError("pole masses must be strictly increasing")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "residues", residues)

    def __len__(self):
        return len(self.masses)

    @property
    def total_weight(self) -> float:
        return float(self.residues.sum())

    @property
    def has_zero_mode(self) -> bool:
        """True when a massless pole is carried.

        Its weight is zero, but whether it propagates at vanishing momentum
        depends on the order of limits; it is reported, not resolved.
        """
        return bool(len(self) and self.masses[0] == 0.0)

    def ratios(self) -> np.ndarray:
        """``rho_r / rho_0`` (relative to the first non-zero weight)."""
        ref = self.residues[np.flatnonzero(self.residues)[0]]
        return self.residues / ref

    def propagator(self, p_squared, epsilon: float | None = None):
        eps = self.epsilon if epsilon is None else epsilon
        p2 = np.asarray(p_squared)[..., None]
        val = np.sum(self.residues / (p2 - self.masses**2 + 1j * eps), axis=-1)
        return complex(val) if val.ndim == 0 else val

    def retarded(self, omega, eta: float):
        """Fourier transform ``int_0^inf G(t) exp(i omega t - eta t) dt`` of :meth:`time_domain`."""
        w = np.asarray(omega, dtype=float)[..., None] + 1j * eta
        val = np.sum(self.residues / (self.masses**2 - w * w), axis=-1)
        return complex(val) if val.ndim == 0 else val

    def time_domain(self, t):
        """``theta(t) sum_r rho_r sin(m_r t) / m_r`` over the massive poles."""
        t = np.asarray(t, dtype=float)
        keep = self.masses > 0
        m, rho = self.masses[keep], self.residues[keep]
        val = np.sum(rho / m * np.sin(np.multiply.outer(t, m)), axis=-1)
        out = np.where(t > 0, val, 0.0)
        return float(out) if out.ndim == 0 else out

    def to_json(self) -> str:
        return dumps_json([{"mass": m, "residue": r} for m, r in zip(self.masses, self.residues)])

    def to_csv(self) -> str:
        return dumps_csv(["r", "mass", "residue"],
                         [(i, m, r) for i, (m, r) in enumerate(zip(self.masses, self.residues))])

    @classmethod
    def from_json(cls, text: str, epsilon: float = 1e-9) -> "PoleSum":
        import json
        rows = json.loads(text)
        return cls([r["mass"] for r in rows], [r["residue"] for r in rows], epsilon)

    @classmethod
    def from_csv(cls, text: str, epsilon: float = 1e-9) -> "PoleSum":
        header, rows = loads_csv(text)
        if header != ["r", "mass", "residue"]:
            raise ValueError(f"unexpected CSV header {header}")
        return cls([float(r[1]) for r in rows], [float(r[2]) for r in rows], epsilon)


def _default_epsilon(masses):
    ref = masses[0] if masses[0] > 0 else masses[1] if len(masses) > 1 else 1.0
    return 1e-9 * ref * ref


def kl_weights(config: FieldConfig, N: int = DEFAULT_TERMS, epsilon: float | None = None) -> PoleSum:
    """Kallen-Lehmann masses and weights of the first ``N`` poles.

    Weights follow from the sine series of the rest-frame Green function,
    ``rho_r = m_r * (coefficient of sin(m_r t))``, written with the signed nome
    so every weight is real; for imaginary modulus they are all positive.
    """
    masses = mass_spectrum(config, N)
    param = modulus(config)
    K, q = param.K, nome(param.m)
    Q = abs(q)
    if config.kind is Family.SSB:
        k = np.arange(N, dtype=float)
        rho = np.sqrt(2.0) * np.pi**3 / K**3 * k**2 * Q**k / (1.0 + Q ** (2 * k))
    elif param.m == 0.0:
        # sn -> sin: one pole at M carrying all the weight
        rho = np.zeros(N)
        rho[0] = 1.0
    else:
        r = np.arange(N, dtype=float)
        zm = green_normalization(config) * effective_mass(config)
        shape = Q ** (r + 0.5) / (1.0 + Q ** (2 * r + 1))
        if param.m > 0:
            shape = (-1.0) ** r * Q ** (r + 0.5) / (1.0 - Q ** (2 * r + 1))
        rho = zm * np.pi**3 / (2.0 * np.sqrt(abs(param.m)) * K**3) * (2 * r + 1) ** 2 * shape
    eps = _default_epsilon(masses) if epsilon is None else epsilon
    return PoleSum(masses, rho, eps)


def propagator(config: FieldConfig, p_squared, N: int = DEFAULT_TERMS, epsilon: float | None = None):
    """Truncated pole sum ``sum_r rho_r / (p^2 - m_r^2 + i eps)``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if epsilon is not None and epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return kl_weights(config, N, epsilon).propagator(p_squared)
