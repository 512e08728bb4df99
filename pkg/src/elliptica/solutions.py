"""Exact travelling-wave solutions of quartic scalar field equations.

Three families are covered, all functions of the single phase ``u = p.x + theta``:

* ``MASSIVE``  -- ``phi = +-mu (2/lam)**(1/4) sn(u | m)`` solving
  ``d_t^2 phi - lap phi + mu0^2 phi + lam phi^3 = 0``,
  with ``p^2 = mu0^2 + mu^2 sqrt(lam/2)`` and
  ``m = -sqrt(2 lam) mu^2 / (2 mu0^2 + sqrt(2 lam) mu^2)``;
* ``MASSLESS`` -- the ``mu0 = 0`` member, ``m = -1``;
* ``SSB``      -- wrong-sign mass, ``phi = +-v dn(u | -1)`` with
  ``v = sqrt(2 mu0^2 / (3 lam))`` and ``p^2 = lam v^2 / 2 = mu0^2 / 3``.

Metric signature is (+,-,-,-), ``p.x = p0 t - p.x_vec``; a point ``x`` is an
array whose last axis is ``(t, x, y, z)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .elliptic_core import EllipticParameter, jacobi, jacobi_derivatives
from .oracle import second_diff_5pt

__all__ = [
    "Family",
    "ConfigError",
    "OffShellError",
    "FieldConfig",
    "WaveFrame",
    "dispersion",
    "modulus",
    "amplitude",
    "profile",
    "profile_derivative",
    "evaluate",
    "potential",
    "potential_force",
    "vacuum_values",
    "eom_residual",
    "eom_scale",
    "hamiltonian_density",
]

ON_SHELL_RTOL = 1e-9


class Family(str, enum.Enum):
    MASSIVE = "massive"
    MASSLESS = "massless"
    SSB = "ssb"


class ConfigError(ValueError):
    """Invalid family/parameter combination."""


class OffShellError(ValueError):
    """A wave frame whose momentum violates the family's dispersion relation."""


@dataclass(frozen=True)
class FieldConfig:
    """Physical inputs ``(mu0, mu, lam)`` together with the solution family.

    ``mu`` is unused by the SSB family, whose scale is set by ``mu0`` alone.
    """

    kind: Family
    mu0: float = 0.0
    mu: float = 0.0
    lam: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Family(self.kind))
        if not (np.isfinite(self.mu0) and np.isfinite(self.mu) and np.isfinite(self.lam)):
            raise ConfigError("parameters must be finite")
        if self.lam <= 0:
            raise ConfigError(f"coupling lam must be positive, got {self.lam}")
        if self.mu0 < 0 or self.mu < 0:
            raise ConfigError("mu0 and mu must be non-negative")
        if self.kind is Family.MASSLESS and self.mu0 != 0:
            raise ConfigError("massless family requires mu0 = 0")
        if self.kind is Family.SSB and self.mu0 <= 0:
            raise ConfigError("ssb family requires mu0 > 0")
        if self.kind is Family.MASSIVE and self.mu0 == 0 and self.mu == 0:
            raise ConfigError("massive family needs mu0 > 0 or mu > 0")

    @property
    def v(self) -> float:
        """``sqrt(2 mu0^2 / (3 lam))``."""
        return float(np.sqrt(2.0 * self.mu0**2 / (3.0 * self.lam)))

    @property
    def effective_mass(self) -> float:
        """``sqrt(mu0^2 + mu^2 sqrt(lam/2))``; ``mu0/sqrt(3)`` for the SSB family."""
        if self.kind is Family.SSB:
            return self.mu0 / np.sqrt(3.0)
        return float(np.sqrt(self.mu0**2 + self.mu**2 * np.sqrt(self.lam / 2.0)))

    @property
    def mass_sign(self) -> int:
        return {Family.MASSIVE: 1, Family.MASSLESS: 0, Family.SSB: -1}[self.kind]


def dispersion(config: FieldConfig) -> float:
    """On-shell ``p^2`` for the family."""
    if config.kind is Family.SSB:
        return config.lam * config.v**2 / 2.0
    return config.mu0**2 + config.mu**2 * np.sqrt(config.lam / 2.0)


def modulus(config: FieldConfig) -> EllipticParameter:
    """Elliptic parameter ``m = k^2`` (negative: the modulus is imaginary)."""
    if config.kind is not Family.MASSIVE:
        return EllipticParameter(-1.0)
    s = np.sqrt(2.0 * config.lam) * config.mu**2
    return EllipticParameter(float(-s / (2.0 * config.mu0**2 + s)))


def amplitude(config: FieldConfig) -> float:
    if config.kind is Family.SSB:
        return config.v
    return config.mu * (2.0 / config.lam) ** 0.25


@dataclass(frozen=True)
class WaveFrame:
    """Four-momentum ``p = (p0, px, py, pz)`` and phase offset ``theta``."""

    p: tuple = field(default=(0.0, 0.0, 0.0, 0.0))
    theta: float = 0.0

    def __post_init__(self):
        p = tuple(float(c) for c in self.p)
        if len(p) != 4:
            raise ValueError("p must have four components")
        object.__setattr__(self, "p", p)

    @property
    def p_squared(self) -> float:
        p0, px, py, pz = self.p
        return p0 * p0 - px * px - py * py - pz * pz

    def phase(self, x) -> np.ndarray:
        """``p.x + theta`` with ``p.x = p0 t - p_vec . x_vec``."""
        x = np.asarray(x, dtype=float)
        metric = np.array([1.0, -1.0, -1.0, -1.0])
        return x @ (metric * np.array(self.p)) + self.theta

    @classmethod
    def rest(cls, config: FieldConfig, theta: float = 0.0) -> "WaveFrame":
        return cls((np.sqrt(dispersion(config)), 0.0, 0.0, 0.0), theta)

    @classmethod
    def moving(cls, config: FieldConfig, velocity, theta: float = 0.0) -> "WaveFrame":
        """Boost of the rest-frame momentum to three-velocity ``velocity`` (|v| < 1)."""
        vel = np.asarray(velocity, dtype=float)
        beta2 = float(vel @ vel)
        if beta2 >= 1.0:
            raise ValueError("speed must be below 1")
        gamma = 1.0 / np.sqrt(1.0 - beta2)
        mass = np.sqrt(dispersion(config))
        return cls((gamma * mass, *(gamma * mass * vel)), theta)


def check_on_shell(config: FieldConfig, frame: WaveFrame, rtol: float = ON_SHELL_RTOL):
    target = dispersion(config)
    p0 = frame.p[0]
    scale = max(abs(target), p0 * p0, np.finfo(float).tiny)
    if abs(frame.p_squared - target) > rtol * scale:
        raise OffShellError(
            f"p^2 = {frame.p_squared!r} but the {config.kind.value} family requires {target!r}")


def profile(config: FieldConfig, u, branch: int = 1):
    """Field value as a function of the phase ``u``."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    m = modulus(config).m
    sn, _, dn = jacobi(u, m)
    shape = dn if config.kind is Family.SSB else sn
    return branch * amplitude(config) * shape


def profile_derivative(config: FieldConfig, u, branch: int = 1):
    """``d phi / du``; proportional to the zero mode of the linearised operator."""
    m = modulus(config).m
    dsn, _, ddn = jacobi_derivatives(u, m)
    shape = ddn if config.kind is Family.SSB else dsn
    return branch * amplitude(config) * shape


def evaluate(config: FieldConfig, frame: WaveFrame, x, branch: int = 1, strict: bool = True):
    """``phi_0(x)`` on an on-shell frame.  ``strict=False`` skips the shell check."""
    if strict:
        check_on_shell(config, frame)
    return profile(config, frame.phase(x), branch)


def potential(config: FieldConfig, phi):
    """``V(phi) = s mu0^2 phi^2 / 2 + lam phi^4 / 4`` with ``s = +1, 0, -1`` by family."""
    phi = np.asarray(phi, dtype=float)
    return 0.5 * config.mass_sign * config.mu0**2 * phi**2 + 0.25 * config.lam * phi**4


def potential_force(config: FieldConfig, phi):
    """``V'(phi)``."""
    phi = np.asarray(phi, dtype=float)
    return config.mass_sign * config.mu0**2 * phi + config.lam * phi**3


def vacuum_values(config: FieldConfig) -> tuple[float, float]:
    """Uniform minima ``+-sqrt(3/2) v`` of the SSB potential."""
    if config.kind is not Family.SSB:
        return (0.0, 0.0)
    a = np.sqrt(1.5) * config.v
    return (a, -a)


def eom_scale(config: FieldConfig) -> float:
    """Size of the individual terms of the field equation, for relative residuals."""
    A = abs(amplitude(config))
    return dispersion(config) * A + config.mu0**2 * A + config.lam * A**3


def eom_residual(config: FieldConfig, frame: WaveFrame, x, h: float = 1e-3,
                 branch: int = 1, strict: bool = True):
    """``d_t^2 phi - lap phi + V'(phi)`` at ``x`` from fourth-order central differences.

    Each axis is differenced separately with the five-point stencil.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    if strict:
        check_on_shell(config, frame)
    x = np.asarray(x, dtype=float)
    lap = 0.0
    for axis, sign in enumerate((1.0, -1.0, -1.0, -1.0)):
        e = np.zeros(4)
        e[axis] = 1.0

        def along(s, e=e):
            return evaluate(config, frame, x + s * e, branch, strict=False)

        lap = lap + sign * second_diff_5pt(along, 0.0, h)
    return lap + potential_force(config, evaluate(config, frame, x, branch, strict=False))


def hamiltonian_density(config: FieldConfig, frame: WaveFrame, x, branch: int = 1):
    """``(d_t phi)^2/2 + (grad phi)^2/2 + V(phi)`` with exact elliptic derivatives."""
    check_on_shell(config, frame)
    u = frame.phase(x)
    phi = profile(config, u, branch)
    dphi = profile_derivative(config, u, branch)
    p0, *pv = frame.p
    kinetic = 0.5 * (p0 * p0 + sum(c * c for c in pv)) * dphi * dphi
    return kinetic + potential(config, phi)
