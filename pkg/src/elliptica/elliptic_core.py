"""Jacobi elliptic functions and complete elliptic integrals on the real line.

All routines take the *parameter* ``m = k**2`` (not the modulus) and accept any
real ``m < 1``.  Negative parameters (imaginary modulus, e.g. ``sn(u, i)`` which
is ``sn(u | m=-1)``) are mapped onto ``0 <= mu < 1`` with the negative-parameter
transformation::

    mu = m / (m - 1),    v = u * sqrt(1 - m)
    sn(u|m) = sd(v|mu) / sqrt(1 - m)
    cn(u|m) = cd(v|mu)
    dn(u|m) = nd(v|mu)

so that every evaluation stays in real arithmetic.  The non-negative branch
uses the descending Landen (arithmetic-geometric mean) scheme.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

__all__ = [
    "EllipticDomainError",
    "EllipticParameter",
    "JacobiTriple",
    "agm",
    "complete_K",
    "coperiod",
    "nome",
    "jacobi",
    "jacobi_derivatives",
]

_EPS = np.finfo(float).eps
_MAX_AGM_STEPS = 64


class EllipticDomainError(ValueError):
    """Raised for a parameter outside ``m < 1``."""


class JacobiTriple(NamedTuple):
    sn: np.ndarray | float
    cn: np.ndarray | float
    dn: np.ndarray | float


def _check_param(m):
    m = np.asarray(m, dtype=float)
    if np.any(~np.isfinite(m)):
        raise EllipticDomainError("elliptic parameter must be finite")
    if np.any(m >= 1.0):
        raise EllipticDomainError(f"elliptic parameter must satisfy m < 1, got {m}")
    return m


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def agm(a, b):
    """Arithmetic-geometric mean, iterated to its floating-point fixed point."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for _ in range(_MAX_AGM_STEPS):
        if np.all(np.abs(a - b) <= 2 * _EPS * np.abs(a)):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return 0.5 * (a + b)


def _K_nonneg(m):
    return 0.5 * np.pi / agm(1.0, np.sqrt(1.0 - m))


def _K_complement(m):
    """``K(1 - m)`` for ``0 < m < 1`` without forming ``1 - m``."""
    return 0.5 * np.pi / agm(1.0, np.sqrt(m))


def complete_K(m):
    """Complete elliptic integral of the first kind ``K(m)`` for ``m < 1``.

    For ``m < 0`` uses ``K(m) = K(m / (m - 1)) / sqrt(1 - m)``.

    >>> round(complete_K(-1.0), 7)
    1.3110288
    """
    m = _check_param(m)
    neg = m < 0
    mu = np.where(neg, m / (m - 1.0), m)
    K = _K_nonneg(mu)
    K = np.where(neg, K / np.sqrt(1.0 - np.where(neg, m, 0.0)), K)
    return _out(K)


def coperiod(m):
    """Real co-period ``K'`` such that ``|q| = exp(-pi K'/K)``.

    Equals ``K(1 - m)`` on ``0 < m < 1``.  For ``m < 0`` it is
    ``K(1 - mu) / sqrt(1 - m)`` with ``mu = m / (m - 1)``, which avoids ever
    evaluating ``K`` at a parameter above one.  Infinite at ``m = 0``.
    """
    m = _check_param(m)
    neg = m < 0
    mu = np.where(neg, m / (m - 1.0), m)
    Kp = np.where(mu > 0, _K_complement(np.where(mu > 0, mu, 0.5)), np.inf)
    Kp = np.where(neg, Kp / np.sqrt(1.0 - np.where(neg, m, 0.0)), Kp)
    return _out(Kp)


def nome(m):
    """Signed real nome.

    ``exp(-pi K'(m)/K(m))`` for ``0 < m < 1``, zero at ``m = 0`` and, for
    ``m < 0``, the negative number ``-nome(m / (m - 1))``.  The sign is what
    makes the trigonometric series of sn, cn and dn real for imaginary
    modulus.
    """
    m = _check_param(m)
    neg = m < 0
    mu = np.where(neg, m / (m - 1.0), m)
    K = _K_nonneg(mu)
    Kp = _K_complement(np.where(mu > 0, mu, 0.5))
    q = np.where(mu > 0, np.exp(-np.pi * Kp / K), 0.0)
    return _out(np.where(neg, -q, q))


def _jacobi_nonneg(u, m):
    """sn, cn, dn for 0 <= m < 1 by descending Landen / AGM."""
    K = _K_nonneg(m)
    # reduce to [-K, K]: sn, cn flip sign under a half-period shift, dn does not
    shifts = np.rint(u / (2.0 * K))
    r = u - shifts * 2.0 * K
    sign = np.where(np.mod(shifts, 2.0) == 0.0, 1.0, -1.0)

    a = np.ones_like(m)
    b = np.sqrt(1.0 - m)
    c = np.sqrt(m)
    a_s, c_s = [a], [c]
    for _ in range(_MAX_AGM_STEPS):
        if np.all(np.abs(c) <= _EPS * a):
            break
        a, b, c = 0.5 * (a + b), np.sqrt(a * b), 0.5 * (a - b)
        a_s.append(a)
        c_s.append(c)
    n = len(a_s) - 1
    phi = (2.0**n) * a_s[n] * r
    for j in range(n, 0, -1):
        ratio = np.clip(c_s[j] / a_s[j] * np.sin(phi), -1.0, 1.0)
        phi = 0.5 * (phi + np.arcsin(ratio))
    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = np.sqrt(1.0 - m * sn * sn)
    return sign * sn, sign * cn, dn


def jacobi(u, m) -> JacobiTriple:
    """Jacobi elliptic functions ``(sn, cn, dn)(u | m)`` for real ``u`` and ``m < 1``.

    Broadcasts over ``u`` and ``m``; scalars in give floats out.
    """
    m = _check_param(m)
    u = np.asarray(u, dtype=float)
    if np.any(~np.isfinite(u)):
        raise ValueError("argument u must be finite")
    u, m = np.broadcast_arrays(u, m)
    neg = m < 0
    scale = np.sqrt(1.0 - np.where(neg, m, 0.0))
    mu = np.where(neg, m / (m - 1.0), m)
    s, c, d = _jacobi_nonneg(u * scale, mu)
    sn = np.where(neg, s / (d * scale), s)
    cn = np.where(neg, c / d, c)
    dn = np.where(neg, 1.0 / d, d)
    return JacobiTriple(_out(sn), _out(cn), _out(dn))


def jacobi_derivatives(u, m) -> JacobiTriple:
    """u-derivatives ``(cn dn, -sn dn, -m sn cn)`` of the Jacobi triple."""
    sn, cn, dn = jacobi(u, m)
    m = np.asarray(m, dtype=float)
    return JacobiTriple(_out(cn * dn), _out(-sn * dn), _out(-m * sn * cn))


@dataclass(frozen=True)
class EllipticParameter:
    """Elliptic parameter ``m = k**2`` with its quarter-period, co-period and nome."""

    m: float

    def __post_init__(self):
        _check_param(self.m)

    @cached_property
    def K(self) -> float:
        return complete_K(self.m)

    @cached_property
    def Kprime(self) -> float:
        return coperiod(self.m)

    @cached_property
    def q(self) -> float:
        return nome(self.m)

    @property
    def period(self) -> float:
        """Real period ``4K`` of sn and cn."""
        return 4.0 * self.K

    @property
    def complementary(self) -> float:
        """``1 - m``, the squared complementary modulus."""
        return 1.0 - self.m
