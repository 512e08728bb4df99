"""Trigonometric (nome) expansions of the solutions and the frequencies they contain.

With the signed nome ``q`` (negative for ``m < 0``)::

    sn(u|m) = sum_n b_n sin((2n+1) pi u / (2K))
    dn(u|m) = pi/(2K) + sum_{n>=1} c_n cos(n pi u / K)

    b_n = 2 pi / (sqrt(|m|) K) * |q|^(n+1/2) / (1 + |q|^(2n+1)) * (-1)^n    (m < 0)
    b_n = 2 pi / (sqrt(m) K)   *  q^(n+1/2)  / (1 - q^(2n+1))              (0 < m < 1)
    c_n = 2 pi / K * q^n / (1 + q^(2n))

For ``m = -1`` the dn series has constant term ``+pi/(2K)`` and alternating
signs.  Folding the ``n = 0`` term of the alternating sum into the constant
gives the equivalent ``-pi/(2K) + sum_{n>=0}``; starting that sum at ``n = 1``
instead is wrong (``dn(0) = -1.396``).  Dropping the alternation gives
``dn(u + K)``, which starts at ``sqrt(2)``.  :func:`dn_series_variant` keeps
these forms for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._io import dumps_csv
from .elliptic_core import complete_K, nome
from .solutions import Family, FieldConfig, amplitude, modulus

__all__ = [
    "SeriesSpec",
    "sn_coefficients",
    "dn_coefficients",
    "sn_series",
    "dn_series",
    "dn_series_variant",
    "field_series",
    "series_spec",
    "epsilon_spectrum",
    "coefficient_table_csv",
]


def sn_coefficients(m: float, N: int) -> np.ndarray:
    if N < 1:
        raise ValueError("N must be at least 1")
    if m == 0:
        b = np.zeros(N)
        b[0] = 1.0
        return b
    K, q = complete_K(m), nome(m)
    n = np.arange(N, dtype=float)
    if m < 0:
        Q = -q
        return (2 * np.pi / (np.sqrt(-m) * K)) * (-1.0) ** n * Q ** (n + 0.5) / (1 + Q ** (2 * n + 1))
    return (2 * np.pi / (np.sqrt(m) * K)) * q ** (n + 0.5) / (1 - q ** (2 * n + 1))


def dn_coefficients(N: int, m: float = -1.0) -> tuple[float, np.ndarray]:
    """Constant term and cosine coefficients ``c_1 .. c_N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    K, q = complete_K(m), nome(m)
    n = np.arange(1, N + 1, dtype=float)
    return np.pi / (2 * K), (2 * np.pi / K) * q**n / (1 + q ** (2 * n))


def sn_series(u, m: float, N: int):
    """Truncated sine series of ``sn(u|m)``, ``N`` terms."""
    b = sn_coefficients(m, N)
    K = complete_K(m)
    u = np.asarray(u, dtype=float)
    freq = (2 * np.arange(N) + 1) * np.pi / (2 * K)
    out = np.sin(np.multiply.outer(u, freq)) @ b
    return float(out) if out.ndim == 0 else out


def dn_series(u, N: int, m: float = -1.0):
    """Truncated cosine series of ``dn(u|m)`` with ``N`` harmonics after the constant."""
    c0, c = dn_coefficients(N, m)
    K = complete_K(m)
    u = np.asarray(u, dtype=float)
    freq = np.arange(1, N + 1) * np.pi / K
    out = c0 + np.cos(np.multiply.outer(u, freq)) @ c
    return float(out) if out.ndim == 0 else out


def dn_series_variant(u, N: int, constant_sign: int, alternating: bool, start: int = 1):
    """dn(u|-1)-like cosine series with a chosen constant sign, alternation and first index.

    ``(+1, True, 1)`` and ``(-1, True, 0)`` are both ``dn(u)``; ``(-1, True, 1)``
    does not represent dn; ``(+1, False, 1)`` is ``dn(u + K)``.
    """
    if start not in (0, 1):
        raise ValueError("start must be 0 or 1")
    K = complete_K(-1.0)
    Q = np.exp(-np.pi)
    n = np.arange(start, start + N, dtype=float)
    c = (2 * np.pi / K) * Q**n / (1 + Q ** (2 * n))
    if alternating:
        c = c * (-1.0) ** n
    u = np.asarray(u, dtype=float)
    out = constant_sign * np.pi / (2 * K) + np.cos(np.multiply.outer(u, n * np.pi / K)) @ c
    return float(out) if out.ndim == 0 else out


def field_series(config: FieldConfig, u, N: int, branch: int = 1):
    """Plane-wave superposition for ``phi0(u)``, including the amplitude (``v`` for SSB)."""
    if config.kind is Family.SSB:
        shape = dn_series(u, N)
    else:
        shape = sn_series(u, modulus(config).m, N)
    return branch * amplitude(config) * shape


@dataclass(frozen=True)
class SeriesSpec:
    family: Family
    m_param: float
    q: float
    N: int
    coefficients: np.ndarray
    constant: float = 0.0


def series_spec(config: FieldConfig, N: int) -> SeriesSpec:
    m = modulus(config).m
    if config.kind is Family.SSB:
        c0, c = dn_coefficients(N, m)
        return SeriesSpec(config.kind, m, nome(m), N, c, c0)
    return SeriesSpec(config.kind, m, nome(m), N, sn_coefficients(m, N))


def epsilon_spectrum(config: FieldConfig, N: int) -> np.ndarray:
    """Frequencies present in the rest-frame expansion of ``phi0``.

    ``(2n+1) pi/(2K) m`` for the sn families with
    ``m = sqrt(mu0^2 + mu^2 sqrt(lam/2))``; ``n pi/K mu0/sqrt(3)`` for SSB, ``n = 0..N-1``.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    K = complete_K(modulus(config).m)
    idx = np.arange(N, dtype=float)
    if config.kind is Family.SSB:
        return idx * (np.pi / K) * (config.mu0 / np.sqrt(3.0))
    renormalized = float(np.sqrt(config.mu0**2 + config.mu**2 * np.sqrt(config.lam / 2.0)))
    return (2 * idx + 1) * (np.pi / (2 * K)) * renormalized


def coefficient_table_csv(config: FieldConfig, N: int) -> str:
    """CSV columns ``n, coefficient, epsilon`` (SSB row 0 is the constant term)."""
    spec = series_spec(config, N)
    eps = epsilon_spectrum(config, N)
    if config.kind is Family.SSB:
        coeffs = np.concatenate([[spec.constant], spec.coefficients[: N - 1]])
    else:
        coeffs = spec.coefficients
    return dumps_csv(["n", "coefficient", "epsilon"], [(i, c, e) for i, (c, e) in enumerate(zip(coeffs, eps))])
