"""Exact elliptic-function solutions of quartic scalar field theories.

Submodules
----------
elliptic_core  Jacobi sn, cn, dn, K(m) and the signed nome for any real m < 1
solutions      the massive, massless and SSB travelling waves and their field equations
green          rest-frame Green functions, mass spectra, pole-sum propagators
modes          linearised operators and their zero / non-zero eigenpairs
fourier        nome expansions of the solutions and their frequencies
oracle         ODE, quadrature and finite-difference reference routines
checks         the consistency suite behind ``elliptica verify``
"""
from .elliptic_core import (EllipticDomainError, EllipticParameter, JacobiTriple, complete_K,
                            jacobi, jacobi_derivatives, nome)
from .green import (PoleSum, kl_weights, mass_spectrum, propagator, rest_frame_green, z_delta)
from .solutions import (ConfigError, Family, FieldConfig, OffShellError, WaveFrame, dispersion,
                        evaluate, modulus)

__version__ = "0.1.0"

__all__ = [
    "EllipticDomainError",
    "EllipticParameter",
    "JacobiTriple",
    "complete_K",
    "jacobi",
    "jacobi_derivatives",
    "nome",
    "PoleSum",
    "kl_weights",
    "mass_spectrum",
    "propagator",
    "rest_frame_green",
    "z_delta",
    "ConfigError",
    "Family",
    "FieldConfig",
    "OffShellError",
    "WaveFrame",
    "dispersion",
    "evaluate",
    "modulus",
]
