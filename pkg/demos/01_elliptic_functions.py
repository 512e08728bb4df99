"""
Jacobi functions at imaginary modulus
=====================================

sn, cn and dn for a negative parameter, checked against their identities.
"""

import numpy as np

from elliptica import EllipticParameter, jacobi

# m = -1 is sn(u, i) in modulus notation
par = EllipticParameter(-1.0)
print("K(-1)  =", par.K)
print("nome   =", par.q, "(negative: the sign carries the imaginary modulus)")

u = np.linspace(0, par.period, 9)
sn, cn, dn = jacobi(u, par.m)
for row in zip(u, sn, cn, dn):
    print("u=%7.4f  sn=% .6f  cn=% .6f  dn=% .6f" % row)

# both identities hold to rounding everywhere on the line
u = np.random.default_rng(0).uniform(-100, 100, 100_000)
sn, cn, dn = jacobi(u, -1.0)
print("max |sn^2+cn^2-1|    =", np.abs(sn**2 + cn**2 - 1).max())
print("max |dn^2-sn^2-1|    =", np.abs(dn**2 - sn**2 - 1).max())
