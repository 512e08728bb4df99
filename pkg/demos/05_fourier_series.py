"""
Nome expansions
===============

The waves as superpositions of plane waves with an odd or integer ladder.
"""

import numpy as np

from elliptica import Family, FieldConfig, complete_K, jacobi
from elliptica.fourier import dn_series, dn_series_variant, epsilon_spectrum, sn_series

K = complete_K(-1.0)
u = np.linspace(0, 4 * K, 1001)
for N in (1, 2, 4, 8, 16):
    err = np.abs(sn_series(u, -1.0, N) - jacobi(u, -1.0).sn).max()
    print(f"sn, {N:2d} terms: max error {err:.1e}")

print("dn(0) from the series:", dn_series(0.0, 16))
# -pi/2K is fine if the alternating sum starts at n = 0, and wrong if it starts at 1
print("-pi/2K, sum from 0:", dn_series_variant(0.0, 16, -1, True, start=0))
print("-pi/2K, sum from 1:", dn_series_variant(0.0, 16, -1, True, start=1))
# without alternation the series is the same wave shifted by K
print("no alternation:    ", dn_series_variant(0.0, 16, +1, False), "= dn(K) =", jacobi(K, -1.0).dn)

print("massless frequencies:", epsilon_spectrum(FieldConfig(Family.MASSLESS, mu=1.0, lam=2.0), 4))
print("ssb frequencies:     ", epsilon_spectrum(FieldConfig(Family.SSB, mu0=np.sqrt(3.0), lam=2.0), 4))
