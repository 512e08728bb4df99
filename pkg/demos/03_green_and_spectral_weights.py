"""
Green function and Kallen-Lehmann weights
=========================================

The rest-frame Green function is a pole sum. Its weights add to one,
which is the same statement as the unit slope at the source.
"""

import numpy as np

from elliptica import Family, FieldConfig, kl_weights, rest_frame_green
from elliptica.checks import green_oracle_error

cfg = FieldConfig(Family.MASSLESS, mu=1.0, lam=2.0)
ps = kl_weights(cfg, 10)

print(" r     mass         weight       ratio")
for r, (m, w, q) in enumerate(zip(ps.masses, ps.residues, ps.ratios())):
    print(f"{r:2d}  {m:10.6f}  {w:.6e}  {q:.3e}")
print("sum of weights:", ps.total_weight)

# the pole sum rebuilt in time against the closed form
t = np.linspace(0.01, 10, 500)
print("pole sum vs closed form:", np.abs(ps.time_domain(t) - rest_frame_green(cfg, t)).max())

# and the closed form against a direct integration of the source problem
print("closed form vs ODE:     ", green_oracle_error(cfg))

# SSB: a massless pole with zero weight sits at the bottom of the ladder
ssb = kl_weights(FieldConfig(Family.SSB, mu0=np.sqrt(3.0), lam=2.0), 6)
print("ssb masses:", np.round(ssb.masses, 5), "zero mode:", ssb.has_zero_mode)
