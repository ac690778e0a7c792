#!/usr/bin/env python3
"""Sample random implementations and reproduce the moment claims.

Only the branch imbalances y_j of the spectral weights are free; drawing
them i.i.d. from an even density with second moment m2 makes the window
mass concentrate at alpha*m2 with deviations shrinking like p**-0.5.
"""

import numpy as np

import halfcycle as hc

rng = np.random.default_rng(7)

print("=" * 64)
print("  Density library")
print("=" * 64)
for name in sorted(hc.DENSITIES):
    d = hc.get_density(name)
    print(f"  {name:14s} m2 = {d.m2:.6f}  m4 = {d.m4:.6f}")

print()
print("=" * 64)
print("  Moment experiment (10000 samples per period)")
print("=" * 64)
report = hc.moment_experiment([64, 256, 1024], hc.get_density("uniform"), 10000, rng)
print(f"\n{'p':>6} {'mean nu':>10} {'target':>10} {'stderr':>9} {'var*p':>9} {'cheb':>8}")
for row in report.rows:
    print(f"{row.p:>6} {row.mean:>10.6f} {row.target_mean:>10.6f} "
          f"{row.stderr:>9.2e} {row.var_times_p:>9.5f} {row.cheb_fraction:>8.5f}")
print(f"\nvar*p stays within a factor {report.var_p_spread():.2f} across periods:")
print("the deviation scale is p**-0.5, so random implementations are")
print("overwhelmingly likely to put O(1) mass on the result window.")

print()
print("=" * 64)
print("  The alternating allocation is the minimal construction")
print("=" * 64)
p = 64
window = hc.centered_window(p, hc.alpha_for_period(p))
y_min = hc.YSample(p=p, y=np.array([(-1) ** k / p for k in range(p)]))
lhs = hc.nu_from_y(y_min, window)
rhs = hc.nu_of(hc.halfstep_profile_periodic(p), window)
print(f"\n  nu from y_k = (-1)^k/p: {lhs:.15f}")
print(f"  nu from minimal profile: {rhs:.15f}")
print(f"  difference: {abs(lhs - rhs):.2e}")

print()
print("=" * 64)
print("  Continuous (aperiodic) case: both evaluations")
print("=" * 64)
res1 = hc.continuous_nu(256, hc.get_density("uniform"), rng, sample=np.ones(256))
print(f"\n  deterministic y = 1: direct = {res1.direct:.6f}, closed form = {res1.closed:.6f}")
print("  (the closed form double-counts the deterministic case; the direct")
print("   sum, which matches the minimal aperiodic capture, is authoritative)")
vals = [hc.continuous_nu(256, hc.get_density("uniform"), rng).direct for _ in range(200)]
print(f"  uniform density: mean direct nu over 200 samples = {np.mean(vals):.4f} "
      f"(reported against m2 = {1 / 3:.4f})")
