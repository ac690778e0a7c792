#!/usr/bin/env python3
"""The transient state at one half machine cycle.

The minimal period-p construction concentrates the half-cycle state on
the middle of the cycle: the amplitude against computational state j is
exp(i*pi*(j-1/2)/p) / (p*cos(pi*(j-1/2)/p)), peaking near |a| = 2/pi at
j = p/2 and capturing total probability 1.  Non-halting inputs get the
aperiodic profile a_k = -1/(pi*i*(k-1/2)) with the same 2/pi peak.
"""

import math

import numpy as np

import halfcycle as hc

print("=" * 64)
print("  Half-cycle amplitude profiles")
print("=" * 64)

p = 32
profile = hc.halfstep_profile_periodic(p)
print(f"\nminimal periodic profile, p = {p} (captured = {profile.captured:.12f}):")
for j in range(p):
    prob = profile.probabilities[j]
    bar = "*" * int(120 * prob)
    marker = " <- j = p/2" if j == p // 2 else ""
    print(f"  j={j:3d}  |a|^2 = {prob:8.5f}  {bar}{marker}")

peak = abs(profile.amplitudes[p // 2])
print(f"\npeak |a_{{p/2}}| = {peak:.9f}")
print(f"closed form 1/(p sin(pi/2p)) = {1 / (p * math.sin(math.pi / (2 * p))):.9f}")
print(f"limit 2/pi = {2 / math.pi:.9f}")

print("\nwindow mass for the centered window at several waiting ratios:")
for alpha_num in (2, 3, 7, 15):
    alpha = alpha_num / (alpha_num + 1)
    window = hc.centered_window(p, alpha)
    print(f"  alpha = {alpha:.4f}: nu = {hc.nu_of(profile, window):.6f} "
          f"(window [{window.start}, {window.stop}))")

print("\naperiodic truncations (two-sided index range (-K, K]):")
for K in (10, 100, 1000, 10000):
    ap = hc.halfstep_profile_aperiodic(K)
    tail = 1 - ap.captured
    print(f"  K = {K:5d}: captured = {ap.captured:.6f}, tail = {tail:.2e}, "
          f"2/(pi^2 K) = {2 / (math.pi ** 2 * K):.2e}")

print("\northogonality at whole machine cycles (p = 8):")
spec = hc.minimal_periodic_spectrum(8)
vals = hc.overlap_at(spec, np.arange(9))
print("  |overlap(k)| for k = 0..8:", np.round(np.abs(vals), 12))
