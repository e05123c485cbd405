"""Extrapolate cos(x) from samples on geometric sequences.

The estimator only ever evaluates cos at points of the form
coeff * x / r^n, all smaller than x itself, yet reproduces cos(x).
Config: base {2,4} (cos is even), r = sqrt(2), n_max = 10, so the
products are truncated once r^n reaches 2^5.
"""

import math

from geomprod import GmpConfig, IndexSet, estimate
from geomprod.oracle import COS

cfg = GmpConfig(r=math.sqrt(2), n_max=10, base=IndexSet.of(2, 4), parity="even")

print(f"{'x':>5} {'estimate':>12} {'cos(x)':>12} {'abs err':>10}")
for i in range(0, 31, 2):
    x = 0.05 * i
    est = estimate(COS, x, cfg)
    print(f"{x:5.2f} {est.value:12.6f} {math.cos(x):12.6f} {abs(est.value - math.cos(x)):10.2e}")

print()
print("Each estimate above multiplies", estimate(COS, 1.0, cfg).factor_count,
      "weighted factors of earlier cosine values.")
print("Tracking degrades past pi/2 ~ 1.57: the construction assumes the")
print("function has no zero between 0 and x.")
