"""Empirical study of the r -> 1 limit.

The estimator is exact only in the limit r -> 1 with untruncated
products. This sweep walks r down the schedule 1 + 2^-t while coupling
the truncation so r^n_max ~ 32 stays fixed, and writes the error table
as CSV (the same table `geomprod sweep` emits).
"""

from geomprod import DEFAULT_SCHEDULE, IndexSet, r_sweep, rows_to_csv
from geomprod.oracle import COS, monomial_exp

print("# cos at x = 1 (base {2,4}): error settles at the base-truncation floor")
rows = r_sweep(COS, 1.0, DEFAULT_SCHEDULE, "fixed_cutoff", 32,
               IndexSet.of(2, 4), parity="even")
for row in rows:
    print(f"r={row.r:<12.8g} n_max={row.n_max:<4d} abs_error={row.abs_error:.3e} "
          f"factors={row.factor_count}")

print()
print("# gaussian exp(-x^2/2) with matching base {2}: error follows the")
print("# closed form |exp(c x^2 (1 - r^(-2 n_max))) - exp(c x^2)| exactly")
rows = r_sweep(monomial_exp(-0.5, 2), 1.4, DEFAULT_SCHEDULE, "fixed_cutoff", 32,
               IndexSet.of(2))
print(rows_to_csv(rows))
