"""Build a Gaiotto state two ways and check that it is a Whittaker vector.

Run with: python demos/gaiotto_state.py
"""
from fractions import Fraction

from jackwhittaker.combinatorics import partitions_of
from jackwhittaker.exactmath import scalar_to_str
from jackwhittaker.whittaker import (gaiotto_coeff_closed, gaiotto_coeffs_recursive,
                                     whittaker_property_check)

beta, u, cap = Fraction(2, 3), Fraction(1, 5), 5

rec = gaiotto_coeffs_recursive(cap, beta, u)
print(f"beta = {beta}, u = {u}")
for d in range(cap + 1):
    for lam in partitions_of(d):
        closed = gaiotto_coeff_closed(lam, beta, u)
        mark = "ok" if closed == rec[lam] else "MISMATCH"
        print(f"  c{list(lam)!s:<16} = {scalar_to_str(rec[lam]):>28}  {mark}")

report = whittaker_property_check(rec)
print(f"{len(report.checks)} Virasoro relations checked, all hold: {report.ok}")
