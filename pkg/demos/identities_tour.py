"""Corner sums F1 and F2 for a few shapes, symbolically in beta.

Run with: python demos/identities_tour.py
"""
from jackwhittaker.exactmath import beta_symbol, scalar_to_str
from jackwhittaker.identities import SYMBOLIC, f1_eval, f2_eval, f2_expected, verify_identities

beta = beta_symbol()
for lam in [(1,), (2, 1), (3, 3, 1), (4, 4, 2, 1, 1)]:
    print(f"{list(lam)}: F1 = {scalar_to_str(f1_eval(lam, beta))}, "
          f"F2 = {scalar_to_str(f2_eval(lam, beta))} "
          f"(expected {scalar_to_str(f2_expected(lam, beta))})")

report = verify_identities(8, SYMBOLIC)
print(f"all {len(report.rows)} partitions up to size 8 pass: {report.ok}")
