"""Degree-wise comparison of <G|G> with the instanton sum at eps = (3, -2), a = (1, -1).

At this point beta = 3/2 and c = 0.  Degrees 2 and 3 hit removable zeros in
individual instanton terms, and degree 4 is a genuine pole on both sides, so
that row is compared as a rational function of a Coulomb deformation t.

Run with: python demos/agt_fixture.py
"""
from jackwhittaker.agt import LITERAL, agt_check, agt_lhs_degree, params_from_gauge
from jackwhittaker.nekrasov import GaugeParams

ctx = params_from_gauge(GaugeParams(3, -2, (1, -1)))
print(f"beta = {ctx.beta}, u = {ctx.u}, u' = {ctx.u_conj}, h = {ctx.h}, c = {ctx.c}")
for key, row in agt_check(4, ctx, alt=True).to_json().items():
    print(f"  {key}: {row}")
print(f"pairing both sides at u instead of u' gives {agt_lhs_degree(1, ctx, LITERAL)} at d=1")
