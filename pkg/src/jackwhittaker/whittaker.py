"""Gaiotto and Whittaker vectors expanded in Jack functions P_lam^{(1/beta)}.

The Gaiotto state G = sum_n G_n satisfies L_1 G_{n+1} = G_n and L_k G = 0 for
k >= 2.  The non-degenerate Whittaker vector W additionally has
L_2 W_{n+2} = theta W_n.  Both are normalized by coefficient 1 on the empty
partition.  Parameters are (beta, u) with u = sqrt(2 beta) alpha; theta
stands for the rescaled L_2 eigenvalue.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import Partition, arm_leg, partitions_of, shrink_by
from .errors import DegenerateParameter, ResonantParameter
from .exactmath import Scalar
from .jack import jack_table, pieri_p1_closed, pieri_p2
from .symfunc import POWER_SUM, SymFunc, jack_basis
from .virops import eigenvalue, virasoro_mode

GAIOTTO = "gaiotto"
NONDEGENERATE = "nondegenerate"


@dataclass
class WhittakerExpansion:
    kind: str
    beta: Scalar
    u: Scalar
    cap: int
    coeffs: dict
    theta: Scalar = Fraction(0)

    def __getitem__(self, lam) -> Scalar:
        return self.coeffs[Partition(lam)]

    def degree(self, n: int) -> dict:
        return {lam: self.coeffs[lam] for lam in partitions_of(n)}


def recursion_prefactor(lam, beta: Scalar, u: Scalar) -> Scalar:
    """eps_lam(beta) + |lam| (1 + u - beta)."""
    lam = Partition(lam)
    return eigenvalue(lam, beta) + lam.size() * (1 + u - beta)


def _second_factor(i, j, beta, u, dual):
    if dual:
        return 1, (j + 1) * beta + u - (i + 1)
    return beta, (j + 1) + u - (i + 1) * beta


def gaiotto_coeff_variant(lam, beta: Scalar, u: Scalar, *, skip_origin: bool = False,
                          dual: bool = False) -> Scalar:
    """Box-product formula for c_lam with switchable details.

    ``skip_origin`` drops the box (1,1) from the u-dependent product and
    ``dual`` swaps the roles of 1 and beta in it.  Only the default
    (all boxes, not dual) satisfies the recursion; the other variants exist
    to document that.
    """
    lam = Partition(lam)
    out = Fraction(1)
    for i, j in lam.boxes():
        a, l = arm_leg(lam, i, j)
        hook = a + 1 + beta * l
        if hook == 0:
            raise DegenerateParameter(f"hook factor of box {(i, j)} in {list(lam)} vanishes")
        out /= hook
        if skip_origin and (i, j) == (1, 1):
            continue
        num, den = _second_factor(i, j, beta, u, dual)
        if den == 0:
            raise DegenerateParameter(f"content factor of box {(i, j)} in {list(lam)} vanishes")
        out *= num / den
    return out


def gaiotto_coeff_closed(lam, beta: Scalar, u: Scalar) -> Scalar:
    """c_lam = prod_boxes 1/(a + 1 + beta l) * prod_boxes beta/((j+1) + u - (i+1) beta)."""
    return gaiotto_coeff_variant(lam, beta, u)


def _solve(lam, pref, rhs):
    if pref == 0:
        raise ResonantParameter(f"recursion prefactor vanishes at {list(lam)}", Partition(lam))
    return rhs / pref


def gaiotto_coeffs_recursive(cap: int, beta: Scalar, u: Scalar) -> WhittakerExpansion:
    coeffs = {Partition(): Fraction(1)}
    for d in range(1, cap + 1):
        for lam in partitions_of(d):
            rhs = sum((pieri_p1_closed(lam, mu, beta) * coeffs[mu] for mu in shrink_by(lam, 1)),
                      Fraction(0))
            coeffs[lam] = _solve(lam, recursion_prefactor(lam, beta, u), beta * rhs)
    return WhittakerExpansion(GAIOTTO, beta, u, cap, coeffs)


def whittaker_coeffs_recursive(cap: int, beta: Scalar, u: Scalar, theta: Scalar) -> WhittakerExpansion:
    """Coefficients d_lam with the extra two-box Pieri term weighted by theta."""
    b = 1 / beta
    coeffs = {Partition(): Fraction(1)}
    for d in range(1, cap + 1):
        for lam in partitions_of(d):
            rhs = sum((pieri_p1_closed(lam, mu, beta) * coeffs[mu] for mu in shrink_by(lam, 1)),
                      Fraction(0))
            if theta != 0 and d >= 2:
                two = sum((pieri_p2(nu, b)[lam] * coeffs[nu] for nu in shrink_by(lam, 2)), Fraction(0))
                rhs = rhs + theta * two
            coeffs[lam] = _solve(lam, recursion_prefactor(lam, beta, u), beta * rhs)
    return WhittakerExpansion(NONDEGENERATE, beta, u, cap, coeffs, theta)


def assemble_state(e: WhittakerExpansion, basis: str = "jack") -> list[SymFunc]:
    """Degree components [G_0, ..., G_cap] in the Jack(1/beta) or power-sum basis."""
    b = 1 / e.beta
    out = []
    for n in range(e.cap + 1):
        comp = e.degree(n)
        if basis == "jack":
            out.append(SymFunc(comp, jack_basis(b), e.cap))
        elif basis == "power_sum":
            t = jack_table(n, b)
            acc: dict = {}
            for lam, c in comp.items():
                for rho, v in t.in_power_sum[lam].items():
                    acc[rho] = acc.get(rho, 0) + c * v
            out.append(SymFunc(acc, POWER_SUM, e.cap))
        else:
            raise ValueError(f"unknown basis {basis!r}")
    return out


@dataclass
class PropertyReport:
    checks: list = field(default_factory=list)  # (label, passed)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    @property
    def failures(self) -> list:
        return [label for label, passed in self.checks if not passed]


def whittaker_property_check(e: WhittakerExpansion, cap: int | None = None) -> PropertyReport:
    """Check the defining relations by applying the bosonized L_k to the assembled state."""
    D = e.cap if cap is None else min(cap, e.cap)
    states = assemble_state(e, "power_sum")
    ops = {k: virasoro_mode(k, e.beta, e.u, D) for k in range(1, D + 1)}
    report = PropertyReport()
    name = "G" if e.kind == GAIOTTO else "W"
    for n in range(D):
        report.checks.append((f"L1 {name}_{n + 1} = {name}_{n}", ops[1](states[n + 1]) == states[n]))
    if e.kind == GAIOTTO:
        for n in range(2, D + 1):
            for k in range(2, n + 1):
                report.checks.append((f"L{k} {name}_{n} = 0", not ops[k](states[n])))
    else:
        for n in range(D - 1):
            report.checks.append((f"L2 {name}_{n + 2} = theta {name}_{n}",
                                  ops[2](states[n + 2]) == states[n].scale(e.theta)))
        for n in range(3, D + 1):
            for k in range(3, n + 1):
                report.checks.append((f"L{k} {name}_{n} = 0", not ops[k](states[n])))
    return report
