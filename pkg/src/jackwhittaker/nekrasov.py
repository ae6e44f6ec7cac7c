"""Instanton partition function of pure SU(r) gauge theory, degree by degree."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import Partition, arm_leg, partition_tuples
from .errors import PoleAtPoint, VanishingDenominator
from .exactmath import RatFunc, Scalar, as_scalar, eval_at


@dataclass(frozen=True)
class GaugeParams:
    eps1: Scalar
    eps2: Scalar
    avec: tuple

    def __post_init__(self):
        object.__setattr__(self, "eps1", as_scalar(self.eps1))
        object.__setattr__(self, "eps2", as_scalar(self.eps2))
        object.__setattr__(self, "avec", tuple(as_scalar(a) for a in self.avec))
        if self.eps1 == 0 or self.eps2 == 0:
            raise ValueError("eps1 and eps2 must be nonzero")
        if len(self.avec) < 2:
            raise ValueError("need at least two Coulomb parameters")

    @property
    def rank(self) -> int:
        return len(self.avec)


def nek_factor(Y, s: int, t: int, gp: GaugeParams) -> Fraction:
    """n_{s,t}^Y, with 1-based indices s, t."""
    Ys, Yt = Partition(Y[s - 1]), Partition(Y[t - 1])
    shift = gp.avec[t - 1] - gp.avec[s - 1]
    e1, e2 = gp.eps1, gp.eps2
    out = Fraction(1)
    for i, j in Ys.boxes():
        leg_t = arm_leg(Yt, i, j)[1]
        arm_s = arm_leg(Ys, i, j)[0]
        out *= -leg_t * e1 + (arm_s + 1) * e2 + shift
    for i, j in Yt.boxes():
        leg_s = arm_leg(Ys, i, j)[1]
        arm_t = arm_leg(Yt, i, j)[0]
        out *= (leg_s + 1) * e1 - arm_t * e2 + shift
    return out


def tuple_weight(Y, gp: GaugeParams) -> Fraction:
    """1 / prod_{s,t} n_{s,t}^Y."""
    r = gp.rank
    den = Fraction(1)
    for s in range(1, r + 1):
        for t in range(1, r + 1):
            den *= nek_factor(Y, s, t, gp)
    if den == 0:
        raise VanishingDenominator(f"vanishing denominator for {[list(y) for y in Y]}", Y)
    return 1 / den


def z_degree_strict(d: int, gp: GaugeParams) -> Scalar:
    """Coefficient of x^d in Z, summed term by term."""
    return sum((tuple_weight(Y, gp) for Y in partition_tuples(d, gp.rank)), Fraction(0))


def deform(gp: GaugeParams, var: str = "t") -> GaugeParams:
    """Shift a_k by k t so every Coulomb difference depends on t."""
    t = RatFunc.gen(var)
    return GaugeParams(gp.eps1, gp.eps2, tuple(a + k * t for k, a in enumerate(gp.avec, 1)))


def z_degree(d: int, gp: GaugeParams) -> Fraction:
    """Coefficient of x^d in Z.

    Single summands can have vanishing denominators that cancel in the sum.
    In that case the sum is recomputed along a deformation of the Coulomb
    parameters and the limit is taken; a pole that survives raises
    :class:`VanishingDenominator`.
    """
    try:
        return z_degree_strict(d, gp)
    except VanishingDenominator as exc:
        first = exc
    try:
        return eval_at(z_degree_strict(d, deform(gp)), 0)
    except PoleAtPoint:
        raise VanishingDenominator(f"Z has a pole at degree {d}: {first}", first.tuple) from None
