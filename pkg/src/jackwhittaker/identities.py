"""Corner-sum identities behind the closed form of the Gaiotto coefficients.

For a partition lam with removable corners (I, lam_I):

    F1(lam) = sum over corners of A_I(lam, beta) = |lam|
    F2(lam) = sum over corners of A_I(lam, beta) (lam_I - (I+1) beta)
            = sum_i (lam_i^2 - 2 i lam_i beta)

where A_I is the product of the row and column ratios below.  Both sums are
also available in the block form, which groups equal parts as
lam = (n_1^{j_1}, ..., n_l^{j_l}) with m_k = j_1 + ... + j_k.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .combinatorics import (Partition, block_encoding, conjugate, partitions_up_to,
                            removable_corners, shrink_by)
from .errors import PoleAtPoint
from .exactmath import RatFunc, Scalar, beta_symbol, random_rational, scalar_to_str
from .jack import pieri_p1_closed
from .whittaker import gaiotto_coeff_closed

SYMBOLIC = "symbolic"
SAMPLED = "sampled"


def _ratio(num, den):
    if den == 0:
        raise PoleAtPoint(f"denominator vanishes: {num}/{den}")
    return num / den


def corner_weight(lam, I: int, beta: Scalar) -> Scalar:
    """Summand of the corner sum for the corner in row I."""
    lam = Partition(lam)
    conj = conjugate(lam)
    lI = lam.part(I)
    out = Fraction(1)
    for i in range(1, I):
        gap = lam.part(i) - lI
        out *= _ratio(gap + beta * (I - i + 1), gap + beta * (I - i))
    for i in range(1, lI):
        shift = beta * (conj[i - 1] - I)
        out *= _ratio(lI - i + 1 + shift, lI - i + shift)
    return out


def _corner_rows(lam):
    return [i for i, _ in removable_corners(lam)]


def f1_eval(lam, beta: Scalar) -> Scalar:
    lam = Partition(lam)
    return sum((corner_weight(lam, I, beta) for I in _corner_rows(lam)), Fraction(0))


def f2_eval(lam, beta: Scalar) -> Scalar:
    lam = Partition(lam)
    return sum((corner_weight(lam, I, beta) * (lam.part(I) - (I + 1) * beta)
                for I in _corner_rows(lam)), Fraction(0))


def _block_term(ms, ns, k, beta):
    """F_{1,k} with 0-based k; m_0 = 0 and n_{l+1} = 0."""
    l = len(ms)
    m = [0] + list(ms)
    n = list(ns) + [0]
    # 1-based views: m[k] = m_k, n[k-1] = n_k
    K = k + 1
    out = Fraction((m[K] - m[K - 1]) * (n[K - 1] - n[K]))
    for i in range(1, K):
        gap = n[i - 1] - n[K - 1]
        out *= _ratio(gap + beta * (m[K] - m[i - 1]), gap + beta * (m[K] - m[i]))
    for j in range(K + 1, l + 1):
        out *= _ratio((n[K - 1] - n[j]) + beta * (m[j] - m[K]),
                      (n[K - 1] - n[j - 1]) + beta * (m[j] - m[K]))
    return out


def f1_block(ms, ns, beta: Scalar) -> Scalar:
    return sum((_block_term(ms, ns, k, beta) for k in range(len(ms))), Fraction(0))


def f2_block(ms, ns, beta: Scalar) -> Scalar:
    return sum((_block_term(ms, ns, k, beta) * (ns[k] - (ms[k] + 1) * beta) for k in range(len(ms))),
               Fraction(0))


def f1_expected(lam, beta: Scalar = None) -> Scalar:
    return Fraction(Partition(lam).size())


def f2_expected(lam, beta: Scalar) -> Scalar:
    lam = Partition(lam)
    return sum((p * p - 2 * i * p * beta for i, p in enumerate(lam, 1)), Fraction(0))


def recursion_ratio(lam, beta: Scalar, u: Scalar) -> Scalar:
    """beta * sum_mu psi'_{lam/mu} c_mu / c_lam with the closed-form c."""
    lam = Partition(lam)
    total = sum((pieri_p1_closed(lam, mu, beta) * gaiotto_coeff_closed(mu, beta, u)
                 for mu in shrink_by(lam, 1)), Fraction(0))
    return beta * total / gaiotto_coeff_closed(lam, beta, u)


def recursion_consistent(lam, beta: Scalar, u: Scalar) -> bool:
    """The closed form solves the recursion at lam iff this ratio is (1+u) F1 + F2."""
    return recursion_ratio(lam, beta, u) == (1 + u) * f1_eval(lam, beta) + f2_eval(lam, beta)


@dataclass
class IdentityReport:
    mode: str
    max_size: int
    seed: int | None
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["f1_ok"] and r["f2_ok"] for r in self.rows)

    @property
    def failures(self) -> list:
        return [r["partition"] for r in self.rows if not (r["f1_ok"] and r["f2_ok"])]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "max_size": self.max_size,
            "seed": self.seed,
            "checked": len(self.rows),
            "pass": self.ok,
            "failures": [r["partition"].key() for r in self.rows if not (r["f1_ok"] and r["f2_ok"])],
            "partitions": {r["partition"].key(): {k: v for k, v in r.items() if k != "partition"}
                           for r in self.rows},
        }


def _symbolic_row(lam, f1, f2):
    beta = beta_symbol()
    v1, v2 = f1(lam, beta), f2(lam, beta)
    e1, e2 = f1_expected(lam), f2_expected(lam, beta)
    return {"f1": scalar_to_str(v1), "f2": scalar_to_str(v2), "f1_ok": v1 == e1, "f2_ok": v2 == e2}


def _sampled_row(lam, f1, f2, rng, samples, max_retries):
    ok1 = ok2 = True
    done = misses = 0
    while done < samples:
        beta = random_rational(rng, signed=True)
        try:
            v1, v2 = f1(lam, beta), f2(lam, beta)
        except ZeroDivisionError:
            misses += 1
            if misses > max_retries:
                return {"f1_ok": False, "f2_ok": False, "error": "retry budget exhausted"}
            continue
        ok1 = ok1 and v1 == f1_expected(lam)
        ok2 = ok2 and v2 == f2_expected(lam, beta)
        done += 1
    return {"samples": samples, "f1_ok": ok1, "f2_ok": ok2}


def verify_identities(max_size: int, mode: str = SYMBOLIC, seed: int | None = 0, *,
                      samples: int = 5, max_retries: int = 100,
                      f1: Callable = f1_eval, f2: Callable = f2_eval) -> IdentityReport:
    """Check F1 and F2 on every nonempty partition of size at most max_size.

    ``f1`` and ``f2`` can be replaced to confirm that the harness notices a
    wrong evaluator.
    """
    if mode not in (SYMBOLIC, SAMPLED):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    report = IdentityReport(mode, max_size, seed if mode == SAMPLED else None)
    for lam in partitions_up_to(max_size):
        if not lam:
            continue
        if mode == SYMBOLIC:
            row = _symbolic_row(lam, f1, f2)
        else:
            row = _sampled_row(lam, f1, f2, rng, samples, max_retries)
        report.rows.append({"partition": lam, **row})
    return report


def f2_linear_coefficients(lam) -> tuple[Fraction, Fraction]:
    """(constant term, beta coefficient) of F2, read off the symbolic value."""
    v = f2_eval(lam, beta_symbol())
    if not isinstance(v, RatFunc):
        return Fraction(v), Fraction(0)
    if v.denominator_coeffs() != [1]:
        raise ArithmeticError(f"F2 of {list(lam)} is not a polynomial")
    coeffs = v.numerator_coeffs() + [Fraction(0)] * 2
    if any(coeffs[2:]):
        raise ArithmeticError(f"F2 of {list(lam)} is not linear")
    return coeffs[0], coeffs[1]


__all__ = ["IdentityReport", "SAMPLED", "SYMBOLIC", "block_encoding", "corner_weight",
           "f1_block", "f1_eval", "f1_expected", "f2_block", "f2_eval", "f2_expected",
           "f2_linear_coefficients", "recursion_consistent", "recursion_ratio",
           "verify_identities"]
