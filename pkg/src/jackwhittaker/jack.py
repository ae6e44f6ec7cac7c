"""Jack symmetric functions P_lambda^{(b)}.

Normalization: P_lambda is monic and unitriangular in the monomial basis with
respect to dominance, and the family is orthogonal for
``<p_lam, p_mu>_b = delta z_lam b^len(lam)``.  So ``b`` is the parameter usually
called alpha (b = 1 gives Schur functions).

Tables are built by Gram-Schmidt over the monomial basis, walking a linear
extension of the dominance order, and work for any exact parameter: a rational
number or a :class:`~jackwhittaker.exactmath.RatFunc`.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import cache
from .combinatorics import (Partition, arm_leg, grow_by, linear_extension,
                            partitions_of, z_of)
from .errors import DegenerateParameter, NotOneBoxCover
from .exactmath import RatFunc, Scalar, scalar_to_json
from .symfunc import (DEFAULT_CAP, MONOMIAL, POWER_SUM, SymFunc, jack_basis,
                      m_to_p_table, multiply_by_power_sum)


@dataclass
class JackTable:
    """All P_lambda^{(b)} of one degree.

    ``in_monomial[lam][mu]`` and ``in_power_sum[lam][rho]`` hold the
    coefficients of P_lam; ``norms[lam]`` is <P_lam, P_lam>_b.
    """

    degree: int
    b: Scalar
    order: list
    in_monomial: dict
    in_power_sum: dict
    norms: dict


def _poly_in(b: Scalar, coeffs: list[Fraction]) -> Scalar:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * b + c
    return acc


def monomial_gram(d: int, b: Scalar) -> dict:
    """Gram matrix <m_lam, m_mu>_b of the monomial basis in degree d."""
    A = m_to_p_table(d)
    parts = partitions_of(d)
    gram = {}
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            # collect by len(rho) so each entry is one polynomial in b
            by_len = [Fraction(0)] * (d + 1)
            row_mu = A[mu]
            for rho, a in A[lam].items():
                other = row_mu.get(rho)
                if other is not None:
                    by_len[len(rho)] += a * other * z_of(rho)
            val = _poly_in(b, by_len)
            gram[lam, mu] = gram[mu, lam] = val
    return gram


def _build(d: int, b: Scalar, order: str) -> JackTable:
    seq = linear_extension(d, order)
    gram = monomial_gram(d, b)
    P: dict = {}
    norms: dict = {}
    for lam in seq:
        vec = {lam: Fraction(1)}
        for mu in P:
            pairing = sum((c * gram[lam, nu] for nu, c in P[mu].items()), Fraction(0))
            if pairing == 0:
                continue
            coef = pairing / norms[mu]
            for nu, c in P[mu].items():
                vec[nu] = vec.get(nu, 0) - coef * c
        vec = {nu: c for nu, c in vec.items() if c != 0}
        norm = sum((c * gram[nu, lam] for nu, c in vec.items()), Fraction(0))
        if norm == 0:
            raise DegenerateParameter(f"Gram-Schmidt pivot for {list(lam)} vanishes at b={b}")
        P[lam] = vec
        norms[lam] = norm
    A = m_to_p_table(d)
    in_p = {}
    for lam, vec in P.items():
        row = defaultdict(lambda: Fraction(0))
        for mu, c in vec.items():
            for rho, a in A[mu].items():
                row[rho] += c * a
        in_p[lam] = {rho: c for rho, c in row.items() if c != 0}
    return JackTable(d, b, seq, P, in_p, norms)


def _param_key(b: Scalar) -> dict:
    if isinstance(b, RatFunc):
        return {"mode": f"symbolic:{b.var}", "value": scalar_to_json(b)}
    return {"mode": "rational", "value": str(b)}


def _decode(v, var):
    if isinstance(v, dict):
        return RatFunc.from_json(v, var)
    return Fraction(v)


def _table_to_payload(t: JackTable) -> dict:
    def rows(table):
        return [[list(lam), [[list(mu), scalar_to_json(c)] for mu, c in table[lam].items()]]
                for lam in t.order]
    return {"order": [list(lam) for lam in t.order], "in_monomial": rows(t.in_monomial),
            "in_power_sum": rows(t.in_power_sum),
            "norms": [[list(lam), scalar_to_json(t.norms[lam])] for lam in t.order]}


def _table_from_payload(d, b, payload) -> JackTable:
    var = b.var if isinstance(b, RatFunc) else None

    def rows(data):
        return {Partition(lam): {Partition(mu): _decode(c, var) for mu, c in row} for lam, row in data}
    return JackTable(d, b, [Partition(x) for x in payload["order"]], rows(payload["in_monomial"]),
                     rows(payload["in_power_sum"]),
                     {Partition(lam): _decode(c, var) for lam, c in payload["norms"]})


_build_lock = threading.RLock()


@lru_cache(maxsize=None)
def _jack_table(d: int, b: Scalar, order: str) -> JackTable:
    key = {"degree": d, "order": order, **_param_key(b)}
    payload = cache.load("jack", key)
    if payload is not None:
        return _table_from_payload(d, b, payload)
    table = _build(d, b, order)
    cache.store("jack", key, _table_to_payload(table))
    return table


def jack_table(d: int, b: Scalar, order: str = "lex") -> JackTable:
    """Cached Jack table for degree d at parameter b.

    ``order`` picks the linear extension of dominance used by Gram-Schmidt;
    the resulting functions do not depend on it.
    """
    with _build_lock:
        return _jack_table(d, b, order)


def jack(lam, b: Scalar, cap: int = DEFAULT_CAP) -> SymFunc:
    """P_lam^{(b)} in the monomial basis."""
    lam = Partition(lam)
    t = jack_table(lam.size(), b)
    return SymFunc(t.in_monomial[lam], MONOMIAL, max(cap, lam.size()))


def expand_in_jack(f: SymFunc, b: Scalar) -> SymFunc:
    """Rewrite f in the basis {P_lam^{(b)}}."""
    fm = f.to_monomial()
    by_deg = defaultdict(dict)
    for lam, c in fm.coeffs.items():
        by_deg[lam.size()][lam] = c
    out = {}
    for d, coeffs in by_deg.items():
        t = jack_table(d, b)
        # walk from the top of the dominance order: P_kappa only reaches m_nu below kappa
        rest = dict(coeffs)
        for lam in reversed(t.order):
            c = rest.pop(lam, 0)
            if c == 0:
                continue
            out[lam] = c
            for nu, v in t.in_monomial[lam].items():
                if nu != lam:
                    rest[nu] = rest.get(nu, 0) - c * v
    return SymFunc(out, jack_basis(b), f.cap)


# -- Pieri coefficients --------------------------------------------------
def _pieri_oracle(mu: Partition, b: Scalar, k: int) -> dict:
    mu = Partition(mu)
    d = mu.size() + k
    src = SymFunc(jack_table(mu.size(), b).in_power_sum[mu], POWER_SUM, max(DEFAULT_CAP, d))
    prod = multiply_by_power_sum(src, k).coeffs
    t = jack_table(d, b)
    out = {}
    for lam in partitions_of(d):
        acc = Fraction(0)
        for rho, c in t.in_power_sum[lam].items():
            v = prod.get(rho)
            if v is not None:
                acc += c * v * z_of(rho) * b ** len(rho)
        out[lam] = acc / t.norms[lam]
    return out


@lru_cache(maxsize=None)
def pieri_p1_oracle(mu, b: Scalar) -> dict:
    """Coefficients of p_1 P_mu^{(b)} on every P_lam^{(b)} with |lam| = |mu| + 1."""
    return _pieri_oracle(mu, b, 1)


@lru_cache(maxsize=None)
def pieri_p2(nu, b: Scalar) -> dict:
    """Coefficients of p_2 P_nu^{(b)} on every P_lam^{(b)} with |lam| = |nu| + 2."""
    return _pieri_oracle(nu, b, 2)


def added_row(lam, mu) -> int:
    """Row I such that lam is mu with one box added in row I."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size() + 1 or not lam.contains(mu):
        raise NotOneBoxCover(f"{list(lam)} is not {list(mu)} plus one box")
    for i in range(1, len(lam) + 1):
        if lam.part(i) != mu.part(i):
            return i
    raise NotOneBoxCover(f"{list(lam)} is not {list(mu)} plus one box")


def pieri_p1_closed(lam, mu, beta: Scalar) -> Scalar:
    """Closed-form coefficient of P_lam in p_1 P_mu, Jack parameter 1/beta."""
    lam = Partition(lam)
    I = added_row(lam, mu)
    li = lam.part(I)
    out = Fraction(1)
    for i in range(1, I):
        gap = lam.part(i) - li
        out *= (gap + beta * (I - i + 1)) / (gap + 1 + beta * (I - i))
        out *= (gap + 1 + beta * (I - i - 1)) / (gap + beta * (I - i))
    return out


def jack_norm_closed(nu, b: Scalar) -> Scalar:
    """<P_nu, P_nu>_b as a product over the boxes of nu."""
    nu = Partition(nu)
    out = Fraction(1)
    for i, j in nu.boxes():
        a, l = arm_leg(nu, i, j)
        den = b * a + l + 1
        if den == 0:
            raise DegenerateParameter(f"norm of {list(nu)} has a pole at b={b}")
        out *= (b * (a + 1) + l) / den
    return out


def jack_norm_printed(nu, b: Scalar) -> Scalar:
    """The box product with arm and leg roles exchanged, which gives 1/b on (1).

    Kept only so tests can show it disagrees with the Gram-Schmidt norm.
    """
    nu = Partition(nu)
    out = Fraction(1)
    for i, j in nu.boxes():
        a, l = arm_leg(nu, i, j)
        out *= (a + b * l + 1) / (a + b * l + b)
    return out


def jack_reexpand(lam, b_from: Scalar, b_to: Scalar) -> dict:
    """gamma with P_lam^{(b_from)} = sum_nu gamma[nu] P_nu^{(b_to)}, over all nu of |lam|."""
    lam = Partition(lam)
    d = lam.size()
    src = jack_table(d, b_from).in_monomial[lam]
    dst = jack_table(d, b_to)
    rest = dict(src)
    out = {nu: Fraction(0) for nu in partitions_of(d)}
    for kappa in reversed(dst.order):
        c = rest.pop(kappa, 0)
        if c == 0:
            continue
        out[kappa] = c
        for nu, v in dst.in_monomial[kappa].items():
            if nu != kappa:
                rest[nu] = rest.get(nu, 0) - c * v
    return out


def support_of_pieri(mu, k: int) -> list:
    """Partitions reachable from mu by adding k boxes."""
    return grow_by(Partition(mu), k)
