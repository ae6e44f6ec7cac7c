"""Truncated graded ring of symmetric functions.

Values are :class:`SymFunc` objects: a sparse map from partitions to exact
scalars, tagged with the basis the coefficients refer to (power sums ``p``,
monomials ``m`` or Jack functions ``P^{(b)}``) and a degree cap.  Power sums
are the working basis; monomial coordinates go through per-degree transition
tables that are computed once and cached.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import cache
from .combinatorics import Partition, partitions_of, z_of
from .errors import DegreeCapExceeded
from .exactmath import Scalar

DEFAULT_CAP = 10


@dataclass(frozen=True)
class Basis:
    kind: str  # "p", "m" or "jack"
    param: Scalar | None = None

    def __str__(self):
        return self.kind if self.param is None else f"{self.kind}({self.param})"


POWER_SUM = Basis("p")
MONOMIAL = Basis("m")


def jack_basis(b: Scalar) -> Basis:
    return Basis("jack", b)


class SymFunc:
    """Finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("coeffs", "basis", "cap")

    def __init__(self, coeffs: Mapping = (), basis: Basis = POWER_SUM, cap: int = DEFAULT_CAP):
        clean = {}
        for lam, c in dict(coeffs).items():
            lam = Partition(lam)
            if c == 0:
                continue
            if lam.size() > cap:
                raise DegreeCapExceeded(f"{lam} exceeds degree cap {cap}")
            clean[lam] = c
        self.coeffs = clean
        self.basis = basis
        self.cap = cap

    # -- construction helpers ------------------------------------------
    @classmethod
    def one(cls, cap: int = DEFAULT_CAP) -> "SymFunc":
        return cls({Partition(): Fraction(1)}, POWER_SUM, cap)

    @classmethod
    def zero(cls, basis: Basis = POWER_SUM, cap: int = DEFAULT_CAP) -> "SymFunc":
        return cls({}, basis, cap)

    def _like(self, coeffs) -> "SymFunc":
        return SymFunc(coeffs, self.basis, self.cap)

    # -- inspection ----------------------------------------------------
    def __getitem__(self, lam) -> Scalar:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def degree(self) -> int:
        """Largest degree with a nonzero coefficient; -1 for zero."""
        return max((lam.size() for lam in self.coeffs), default=-1)

    def component(self, d: int) -> "SymFunc":
        return self._like({lam: c for lam, c in self.coeffs.items() if lam.size() == d})

    def is_homogeneous(self) -> bool:
        return len({lam.size() for lam in self.coeffs}) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return f"SymFunc(0, basis={self.basis})"
        terms = " + ".join(f"({c})*{self.basis.kind}{list(lam)}"
                           for lam, c in sorted(self.coeffs.items(), key=lambda t: (t[0].size(), t[0])))
        return f"SymFunc({terms})"

    # -- linear structure ----------------------------------------------
    def _aligned(self, other: "SymFunc") -> tuple["SymFunc", "SymFunc"]:
        if self.basis == other.basis:
            return self, other
        return self.to_power_sum(), other.to_power_sum()

    def __add__(self, other: "SymFunc") -> "SymFunc":
        a, b = self._aligned(other)
        out = dict(a.coeffs)
        for lam, c in b.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(out, a.basis, max(a.cap, b.cap))

    def __neg__(self) -> "SymFunc":
        return self._like({lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c: Scalar) -> "SymFunc":
        return self._like({lam: c * v for lam, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    # -- basis changes -------------------------------------------------
    def to_power_sum(self) -> "SymFunc":
        if self.basis == POWER_SUM:
            return self
        if self.basis == MONOMIAL:
            return SymFunc(_change(self.coeffs, m_to_p_table), POWER_SUM, self.cap)
        if self.basis.kind == "jack":
            from .jack import jack_table
            out = defaultdict(lambda: Fraction(0))
            for lam, c in self.coeffs.items():
                for rho, v in jack_table(lam.size(), self.basis.param).in_power_sum[lam].items():
                    out[rho] += c * v
            return SymFunc(out, POWER_SUM, self.cap)
        raise ValueError(f"unknown basis {self.basis}")

    def to_monomial(self) -> "SymFunc":
        if self.basis == MONOMIAL:
            return self
        if self.basis.kind == "jack":
            from .jack import jack_table
            out = defaultdict(lambda: Fraction(0))
            for lam, c in self.coeffs.items():
                for mu, v in jack_table(lam.size(), self.basis.param).in_monomial[lam].items():
                    out[mu] += c * v
            return SymFunc(out, MONOMIAL, self.cap)
        return SymFunc(_change(self.to_power_sum().coeffs, p_to_m_table), MONOMIAL, self.cap)

    def to_jack(self, b: Scalar) -> "SymFunc":
        from .jack import expand_in_jack
        return expand_in_jack(self, b)


def p(*parts: int, cap: int = DEFAULT_CAP) -> SymFunc:
    """The power sum p_lambda."""
    return SymFunc({Partition(sorted(parts, reverse=True)): Fraction(1)}, POWER_SUM, cap)


def m(*parts: int, cap: int = DEFAULT_CAP) -> SymFunc:
    """The monomial symmetric function m_lambda."""
    return SymFunc({Partition(sorted(parts, reverse=True)): Fraction(1)}, MONOMIAL, cap)


def _change(coeffs, table_for_degree):
    out = defaultdict(lambda: Fraction(0))
    for lam, c in coeffs.items():
        for mu, v in table_for_degree(lam.size())[lam].items():
            out[mu] += c * v
    return out


# -- transition tables -------------------------------------------------
def _p_coeff_on_m(lam: Partition, mu: Partition) -> int:
    """Coefficient of m_mu in p_lam: ways to pour the parts of lam into the rows of mu."""
    states = {tuple(mu): 1}
    for part in lam:
        nxt = defaultdict(int)
        for st, c in states.items():
            for j, room in enumerate(st):
                if room >= part:
                    nxt[st[:j] + (room - part,) + st[j + 1:]] += c
        states = nxt
    return states.get((0,) * len(mu), 0)


def _serialize_table(parts, table) -> dict:
    return {"partitions": [list(lam) for lam in parts],
            "matrix": [[str(table[a].get(b, 0)) for b in parts] for a in parts]}


def _deserialize_table(payload) -> dict:
    parts = [Partition(x) for x in payload["partitions"]]
    out = {}
    for a, row in zip(parts, payload["matrix"]):
        out[a] = {b: Fraction(v) for b, v in zip(parts, row) if v != "0"}
    return out


@lru_cache(maxsize=None)
def p_to_m_table(d: int) -> dict:
    """``table[lam][mu]`` = coefficient of m_mu in p_lam, for partitions of d."""
    key = {"degree": d, "direction": "p->m"}
    payload = cache.load("transition", key)
    if payload is not None:
        return _deserialize_table(payload)
    parts = partitions_of(d)
    table = {}
    for lam in parts:
        row = {}
        for mu in parts:
            c = _p_coeff_on_m(lam, mu)
            if c:
                row[mu] = Fraction(c)
        table[lam] = row
    cache.store("transition", key, _serialize_table(parts, table))
    return table


@lru_cache(maxsize=None)
def m_to_p_table(d: int) -> dict:
    """``table[lam][rho]`` = coefficient of p_rho in m_lam (inverse of :func:`p_to_m_table`)."""
    key = {"degree": d, "direction": "m->p"}
    payload = cache.load("transition", key)
    if payload is not None:
        return _deserialize_table(payload)
    fwd = p_to_m_table(d)
    # p_lam involves only m_mu with mu >= lam, so in reverse-lex order the
    # forward matrix is lower triangular and forward substitution inverts it.
    parts = partitions_of(d)
    inv = {}
    for i, lam in enumerate(parts):
        # solve  sum_{rho} inv[lam][rho] * fwd[rho][mu] = delta(lam, mu)
        row = {}
        for k in range(i, -1, -1):
            mu = parts[k]
            acc = Fraction(int(lam == mu))
            for rho, v in row.items():
                acc -= v * fwd[rho].get(mu, 0)
            if acc:
                row[mu] = acc / fwd[mu][mu]
        # row currently maps rho -> coefficient with rho indexing columns of fwd
        inv[lam] = row
    cache.store("transition", key, _serialize_table(parts, inv))
    return inv


# -- products and pairing ----------------------------------------------
def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the power-sum basis; fails loudly past the degree cap."""
    f, g = f.to_power_sum(), g.to_power_sum()
    cap = max(f.cap, g.cap)
    if f and g and f.degree() + g.degree() > cap:
        raise DegreeCapExceeded(f"product of degree {f.degree() + g.degree()} exceeds cap {cap}")
    out = defaultdict(lambda: Fraction(0))
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            out[Partition(sorted(lam + mu, reverse=True))] += a * b
    return SymFunc(out, POWER_SUM, cap)


def multiply_by_power_sum(f: SymFunc, k: int) -> SymFunc:
    """p_k * f, in the power-sum basis."""
    if k < 1:
        raise ValueError("k must be positive")
    f = f.to_power_sum()
    if f and f.degree() + k > f.cap:
        raise DegreeCapExceeded(f"degree {f.degree()} + {k} exceeds cap {f.cap}")
    return SymFunc({Partition(sorted(lam + (k,), reverse=True)): c for lam, c in f.coeffs.items()},
                   POWER_SUM, f.cap)


def power_sum_norm(lam: Partition, b: Scalar) -> Scalar:
    """<p_lam, p_lam>_b = z_lam * b^len(lam)."""
    return z_of(lam) * b ** len(lam)


def inner_product(f: SymFunc, g: SymFunc, b: Scalar) -> Scalar:
    """The deformed Hall pairing <p_lam, p_mu>_b = delta z_lam b^len(lam)."""
    f, g = f.to_power_sum(), g.to_power_sum()
    if len(g.coeffs) < len(f.coeffs):
        f, g = g, f
    total = Fraction(0)
    for lam, c in f.coeffs.items():
        other = g.coeffs.get(lam)
        if other is not None:
            total += c * other * power_sum_norm(lam, b)
    return total
