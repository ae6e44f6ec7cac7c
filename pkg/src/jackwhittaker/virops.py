"""Bosonized operators acting on symmetric functions.

The Heisenberg Fock space is identified with symmetric functions by
``a_{-k} -> s p_k`` and ``a_k -> (k/s) d/dp_k`` (k > 0) with ``s = sqrt(beta/2)``.
The zero mode is the scalar alpha, and the background charge rho is fixed by
``rho sqrt(2 beta) = beta - 1``.  With ``u = sqrt(2 beta) alpha`` every operator
below has matrix entries rational in (beta, u).  Odd powers of ``s`` cannot
appear, and :func:`realize` refuses any term that would carry one.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .combinatorics import Partition, partitions_of
from .errors import DegreeCapExceeded, NonSymmetricInput
from .exactmath import Scalar
from .symfunc import DEFAULT_CAP, POWER_SUM, SymFunc


class GradedOperator:
    """Linear map on truncated symmetric functions sending degree d to d - shift.

    Columns (images of power sums ``p_lam``) are computed on demand and
    cached; matrices are sparse dicts ``{source: {target: coeff}}`` in the
    power-sum basis.
    """

    def __init__(self, shift: int, column: Callable[[Partition], dict], cap: int = DEFAULT_CAP,
                 name: str = ""):
        self.shift = shift
        self.cap = cap
        self.name = name
        self._column = column
        self._cols: dict = {}

    def __repr__(self):
        return f"GradedOperator({self.name or '?'}, shift={self.shift}, cap={self.cap})"

    def _check(self, d: int) -> None:
        if d > self.cap or d - self.shift > self.cap:
            raise DegreeCapExceeded(f"{self.name or 'operator'} on degree {d} leaves the cap {self.cap}")

    def column(self, lam: Partition) -> dict:
        lam = Partition(lam)
        col = self._cols.get(lam)
        if col is None:
            d = lam.size()
            self._check(d)
            if d - self.shift < 0:
                col = {}
            else:
                col = {mu: c for mu, c in self._column(lam).items() if c != 0}
            self._cols[lam] = col
        return col

    def block(self, d: int) -> dict:
        """Sparse matrix of the restriction to degree d."""
        return {lam: self.column(lam) for lam in partitions_of(d)}

    def dense_block(self, d: int) -> list[list[Scalar]]:
        """Rows indexed by target partitions, columns by source partitions (reverse-lex)."""
        src = partitions_of(d)
        dst = partitions_of(d - self.shift) if d - self.shift >= 0 else []
        return [[self.column(lam).get(mu, Fraction(0)) for lam in src] for mu in dst]

    def apply_dict(self, coeffs: dict) -> dict:
        out = defaultdict(lambda: Fraction(0))
        for lam, c in coeffs.items():
            for mu, v in self.column(lam).items():
                out[mu] += c * v
        return {mu: c for mu, c in out.items() if c != 0}

    def apply(self, f: SymFunc) -> SymFunc:
        f = f.to_power_sum()
        return SymFunc(self.apply_dict(f.coeffs), POWER_SUM, f.cap)

    __call__ = apply

    # -- algebra of operators ----------------------------------------------
    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        def col(lam):
            return self.apply_dict(other.column(lam))
        return GradedOperator(self.shift + other.shift, col, min(self.cap, other.cap),
                              f"({self.name})({other.name})")

    def _combine(self, other, sign):
        if self.shift != other.shift:
            raise ValueError("cannot add operators with different degree shifts")

        def col(lam):
            out = dict(self.column(lam))
            for mu, c in other.column(lam).items():
                out[mu] = out.get(mu, 0) + sign * c
            return out
        op = "+" if sign > 0 else "-"
        return GradedOperator(self.shift, col, min(self.cap, other.cap), f"{self.name}{op}{other.name}")

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c: Scalar) -> "GradedOperator":
        return GradedOperator(self.shift, lambda lam: {mu: c * v for mu, v in self.column(lam).items()},
                              self.cap, f"{c}*{self.name}")

    __rmul__ = scale

    def agrees_with(self, other: "GradedOperator", degrees: Iterable[int]) -> bool:
        if self.shift != other.shift:
            return False
        return all(self.column(lam) == other.column(lam) for d in degrees for lam in partitions_of(d))


def identity(cap: int = DEFAULT_CAP) -> GradedOperator:
    return GradedOperator(0, lambda lam: {lam: Fraction(1)}, cap, "1")


def degree_operator(cap: int = DEFAULT_CAP) -> GradedOperator:
    return GradedOperator(0, lambda lam: {lam: Fraction(lam.size())}, cap, "deg")


def commutator(A: GradedOperator, B: GradedOperator) -> GradedOperator:
    return A @ B - B @ A


# -- Heisenberg normal-ordered terms -------------------------------------------
@dataclass(frozen=True)
class FockTerm:
    """``coeff * s**s_power * a_{modes[0]} a_{modes[1]} ...`` in normal order.

    Negative modes (creators) come first.  Zero modes never appear: they are
    replaced by alpha = u / (2 s) when the term is built.
    """

    coeff: Scalar
    s_power: int
    modes: tuple


def _normal(modes) -> tuple:
    return tuple(sorted(m for m in modes if m < 0)) + tuple(sorted(m for m in modes if m > 0))


def _collect(raw: Iterable[FockTerm]) -> list[FockTerm]:
    acc: dict = {}
    for t in raw:
        key = (t.modes, t.s_power)
        acc[key] = acc.get(key, 0) + t.coeff
    return [FockTerm(c, sp, modes) for (modes, sp), c in acc.items() if c != 0]


def virasoro_terms(n: int, beta: Scalar, u: Scalar, max_mode: int) -> list[FockTerm]:
    """Terms of (1/2) sum_m :a_m a_{n-m}: - (n+1) rho a_n with |modes| <= max_mode."""
    half_alpha = u / 2          # alpha = (u/2) s^-1
    half_rho = (beta - 1) / 2   # rho   = ((beta-1)/2) s^-1
    raw = []
    for m in range(-max_mode - abs(n), max_mode + abs(n) + 1):
        k = n - m
        if abs(m) > max_mode + abs(n) or abs(k) > max_mode + abs(n):
            continue
        if m == 0 and k == 0:
            raw.append(FockTerm(Fraction(1, 2) * half_alpha * half_alpha, -2, ()))
        elif m == 0 or k == 0:
            other = k if m == 0 else m
            raw.append(FockTerm(Fraction(1, 2) * half_alpha, -1, (other,)))
        else:
            raw.append(FockTerm(Fraction(1, 2), 0, _normal((m, k))))
    if n == 0:
        raw.append(FockTerm(-half_rho * half_alpha, -2, ()))
    else:
        raw.append(FockTerm(-(n + 1) * half_rho, -1, (n,)))
    return _collect(t for t in raw if all(md <= max_mode for md in t.modes if md > 0))


def split_e_terms(beta: Scalar, u: Scalar, max_mode: int) -> list[FockTerm]:
    """sqrt(2 beta) sum_n a_{-n} L_n + sum_n a_{-n} a_n (beta - 1 - sqrt(2 beta) a_0)."""
    raw = []
    for n in range(1, max_mode + 1):
        for t in virasoro_terms(n, beta, u, max_mode):
            # sqrt(2 beta) = 2 s
            raw.append(FockTerm(2 * t.coeff, t.s_power + 1, _normal((-n,) + t.modes)))
        # sqrt(2 beta) a_0 = 2 s * (u/2) s^-1 = u
        raw.append(FockTerm(beta - 1 - u, 0, (-n, n)))
    return _collect(raw)


def hamiltonian_terms(beta: Scalar, N: int, max_mode: int) -> list[FockTerm]:
    """Cubic collective-field Hamiltonian with t = beta, t' = sqrt(beta/2) = s."""
    raw = []
    for n in range(1, max_mode + 1):
        for m in range(1, max_mode + 1 - n):
            raw.append(FockTerm(Fraction(1), 1, _normal((-m - n, m, n))))          # t' a_{-m-n} a_m a_n
            raw.append(FockTerm(Fraction(2), 1, _normal((-m, -n, m + n))))        # (t/t') = 2 s
        raw.append(FockTerm(n * (1 - beta) + N * beta, 0, (-n, n)))
    return _collect(raw)


def _apply_term(term: FockTerm, lam: Partition):
    """Image of p_lam under the term, as (partition, rational factor, s power)."""
    parts = Counter(lam)
    factor = 1
    s_pow = term.s_power
    for md in reversed(term.modes):
        if md > 0:
            if parts[md] == 0:
                return None
            factor *= md * parts[md]
            parts[md] -= 1
            s_pow -= 1
        else:
            parts[-md] += 1
            s_pow += 1
    mu = Partition(sorted(parts.elements(), reverse=True))
    return mu, factor, s_pow


def realize(terms: list[FockTerm], beta: Scalar, shift: int, cap: int, name: str) -> GradedOperator:
    """Turn normal-ordered Fock terms into an operator on power sums."""
    half_beta = beta / 2

    def column(lam):
        out = defaultdict(lambda: Fraction(0))
        for t in terms:
            hit = _apply_term(t, lam)
            if hit is None:
                continue
            mu, factor, s_pow = hit
            if s_pow % 2:
                raise ArithmeticError(f"odd power of sqrt(beta/2) in {name} on {list(lam)}")
            out[mu] += t.coeff * factor * half_beta ** (s_pow // 2)
        return out

    return GradedOperator(shift, column, cap, name)


def virasoro_mode(n: int, beta: Scalar, u: Scalar, cap: int = DEFAULT_CAP) -> GradedOperator:
    """The bosonized Virasoro generator L_n on symmetric functions (degree d -> d - n)."""
    if abs(n) > cap:
        raise DegreeCapExceeded(f"|n| = {abs(n)} exceeds the cap {cap}")
    return realize(virasoro_terms(n, beta, u, cap), beta, n, cap, f"L{n}")


def highest_weight(beta: Scalar, u: Scalar) -> Scalar:
    """h = alpha(alpha - 2 rho)/2 written in (beta, u)."""
    return u * (u - 2 * beta + 2) / (4 * beta)


def central_charge(beta: Scalar) -> Scalar:
    return 13 - 6 * (beta + 1 / beta)


def e_operator(beta: Scalar, cap: int = DEFAULT_CAP) -> GradedOperator:
    """The split Calogero-Sutherland operator as a cubic differential operator in the p_k.

    sum_{m,n} [m n p_{m+n} d_m d_n + beta (m+n) p_m p_n d_{m+n}] + (1 - beta) sum_n n^2 p_n d_n
    """
    def column(lam):
        out = defaultdict(lambda: Fraction(0))
        mult = Counter(lam)
        distinct = sorted(mult)
        # join two parts: m n p_{m+n} d_m d_n over ordered pairs
        for m in distinct:
            for n in distinct:
                ways = mult[m] * (mult[n] - (m == n))
                if ways == 0:
                    continue
                rest = list(lam)
                rest.remove(m)
                rest.remove(n)
                out[Partition(sorted(rest + [m + n], reverse=True))] += m * n * ways
        # split one part: beta (m+n) p_m p_n d_{m+n}
        for k in distinct:
            rest = list(lam)
            rest.remove(k)
            for m in range(1, k):
                mu = Partition(sorted(rest + [m, k - m], reverse=True))
                out[mu] += beta * k * mult[k]
        diag = sum(k * k for k in lam)
        out[lam] += (1 - beta) * diag
        return out

    return GradedOperator(0, column, cap, "E")


def e_operator_split(beta: Scalar, u: Scalar, cap: int = DEFAULT_CAP) -> GradedOperator:
    """The same operator assembled from the Virasoro modes; u must drop out."""
    return realize(split_e_terms(beta, u, cap), beta, 0, cap, "E_split")


def cubic_hamiltonian(beta: Scalar, N: int, cap: int = DEFAULT_CAP) -> GradedOperator:
    return realize(hamiltonian_terms(beta, N, cap), beta, 0, cap, f"H{N}")


def eigenvalue(lam, beta: Scalar) -> Scalar:
    """sum_i (lam_i^2 + beta (1 - 2i) lam_i)."""
    return sum((l * l + beta * (1 - 2 * i) * l for i, l in enumerate(Partition(lam), start=1)), Fraction(0))


def eigenvalue_n(lam, N: int, t: Scalar) -> Scalar:
    """sum_i (lam_i^2 + t (N + 1 - 2i) lam_i)."""
    return sum((l * l + t * (N + 1 - 2 * i) * l for i, l in enumerate(Partition(lam), start=1)),
               Fraction(0))


# -- finite number of variables ------------------------------------------------
def monomial_polynomial(mu, N: int) -> dict:
    """m_mu in N variables as {exponent tuple: 1}; zero when len(mu) > N."""
    mu = Partition(mu)
    if len(mu) > N:
        return {}
    padded = tuple(mu) + (0,) * (N - len(mu))
    return {e: Fraction(1) for e in set(permutations(padded))}


def restrict(f: SymFunc, N: int) -> dict:
    """Set x_{N+1} = x_{N+2} = ... = 0; returns an N-variable polynomial."""
    out = defaultdict(lambda: Fraction(0))
    for mu, c in f.to_monomial().coeffs.items():
        for e, v in monomial_polynomial(mu, N).items():
            out[e] += c * v
    return {e: c for e, c in out.items() if c != 0}


def to_monomial_coeffs(poly: dict) -> dict:
    """Read off m-coefficients of a symmetric N-variable polynomial."""
    return {Partition(sorted(e, reverse=True)): c for e, c in poly.items()
            if list(e) == sorted(e, reverse=True)}


def _check_symmetric(poly: dict) -> None:
    for e, c in poly.items():
        for f in set(permutations(e)):
            if poly.get(f, 0) != c:
                raise NonSymmetricInput(f"coefficient of {e} differs from that of {f}")


def finite_n_cs_apply(poly: dict, N: int, t: Scalar) -> dict:
    """Apply sum_i (x_i d_i)^2 + t sum_{i<j} (x_i+x_j)/(x_i-x_j) (x_i d_i - x_j d_j).

    The rational second term is applied to each pair of monomials swapped by
    (i j) at once, where it telescopes into a polynomial.
    """
    if any(len(e) != N for e in poly):
        raise ValueError(f"expected exponent tuples of length {N}")
    _check_symmetric(poly)
    out = defaultdict(lambda: Fraction(0))
    for e, c in poly.items():
        out[e] += c * sum(k * k for k in e)
        for i in range(N):
            for j in range(i + 1, N):
                a, b = e[i], e[j]
                if a <= b:
                    continue  # the partner monomial with a > b carries this pair
                # (x_i + x_j)/(x_i - x_j) (x_i^a x_j^b - x_i^b x_j^a)
                #   = x_i^a x_j^b + x_i^b x_j^a + 2 sum_{r=1}^{a-b-1} x_i^{a-r} x_j^{b+r}
                w = t * c * (a - b)
                for ea, eb, mult in [(a, b, 1), (b, a, 1)] + [(a - r, b + r, 2) for r in range(1, a - b)]:
                    g = list(e)
                    g[i], g[j] = ea, eb
                    out[tuple(g)] += mult * w
    return {e: c for e, c in out.items() if c != 0}


def bracket_check(beta: Scalar, u: Scalar, cap: int = 8, max_mode: int = 3) -> list:
    """Compare [L_m, L_n] with (m - n) L_{m+n} + c/12 m(m^2 - 1) delta_{m+n,0} on the truncation.

    Only source degrees for which every intermediate degree stays in [0, cap]
    are compared.  Returns the failing (m, n, degree) triples.
    """
    c = central_charge(beta)
    modes = {n: virasoro_mode(n, beta, u, cap) for n in range(-max_mode, max_mode + 1)}
    ident = identity(cap)
    failures = []
    for m in range(-max_mode, max_mode + 1):
        for n in range(-max_mode, max_mode + 1):
            if abs(m + n) > cap:
                continue
            lhs = commutator(modes[m], modes[n])
            if abs(m + n) <= max_mode:
                rhs = modes[m + n].scale(Fraction(m - n))
            else:
                rhs = virasoro_mode(m + n, beta, u, cap).scale(Fraction(m - n))
            if m + n == 0:
                rhs = rhs + ident.scale(c * m * (m * m - 1) / 12)
            for d in range(cap + 1):
                if not all(0 <= x <= cap for x in (d - n, d - m, d - m - n)):
                    continue
                if any(lhs.column(lam) != rhs.column(lam) for lam in partitions_of(d)):
                    failures.append((m, n, d))
    return failures
