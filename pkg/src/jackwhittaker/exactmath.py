"""Exact scalars: rationals, univariate rational functions, identity testing.

Every coefficient in the package is one of

* a :class:`fractions.Fraction` (a parameter specialized to a rational point), or
* a :class:`RatFunc`, a reduced quotient of polynomials in one formal
  variable (``beta`` for the Virasoro side, ``b`` for a bare Jack parameter).

Plain ``int`` and ``Fraction`` values mix freely with a ``RatFunc`` (they are
constants of its field); two ``RatFunc`` values in different variables do not.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

import flint

from .errors import DivisionByZero, ModeMismatch, PoleAtPoint, RetryBudgetExhausted

_Poly = flint.fmpq_poly
_Q = flint.fmpq

SAMPLE_BOUND = 10**6


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, _Q):
        return x
    if isinstance(x, int):
        return _Q(x)
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _fmpq_to_fraction(q: flint.fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _as_poly(x) -> flint.fmpq_poly:
    if isinstance(x, _Poly):
        return x
    if isinstance(x, (int, Fraction, _Q)):
        return _Poly([_to_fmpq(x)])
    return _Poly([_to_fmpq(c) for c in x])


class RatFunc:
    """Reduced fraction ``num/den`` of polynomials over Q in one variable.

    The denominator is monic and coprime to the numerator, so two equal
    fractions always have identical representations.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: str = "beta", *, _reduced: bool = False):
        num = _as_poly(num)
        den = _as_poly(den)
        if not _reduced:
            if den == 0:
                raise DivisionByZero("rational function with zero denominator")
            if num == 0:
                den = _Poly([1])
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
            lc = den[den.degree()]
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den
        self.var = var

    @classmethod
    def gen(cls, var: str = "beta") -> "RatFunc":
        """The variable itself."""
        return cls(_Poly([0, 1]), 1, var, _reduced=True)

    @classmethod
    def const(cls, x, var: str = "beta") -> "RatFunc":
        return cls(_as_poly(x), 1, var, _reduced=True)

    # -- coercion ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise ModeMismatch(f"cannot combine functions of {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction, _Q)):
            return RatFunc(_as_poly(other), 1, self.var, _reduced=True)
        return NotImplemented

    # -- field operations ----------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.var)
        if o.den == 1:
            return RatFunc(self.num + o.num * self.den, self.den, self.var, _reduced=True)
        if self.den == 1:
            return RatFunc(self.num * o.den + o.num, o.den, self.var, _reduced=True)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.var, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.den == 1 and o.num.degree() <= 0:
            c = o.num[0] if o.num != 0 else _Q(0)
            if c == 0:
                return RatFunc(_Poly([]), 1, self.var, _reduced=True)
            return RatFunc(self.num * c, self.den, self.var, _reduced=True)
        # cross-cancel before multiplying to keep the gcds small
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        return RatFunc(n, d, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num == 0:
            raise DivisionByZero(f"division by the zero function of {self.var!r}")
        return RatFunc(self.den, self.num, self.var)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, self.var, _reduced=True)

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                return False
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, _Q)):
            return self.den == 1 and self.num == _as_poly(other)
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.var, str(self.num), str(self.den)))

    def __bool__(self):
        return self.num != 0

    # -- inspection ----------------------------------------------------
    def is_constant(self) -> bool:
        return self.den == 1 and self.num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _fmpq_to_fraction(self.num[0]) if self.num != 0 else Fraction(0)

    def numerator_coeffs(self) -> list[Fraction]:
        return [_fmpq_to_fraction(c) for c in self.num.coeffs()]

    def denominator_coeffs(self) -> list[Fraction]:
        return [_fmpq_to_fraction(c) for c in self.den.coeffs()]

    def degrees(self) -> tuple[int, int]:
        """(deg num, deg den); the zero function has numerator degree -1."""
        return self.num.degree(), self.den.degree()

    def eval_at(self, x) -> Fraction:
        x = _to_fmpq(x)
        d = self.den(x)
        if d == 0:
            raise PoleAtPoint(f"{self} has a pole at {self.var}={x}")
        return _fmpq_to_fraction(self.num(x) / d)

    def substitute(self, other: "RatFunc") -> "RatFunc":
        """Composition ``self(other)``; the result lives in ``other.var``."""
        def horner(p):
            acc = RatFunc.const(0, other.var)
            for c in reversed(p.coeffs()):
                acc = acc * other + _fmpq_to_fraction(c)
            return acc
        return horner(self.num) / horner(self.den)

    # -- formatting ----------------------------------------------------
    def _fmt(self, p) -> str:
        return str(p).replace("x", self.var)

    def __str__(self):
        if self.den == 1:
            return self._fmt(self.num)
        return f"({self._fmt(self.num)})/({self._fmt(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_json(self) -> dict:
        def enc(cs):
            return {str(k): str(c) for k, c in enumerate(cs) if c != 0}
        return {"num": enc(self.numerator_coeffs()), "den": enc(self.denominator_coeffs())}

    @classmethod
    def from_json(cls, data: Mapping, var: str = "beta") -> "RatFunc":
        def dec(d):
            if not d:
                return _Poly([])
            top = max(int(k) for k in d)
            cs = [Fraction(0)] * (top + 1)
            for k, v in d.items():
                cs[int(k)] = Fraction(v)
            return _as_poly(cs)
        return cls(dec(data["num"]), dec(data["den"]), var)


Scalar = Union[Fraction, RatFunc]


def beta_symbol() -> RatFunc:
    return RatFunc.gen("beta")


def b_symbol() -> RatFunc:
    return RatFunc.gen("b")


def as_scalar(x) -> Scalar:
    """Coerce ints, strings like ``"3/2"`` and fmpq values to ``Fraction``."""
    if isinstance(x, (Fraction, RatFunc)):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, _Q):
        return _fmpq_to_fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def eval_at(f: Scalar, x) -> Fraction:
    """Evaluate ``f`` at a rational point; rationals evaluate to themselves."""
    if isinstance(f, RatFunc):
        return f.eval_at(x)
    return Fraction(f)


def scalar_to_str(x: Scalar) -> str:
    if isinstance(x, RatFunc) and x.is_constant():
        return str(x.constant_value())
    return str(x)


def scalar_to_json(x: Scalar):
    if isinstance(x, RatFunc) and not x.is_constant():
        return x.to_json()
    return scalar_to_str(x)


def random_rational(rng: random.Random, signed: bool = False, bound: int = SAMPLE_BOUND) -> Fraction:
    x = Fraction(rng.randint(1, bound), rng.randint(1, bound))
    if signed and rng.random() < 0.5:
        x = -x
    return x


def identity_test(
    lhs: Callable[..., Scalar],
    rhs: Callable[..., Scalar],
    trials: int,
    seed: int,
    variables: Sequence[str] = ("beta", "u"),
    degree_bound: int | None = None,
    max_retries: int = 100,
) -> bool:
    """Compare two evaluators at random rational points.

    ``lhs`` and ``rhs`` are called with one keyword argument per name in
    ``variables``.  A point where either side divides by zero is resampled;
    more than ``max_retries`` such hits raises :class:`RetryBudgetExhausted`.
    With ``degree_bound`` given, at least ``degree_bound + 1`` points are used.
    """
    rng = random.Random(seed)
    if degree_bound is not None:
        trials = max(trials, degree_bound + 1)
    misses = 0
    done = 0
    while done < trials:
        point = {v: random_rational(rng) for v in variables}
        try:
            left = lhs(**point)
            right = rhs(**point)
        except ZeroDivisionError:
            misses += 1
            if misses > max_retries:
                raise RetryBudgetExhausted(f"{misses} sample points hit poles") from None
            continue
        if left != right:
            return False
        done += 1
    return True
