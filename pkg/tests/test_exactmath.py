import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from jackwhittaker.errors import DivisionByZero, ModeMismatch, PoleAtPoint, RetryBudgetExhausted
from jackwhittaker.exactmath import (RatFunc, as_scalar, beta_symbol, identity_test,
                                     random_rational, scalar_to_json, scalar_to_str)

B = beta_symbol()

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, min_size=1, max_size=4)


@st.composite
def ratfuncs(draw):
    num = draw(polys)
    den = draw(polys)
    assume(any(den))
    return RatFunc(num, den)


def test_polynomial_cancellation():
    assert (B**2 - 1) / (B - 1) == B + 1


def test_rational_addition():
    assert Fraction(2, 3) + Fraction(1, 6) == Fraction(5, 6)


def test_inverse_cancels():
    assert (1 / (1 + B)) * (1 + B) == 1


def test_eval_examples():
    assert (2 / (1 + B)).eval_at(1) == 1
    assert (B + 1).eval_at(Fraction(3, 2)) == Fraction(5, 2)
    with pytest.raises(PoleAtPoint):
        (1 / (B - 1)).eval_at(1)


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        B / (B - B)
    with pytest.raises(DivisionByZero):
        RatFunc([1], [0])


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        RatFunc.gen("beta") + RatFunc.gen("b")


def test_canonical_form_is_order_independent():
    f = (B**2 - 1) / (2 * B + 2)
    g = (B - 1) / 2
    assert f == g
    assert f.denominator_coeffs() == [1] and hash(f) == hash(g)
    h = 1 / (2 * B + 4)
    assert h.denominator_coeffs()[-1] == 1


def test_constants_hash_like_fractions():
    c = (B + 1) / (B + 1) * Fraction(3, 4)
    assert c == Fraction(3, 4)
    assert hash(c) == hash(Fraction(3, 4))
    assert c.is_constant() and c.constant_value() == Fraction(3, 4)


def _random_ratfunc(rng):
    def poly():
        return [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(rng.randint(1, 4))]
    den = poly()
    while not any(den):
        den = poly()
    return RatFunc(poly(), den)


def test_field_axioms_on_random_triples():
    rng = random.Random(2024)
    for _ in range(1000):
        f, g, h = (_random_ratfunc(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f and f * g == g * f
        assert f - f == 0
        if f:
            assert f / f == 1


def test_field_axioms_on_random_rationals():
    rng = random.Random(99)
    for _ in range(1000):
        x, y, z = (random_rational(rng, signed=True) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)


@settings(max_examples=100, deadline=None)
@given(ratfuncs(), ratfuncs(), small)
def test_evaluation_is_a_homomorphism(f, g, x):
    try:
        fx, gx = f.eval_at(x), g.eval_at(x)
    except PoleAtPoint:
        return
    assert (f * g).eval_at(x) == fx * gx
    assert (f + g).eval_at(x) == fx + gx


def test_json_round_trip():
    f = (3 * B**2 - Fraction(1, 2)) / (B + 7)
    data = f.to_json()
    assert data == {"num": {"0": "-1/2", "2": "3"}, "den": {"0": "7", "1": "1"}}
    assert RatFunc.from_json(data) == f
    assert scalar_to_json(Fraction(-3, 4)) == "-3/4"
    assert scalar_to_str(Fraction(5)) == "5"


def test_substitute():
    f = (B + 1) / (B - 2)
    g = 1 / RatFunc.gen("b")
    assert f.substitute(g) == (1 + RatFunc.gen("b")) / (1 - 2 * RatFunc.gen("b"))


def test_as_scalar():
    assert as_scalar("3/2") == Fraction(3, 2)
    assert as_scalar(4) == Fraction(4)
    with pytest.raises(TypeError):
        as_scalar(1.5)


def test_random_rational_bounds():
    rng = random.Random(5)
    xs = [random_rational(rng, signed=True) for _ in range(200)]
    assert any(x < 0 for x in xs) and any(x > 0 for x in xs)
    assert all(abs(x.numerator) <= 10**6 and x.denominator <= 10**6 for x in xs)


def test_identity_test_examples():
    assert identity_test(lambda beta, u: 1, lambda beta, u: 1, trials=5, seed=0)
    assert identity_test(lambda beta, u: (beta + u) ** 2,
                         lambda beta, u: beta**2 + 2 * beta * u + u**2, trials=10, seed=0)
    assert not identity_test(lambda beta, u: beta + u, lambda beta, u: beta - u, trials=3, seed=0)


def test_identity_test_is_deterministic_and_resamples():
    seen = []

    def lhs(beta, u):
        seen.append((beta, u))
        return 1 / (beta - beta) if len(seen) == 1 else beta

    assert identity_test(lhs, lambda beta, u: beta, trials=3, seed=7)
    assert len(seen) == 4


def test_identity_test_retry_budget():
    with pytest.raises(RetryBudgetExhausted):
        identity_test(lambda beta, u: 1 / Fraction(0), lambda beta, u: 0, trials=2, seed=1, max_retries=5)


def test_degree_bound_raises_trial_count():
    calls = []
    identity_test(lambda beta, u: calls.append(1) or 0, lambda beta, u: 0, trials=1, seed=0,
                  degree_bound=6)
    assert len(calls) == 7
