from fractions import Fraction

import pytest

from conftest import random_points
from jackwhittaker.combinatorics import Partition, block_encoding, partitions_up_to
from jackwhittaker.errors import PoleAtPoint
from jackwhittaker.exactmath import beta_symbol
from jackwhittaker.identities import (f1_block, f1_eval, f1_expected, f2_block, f2_eval,
                                      f2_expected, f2_linear_coefficients, recursion_consistent,
                                      recursion_ratio, verify_identities)
from jackwhittaker.whittaker import recursion_prefactor

beta = beta_symbol()


def test_f1_examples():
    assert f1_eval((1,), beta) == 1
    assert f1_eval((2, 1), beta) == 3
    assert f1_eval((), beta) == 0
    # the partition drawn in the diagram has 13 boxes; the one quoted in the text has 12
    assert f1_eval((4, 4, 2, 1, 1, 1), beta) == 13
    assert f1_eval((4, 4, 2, 1, 1), beta) == 12


def test_f2_examples():
    assert f2_eval((1,), beta) == 1 - 2 * beta
    assert f2_eval((2,), beta) == 4 - 4 * beta
    assert f2_eval((2, 1), beta) == 5 - 8 * beta
    assert f2_eval((), beta) == 0


def test_block_form_agrees():
    for lam in partitions_up_to(8):
        if lam:
            ms, ns = block_encoding(lam)
            assert f1_block(ms, ns, beta) == f1_eval(lam, beta)
            assert f2_block(ms, ns, beta) == f2_eval(lam, beta)


def test_pole_at_special_value():
    # for (1,1) the first ratio is (0 + 2 beta)/(0 + beta), singular at beta = 0
    with pytest.raises(PoleAtPoint):
        f1_eval((1, 1), Fraction(0))


@pytest.mark.parametrize("n", [3, 8])
def test_symbolic_identities(n):
    report = verify_identities(n, "symbolic")
    assert report.ok and report.failures == []
    assert len(report.rows) == len(partitions_up_to(n)) - 1


def test_sampled_identities_are_seeded():
    a = verify_identities(6, "sampled", seed=4).to_json()
    b = verify_identities(6, "sampled", seed=4).to_json()
    assert a == b and a["pass"] and a["seed"] == 4


def test_mutation_is_detected():
    def bent_f1(lam, b):
        # one exponent perturbed: the last corner's weight is squared
        lam = Partition(lam)
        from jackwhittaker.identities import corner_weight
        rows = [i for i in range(1, len(lam) + 1) if i == len(lam) or lam[i] < lam[i - 1]]
        total = sum((corner_weight(lam, I, b) for I in rows[:-1]), Fraction(0))
        return total + corner_weight(lam, rows[-1], b) ** 2

    report = verify_identities(5, "symbolic", f1=bent_f1)
    assert not report.ok
    assert Partition([1, 1]) in report.failures
    sampled = verify_identities(5, "sampled", seed=1, f1=bent_f1)
    assert not sampled.ok


def test_f2_is_linear_with_expected_coefficients():
    for lam in partitions_up_to(8):
        if not lam:
            continue
        const, slope = f2_linear_coefficients(lam)
        assert const == sum(p * p for p in lam)
        assert slope == -sum(2 * i * p for i, p in enumerate(lam, 1))


@pytest.mark.parametrize("pt", random_points(17, 3))
def test_consistency_with_the_recursion(pt):
    B, u = pt["beta"], pt["u"]
    for lam in partitions_up_to(6):
        if not lam:
            continue
        assert recursion_consistent(lam, B, u)
        assert recursion_ratio(lam, B, u) == recursion_prefactor(lam, B, u)
        assert (1 + u) * f1_expected(lam) + f2_expected(lam, B) == recursion_prefactor(lam, B, u)


def test_report_json():
    doc = verify_identities(2).to_json()
    assert doc["pass"] and doc["checked"] == 3
    assert doc["partitions"]["[1,1]"]["f1"] == "2"
