"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also written to the terminal when output is captured.
"""

import pytest

from twistcalc import acceptance, combin
from twistcalc.schur_oracle import oracle_ext

# Nonnegative integer matrices with row sums lam and column sums mu, taken
# as coefficients of prod 1/(1 - x_i y_j) before any module code existed.
MATRIX_COUNTS = {
    ((1,), (1,)): 1,
    ((2,), (2,)): 1, ((2,), (1, 1)): 1, ((1, 1), (2,)): 1, ((1, 1), (1, 1)): 2,
    ((3,), (3,)): 1, ((3,), (2, 1)): 1, ((3,), (1, 1, 1)): 1,
    ((2, 1), (3,)): 1, ((2, 1), (2, 1)): 2, ((2, 1), (1, 1, 1)): 3,
    ((1, 1, 1), (3,)): 1, ((1, 1, 1), (2, 1)): 3, ((1, 1, 1), (1, 1, 1)): 6,
    ((4,), (4,)): 1, ((4,), (3, 1)): 1, ((4,), (2, 2)): 1, ((4,), (2, 1, 1)): 1, ((4,), (1, 1, 1, 1)): 1,
    ((3, 1), (4,)): 1, ((3, 1), (3, 1)): 2, ((3, 1), (2, 2)): 2, ((3, 1), (2, 1, 1)): 3, ((3, 1), (1, 1, 1, 1)): 4,
    ((2, 2), (4,)): 1, ((2, 2), (3, 1)): 2, ((2, 2), (2, 2)): 3, ((2, 2), (2, 1, 1)): 4, ((2, 2), (1, 1, 1, 1)): 6,
    ((2, 1, 1), (4,)): 1, ((2, 1, 1), (3, 1)): 3, ((2, 1, 1), (2, 2)): 4, ((2, 1, 1), (2, 1, 1)): 7,
    ((2, 1, 1), (1, 1, 1, 1)): 12,
    ((1, 1, 1, 1), (4,)): 1, ((1, 1, 1, 1), (3, 1)): 4, ((1, 1, 1, 1), (2, 2)): 6, ((1, 1, 1, 1), (2, 1, 1)): 12,
    ((1, 1, 1, 1), (1, 1, 1, 1)): 24,
}


@pytest.fixture
def report(capsys):
    def emit(result):
        with capsys.disabled():
            print("\n" + result.line())
        assert result.ok, result.detail
        return result

    return emit


def test_criterion_01_er_table(report):
    report(acceptance.criterion_1())


def test_criterion_02_factorization(report):
    report(acceptance.criterion_2())


def test_criterion_03_frobenius_self_extensions(report):
    result = report(acceptance.criterion_3(stretch_goal=True))
    assert result.seconds < 60
    got = oracle_ext("Fr(1)", "Fr(1)", 2, 6)
    assert [got.get(k, 0) for k in range(7)] == [1, 0, 1, 0, 0, 0, 0]


def test_criterion_04_engine_oracle(report):
    report(acceptance.criterion_4())


def test_criterion_05_periodic_remainder(report):
    report(acceptance.criterion_5(seed=0, count=200))


def test_criterion_06_dimension_polynomial(report):
    report(acceptance.criterion_6(seed=0, count=100))


def test_criterion_07_hom_combinatorics(report):
    pairs = [(lam, mu) for D in range(1, 5) for lam in combin.partitions(D) for mu in combin.partitions(D)]
    assert set(pairs) == set(MATRIX_COUNTS)
    for pair in pairs:
        assert acceptance.count_integer_matrices(*pair) == MATRIX_COUNTS[pair]
    report(acceptance.criterion_7(max_degree=4))


def test_criterion_08_classes_laws(report):
    report(acceptance.criterion_8())


def test_criterion_09_steinberg(report):
    report(acceptance.criterion_9())


def test_criterion_10_pairings(report):
    report(acceptance.criterion_10())


def test_criterion_11_sym_hilbert(report):
    report(acceptance.criterion_11())
