import random
from fractions import Fraction as Fr

import pytest

from posetpoly.matrices import (
    PolyMatrix,
    RatMatrix,
    matrix_exp_scaled,
    matrix_log_unipotent,
)
from posetpoly.polynomials import UniPoly

T = UniPoly.variable()


def random_strict_upper(rng: random.Random, n: int) -> RatMatrix:
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                entries[(i, j)] = Fr(rng.randint(-3, 3), rng.randint(1, 3))
    return RatMatrix.from_entries(n, entries)


# --- RatMatrix basics ---


def test_from_rows_and_entry():
    m = RatMatrix.from_rows([[0, 1], [0, 0]])
    assert m.entry(0, 1) == 1
    assert m.entry(1, 0) == 0
    assert m.to_lists() == [[Fr(0), Fr(1)], [Fr(0), Fr(0)]]


def test_from_rows_rejects_nonsquare():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[0, 1]])


def test_identity_and_multiplication():
    rng = random.Random(99)
    a = random_strict_upper(rng, 5)
    eye = RatMatrix.identity(5)
    assert a * eye == a
    assert eye * a == a
    assert a**3 == a * a * a
    assert (a + a.scaled(-1)).is_zero()


def test_strict_upper_triangular_predicate():
    assert RatMatrix.from_rows([[0, 1], [0, 0]]).is_strictly_upper_triangular()
    assert not RatMatrix.identity(2).is_strictly_upper_triangular()
    assert not RatMatrix.from_rows([[0, 0], [1, 0]]).is_strictly_upper_triangular()


def test_multiplication_matches_dense_rule():
    rng = random.Random(1234)
    for _ in range(10):
        n = rng.randint(1, 4)
        a = random_strict_upper(rng, n) + RatMatrix.identity(n).scaled(rng.randint(-2, 2))
        b = random_strict_upper(rng, n)
        prod = a * b
        for i in range(n):
            for j in range(n):
                expected = sum((a.entry(i, k) * b.entry(k, j) for k in range(n)), Fr(0))
                assert prod.entry(i, j) == expected


# --- unipotent logarithm ---


def test_log_of_zero_matrix():
    assert matrix_log_unipotent(RatMatrix.zeros(3)).is_zero()


def test_log_two_by_two():
    a = RatMatrix.from_rows([[0, 1], [0, 0]])
    assert matrix_log_unipotent(a) == a  # A² = 0


def test_log_three_chain():
    a = RatMatrix.from_entries(3, {(0, 1): 1, (1, 2): 1, (0, 2): 1})
    phi = matrix_log_unipotent(a)
    assert phi.entry(0, 1) == 1
    assert phi.entry(1, 2) == 1
    assert phi.entry(0, 2) == Fr(1, 2)


def test_log_rejects_nontriangular():
    with pytest.raises(ValueError):
        matrix_log_unipotent(RatMatrix.identity(2))


# --- scaled exponential ---


def test_exp_of_zero_is_identity():
    assert matrix_exp_scaled(RatMatrix.zeros(3)) == PolyMatrix.identity(3)


def test_exp_two_by_two():
    phi = RatMatrix.from_rows([[0, 1], [0, 0]])
    theta = matrix_exp_scaled(phi)
    assert theta.entry(0, 1) == T
    assert theta.entry(0, 0) == UniPoly([1])
    assert theta.entry(1, 1) == UniPoly([1])


def test_exp_rejects_nontriangular():
    with pytest.raises(ValueError):
        matrix_exp_scaled(RatMatrix.from_rows([[0, 0], [1, 0]]))


def test_exp_log_round_trip_at_integer_powers():
    """exp(t·ln(I+A)) at t=m recovers (I+A)^m exactly."""
    rng = random.Random(20260815)
    for _ in range(8):
        n = rng.randint(1, 8)
        a = random_strict_upper(rng, n)
        theta = matrix_exp_scaled(matrix_log_unipotent(a))
        one_plus_a = RatMatrix.identity(n) + a
        assert theta.eval_at(1) == one_plus_a
        for m in range(6):
            assert theta.eval_at(m) == one_plus_a**m
