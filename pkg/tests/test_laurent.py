"""Exact Laurent-polynomial coefficients and linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiedbox.laurent import (
    DELTA,
    ONE,
    Q,
    QDIFF,
    QINV,
    ZERO,
    LaurentFrac,
    LaurentPoly,
    matrix_rank,
    poly_gcd,
)

polys = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=4),
)


def test_constants():
    assert Q * QINV == ONE
    assert QDIFF == Q - QINV
    assert DELTA == Q + QINV
    assert ZERO + ONE == ONE
    assert not ZERO


def test_evaluate():
    # (q - q^-1)(q + q^-1) = q^2 - q^-2, checked at q = 3
    p = QDIFF * DELTA
    assert p.evaluate(Fraction(3)) == Fraction(9) - Fraction(1, 9)


@given(polys)
@settings(max_examples=100, deadline=None)
def test_str_parse_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys, polys, polys)
@settings(max_examples=150, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_divexact_inverts_multiplication(a, b):
    if not b:
        return
    assert (a * b).divexact(b) == a


@given(polys, polys)
@settings(max_examples=80, deadline=None)
def test_gcd_divides_both(a, b):
    if not a and not b:
        return
    g = poly_gcd(a, b)
    assert g
    if a:
        assert a.divexact(g) * g == a
    if b:
        assert b.divexact(g) * g == b


def test_frac_arithmetic():
    half = LaurentFrac(ONE) / LaurentFrac(DELTA)
    assert half * LaurentFrac(DELTA) == LaurentFrac(ONE)
    assert half - half == LaurentFrac(0)
    assert not (half - half)


def test_rank_exact_known_matrix():
    # [[1, q], [q^-1, 1]] has rank 1; adding a generic third row gives 2
    rows = [{0: ONE, 1: Q}, {0: QINV, 1: ONE}]
    assert matrix_rank(rows, mode="exact") == 1
    rows.append({0: ONE, 1: QDIFF})
    assert matrix_rank(rows, mode="exact") == 2


@given(st.lists(st.dictionaries(st.integers(0, 5), polys, max_size=4),
                min_size=1, max_size=5),
       st.integers(0, 2 ** 31))
@settings(max_examples=60, deadline=None)
def test_probabilistic_rank_bounded_by_exact(rows, seed):
    exact = matrix_rank(rows, mode="exact")
    assert matrix_rank(rows, mode="probabilistic", seed=seed) <= exact


def test_rank_rejects_unknown_mode():
    with pytest.raises(ValueError):
        matrix_rank([{0: ONE}], mode="nope")
