"""Sparse polynomial arithmetic, reduction, and gcd over Q(i)."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from orthopair.poly import (
    ANY_DEGREE,
    GRADED_LEX,
    GradedLex,
    MPoly,
    divides,
    exact_div,
    gcd,
    monic,
    reduce_mod,
    tuple_gcd,
)
from orthopair.scalar import GaussianRational, I, ONE, gr


def variables(n):
    return [MPoly.variable(n, i) for i in range(n)]


# The worked reduction pair: the pairing polynomial of a known orthogonal
# pair and the source bilinear form, in 8 variables z1..z4, xi1..xi4.
def _pairing_fixture():
    z1, z2, z3, z4, x1, x2, x3, x4 = variables(8)
    X = z1 * x1 + z2 * x2
    Y = z3 * x3 + z4 * x4
    g = X * X - Y * Y
    b = X - Y
    return g, b, X, Y


def test_reduce_mod_exact_quotient():
    g, b, X, Y = _pairing_fixture()
    q, r = reduce_mod(g, b)
    assert r.is_zero()
    assert q == X + Y
    assert q * b + r == g


def test_reduce_mod_nonzero_remainder_with_witness():
    z1, z2, z3, z4, x1, x2, x3, x4 = variables(8)
    Y = z3 * x3 + z4 * x4
    g = z1**2 * x1**2 + z2**2 * x2**2 - Y * Y
    b = z1 * x1 + z2 * x2 - Y
    q, r = reduce_mod(g, b)
    assert not r.is_zero()
    assert q * b + r == g
    point = [1, 1, 0, 0, 1, -1, 0, 0]
    assert b.evaluate(point).is_zero()
    assert g.evaluate(point) == gr(2)


def test_reduce_mod_zero_divisor_raises():
    with pytest.raises(ZeroDivisionError):
        reduce_mod(MPoly.constant(2, 1), MPoly.zero(2))


def test_divisibility_agrees_across_orders():
    g, b, _, _ = _pairing_fixture()
    reversed_priority = GradedLex(tuple(range(7, -1, -1)))
    assert divides(b, g) and divides(b, g, reversed_priority)
    g2 = g + MPoly.constant(8, 1)
    assert not divides(b, g2) and not divides(b, g2, reversed_priority)
    # quotient-remainder identity holds under both orders
    for order in (GRADED_LEX, reversed_priority):
        q, r = reduce_mod(g2, b, order)
        assert q * b + r == g2


def test_tuple_gcd_worked_example():
    w1, w2 = variables(2)
    p = w1 * w2 + w1 * w1
    q = w1 * w2 + w2 * w2
    g, prims = tuple_gcd([p, q])
    assert g == w1 + w2
    assert prims == [w1, w2]


def test_tuple_gcd_includes_zero_entries():
    w1, w2 = variables(2)
    g, prims = tuple_gcd([w1 * w1 * w2, MPoly.zero(2), w1 * w2 * w2])
    assert g == w1 * w2
    assert prims[1].is_zero()
    assert prims[0] == w1 and prims[2] == w2


def test_tuple_gcd_all_zero_raises():
    with pytest.raises(ValueError):
        tuple_gcd([MPoly.zero(2), MPoly.zero(2)])


def test_gcd_normalization_is_monic():
    w1, w2 = variables(2)
    p = (2 * w1 + 2 * w2) * w1
    q = (2 * w1 + 2 * w2) * w2
    assert gcd(p, q) == w1 + w2


def test_gcd_with_gaussian_coefficients():
    w1, w2 = variables(2)
    common = w1 + I * w2
    g = gcd(common * w1, common * (w2 + 1))
    assert g == common
    assert exact_div(common * w1, g) == w1


def test_homogeneous_degree_tags():
    z1, z2 = variables(2)
    assert (z1 * z2 + z2**2).homogeneous_degree() == 2
    assert (z1 + z2**2).homogeneous_degree() is None
    assert MPoly.zero(2).homogeneous_degree() is ANY_DEGREE
    assert MPoly.constant(2, 5).homogeneous_degree() == 0


def test_compose_substitution():
    z1, z2 = variables(2)
    p = z1**2 - z2
    t1, t2 = variables(2)
    out = p.compose([t1 + t2, t1 * t2])
    assert out == t1**2 + 2 * t1 * t2 + t2**2 - t1 * t2


def test_evaluate_length_mismatch():
    with pytest.raises(ValueError):
        MPoly.constant(3, 1).evaluate([1, 2])


def test_arity_mismatch_raises():
    with pytest.raises(ValueError):
        MPoly.constant(2, 1) + MPoly.constant(3, 1)


def test_conj_coefficients():
    z1, _ = variables(2)
    p = z1.scale(gr(1, 2))
    assert p.conj_coefficients() == z1.scale(gr(1, -2))


# --- randomized algebra ---

coeffs = st.builds(
    GaussianRational,
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: MPoly(3, d)
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_division_identity_and_remainder_support(p, b):
    q, r = reduce_mod(p, b)
    assert q * b + r == p
    lead, _ = GRADED_LEX.leading(b)
    for exp in r.terms:
        assert not all(x <= y for x, y in zip(lead, exp))


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(p, q):
    g = gcd(p, q)
    assert divides(g, p) and divides(g, q)
    assert g == monic(g)


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=30, deadline=None)
def test_products_are_divisible(p, q):
    assert divides(p, p * q)
    assert exact_div(p * q, p) == q
