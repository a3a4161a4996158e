import math

import pytest
from hypothesis import given, settings, strategies as st

from weylkit import laurent
from weylkit.errors import IndeterminateError
from weylkit.laurent import LaurentScalar


def scalars(q=3, min_exp=-3, max_exp=4):
    exponents = st.lists(st.integers(min_exp, max_exp), max_size=4)
    coeffs = st.lists(st.integers(1, q - 1), min_size=4, max_size=4)
    def build(exps, cs):
        d = {}
        for e, c in zip(exps, cs):
            d[e] = (d.get(e, 0) + c) % q
        return LaurentScalar(q, d)
    return st.builds(build, exponents, coeffs)


def test_parse_and_render_round_trip():
    x = laurent.parse_scalar("1+2e+e2", 3)
    assert x.render() == "1+2e+e2"
    y = laurent.parse_scalar(x.render(), 3)
    assert y == x


def test_parse_shift_marker():
    # "@v" multiplies the whole polynomial by e^v
    x = laurent.parse_scalar("1+e@2", 3)
    assert x == laurent.parse_scalar("e2+e3", 3)


def test_parse_with_finite_precision():
    x = laurent.parse_scalar("1+e", 2, prec=4)
    assert x.prec == 4
    assert not x.is_exact()


def test_valuation_of_zero_is_infinite():
    assert LaurentScalar.zero(3).valuation() is math.inf


def test_valuation_indeterminate_when_truncated_zero():
    z = LaurentScalar(3, {}, prec=5)
    with pytest.raises(IndeterminateError) as info:
        z.valuation()
    assert info.value.partial == 5


@given(scalars(), scalars())
@settings(max_examples=80, deadline=None)
def test_valuation_multiplicative(a, b):
    if a == LaurentScalar.zero(3) or b == LaurentScalar.zero(3):
        return
    assert (a * b).valuation() == a.valuation() + b.valuation()


@given(scalars(), scalars())
@settings(max_examples=80, deadline=None)
def test_ultrametric_inequality(a, b):
    s = a + b
    if s == LaurentScalar.zero(3):
        return
    assert s.valuation() >= min(a.valuation(), b.valuation())


@given(scalars(), scalars(), scalars())
@settings(max_examples=50, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(scalars())
@settings(max_examples=50, deadline=None)
def test_inverse_round_trip(a):
    if a == LaurentScalar.zero(3):
        return
    inv = a.inverse(prec=6)
    product = a * inv
    one = LaurentScalar.one(3)
    # equal up to the guaranteed precision
    diff = product - one
    assert diff.is_zero_to_prec()


def test_inverse_precision_guard():
    a = laurent.parse_scalar("1+e", 3, prec=3)
    with pytest.raises(IndeterminateError):
        a.inverse(prec=10)


def test_exact_division_of_monomials():
    q = 5
    e2 = LaurentScalar.eps(q, 2)
    e5 = LaurentScalar.eps(q, 5)
    assert e5 / e2 == LaurentScalar.eps(q, 3)


def test_matrix_round_trip_and_inverse():
    M = laurent.parse_matrix("0,1;e,0", 2)
    Minv = laurent.mat_inv(M, prec=6)
    prod = laurent.mat_mul(M, Minv)
    eye = laurent.identity_matrix(2)
    for i in range(2):
        for j in range(2):
            diff = prod[i][j] - eye[i][j]
            assert diff == LaurentScalar.zero(2) or diff.is_zero_to_prec()


def test_pessimistic_multiplication_precision():
    a = laurent.parse_scalar("e", 3, prec=5)    # valuation 1, precision 5
    b = laurent.parse_scalar("1+e", 3, prec=4)  # valuation 0, precision 4
    c = a * b
    assert c.prec == min(1 + 4, 0 + 5)
