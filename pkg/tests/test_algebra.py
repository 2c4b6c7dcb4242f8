from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pvacl.algebra import (DiffPoly, LambdaPoly, is_normal, mono_derive_k, monomials_up_to, normalize,
                           normalize_by_expansion, total_derivative_class)

u = DiffPoly.var("u")
v = DiffPoly.var("v")

mono_st = st.lists(st.tuples(st.sampled_from("uv"), st.integers(0, 3)), max_size=3).map(lambda x: tuple(sorted(x)))
coeff_st = st.one_of(st.integers(-4, 4), st.fractions(min_value=-2, max_value=2, max_denominator=3))
diffpoly_st = st.dictionaries(mono_st, coeff_st, max_size=4).map(DiffPoly)


@st.composite
def lambdapoly_st(draw, nvars=None):
    n = nvars or draw(st.integers(1, 3))
    terms = draw(st.dictionaries(
        st.tuples(st.tuples(*[st.integers(0, 3)] * n), mono_st), coeff_st, max_size=5))
    return LambdaPoly(n, terms)


def test_printing():
    assert str(u * u.derive() * 2 - 1) == "-1 + 2*u*u'"
    assert str(DiffPoly()) == "0"
    assert str(LambdaPoly.lam(1, 1) * u + 3) == "(u)*λ + 3"


def test_derivatives():
    assert (u ** 2).derive() == u * u.derive() * 2
    assert (u * v).derive(2) == u.derive(2) * v + u.derive() * v.derive() * 2 + u * v.derive(2)
    assert DiffPoly.const(5).derive() == DiffPoly()
    assert dict(mono_derive_k((("u", 0), ("u", 0)), 1)) == {(("u", 0), ("u", 1)): 2}


def test_integral_coefficients_stay_int():
    p = u * Fraction(3, 2) * 2
    assert all(type(c) is int for c in p.terms.values())


@given(diffpoly_st, diffpoly_st)
def test_leibniz(a, b):
    assert (a * b).derive() == a.derive() * b + a * b.derive()


@given(diffpoly_st, diffpoly_st, diffpoly_st)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == DiffPoly()


def test_monomial_pool():
    pool = monomials_up_to(["u"], 2, 1)
    assert len(pool) == len(set(pool))
    assert () in pool and (("u", 0), ("u", 1)) in pool
    assert len(pool) == 1 + 2 + 3


def test_normalize_one_variable():
    # lambda = -d in V_1
    lam = LambdaPoly.lam(1, 1)
    assert normalize(lam * u) == LambdaPoly.from_diffpoly(-u.derive(), 1)
    assert normalize(lam * lam * u) == LambdaPoly.from_diffpoly(u.derive(2), 1)


def test_normalize_two_variables():
    l1, l2 = LambdaPoly.lam(1, 2), LambdaPoly.lam(2, 2)
    U = LambdaPoly.from_diffpoly(u, 2)
    assert normalize(l2 * U) == -(l1 * U) - LambdaPoly.from_diffpoly(u.derive(), 2)
    with pytest.raises(ValueError):
        normalize(l2 * U, 3)


@settings(max_examples=60)
@given(lambdapoly_st())
def test_normalize_matches_expansion(p):
    a = normalize(p)
    assert a == normalize_by_expansion(p)
    assert is_normal(a)
    assert normalize(a) == a


@settings(max_examples=60)
@given(lambdapoly_st())
def test_total_derivative_is_zero_in_quotient(p):
    # (lambda_1 + ... + lambda_n + d) p vanishes in V_n
    n = p.nvars
    s = sum((LambdaPoly.lam(i, n) for i in range(1, n + 1)), LambdaPoly.zero(n))
    assert normalize(s * p + p.derive_coeffs()) == LambdaPoly.zero(n)
    assert total_derivative_class(p) == normalize(-(s * p))


@given(lambdapoly_st(nvars=2))
def test_substitute_identity_and_swap(p):
    assert p.substitute([(1, 0), (0, 1)], 2) == p
    swapped = p.substitute([(0, 1), (1, 0)], 2)
    assert swapped.substitute([(0, 1), (1, 0)], 2) == p


def test_substitute_linear_form():
    l1 = LambdaPoly.lam(1, 1)
    p = l1 * l1
    got = p.substitute([(1, 1)], 2)
    l = LambdaPoly.lam
    assert got == l(1, 2) * l(1, 2) + l(1, 2) * l(2, 2) * 2 + l(2, 2) * l(2, 2)


def test_lambda_free_conversion():
    p = LambdaPoly.from_diffpoly(u * 2, 2)
    assert p.is_lambda_free() and p.to_diffpoly() == u * 2
    with pytest.raises(ValueError):
        (LambdaPoly.lam(1, 2) * u).to_diffpoly()
