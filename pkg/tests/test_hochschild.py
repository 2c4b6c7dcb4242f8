import random

import pytest
from hypothesis import given, settings, strategies as st

from pvacl import hochschild as hh
from pvacl.algebra import ONE, DiffPoly, monomials_up_to
from pvacl.sampling import Bounds, sample_tuples

u = DiffPoly.var("u")
POOL = monomials_up_to(["u"], 2, 2)


def tuples(n, cap=30, salt="h"):
    return sample_tuples(POOL, n, Bounds(max_tuples=cap), salt)


def test_differential_in_low_degree():
    c = hh.constant_cochain(u)
    dc = hh.hochschild_d(c)
    # (d c)(a) = a c - c a = 0 for commutative V
    assert all(not dc.on_monomials(ms) for ms in tuples(1))
    D = hh.multidifferential(1, [(1, ONE, (1,))], label="d")
    # a derivation is a 1-cocycle
    assert hh.vanishes(hh.hochschild_d(D), tuples(2)) == ""
    sq = hh.multidifferential(1, [(1, ONE, (2,))], label="d2")
    assert hh.hochschild_d(sq)(u, u) == u.derive() * u.derive() * -2


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 10 ** 6), st.booleans())
def test_d_squared_is_zero(n, seed, dlinear):
    F = hh.random_cochain(n, random.Random(seed), dlinear=dlinear) if n else hh.constant_cochain(u * u)
    assert hh.vanishes(hh.hochschild_d(hh.hochschild_d(F)), tuples(n + 2, 12, f"dd{n}")) == ""


@pytest.mark.parametrize("n", [1, 2, 3])
def test_d_preserves_dlinearity(n):
    F = hh.random_cochain(n, random.Random(n), dlinear=True)
    ts = tuples(n, 12)
    assert hh.is_dlinear(F, ts).passed
    assert hh.is_dlinear(hh.hochschild_d(F), tuples(n + 1, 12)).passed


def test_dlinearity_detects_coefficients():
    F = hh.multidifferential(1, [(1, (("u", 0),), (0,))])
    assert not hh.is_dlinear(F, tuples(1)).passed


def test_harrison_operators():
    F = hh.random_cochain(3, random.Random(5))
    with pytest.raises(ValueError):
        hh.harrison_L(1, F)
    with pytest.raises(ValueError):
        hh.harrison_L(4, F)
    # M_2^2 = {[2 1]} with drop sum 2, so L_2 F(a, b) = F(b, a)
    G = hh.random_cochain(2, random.Random(6))
    L2 = hh.harrison_L(2, G)
    for ms in tuples(2):
        assert L2.on_monomials(ms) == G.on_monomials(ms[::-1])


def test_symmetric_arity_two_is_harrison():
    G = hh.symmetric_cochain(hh.random_cochain(2, random.Random(2)))
    assert all(r.passed for r in hh.is_harrison(G, tuples(2)))
    F = hh.random_cochain(2, random.Random(3))
    A = hh.HCochain(2, lambda ms: F.on_monomials(ms) - F.on_monomials(ms[::-1]), label="skew")
    assert not all(r.passed for r in hh.is_harrison(A, tuples(2)))


def test_harrison_closure_under_d():
    G = hh.symmetric_cochain(hh.random_cochain(2, random.Random(9)))
    dG = hh.hochschild_d(G)
    assert all(r.passed for r in hh.is_harrison(dG, tuples(3, 20)))


def test_arity_checks():
    F = hh.random_cochain(2, random.Random(0))
    with pytest.raises(ValueError):
        F(u)
    with pytest.raises(ValueError):
        hh.symmetric_cochain(hh.random_cochain(3, random.Random(0)))
    with pytest.raises(ValueError):
        hh.HCochain(-1, lambda ms: DiffPoly())
