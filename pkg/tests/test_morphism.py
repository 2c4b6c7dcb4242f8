import random

import pytest

from pvacl import hochschild as hh
from pvacl import morphism, operad, perms, pva
from pvacl.algebra import DiffPoly, monomials_up_to
from pvacl.cochains import random_sesquilinear
from pvacl.graphs import enumerate_lines
from pvacl.sampling import Bounds, sample_tuples

POOL = monomials_up_to(["u"], 2, 1)


def tuples(n, cap=10, salt="m"):
    return sample_tuples(POOL, n, Bounds(max_tuples=cap), salt)


def vanishes_on_shuffles(F, ts) -> bool:
    """Classical Harrison condition: sum over (p, n-p)-shuffles s of
    sign(s) F(a_{s^-1(1)}, ..., a_{s^-1(n)}) is zero for 0 < p < n."""
    n = F.arity
    for p in range(1, n):
        shuffles = perms.enumerate_shuffles(p, n - p)
        for ms in ts:
            acc = DiffPoly()
            for s in shuffles:
                t = perms.inverse(s)
                acc = acc + F.on_monomials(tuple(ms[i - 1] for i in t)) * perms.sign(s)
            if acc:
                return False
    return True


def symmetric(n, seed):
    return operad.symmetrize(random_sesquilinear(n, seed))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_of_symmetric_is_harrison(n):
    F = morphism.phi(symmetric(n, f"phi{n}"))
    ts = tuples(n)
    assert all(r.passed for r in hh.is_harrison(F, ts))
    assert vanishes_on_shuffles(F, ts)
    assert any(F.on_monomials(ms) for ms in ts)


def test_shuffle_oracle_rejects_non_harrison():
    F = hh.random_cochain(3, random.Random(4))
    ts = tuples(3)
    assert not all(r.passed for r in hh.is_harrison(F, ts))
    assert not vanishes_on_shuffles(F, ts)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lift_round_trip(n):
    F = morphism.phi(symmetric(n, f"lift{n}"))
    ts = tuples(n, 6)
    res = morphism.check_lift(F, ts)
    assert all(r.passed for r in res), [r.detail for r in res if not r.passed]
    Y = morphism.lift_top(F, check_tuples=ts)
    for L in enumerate_lines(n):
        if not L.is_connected():
            assert all(not Y.on_line(L, ms) for ms in ts)


def test_lift_refuses_non_harrison():
    F = hh.random_cochain(2, random.Random(1))
    with pytest.raises(ValueError):
        morphism.lift_top(F, check_tuples=tuples(2))


def test_phi_requires_lambda_free_value():
    Y = operad.ClCochain(2, lambda L, ms: pva.LambdaPoly.lam(1, 2) * DiffPoly.monomial(ms[0]))
    with pytest.raises(ValueError):
        morphism.phi(Y).on_monomials(((("u", 0),), (("u", 0),)))


def test_lift_trace_n3():
    F = morphism.phi(symmetric(3, "trace"))
    trace = morphism.lift_symmetry_trace(F, ((("u", 0),), (("u", 1),), (("u", 0), ("u", 0))))
    assert len(trace) == 6 * 2
    assert all(lhs == rhs for _, _, _, lhs, rhs in trace)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chain_map_gfz(n):
    X = pva.build_master(pva.gfz())
    Y = symmetric(n, f"chain{n}")
    assert morphism.check_chain_map(X, Y, tuples(n + 1, 6)).passed


def test_chain_map_sign_is_exact():
    X = pva.build_master(pva.gfz())
    Y = symmetric(2, "sign")
    ts = tuples(3, 6)
    lhs = operad.bracket(X, Y)
    dF = hh.hochschild_d(morphism.phi(Y))
    top = morphism.standard_line(3)
    pairs = [(lhs.on_line(top, ms).to_diffpoly(), dF.on_monomials(ms)) for ms in ts]
    assert any(b for _, b in pairs)
    # (-1)^(n+1) = -1 for n = 2, and the opposite sign fails
    assert all(a == -b for a, b in pairs)
    assert not all(a == b for a, b in pairs)


def test_cocycle_from_master():
    X = pva.build_master(pva.zero_bracket())
    assert morphism.check_cocycle(X, X, tuples(3, 8)).passed
