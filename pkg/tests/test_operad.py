from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from pvacl import operad, perms, pva
from pvacl.algebra import DiffPoly, LambdaPoly, monomials_up_to
from pvacl.cochains import random_sesquilinear
from pvacl.graphs import Digraph, enumerate_lines, make_line
from pvacl.sampling import Bounds, sample_tuples

POOL = monomials_up_to(["u"], 2, 1)
U = (("u", 0),)
DU = (("u", 1),)


def tuples(n, cap=6, salt="t"):
    return sample_tuples(POOL, n, Bounds(max_tuples=cap), salt)


def product_cochain():
    """a (x) b -> ab on the arrow 1 -> 2, zero on the edgeless graph."""
    L = make_line(2, [(1, 2)])
    return operad.from_line_table(
        2, {L: lambda ms: LambdaPoly.from_diffpoly(DiffPoly.monomial(ms[0]) * DiffPoly.monomial(ms[1]), 2)},
        label="m")


def test_parity_and_arity():
    assert operad.unit().parity == 0
    assert random_sesquilinear(2, 0).parity == 1
    with pytest.raises(ValueError):
        operad.ClCochain(0, lambda L, m: None)


def test_cycle_relations_hold_on_evaluation():
    f = random_sesquilinear(2, 1)
    for ms in tuples(2):
        assert f.on_graph(Digraph(2, [(2, 1)]), ms) == -f.on_graph(Digraph(2, [(1, 2)]), ms)
        assert not f.on_graph(Digraph(2, [(1, 2), (2, 1)]), ms)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unit_laws(n):
    f = random_sesquilinear(n, "unit")
    ts = tuples(n)
    assert operad.first_difference(operad.compose(f, [operad.unit()] * n), f, ts) is None
    assert operad.first_difference(operad.compose(operad.unit(), [f]), f, ts) is None


def test_product_composition_is_triple_product():
    m = product_cochain()
    mm = operad.compose(m, [m, operad.unit()])
    a, b, c = U, DU, (("u", 0), ("u", 0))
    val = mm.on_line(make_line(3, [(1, 2, 3)]), (a, b, c))
    assert val == LambdaPoly.from_diffpoly(DiffPoly.monomial(a) * DiffPoly.monomial(b) * DiffPoly.monomial(c), 3)
    assert not mm.on_line(make_line(3, [(1,), (2,), (3,)]), (a, b, c))


def test_compose_vanishes_on_non_forest_quotient():
    f = random_sesquilinear(2, 2)
    g = random_sesquilinear(2, 3)
    # 1>3 and 2>4 both join block 1 to block 2, a double edge in the quotient
    G = Digraph(4, [(1, 3), (2, 4)])
    assert not operad.compose_at(f, [g, g], G, (U, U, U, U))


@pytest.mark.parametrize("ms,ls", [((2,), (1, 2)), ((1, 2), (1, 1, 1)), ((2, 1), (2, 1, 1))])
def test_associativity(ms, ls):
    f = random_sesquilinear(len(ms), f"f{ms}")
    gs = [random_sesquilinear(m, f"g{i}{ms}") for i, m in enumerate(ms)]
    hs = [random_sesquilinear(l, f"h{j}{ls}") for j, l in enumerate(ls)]
    inner, off, e = [], 0, 0
    block_par = []
    for g in gs:
        H = hs[off:off + g.arity]
        off += g.arity
        inner.append(operad.compose(g, H))
        block_par.append(sum(h.parity for h in H))
    e = sum(gs[j].parity * block_par[i] for j in range(len(gs)) for i in range(j))
    lhs = operad.combine([((-1) ** e, operad.compose(f, inner))])
    rhs = operad.compose(operad.compose(f, gs), hs)
    assert operad.first_difference(lhs, rhs, tuples(sum(ls), 4, "assoc")) is None


def test_associativity_sign_matters_at_arity_4():
    f = random_sesquilinear(2, "k4f")
    g1, g2 = random_sesquilinear(1, "k4g0"), random_sesquilinear(2, "k4g1")
    h1, h2, h3 = random_sesquilinear(2, "k4h0"), random_sesquilinear(1, "k4h1"), random_sesquilinear(1, "k4h2")
    lhs = operad.compose(f, [operad.compose(g1, [h1]), operad.compose(g2, [h2, h3])])
    rhs = operad.compose(operad.compose(f, [g1, g2]), [h1, h2, h3])
    ts = tuples(4, 3, "k4")
    # p(g2) = 1 and the first block carries one odd input
    assert operad.first_difference(operad.combine([(-1, lhs)]), rhs, ts) is None
    assert operad.first_difference(lhs, rhs, ts) is not None


@pytest.mark.parametrize("ms", [(1, 1), (2, 1), (1, 2)])
def test_equivariance(ms):
    n = len(ms)
    f = random_sesquilinear(n, "ef")
    gs = [random_sesquilinear(m, f"eg{i}") for i, m in enumerate(ms)]
    ts = tuples(sum(ms), 4, "equiv")
    for s in permutations(range(1, n + 1)):
        for taus in [[tuple(range(1, m + 1))[::-1] for m in ms]]:
            lhs = operad.compose(operad.act_cochain(f, s), [operad.act_cochain(g, t) for g, t in zip(gs, taus)])
            inv = perms.inverse(s)
            eps = perms.koszul_sign(s, [g.parity for g in gs])
            inner = operad.compose(f, [gs[inv[k] - 1] for k in range(n)])
            rhs = operad.combine([(eps, operad.act_cochain(inner, perms.block_compose(s, taus)))])
            assert operad.first_difference(lhs, rhs, ts) is None


@settings(max_examples=10, deadline=None)
@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_action_is_a_right_action(s, t):
    Y = random_sesquilinear(3, "act")
    s, t = tuple(s), tuple(t)
    ts = tuples(3, 3, "act")
    twice = operad.act_cochain(operad.act_cochain(Y, s), t)
    once = operad.act_cochain(Y, perms.compose(s, t))
    assert operad.first_difference(twice, once, ts) is None


def test_symmetrize_is_symmetric_and_idempotent():
    Z = random_sesquilinear(3, "sym")
    Y = operad.symmetrize(Z)
    ts = tuples(3, 4, "sym")
    assert operad.symmetry_defect(Y, ts) is None
    assert operad.first_difference(operad.symmetrize(Y), Y, ts) is None
    assert operad.symmetry_defect(Z, ts) is not None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_random_cochains_are_sesquilinear(n):
    Y = random_sesquilinear(n, "sesq")
    for L in enumerate_lines(n):
        for ms in tuples(n, 4, "sesq"):
            assert operad.sesquilinearity_defect(Y, L, ms) is None


def test_sesquilinearity_detects_violation():
    # d on a lone vertex must act as -lambda of that vertex; lambda_1^2 uv + 1 breaks it
    bad = operad.ClCochain(2, lambda L, ms: LambdaPoly.lam(1, 2) * LambdaPoly.lam(1, 2) *
                           DiffPoly.monomial(ms[0]) * DiffPoly.monomial(ms[1]) + DiffPoly.const(1))
    assert any(operad.sesquilinearity_defect(bad, L, (U, DU)) for L in enumerate_lines(2))


def test_bracket_graded_antisymmetry():
    f = random_sesquilinear(2, "bf")
    g = random_sesquilinear(1, "bg")
    ts = tuples(2, 4, "br")
    lhs = operad.bracket(f, g)
    sgn = (-1) ** (f.parity * g.parity)
    rhs = operad.combine([(-sgn, operad.bracket(g, f))])
    assert operad.first_difference(lhs, rhs, ts) is None


def test_master_element_squares_to_zero():
    X = pva.build_master(pva.gfz())
    XX = operad.box(X, X)
    assert operad.first_difference(XX, operad.zero_cochain(3), tuples(3, 8, "xx")) is None


def test_grade_components_sum_to_whole():
    Y = random_sesquilinear(3, "grade")
    parts = operad.combine([(1, operad.grade_component(Y, r)) for r in range(3)])
    assert operad.first_difference(parts, Y, tuples(3, 4, "grade")) is None
