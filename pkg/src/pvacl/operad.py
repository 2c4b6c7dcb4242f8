"""Cochains of the classical operad on Pi V and their compositions.

A :class:`ClCochain` of arity n is stored through its values on the line
basis: ``rule(line, monomials)`` returns the normal form in V_n of
``Y^line_{lambda_1..lambda_n}(v_1 (x) ... (x) v_n)`` for monomials v_i.  Any
other graph is evaluated through :func:`pvacl.graphs.reduce_graph`, so the
cycle relations hold by construction.

Since V is purely even, every slot of Pi V is odd: permutations act on
tensors with their sign, and a cochain of arity m has parity m - 1.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Sequence

from .algebra import (
    DiffPoly,
    LambdaPoly,
    _acc,
    _frac,
    _linear_power,
    expand_tensor,
    normalize,
    pair_substitute,
    scalar_times,
)
from .graphs import (
    Digraph,
    GraphVector,
    LineGraph,
    MultiDigraph,
    act_graph,
    cocompose,
    components,
    edgeless,
    enumerate_lines,
    forest_external_sets,
    has_undirected_cycle,
    reduce_graph,
)
from .perms import Perm, enumerate_shuffles, identity, inverse, sign

Rule = Callable[[LineGraph, tuple], LambdaPoly]


class ClCochain:
    """Element of P_cl(Pi V)(n) given by its values on lines."""

    def __init__(self, arity: int, rule: Rule, label: str = ""):
        if arity < 1:
            raise ValueError("arity must be positive")
        self.arity = arity
        self._rule = rule
        self.label = label or f"cochain/{arity}"
        self._line_cache: dict = {}
        self._graph_cache: dict = {}

    @property
    def parity(self) -> int:
        return (self.arity - 1) % 2

    def __repr__(self):
        return f"ClCochain({self.label!r}, arity={self.arity})"

    # evaluation -----------------------------------------------------------

    def on_line(self, line: LineGraph, monos: tuple) -> LambdaPoly:
        key = (line, monos)
        hit = self._line_cache.get(key)
        if hit is None:
            if len(monos) != self.arity or line.n != self.arity:
                raise ValueError("arity mismatch")
            val = self._rule(line, monos)
            if val.nvars != self.arity:
                raise ValueError(f"{self.label}: rule returned {val.nvars} variables")
            hit = normalize(val)
            self._line_cache[key] = hit
        return hit

    def on_graph(self, g, monos: tuple) -> LambdaPoly:
        """Value on one (multi)graph at a tuple of monomials."""
        if isinstance(g, LineGraph):
            return self.on_line(g, monos)
        key = (g.n, g.edges, monos)
        hit = self._graph_cache.get(key)
        if hit is None:
            if g.n != self.arity:
                raise ValueError("arity mismatch")
            acc = LambdaPoly.zero(self.arity)
            for L, c in reduce_graph(g).items():
                val = self.on_line(L, monos)
                if val:
                    acc = acc + val * c
            hit = acc
            self._graph_cache[key] = hit
        return hit

    def evaluate(self, g, vs: Sequence) -> LambdaPoly:
        """Multilinear evaluation on a graph (or GraphVector) and a tensor of
        DiffPolys."""
        if len(vs) != self.arity:
            raise ValueError("arity mismatch")
        if isinstance(g, GraphVector):
            pieces = list(g.coeffs.items())
        else:
            pieces = [(g, 1)]
        acc = LambdaPoly.zero(self.arity)
        for monos, c in expand_tensor(vs):
            for h, x in pieces:
                val = self.on_graph(h, monos)
                if val:
                    acc = acc + val * (c * x)
        return acc

    # linear structure -----------------------------------------------------

    def __add__(self, other: "ClCochain") -> "ClCochain":
        return combine([(1, self), (1, other)])

    def __sub__(self, other: "ClCochain") -> "ClCochain":
        return combine([(1, self), (-1, other)])

    def __neg__(self) -> "ClCochain":
        return combine([(-1, self)])

    def __rmul__(self, c) -> "ClCochain":
        return combine([(c, self)])


def zero_cochain(n: int) -> ClCochain:
    return ClCochain(n, lambda L, m: LambdaPoly.zero(n), label=f"0/{n}")


def unit() -> ClCochain:
    """The identity on the one-vertex graph."""
    return ClCochain(1, lambda L, m: LambdaPoly.from_diffpoly(DiffPoly.monomial(m[0]), 1), label="1")


def from_line_table(n: int, table: dict, label: str = "") -> ClCochain:
    """Cochain defined by ``{LineGraph: rule(monos) -> LambdaPoly}``; lines
    missing from the table evaluate to zero."""

    def rule(L, monos):
        f = table.get(L)
        return f(monos) if f else LambdaPoly.zero(n)

    return ClCochain(n, rule, label)


def combine(terms: Sequence, label: str = "") -> ClCochain:
    """Rational linear combination ``sum c_i Y_i`` of cochains of equal arity."""
    terms = [(_frac(c), y) for c, y in terms if c]
    if not terms:
        raise ValueError("empty combination")
    n = terms[0][1].arity
    if any(y.arity != n for _, y in terms):
        raise ValueError("arity mismatch")

    def rule(L, monos):
        acc = LambdaPoly.zero(n)
        for c, y in terms:
            val = y.on_line(L, monos)
            if val:
                acc = acc + val * c
        return acc

    name = label or " + ".join(f"{c}*{y.label}" for c, y in terms)
    return ClCochain(n, rule, name)


# ---------------------------------------------------------------------------
# symmetric group action


def _unit_form(i: int, n: int) -> tuple:
    e = [0] * n
    e[i - 1] = 1
    return tuple(e)


def act_at(Y: ClCochain, s: Perm, g, monos: tuple) -> LambdaPoly:
    """(Y^s)^g(v) = sign(s) Y^{s(g)}_{s(lambda)}(v_{s^-1(1)}, ..., v_{s^-1(n)})."""
    n = Y.arity
    if len(s) != n:
        raise ValueError("arity mismatch")
    dg = g.to_digraph() if isinstance(g, LineGraph) else g
    inv = inverse(s)
    w = tuple(monos[inv[k] - 1] for k in range(n))
    val = Y.on_graph(act_graph(s, dg), w)
    if not val:
        return val
    images = [_unit_form(inv[k], n) for k in range(n)]
    out = normalize(val.substitute(images, n))
    return out * sign(s)


def act_cochain(Y: ClCochain, s: Perm) -> ClCochain:
    s = tuple(s)
    if s == identity(Y.arity):
        return Y
    return ClCochain(Y.arity, lambda L, m: act_at(Y, s, L, m), label=f"{Y.label}^{list(s)}")


def symmetrize(Z: ClCochain) -> ClCochain:
    """Group average (1/n!) sum_s Z^s."""
    n = Z.arity
    perms = list(permutations(range(1, n + 1)))
    w = Fraction(1, factorial(n))

    def rule(L, monos):
        acc = LambdaPoly.zero(n)
        for s in perms:
            val = act_at(Z, s, L, monos)
            if val:
                acc = acc + val
        return acc * w

    return ClCochain(n, rule, label=f"sym({Z.label})")


def grade_component(Y: ClCochain, r: int) -> ClCochain:
    """Part of Y supported on graphs with exactly r edges."""
    n = Y.arity

    def rule(L, monos):
        if L.edge_count() != r:
            return LambdaPoly.zero(n)
        return Y.on_line(L, monos)

    return ClCochain(n, rule, label=f"gr{r}({Y.label})")


# ---------------------------------------------------------------------------
# composition


def koszul_block_sign(sizes: Sequence[int]) -> int:
    """(-1)^{sum_{i<j} p(g_j) * (number of odd inputs in block i)} with
    p(g_j) = m_j - 1 and every input odd."""
    e = 0
    for j in range(len(sizes)):
        for i in range(j):
            e += (sizes[j] - 1) * sizes[i]
    return -1 if e % 2 else 1


def compose_at(f: ClCochain, gs: Sequence[ClCochain], g, monos: tuple) -> LambdaPoly:
    """Value of f(g_1, ..., g_n) on the graph g at a tuple of monomials."""
    n = f.arity
    if len(gs) != n:
        raise ValueError(f"expected {n} inner cochains, got {len(gs)}")
    sizes = [h.arity for h in gs]
    M = sum(sizes)
    dg = g.to_digraph() if isinstance(g, LineGraph) else g
    if dg.n != M or len(monos) != M:
        raise ValueError("arity mismatch")
    co = cocompose(dg, sizes)
    q = co.quotient
    unordered = [tuple(sorted(e)) for e in q.edges]
    if len(set(unordered)) != len(unordered) or has_undirected_cycle(q.n, q.edges):
        # the quotient carries a cycle, on which f vanishes
        return LambdaPoly.zero(M)
    ext = forest_external_sets(co, dg)
    offsets = [0]
    for m in sizes:
        offsets.append(offsets[-1] + m)
    width = M + n
    factors = []
    for i, h in enumerate(gs):
        block = monos[offsets[i]:offsets[i + 1]]
        val = h.on_graph(co.blocks[i], block)
        if not val:
            return LambdaPoly.zero(M)
        forms = []
        for t in range(sizes[i]):
            k = offsets[i] + t + 1
            form = [0] * width
            form[k - 1] = 1
            for j in ext[k]:
                form[M + j - 1] = 1
            forms.append(tuple(form))
        terms: dict = {}
        for (e, mono), c in val.items():
            partial = {(0,) * width: c}
            for t, k in enumerate(e):
                if not k:
                    continue
                pw = _linear_power(forms[t], k, width)
                nxt: dict = {}
                for e1, c1 in partial.items():
                    for e2, c2 in pw.items():
                        _acc(nxt, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
                partial = nxt
            for e1, c1 in partial.items():
                _acc(terms, (e1[:M], e1[M:], mono), c1)
        factors.append(terms)
    shifts = []
    for i in range(n):
        form = [0] * M
        for k in range(offsets[i], offsets[i + 1]):
            form[k] = 1
        shifts.append(tuple(form))
    tensor = pair_substitute(factors, shifts, M)
    qg = q.to_digraph()
    acc: dict = {}
    for W, scal in tensor.items():
        fv = f.on_graph(qg, W)
        if not fv:
            continue
        fv = fv.substitute(shifts, M)
        for key, c in scalar_times(scal, fv).items():
            _acc(acc, key, c)
    out = normalize(LambdaPoly._raw(M, acc))
    return out * koszul_block_sign(sizes)


def compose(f: ClCochain, gs: Sequence[ClCochain], label: str = "") -> ClCochain:
    gs = tuple(gs)
    if len(gs) != f.arity:
        raise ValueError(f"expected {f.arity} inner cochains, got {len(gs)}")
    M = sum(h.arity for h in gs)
    name = label or f"{f.label}({', '.join(h.label for h in gs)})"
    return ClCochain(M, lambda L, m: compose_at(f, gs, L, m), label=name)


def circ(f: ClCochain, g: ClCochain, i: int) -> ClCochain:
    """Insertion f o_i g = f(1, ..., g, ..., 1) with g in slot i."""
    if not 1 <= i <= f.arity:
        raise ValueError(f"position {i} out of range 1..{f.arity}")
    one = unit()
    gs = [one] * f.arity
    gs[i - 1] = g
    return compose(f, gs, label=f"({f.label} o{i} {g.label})")


# ---------------------------------------------------------------------------
# the Lie superalgebra W


def box(f: ClCochain, g: ClCochain) -> ClCochain:
    """f box g = sum over (m+1, n)-shuffles s of (f o_1 g)^{s^-1}, for f of
    arity n+1 and g of arity m+1."""
    n = f.arity - 1
    m = g.arity - 1
    inner = circ(f, g, 1)
    shuffles = enumerate_shuffles(m + 1, n)
    invs = [inverse(s) for s in shuffles]
    N = inner.arity

    def rule(L, monos):
        acc = LambdaPoly.zero(N)
        for s in invs:
            val = act_at(inner, s, L, monos)
            if val:
                acc = acc + val
        return acc

    return ClCochain(N, rule, label=f"({f.label} □ {g.label})")


def bracket(f: ClCochain, g: ClCochain) -> ClCochain:
    """[f, g] = f box g - (-1)^{p(f) p(g)} g box f."""
    sgn = -1 if (f.parity * g.parity) % 2 else 1
    return combine([(1, box(f, g)), (-sgn, box(g, f))], label=f"[{f.label}, {g.label}]")


# ---------------------------------------------------------------------------
# checks on sampled inputs


def lines_of(n: int) -> tuple:
    return enumerate_lines(n)


def first_difference(A: ClCochain, B: ClCochain, tuples, graphs=None):
    """First ``(graph, monos, a, b)`` where A and B differ, or None."""
    if A.arity != B.arity:
        raise ValueError("arity mismatch")
    graphs = graphs if graphs is not None else enumerate_lines(A.arity)
    for L in graphs:
        for monos in tuples:
            a = A.on_graph(L, monos)
            b = B.on_graph(L, monos)
            if a != b:
                return (L, monos, a, b)
    return None


def symmetry_defect(Y: ClCochain, tuples, perms=None):
    """First ``(s, line, monos)`` with Y^s != Y, or None."""
    n = Y.arity
    perms = perms if perms is not None else list(permutations(range(1, n + 1)))
    for s in perms:
        for L in enumerate_lines(n):
            for monos in tuples:
                if act_at(Y, s, L, monos) != Y.on_line(L, monos):
                    return (s, L, monos)
    return None


def diff_lambda(p: LambdaPoly, i: int) -> LambdaPoly:
    """Partial derivative in lambda_i (1-based)."""
    t: dict = {}
    for (e, m), c in p.items():
        k = e[i - 1]
        if k:
            e2 = e[:i - 1] + (k - 1,) + e[i:]
            _acc(t, (e2, m), c * k)
    return LambdaPoly._raw(p.nvars, t)


def sesquilinearity_defect(Y: ClCochain, g, monos: tuple):
    """Check both sesquilinearity conditions of Y on one graph and input.

    Returns None when they hold, otherwise a short description.
    """
    n = Y.arity
    dg = g.to_digraph() if isinstance(g, LineGraph) else g
    val = Y.on_graph(dg, monos)
    for comp in components(n, dg.edges):
        inner = [i for i in comp if i != n]
        # the normal form may depend on this component only through its sum
        if n in comp:
            for i in inner:
                if diff_lambda(val, i):
                    return f"depends on lambda_{i} inside the component of vertex {n}"
        else:
            ref = diff_lambda(val, inner[0])
            for i in inner[1:]:
                if diff_lambda(val, i) != ref:
                    return f"d/dlambda_{inner[0]} != d/dlambda_{i}"
        # total derivative on the component acts as -lambda_component
        lhs = LambdaPoly.zero(n)
        for i in comp:
            vs = [DiffPoly.monomial(m) for m in monos]
            vs[i - 1] = vs[i - 1].derive()
            lhs = lhs + Y.evaluate(dg, vs)
        lam = LambdaPoly.zero(n)
        for i in comp:
            lam = lam + LambdaPoly.lam(i, n)
        rhs = normalize(-(lam * val))
        if normalize(lhs) != rhs:
            return f"derivative on component {list(comp)} is not -lambda of it"
    return None


def point_graph() -> Digraph:
    return edgeless(1)


def as_digraph(g) -> Digraph:
    if isinstance(g, LineGraph):
        return g.to_digraph()
    if isinstance(g, MultiDigraph):
        return g.to_digraph()
    return g
