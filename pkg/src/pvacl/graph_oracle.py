"""Brute-force linear algebra for the cycle relations.

Independent of the rewriting engine in :mod:`pvacl.graphs`: it spans the
relation space by enumerating every simple digraph with an oriented cycle,
row-reduces over the rationals and reads coordinates off the echelon form.
Only practical for n <= 4.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .graphs import Digraph, enumerate_lines, is_acyclic, oriented_cycles

MAX_ORACLE_N = 4


def all_digraphs(n: int) -> list:
    """Every simple digraph on {1..n} (a pair may carry both orientations)."""
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    out = []
    for states in product(range(4), repeat=len(pairs)):
        es = []
        for (a, b), s in zip(pairs, states):
            if s & 1:
                es.append((a, b))
            if s & 2:
                es.append((b, a))
        out.append(Digraph(n, es))
    return out


def acyclic_digraphs(n: int) -> list:
    return [g for g in all_digraphs(n) if is_acyclic(g)]


def relation_rows(n: int) -> list:
    """Relations of the second kind, restricted to acyclic coordinates.

    Relations of the first kind (graphs with an oriented cycle) are imposed
    by simply discarding those coordinates.
    """
    if n > MAX_ORACLE_N:
        raise ValueError(f"relation oracle limited to n <= {MAX_ORACLE_N}")
    rows = set()
    for g in all_digraphs(n):
        for cyc in oriented_cycles(g):
            terms = []
            for idx in cyc:
                h = g.without(g.edges[idx])
                if is_acyclic(h):
                    terms.append(h)
            if terms:
                rows.add(frozenset(terms))
    return sorted(rows, key=lambda r: sorted(h.edges for h in r))


def relation_span(n: int) -> list:
    """A spanning set of the relation subspace, as ``{Digraph: coeff}`` maps
    over acyclic graphs."""
    return [{h: Fraction(1) for h in row} for row in relation_rows(n)]


class RelationOracle:
    """Row-reduced relation space with non-line columns ordered first, so
    that reducing a vector leaves its coordinates on the lines."""

    def __init__(self, n: int):
        if n > MAX_ORACLE_N:
            raise ValueError(f"relation oracle limited to n <= {MAX_ORACLE_N}")
        self.n = n
        lines = [L.to_digraph() for L in enumerate_lines(n)]
        line_set = set(lines)
        others = sorted(g for g in acyclic_digraphs(n) if g not in line_set)
        self.columns = others + lines
        self.index = {g: i for i, g in enumerate(self.columns)}
        self.n_lines = len(lines)
        self.pivots: dict = {}
        for row in relation_span(n):
            self._insert({self.index[g]: c for g, c in row.items()})

    def _reduce(self, v: dict) -> dict:
        v = dict(v)
        last = -1
        while True:
            cands = [c for c in v if c > last and c in self.pivots]
            if not cands:
                return v
            c = min(cands)
            f = v[c]
            for k, x in self.pivots[c].items():
                s = v.get(k, 0) - f * x
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
            last = c

    def _insert(self, row: dict) -> None:
        r = self._reduce(row)
        if not r:
            return
        p = min(r)
        inv = 1 / Fraction(r[p])
        self.pivots[p] = {k: x * inv for k, x in r.items()}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def quotient_dimension(self) -> int:
        return len(self.columns) - self.rank

    def lines_form_basis(self) -> bool:
        """Every non-line column is a pivot and the quotient has |L(n)| dims."""
        non_line = len(self.columns) - self.n_lines
        return self.quotient_dimension == self.n_lines and all(c in self.pivots for c in range(non_line))

    def reduce(self, vec: dict) -> dict:
        """Line coordinates of ``{Digraph: coeff}``; cyclic graphs count as 0."""
        v: dict = {}
        for g, c in vec.items():
            if isinstance(g, Digraph) and not is_acyclic(g):
                continue
            i = self.index[g]
            v[i] = v.get(i, 0) + Fraction(c)
        r = self._reduce({k: x for k, x in v.items() if x})
        lines = enumerate_lines(self.n)
        base = len(self.columns) - self.n_lines
        out = {}
        for k, x in r.items():
            if k < base:
                raise ArithmeticError("lines do not span the quotient")
            out[lines[k - base]] = x
        return out


@lru_cache(maxsize=None)
def oracle(n: int) -> RelationOracle:
    return RelationOracle(n)


def quotient_dimension(n: int) -> int:
    return oracle(n).quotient_dimension
