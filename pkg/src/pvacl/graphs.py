"""Labeled oriented graphs, cycle relations and the line basis.

Graphs live on the vertex set {1..n}.  A :class:`Digraph` has at most one
copy of each ordered pair and no tadpoles.  The quotient graph produced by
cocomposition may carry parallel edges; it is a :class:`MultiDigraph`.

Modulo the cycle relations every graph is a combination of lines: disjoint
unions of directed paths, each starting at its smallest vertex.  The
rewriting engine :func:`reduce_to_lines` computes these coordinates.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple, Sequence

from .perms import Perm, check_perm

# ---------------------------------------------------------------------------
# graph values


class Digraph:
    """Simple oriented graph on {1..n} without tadpoles."""

    __slots__ = ("n", "edges", "_hash")

    def __init__(self, n: int, edges=()):
        edges = tuple(edges)
        es = tuple(sorted({(int(a), int(b)) for a, b in edges}))
        if len(es) != len(edges):
            raise ValueError("repeated edge")
        for a, b in es:
            if a == b:
                raise ValueError(f"tadpole at vertex {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge {a}>{b} outside 1..{n}")
        self.n = n
        self.edges = es
        self._hash = hash((n, es))

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.edges == other.edges

    def __lt__(self, other):
        return (self.n, len(self.edges), self.edges) < (other.n, len(other.edges), other.edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Digraph({format_graph(self)!r})"

    def __str__(self):
        return format_graph(self)

    def without(self, edge) -> "Digraph":
        return Digraph(self.n, [e for e in self.edges if e != edge])

    def with_edge(self, edge) -> "Digraph":
        return Digraph(self.n, self.edges + (tuple(edge),))


class MultiDigraph(NamedTuple):
    """Oriented graph that may contain parallel edges (listed with repetition)."""

    n: int
    edges: tuple

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def to_digraph(self) -> Digraph:
        if not self.is_simple():
            raise ValueError("graph has parallel edges")
        return Digraph(self.n, self.edges)


def standard_line(n: int) -> Digraph:
    """The graph 1 -> 2 -> ... -> n."""
    return Digraph(n, [(i, i + 1) for i in range(1, n)])


def edgeless(n: int) -> Digraph:
    return Digraph(n, ())


def format_graph(g) -> str:
    body = ", ".join(f"{a}>{b}" for a, b in g.edges)
    return f"n={g.n}; edges: {body}" if body else f"n={g.n}; edges:"


_GRAPH_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*(?:;\s*(?:edges\s*:)?\s*(.*))?$", re.S)


def parse_graph(text: str) -> Digraph:
    """Parse ``"n=4; edges: 1>2, 2>3"`` (whitespace-insensitive)."""
    m = _GRAPH_RE.match(text)
    if not m:
        raise ValueError(f"malformed graph literal {text!r}")
    n = int(m.group(1))
    edges = []
    body = (m.group(2) or "").strip()
    if body:
        for chunk in body.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = chunk.split(">")
            if len(parts) != 2:
                raise ValueError(f"malformed edge {chunk!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise ValueError(f"malformed edge {chunk!r}") from exc
    return Digraph(n, edges)


# ---------------------------------------------------------------------------
# actions and structure


def act_graph(s: Perm, g: Digraph) -> Digraph:
    """Relabel vertex i as s(i)."""
    if len(s) != g.n:
        raise ValueError("arity mismatch")
    return Digraph(g.n, [(s[a - 1], s[b - 1]) for a, b in g.edges])


def components(n: int, edges) -> list:
    """Vertex sets of the connected components (ignoring orientation),
    sorted by smallest vertex."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(vs) for vs in groups.values()), key=lambda vs: vs[0])


def is_connected(g) -> bool:
    return len(components(g.n, g.edges)) == 1


def has_undirected_cycle(n: int, edges) -> bool:
    """True when the underlying unoriented multigraph is not a forest."""
    return len(edges) != n - len(components(n, edges))


def oriented_cycles(g) -> list:
    """All oriented cycles, each as a frozenset of edge indices into
    ``g.edges``.  A pair i>j, j>i counts as a cycle of length two."""
    out_edges: dict = {}
    for idx, (a, b) in enumerate(g.edges):
        out_edges.setdefault(a, []).append((idx, b))
    found = set()

    def walk(start, v, used, visited):
        for idx, b in out_edges.get(v, ()):
            if b == start:
                found.add(frozenset(used + [idx]))
            elif b > start and b not in visited:
                walk(start, b, used + [idx], visited | {b})

    for s in range(1, g.n + 1):
        walk(s, s, [], {s})
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def is_acyclic(g) -> bool:
    """No oriented cycle (a 2-cycle counts)."""
    indeg = {v: 0 for v in range(1, g.n + 1)}
    for _, b in g.edges:
        indeg[b] += 1
    stack = [v for v, d in indeg.items() if d == 0]
    seen = 0
    out_edges: dict = {}
    for a, b in g.edges:
        out_edges.setdefault(a, []).append(b)
    while stack:
        v = stack.pop()
        seen += 1
        for b in out_edges.get(v, ()):
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    return seen == g.n


# ---------------------------------------------------------------------------
# cocomposition


class Cocomposition(NamedTuple):
    quotient: MultiDigraph
    blocks: tuple  # Digraph per block
    edge_map: tuple  # per edge of the big graph: (0, index) or (i, index)
    sizes: tuple


def block_of(sizes: Sequence[int]) -> list:
    """block_of(sizes)[v] is the 1-based block index of vertex v (1-based)."""
    out = [0]
    for i, m in enumerate(sizes, 1):
        out.extend([i] * m)
    return out


def cocompose(g: Digraph, sizes: Sequence[int]) -> Cocomposition:
    sizes = tuple(sizes)
    if any(m < 1 for m in sizes) or sum(sizes) != g.n:
        raise ValueError(f"block sizes {list(sizes)} inconsistent with n={g.n}")
    owner = block_of(sizes)
    offset = [0]
    for m in sizes:
        offset.append(offset[-1] + m)
    q_edges = []
    inner = [[] for _ in sizes]
    emap = []
    for a, b in g.edges:
        ia, ib = owner[a], owner[b]
        if ia == ib:
            inner[ia - 1].append((a - offset[ia - 1], b - offset[ia - 1]))
            emap.append((ia, len(inner[ia - 1]) - 1))
        else:
            q_edges.append((ia, ib))
            emap.append((0, len(q_edges) - 1))
    blocks = tuple(Digraph(m, es) for m, es in zip(sizes, inner))
    # block Digraph sorts its edges; remap inner indices to sorted order
    fixed = []
    for part, idx in emap:
        if part == 0:
            fixed.append((0, idx))
        else:
            e = inner[part - 1][idx]
            fixed.append((part, blocks[part - 1].edges.index(e)))
    return Cocomposition(MultiDigraph(len(sizes), tuple(q_edges)), blocks, tuple(fixed), sizes)


def externally_connected(g: Digraph, sizes: Sequence[int], k: int) -> frozenset:
    """Blocks j joined to the block of vertex k by a trail in the quotient
    graph whose first edge comes from an edge of g at k."""
    if not 1 <= k <= g.n:
        raise ValueError(f"vertex {k} out of range")
    co = cocompose(g, sizes)
    owner = block_of(sizes)
    i = owner[k]
    q = co.quotient.edges
    adj: dict = {}
    for idx, (a, b) in enumerate(q):
        adj.setdefault(a, []).append((idx, b))
        adj.setdefault(b, []).append((idx, a))
    starts = [co.edge_map[e][1] for e, (a, b) in enumerate(g.edges)
              if co.edge_map[e][0] == 0 and k in (a, b)]
    reached = set()

    def trail(v, used):
        reached.add(v)
        for idx, w in adj.get(v, ()):
            if idx not in used:
                trail(w, used | {idx})

    for idx in starts:
        a, b = q[idx]
        far = b if a == i else a
        trail(far, frozenset([idx]))
    return frozenset(reached)


def forest_external_sets(co: Cocomposition, g: Digraph) -> list:
    """X-sets for every vertex of g when the quotient graph is a forest.

    In a forest the trails leaving block i through an edge e reach exactly
    the component of the far endpoint after deleting e.
    """
    q = co.quotient
    owner = block_of(co.sizes)
    out = [frozenset()] * (g.n + 1)
    ext: dict = {}
    for e, (a, b) in enumerate(g.edges):
        part, idx = co.edge_map[e]
        if part == 0:
            ext.setdefault(a, []).append(idx)
            ext.setdefault(b, []).append(idx)
    cache: dict = {}
    for k, idxs in ext.items():
        i = owner[k]
        acc = set()
        for idx in idxs:
            if idx not in cache:
                rest = [q.edges[j] for j in range(len(q.edges)) if j != idx]
                comps = components(q.n, rest)
                a, b = q.edges[idx]
                cache[idx] = {a: _comp_of(comps, b), b: _comp_of(comps, a)}
            acc |= cache[idx][i]
        out[k] = frozenset(acc)
    return out


def _comp_of(comps, v) -> frozenset:
    for c in comps:
        if v in c:
            return frozenset(c)
    raise AssertionError("vertex missing from components")


# ---------------------------------------------------------------------------
# lines


class LineGraph(NamedTuple):
    """Disjoint union of directed paths; each path starts at its minimum,
    paths are sorted by (length, first vertex)."""

    n: int
    paths: tuple

    def to_digraph(self) -> Digraph:
        return Digraph(self.n, [(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1)])

    @property
    def edges(self) -> tuple:
        return self.to_digraph().edges

    def is_connected(self) -> bool:
        return len(self.paths) == 1

    def edge_count(self) -> int:
        return self.n - len(self.paths)

    def __str__(self):
        return format_graph(self.to_digraph())


def make_line(n: int, paths) -> LineGraph:
    paths = [tuple(p) for p in paths]
    for p in paths:
        if p[0] != min(p):
            raise ValueError(f"path {p} does not start at its minimum")
    if sorted(v for p in paths for v in p) != list(range(1, n + 1)):
        raise ValueError("paths must partition the vertex set")
    return LineGraph(n, tuple(sorted(paths, key=lambda p: (len(p), p[0]))))


def line_of(g: Digraph):
    """The LineGraph equal to g, or None if g is not a normalized line."""
    out_e: dict = {}
    in_e: dict = {}
    for a, b in g.edges:
        if a in out_e or b in in_e:
            return None
        out_e[a] = b
        in_e[b] = a
    if has_undirected_cycle(g.n, g.edges):
        return None
    paths = []
    for v in range(1, g.n + 1):
        if v in in_e:
            continue
        p = [v]
        while p[-1] in out_e:
            p.append(out_e[p[-1]])
        if p[0] != min(p):
            return None
        paths.append(tuple(p))
    return LineGraph(g.n, tuple(sorted(paths, key=lambda p: (len(p), p[0]))))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


@lru_cache(maxsize=None)
def enumerate_lines(n: int) -> tuple:
    """All normalized lines on n vertices, in a fixed canonical order."""
    if n < 1:
        raise ValueError("n >= 1 required")
    out = []
    for part in _set_partitions(list(range(1, n + 1))):
        choices = [[(min(b),) + rest for rest in permutations(sorted(set(b) - {min(b)}))] for b in part]
        def rec(i, acc):
            if i == len(choices):
                out.append(make_line(n, acc))
                return
            for c in choices[i]:
                rec(i + 1, acc + [c])
        rec(0, [])
    return tuple(sorted(set(out), key=lambda L: (-L.edge_count(), L.paths)))


def connected_line(tau: Perm) -> LineGraph:
    """tau(Lambda_n) as a LineGraph; requires tau(1) = 1."""
    tau = check_perm(tau)
    if tau[0] != 1:
        raise ValueError("tau(1) must be 1")
    return LineGraph(len(tau), (tuple(tau),))


# ---------------------------------------------------------------------------
# graph vectors


class GraphVector:
    """Finite rational combination of Digraphs on a fixed vertex count."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs = {}
        for g, c in (coeffs or {}).items():
            if isinstance(g, LineGraph):
                g = g.to_digraph()
            if g.n != n:
                raise ValueError("graph arity mismatch")
            c = Fraction(c)
            if c:
                self.coeffs[g] = self.coeffs.get(g, 0) + c
        self.coeffs = {g: c for g, c in self.coeffs.items() if c}

    @classmethod
    def of(cls, g, c=1) -> "GraphVector":
        return cls(g.n, {g: c})

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("arity mismatch")
        d = dict(self.coeffs)
        for g, c in other.coeffs.items():
            d[g] = d.get(g, 0) + c
        return GraphVector(self.n, d)

    def __neg__(self):
        return GraphVector(self.n, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return GraphVector(self.n, {g: c * x for g, x in self.coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, GraphVector) and self.n == other.n and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for g in sorted(self.coeffs):
            c = self.coeffs[g]
            parts.append(f"{c} * ({format_graph(g)})")
        return " + ".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?\(([^()]*)\)\s*")


def parse_graph_vector(text: str) -> GraphVector:
    """Parse ``"(n=2; edges: 1>2) + 2*(n=2; edges: 2>1)"`` or a bare graph."""
    text = text.strip()
    if not text.startswith(("(", "+", "-")) and not text[:1].isdigit():
        g = parse_graph(text)
        return GraphVector.of(g)
    pos = 0
    terms = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed graph vector near {text[pos:]!r}")
        sgn = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        terms.append((parse_graph(m.group(3)), sgn * c))
        pos = m.end()
    if not terms:
        raise ValueError("empty graph vector")
    n = terms[0][0].n
    out = GraphVector(n)
    for g, c in terms:
        out = out + GraphVector.of(g, c)
    return out


# ---------------------------------------------------------------------------
# constructive reduction


def _reduce_tree(vertices: tuple, edges: frozenset) -> dict:
    """Coordinates of a tree on ``vertices`` in terms of directed paths that
    start at min(vertices).  ``edges`` is a frozenset of oriented edges."""
    return dict(_reduce_tree_cached(vertices, edges))


@lru_cache(maxsize=None)
def _reduce_tree_cached(vertices: tuple, edges: frozenset) -> tuple:
    root = min(vertices)
    if len(vertices) == 1:
        return (((root,), 1),)
    nbrs: dict = {v: [] for v in vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    prev, cur = None, root
    path = [root]
    while True:
        children = sorted(w for w in nbrs[cur] if w != prev)
        if not children:
            break
        if len(children) == 1:
            prev, cur = cur, children[0]
            path.append(cur)
            continue
        # two children a, c of b = cur: orient a->b, b->c and use the
        # triangle relation  T + (T - a>b + c>a) + (T - b>c + c>a) = 0
        a, c, b = children[0], children[1], cur
        sgn = 1
        es = set(edges)
        if (a, b) not in es:
            es.discard((b, a))
            es.add((a, b))
            sgn = -sgn
        if (b, c) not in es:
            es.discard((c, b))
            es.add((b, c))
            sgn = -sgn
        t1 = frozenset((es - {(a, b)}) | {(c, a)})
        t2 = frozenset((es - {(b, c)}) | {(c, a)})
        out: dict = {}
        for t in (t1, t2):
            for p, x in _reduce_tree_cached(vertices, t):
                out[p] = out.get(p, 0) - sgn * x
        return tuple((p, x) for p, x in out.items() if x)
    sgn = 1
    for i in range(len(path) - 1):
        if (path[i], path[i + 1]) not in edges:
            sgn = -sgn
    return ((tuple(path), sgn),)


def _reduce_edges(n: int, edges: tuple) -> tuple:
    unordered = [tuple(sorted(e)) for e in edges]
    if len(set(unordered)) != len(unordered):
        return ()  # 2-cycle or parallel pair
    if has_undirected_cycle(n, edges):
        return ()
    comps = components(n, edges)
    partial = [((), 1)]
    for comp in comps:
        cset = set(comp)
        ces = frozenset(e for e in edges if e[0] in cset)
        red = _reduce_tree(comp, ces)
        partial = [(paths + (p,), c * x) for paths, c in partial for p, x in red.items()]
    out: dict = {}
    for paths, c in partial:
        L = LineGraph(n, tuple(sorted(paths, key=lambda p: (len(p), p[0]))))
        out[L] = out.get(L, 0) + c
    return tuple((L, c) for L, c in out.items() if c)


@lru_cache(maxsize=None)
def _reduce_graph_cached(n: int, edges: tuple) -> tuple:
    return _reduce_edges(n, edges)


def reduce_graph(g) -> dict:
    """Line-basis coordinates of a single (multi)graph modulo the cycle
    relations."""
    if isinstance(g, LineGraph):
        return {g: 1}
    return dict(_reduce_graph_cached(g.n, tuple(sorted(g.edges))))


def reduce_to_lines(v) -> dict:
    """Line-basis coordinates ``{LineGraph: rational}`` of a graph vector."""
    if isinstance(v, (Digraph, MultiDigraph, LineGraph)):
        return reduce_graph(v)
    out: dict = {}
    for g, c in v.coeffs.items():
        for L, x in reduce_graph(g).items():
            out[L] = out.get(L, 0) + c * x
    return {L: c for L, c in out.items() if c}


def lines_to_vector(coords: dict, n: int) -> GraphVector:
    return GraphVector(n, {L.to_digraph(): c for L, c in coords.items()})


def format_coordinates(coords: dict) -> str:
    if not coords:
        return "0"
    lines = []
    for L in sorted(coords, key=lambda L: (-L.edge_count(), L.paths)):
        lines.append(f"{coords[L]} * ({L})")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# relation families used by the identities on lines


def insertion_sum(n: int) -> GraphVector:
    """Sum over the n positions of vertex 1 inserted into 2 -> 3 -> ... -> n."""
    rest = list(range(2, n + 1))
    out = GraphVector(n)
    for pos in range(n):
        seq = rest[:pos] + [1] + rest[pos:]
        out = out + GraphVector.of(Digraph(n, [(seq[i], seq[i + 1]) for i in range(n - 1)]))
    return out


def monotone_line_sum(n: int, k: int) -> GraphVector:
    """Lambda_n + (-1)^k sum over pi in M_n^k of pi(Lambda_n)."""
    from .perms import enumerate_monotone
    base = standard_line(n)
    out = GraphVector.of(base)
    sgn = -1 if k % 2 else 1
    for pi in enumerate_monotone(n, k):
        out = out + GraphVector.of(act_graph(pi.perm, base), sgn)
    return out


def perm_of_connected_line(L: LineGraph) -> Perm:
    """The tau with tau(1) = 1 and L = tau(Lambda_n)."""
    if not L.is_connected():
        raise ValueError("line is not connected")
    return tuple(L.paths[0])
