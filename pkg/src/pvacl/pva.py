"""Lambda-brackets on differential polynomial algebras and the master
element X they define.

A :class:`PVAStructure` is a table ``[u_i lambda u_j]`` on generators.  It is
extended to all of V by the closed formula

    [f_lambda g] = sum  dg/du_j^(n) (lambda+d)^n H_ji(lambda+d) (-lambda-d)^m df/du_i^(m)

with ``H_ji(lambda) = [u_i lambda u_j]``, which builds in both sesquilinearity
rules and both Leibniz rules.  :func:`lambda_bracket_recursive` reaches the
same values by repeatedly applying those rules and serves as a check on the
closed formula.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .algebra import (
    ONE,
    DiffPoly,
    LambdaPoly,
    _acc,
    mono_degree,
    mono_derive_k,
    mono_mul,
    mono_str,
    normalize,
)
from .graphs import LineGraph, enumerate_lines, make_line
from .operad import ClCochain, box, symmetry_defect
from .report import CheckResult
from .sampling import Bounds, monomial_pool, sample_tuples


class PVAStructure:
    """Generators with a lambda-bracket table.

    ``table`` maps ``(a, b)`` to ``[a lambda b]`` as a LambdaPoly in one
    variable; missing pairs are zero.  ``extension`` is ``"leibniz"`` for the
    usual extension to V, or ``"linear"`` to keep only brackets between
    monomials of degree one (a deliberately non-Leibniz rule used as a
    negative example).
    """

    def __init__(self, name: str, generators, table: dict, extension: str = "leibniz",
                 description: str = ""):
        self.name = name
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators) or not self.generators:
            raise ValueError("generators must be distinct and non-empty")
        if extension not in ("leibniz", "linear"):
            raise ValueError(f"unknown extension rule {extension!r}")
        self.extension = extension
        self.description = description
        self.table = {}
        for (a, b), val in table.items():
            for g in (a, b):
                if g not in self.generators:
                    raise ValueError(f"undeclared generator {g!r}")
            if not isinstance(val, LambdaPoly):
                val = LambdaPoly.from_diffpoly(val if isinstance(val, DiffPoly) else DiffPoly.const(val), 1)
            if val.nvars != 1:
                raise ValueError("table entries are polynomials in one variable")
            self._check_declared(val)
            if val:
                self.table[(a, b)] = val
        self._cache: dict = {}

    def _check_declared(self, p) -> None:
        for (_, m), _c in p.items():
            for g, _o in m:
                if g not in self.generators:
                    raise ValueError(f"undeclared generator {g!r}")

    def check_element(self, p: DiffPoly) -> None:
        for m, _c in p.items():
            for g, _o in m:
                if g not in self.generators:
                    raise ValueError(f"undeclared generator {g!r}")

    def entry(self, a: str, b: str) -> LambdaPoly:
        return self.table.get((a, b), LambdaPoly.zero(1))

    def __repr__(self):
        return f"PVAStructure({self.name!r}, generators={self.generators})"


# ---------------------------------------------------------------------------
# one-variable helpers


def lam_plus_d(p: LambdaPoly, k: int, sgn: int = 1) -> LambdaPoly:
    """(sgn*(lambda + d))^k p with d acting on the coefficients of p."""
    if k == 0:
        return p
    t: dict = {}
    for (e, m), c in p.items():
        for j in range(k + 1):
            base = comb(k, j) * c * (sgn ** k)
            for m2, c2 in mono_derive_k(m, j):
                _acc(t, ((e[0] + k - j,), m2), base * c2)
    return LambdaPoly._raw(1, t)


def apply_operator(h: LambdaPoly, p: LambdaPoly) -> LambdaPoly:
    """h(lambda + d) p, where d acts on p only and the coefficients of h
    multiply afterwards."""
    acc = LambdaPoly.zero(1)
    for (e, m), c in h.items():
        acc = acc + lam_plus_d(p, e[0]) * DiffPoly.monomial(m, c)
    return acc


def partial(mono, var) -> DiffPoly:
    """Partial derivative of a monomial with respect to the variable ``var``."""
    k = mono.count(var)
    if not k:
        return DiffPoly()
    i = mono.index(var)
    return DiffPoly.monomial(mono[:i] + mono[i + 1:], k)


# ---------------------------------------------------------------------------
# the bracket


def _master_formula(P: PVAStructure, f, g) -> LambdaPoly:
    acc = LambdaPoly.zero(1)
    for vi in sorted(set(f)):
        df = partial(f, vi)
        A = lam_plus_d(LambdaPoly.from_diffpoly(df, 1), vi[1], -1)
        for vj in sorted(set(g)):
            H = P.table.get((vi[0], vj[0]))
            if H is None:
                continue
            B = lam_plus_d(apply_operator(H, A), vj[1])
            acc = acc + B * partial(g, vj)
    return acc


def bracket_monomials(P: PVAStructure, f, g) -> LambdaPoly:
    key = (f, g)
    hit = P._cache.get(key)
    if hit is None:
        if P.extension == "linear" and (mono_degree(f) != 1 or mono_degree(g) != 1):
            hit = LambdaPoly.zero(1)
        else:
            hit = _master_formula(P, f, g)
        P._cache[key] = hit
    return hit


def lambda_bracket(P: PVAStructure, a: DiffPoly, b: DiffPoly) -> LambdaPoly:
    """[a lambda b] as a polynomial in one variable with V coefficients."""
    P.check_element(a)
    P.check_element(b)
    acc = LambdaPoly.zero(1)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            val = bracket_monomials(P, m1, m2)
            if val:
                acc = acc + val * (c1 * c2)
    return acc


def lambda_bracket_recursive(P: PVAStructure, a: DiffPoly, b: DiffPoly) -> LambdaPoly:
    """Same bracket computed by the sesquilinearity and Leibniz rules alone.

    Only meaningful for the Leibniz extension.
    """
    if P.extension != "leibniz":
        raise ValueError("the recursive rules describe the Leibniz extension")
    P.check_element(a)
    P.check_element(b)

    @lru_cache(maxsize=None)
    def rec(f, g) -> LambdaPoly:
        if not f or not g:
            return LambdaPoly.zero(1)
        if len(g) > 1:
            # left Leibniz: [f_l y s] = [f_l y] s + y [f_l s]
            y, s = g[:1], g[1:]
            return rec(f, y) * DiffPoly.monomial(s) + rec(f, s) * DiffPoly.monomial(y)
        if len(f) > 1:
            # right Leibniz: [x r_l c] = [x_{l+d} c]_-> r + [r_{l+d} c]_-> x
            x, r = f[:1], f[1:]
            return (apply_operator(rec(x, g), LambdaPoly.from_diffpoly(DiffPoly.monomial(r), 1))
                    + apply_operator(rec(r, g), LambdaPoly.from_diffpoly(DiffPoly.monomial(x), 1)))
        (ui, m), = f
        (uj, n), = g
        if n:
            # [f_l d^n v] = (l + d)^n [f_l v]
            return lam_plus_d(rec(f, ((uj, 0),)), n)
        if m:
            # [d^m u_l v] = (-l)^m [u_l v]
            base = rec(((ui, 0),), g)
            t = {((e[0] + m,), mm): c * (-1) ** m for (e, mm), c in base.items()}
            return LambdaPoly._raw(1, t)
        return P.entry(ui, uj)

    acc = LambdaPoly.zero(1)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            acc = acc + rec(m1, m2) * (c1 * c2)
    return acc


# ---------------------------------------------------------------------------
# nested brackets in several variables


def bracket_into(P: PVAStructure, a, Q: LambdaPoly, pos: int) -> LambdaPoly:
    """[a_nu Q] where Q has V[...]-coefficients, with nu placed at variable
    index ``pos`` (0-based, currently unused by Q)."""
    t: dict = {}
    for (e, m), c in Q.items():
        if e[pos]:
            raise ValueError("target variable already in use")
        for (e2, m2), c2 in bracket_monomials(P, a, m).items():
            e3 = e[:pos] + (e2[0],) + e[pos + 1:]
            _acc(t, (e3, m2), c * c2)
    return LambdaPoly._raw(Q.nvars, t)


def jacobi_sides(P: PVAStructure, a, b, c) -> tuple:
    """``(lhs, rhs)`` of [a_l [b_m c]] - [b_m [a_l c]] = [[a_l b]_{l+m} c]
    in V[lambda, mu] for monomials a, b, c."""
    bc = bracket_monomials(P, b, c)
    ac = bracket_monomials(P, a, c)
    bc2 = LambdaPoly._raw(2, {((0, e[0]), m): x for (e, m), x in bc.items()})
    ac2 = LambdaPoly._raw(2, {((e[0], 0), m): x for (e, m), x in ac.items()})
    lhs = bracket_into(P, a, bc2, 0) - bracket_into(P, b, ac2, 1)
    t: dict = {}
    for (e, m), x in bracket_monomials(P, a, b).items():
        k = e[0]
        for (e2, m2), y in bracket_monomials(P, m, c).items():
            l = e2[0]
            for j in range(l + 1):
                # lambda^k (lambda+mu)^l
                _acc(t, ((k + j, l - j), m2), x * y * comb(l, j))
    return lhs, LambdaPoly._raw(2, t)


def skew_image(p: LambdaPoly) -> LambdaPoly:
    """-p(-lambda-d), with d acting on the coefficients."""
    acc = LambdaPoly.zero(1)
    for (e, m), c in p.items():
        acc = acc + lam_plus_d(LambdaPoly._raw(1, {((0,), m): c}), e[0], -1)
    return -acc


# ---------------------------------------------------------------------------
# axiom checks


def _fmt_tuple(ms) -> str:
    return "(" + ", ".join(mono_str(m) for m in ms) + ")"


def check_axioms(P: PVAStructure, bounds: Bounds | None = None) -> list:
    """Sesquilinearity, skewsymmetry, Jacobi and left Leibniz on monomial
    pairs and triples from the sample pool.  Returns CheckResults."""
    bounds = bounds or Bounds()
    pool = [m for m in monomial_pool(P.generators, bounds) if m != ONE]
    pairs = sample_tuples(pool, 2, bounds, salt=f"{P.name}/pairs")
    triples = sample_tuples(pool, 3, bounds, salt=f"{P.name}/triples")
    results = []

    fail = ""
    for a, b in pairs:
        ab = bracket_monomials(P, a, b)
        da = DiffPoly.monomial(a).derive()
        db = DiffPoly.monomial(b).derive()
        left = lambda_bracket(P, da, DiffPoly.monomial(b))
        right = lambda_bracket(P, DiffPoly.monomial(a), db)
        want_left = ab * LambdaPoly.lam(1, 1) * -1
        if left != want_left:
            fail = f"[d a_l b] != -l [a_l b] at {_fmt_tuple((a, b))}"
            break
        if right != lam_plus_d(ab, 1):
            fail = f"[a_l d b] != (l+d)[a_l b] at {_fmt_tuple((a, b))}"
            break
    results.append(CheckResult("sesquilinearity", "bracket against d in either slot",
                               not fail, len(pairs), fail))

    fail = ""
    for a, b in pairs:
        ab = bracket_monomials(P, a, b)
        ba = bracket_monomials(P, b, a)
        if ba != skew_image(ab):
            fail = (f"at {_fmt_tuple((a, b))}: [b_l a] = {ba}, "
                    f"-[a_(-l-d) b] = {skew_image(ab)}")
            break
    results.append(CheckResult("skewsymmetry", "[b_l a] = -[a_(-l-d) b]", not fail, len(pairs), fail))

    fail = ""
    for a, b, c in triples:
        lhs, rhs = jacobi_sides(P, a, b, c)
        if lhs != rhs:
            fail = f"at {_fmt_tuple((a, b, c))}: lhs = {lhs}, rhs = {rhs}"
            break
    results.append(CheckResult("jacobi", "[a_l [b_m c]] - [b_m [a_l c]] = [[a_l b]_(l+m) c]",
                               not fail, len(triples), fail))

    fail = ""
    for a, b, c in triples:
        lhs = bracket_monomials(P, a, mono_mul(b, c))
        rhs = (bracket_monomials(P, a, b) * DiffPoly.monomial(c)
               + bracket_monomials(P, a, c) * DiffPoly.monomial(b))
        if lhs != rhs:
            fail = f"at {_fmt_tuple((a, b, c))}: [a_l bc] = {lhs}, expected {rhs}"
            break
    results.append(CheckResult("left leibniz", "[a_l bc] = [a_l b] c + b [a_l c]",
                               not fail, len(triples), fail))
    return results


# ---------------------------------------------------------------------------
# the master element


def master_rules(P: PVAStructure):
    prod_line = make_line(2, [(1, 2)])
    empty_line = make_line(2, [(1,), (2,)])

    def rule(L: LineGraph, monos) -> LambdaPoly:
        a, b = monos
        if L == prod_line:
            return LambdaPoly._raw(2, {((0, 0), mono_mul(a, b)): 1})
        if L == empty_line:
            val = bracket_monomials(P, a, b)
            return normalize(LambdaPoly._raw(2, {((e[0], 0), m): c for (e, m), c in val.items()}))
        raise ValueError(f"unexpected line {L}")

    return rule


def build_master(P: PVAStructure, strict: bool = True, bounds: Bounds | None = None) -> ClCochain:
    """The element X of arity 2 with X on 1->2 the product and X on the
    edgeless graph the lambda-bracket.

    With ``strict`` the axioms are checked first and a failure raises; pass
    ``strict=False`` to build X for a non-PVA table.
    """
    if strict:
        bad = [r for r in check_axioms(P, bounds) if not r.passed]
        if bad:
            raise ValueError(f"{P.name}: axiom check failed ({bad[0].name}: {bad[0].detail})")
    return ClCochain(2, master_rules(P), label=f"X[{P.name}]")


def read_back(X: ClCochain, a, b) -> tuple:
    """``(product, bracket)`` recovered from X at monomials a, b: X on 1->2,
    and X on the edgeless graph at (lambda, -lambda-d)."""
    prod = X.on_line(make_line(2, [(1, 2)]), (a, b)).to_diffpoly()
    val = X.on_line(make_line(2, [(1,), (2,)]), (a, b))
    br = LambdaPoly._raw(1, {((e[0],), m): c for (e, m), c in val.items()})
    return prod, br


LINE_AXIOMS = {0: "jacobi", 1: "leibniz", 2: "associativity"}


def line_axiom(L: LineGraph) -> str:
    """Which PVA axiom the value of X box X on the line L encodes."""
    return LINE_AXIOMS[L.edge_count()]


def check_master_square(X: ClCochain, generators, bounds: Bounds | None = None, name: str = "") -> list:
    """Symmetry of X and X box X = 0 on every line of L(3).

    One CheckResult for the symmetry and one per line, labelled by the axiom
    that line encodes.
    """
    bounds = bounds or Bounds()
    pool = monomial_pool(generators, bounds)
    pool = [m for m in pool if m != ONE]
    tag = name or X.label
    pairs = sample_tuples(pool, 2, bounds, salt=f"{tag}/pairs")
    triples = sample_tuples(pool, 3, bounds, salt=f"{tag}/triples")
    results = []
    bad = symmetry_defect(X, pairs)
    detail = ""
    if bad:
        s, L, ms = bad
        detail = f"X^{list(s)} != X on {L} at {_fmt_tuple(ms)}"
    results.append(CheckResult("symmetry of X", "X^s = X for s in S_2", bad is None, len(pairs) * 2, detail))
    sq = box(X, X)
    for L in enumerate_lines(3):
        fail = ""
        for ms in triples:
            val = sq.on_line(L, ms)
            if val:
                fail = f"at {_fmt_tuple(ms)}: {val}"
                break
        results.append(CheckResult(f"X box X on {L}", f"{line_axiom(L)} component",
                                   not fail, len(triples), fail))
    return results


def passes(results) -> bool:
    return all(r.passed for r in results)


# ---------------------------------------------------------------------------
# shipped structures


def _lp(coeffs: dict) -> LambdaPoly:
    """LambdaPoly(1) from ``{lambda power: DiffPoly or scalar}``."""
    acc = LambdaPoly.zero(1)
    for k, v in coeffs.items():
        v = v if isinstance(v, DiffPoly) else DiffPoly.const(v)
        acc = acc + LambdaPoly._raw(1, {((k,), m): c for m, c in v.items()})
    return acc


def _u(k=0, g="u"):
    return DiffPoly.var(g, k)


def gfz() -> PVAStructure:
    return PVAStructure("gfz", ["u"], {("u", "u"): _lp({1: 1})},
                        description="[u_l u] = l")


def affine() -> PVAStructure:
    # current algebra of the two-dimensional non-abelian Lie algebra
    # [a, b] = b with invariant form (a|a) = 1
    b = _u(0, "b")
    return PVAStructure("affine", ["a", "b"], {
        ("a", "a"): _lp({1: 1}),
        ("a", "b"): _lp({0: b}),
        ("b", "a"): _lp({0: -b}),
    }, description="[a_l a] = l, [a_l b] = b, [b_l a] = -b, [b_l b] = 0")


def zero_bracket() -> PVAStructure:
    return PVAStructure("zero", ["u"], {}, description="[u_l u] = 0")


def virasoro() -> PVAStructure:
    return PVAStructure("virasoro", ["u"], {("u", "u"): _lp({0: _u(1), 1: 2 * _u()})},
                        description="[u_l u] = (d + 2l) u")


def central() -> PVAStructure:
    return PVAStructure("central", ["u"], {("u", "u"): _lp({0: 1, 1: 1})},
                        description="[u_l u] = l + 1")


def broken_skew() -> PVAStructure:
    return PVAStructure("broken-skew", ["u"], {("u", "u"): _lp({2: 1})},
                        description="[u_l u] = l^2")


def broken_leibniz() -> PVAStructure:
    return PVAStructure("broken-leibniz", ["u"], {("u", "u"): _lp({1: 1})}, extension="linear",
                        description="[u_l u] = l, bracket kept only between linear monomials")


def broken_jacobi() -> PVAStructure:
    return PVAStructure("broken-jacobi", ["u"], {("u", "u"): _lp({0: _u(2), 1: 2 * _u(1)})},
                        description="[u_l u] = (d + 2l) u'")


SHIPPED = {
    "gfz": gfz,
    "affine": affine,
    "zero": zero_bracket,
    "virasoro": virasoro,
    "central": central,
    "broken-skew": broken_skew,
    "broken-leibniz": broken_leibniz,
    "broken-jacobi": broken_jacobi,
}


def shipped(name: str) -> PVAStructure:
    try:
        return SHIPPED[name]()
    except KeyError:
        raise KeyError(f"unknown structure {name!r}; choose from {', '.join(SHIPPED)}") from None
