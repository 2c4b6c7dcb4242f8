"""Text syntax for differential polynomials, lambda-polynomials and cochain
rules, and the JSON descriptor files built on it.

Expressions use ``+ - * / ^`` (or ``**``) with integer constants.  A
generator ``u`` and its derivatives are written ``u``, ``u'``, ``u''``,
``u[4]`` or ``d(u, 4)``; ``d(expr)`` differentiates any lambda-free part.
The bracket variable is ``lam``, ``lambda`` or ``λ``; in several variables
``lam1``, ``λ2``, ...  Cochain rules refer to their inputs as ``v1..vn``.
"""
from __future__ import annotations

import ast
import json
import re
from fractions import Fraction

from .algebra import DiffPoly, LambdaPoly, _acc, _add_exp, mono_derive_k, mono_mul
from .graphs import line_of, parse_graph
from .operad import ClCochain

_PRIMES = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)('+)")
_LAMBDA_WORD = re.compile(r"\blambda\b")
_RESERVED = {"d", "lam"}


class Expr:
    """Polynomial in input slots (with derivative orders), lambda's and
    generators.  Terms are keyed ``(slots, lambda exponents, monomial)``
    where ``slots`` is a sorted tuple of ``(slot, order)``."""

    def __init__(self, nlam: int, terms=None):
        self.nlam = nlam
        self.terms = terms or {}

    @classmethod
    def const(cls, c, nlam):
        return cls(nlam, {((), (0,) * nlam, ()): Fraction(c)} if c else {})

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return Expr(self.nlam, t)

    def __neg__(self):
        return Expr(self.nlam, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        t: dict = {}
        for (s1, e1, m1), c1 in self.terms.items():
            for (s2, e2, m2), c2 in other.terms.items():
                _acc(t, (tuple(sorted(s1 + s2)), _add_exp(e1, e2), mono_mul(m1, m2)), c1 * c2)
        return Expr(self.nlam, t)

    def scale(self, c):
        return Expr(self.nlam, {k: v * c for k, v in self.terms.items()})

    def derive(self):
        t: dict = {}
        for (s, e, m), c in self.terms.items():
            if any(e):
                raise ValueError("d(...) is only defined on lambda-free expressions")
            for m2, c2 in mono_derive_k(m, 1):
                _acc(t, (s, e, m2), c * c2)
            for i, (slot, order) in enumerate(s):
                s2 = tuple(sorted(s[:i] + ((slot, order + 1),) + s[i + 1:]))
                _acc(t, (s2, e, m), c)
        return Expr(self.nlam, t)

    def constant_value(self):
        if any(k != ((), (0,) * self.nlam, ()) for k in self.terms):
            return None
        return self.terms.get(((), (0,) * self.nlam, ()), Fraction(0))


def _prep(text: str) -> str:
    text = text.replace("λ", "lam").replace("∂", "d").replace("^", "**")
    text = _LAMBDA_WORD.sub("lam", text)
    return _PRIMES.sub(lambda m: f"d({m.group(1)}, {len(m.group(2))})", text)


def parse_expr(text: str, generators=(), nlam: int = 0, nslots: int = 0) -> Expr:
    """Parse an expression; raises ValueError on anything malformed."""
    for g in generators:
        if g in _RESERVED or re.fullmatch(r"v\d+|lam\d*", g):
            raise ValueError(f"generator name {g!r} is reserved")
    try:
        tree = ast.parse(_prep(text), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed expression {text!r}") from exc
    gens = set(generators)

    def atom(name: str, order: int = 0) -> Expr:
        z = (0,) * nlam
        if name in gens:
            return Expr(nlam, {((), z, ((name, order),)): Fraction(1)})
        m = re.fullmatch(r"v(\d+)", name)
        if m and 1 <= int(m.group(1)) <= nslots:
            return Expr(nlam, {(((int(m.group(1)), order),), z, ()): Fraction(1)})
        if order:
            raise ValueError(f"cannot differentiate {name!r}")
        m = re.fullmatch(r"lam(\d*)", name)
        if m:
            idx = int(m.group(1)) if m.group(1) else (1 if nlam == 1 else 0)
            if 1 <= idx <= nlam:
                e = [0] * nlam
                e[idx - 1] = 1
                return Expr(nlam, {((), tuple(e), ()): Fraction(1)})
        raise ValueError(f"unknown name {name!r}")

    def ev(node) -> Expr:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Expr.const(node.value, nlam)
        if isinstance(node, ast.Name):
            return atom(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            x = ev(node.operand)
            return -x if isinstance(node.op, ast.USub) else x
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                c = b.constant_value()
                if not c:
                    raise ValueError("division only by a nonzero constant")
                return a.scale(1 / Fraction(c))
            if isinstance(node.op, ast.Pow):
                c = b.constant_value()
                if c is None or c < 0 or Fraction(c).denominator != 1:
                    raise ValueError("exponent must be a non-negative integer")
                out = Expr.const(1, nlam)
                for _ in range(int(c)):
                    out = out * a
                return out
        if isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name):
            idx = node.slice
            if isinstance(idx, ast.Constant) and type(idx.value) is int:
                return atom(node.value.id, idx.value)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "d":
            if node.keywords or not 1 <= len(node.args) <= 2:
                raise ValueError("d takes one or two arguments")
            k = 1
            if len(node.args) == 2:
                kk = node.args[1]
                if not (isinstance(kk, ast.Constant) and type(kk.value) is int and kk.value >= 0):
                    raise ValueError("derivative order must be a non-negative integer")
                k = kk.value
            target = node.args[0]
            if isinstance(target, ast.Name) and (target.id in gens or re.fullmatch(r"v\d+", target.id)):
                return atom(target.id, k)
            x = ev(target)
            for _ in range(k):
                x = x.derive()
            return x
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


def parse_diffpoly(text: str, generators) -> DiffPoly:
    e = parse_expr(text, generators)
    return DiffPoly({m: c for (_, _, m), c in e.terms.items()})


def parse_lambdapoly(text: str, generators, nlam: int = 1) -> LambdaPoly:
    e = parse_expr(text, generators, nlam=nlam)
    return LambdaPoly(nlam, {(lam, m): c for (_, lam, m), c in e.terms.items()})


def rule_from_expr(e: Expr, n: int):
    """Cochain rule ``monos -> LambdaPoly`` from an expression linear in each
    of v1..vn."""
    for (slots, _, _) in e.terms:
        if sorted(s for s, _ in slots) != list(range(1, n + 1)):
            raise ValueError("a cochain rule must be linear in each of v1..vn")

    def rule(monos) -> LambdaPoly:
        t: dict = {}
        for (slots, lam, m), c in e.terms.items():
            partial = [(m, c)]
            for slot, order in slots:
                partial = [(mono_mul(a, m2), x * c2) for a, x in partial
                           for m2, c2 in mono_derive_k(monos[slot - 1], order)]
            for m2, x in partial:
                _acc(t, (lam, m2), x)
        return LambdaPoly._raw(n, t)

    return rule


# ---------------------------------------------------------------------------
# descriptor files


def load_pva(path_or_data):
    """PVA descriptor: ``{"name", "generators": [...], "brackets": {"a b":
    expr in lam}, "extension": "leibniz"}``."""
    from .pva import PVAStructure
    data = _load(path_or_data)
    try:
        gens = list(data["generators"])
        table = {}
        for key, expr in data.get("brackets", {}).items():
            parts = key.split()
            if len(parts) != 2:
                raise ValueError(f"bracket key {key!r} must name two generators")
            table[(parts[0], parts[1])] = parse_lambdapoly(str(expr), gens, 1)
        return PVAStructure(data.get("name", "custom"), gens, table,
                            extension=data.get("extension", "leibniz"),
                            description=data.get("description", ""))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed PVA descriptor: {exc}") from exc


def load_cochain(path_or_data) -> ClCochain:
    """Cochain descriptor: ``{"arity": n, "generators": [...], "rules":
    {line literal: expr in v1..vn and lam1..lamn}}``; lines not listed are 0."""
    data = _load(path_or_data)
    try:
        n = int(data["arity"])
        gens = list(data.get("generators", []))
        rules = {}
        for key, expr in data["rules"].items():
            g = parse_graph(key)
            L = line_of(g)
            if L is None or g.n != n:
                raise ValueError(f"{key!r} is not a line on {n} vertices")
            rules[L] = rule_from_expr(parse_expr(str(expr), gens, nlam=n, nslots=n), n)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cochain descriptor: {exc}") from exc

    def rule(L, monos):
        f = rules.get(L)
        return f(monos) if f else LambdaPoly.zero(n)

    return ClCochain(n, rule, label=data.get("name", "descriptor"))


def _load(path_or_data) -> dict:
    if isinstance(path_or_data, dict):
        return path_or_data
    try:
        with open(path_or_data, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed descriptor: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("descriptor must be a JSON object")
    return data
