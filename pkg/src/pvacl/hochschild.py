"""Differential Hochschild cochains of V with coefficients in V, the
Hochschild differential and Harrison's operators L_k."""
from __future__ import annotations

import random
from typing import Callable, Sequence

from .algebra import ONE, DiffPoly, expand_tensor, mono_derive_k, mono_mul, mono_str
from .perms import enumerate_monotone, drop_sign
from .report import CheckResult

HRule = Callable[[tuple], DiffPoly]


class HCochain:
    """Multilinear map V^{(x) n} -> V given on tuples of monomials."""

    def __init__(self, arity: int, rule: HRule, label: str = ""):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        self.arity = arity
        self._rule = rule
        self.label = label or f"F/{arity}"
        self._cache: dict = {}

    def __repr__(self):
        return f"HCochain({self.label!r}, arity={self.arity})"

    def on_monomials(self, monos: tuple) -> DiffPoly:
        hit = self._cache.get(monos)
        if hit is None:
            if len(monos) != self.arity:
                raise ValueError("arity mismatch")
            hit = self._rule(monos)
            self._cache[monos] = hit
        return hit

    def __call__(self, *vs) -> DiffPoly:
        if len(vs) != self.arity:
            raise ValueError("arity mismatch")
        acc = DiffPoly()
        for monos, c in expand_tensor(vs):
            val = self.on_monomials(monos)
            if val:
                acc = acc + val * c
        return acc


def constant_cochain(m: DiffPoly) -> HCochain:
    return HCochain(0, lambda monos: m, label=f"const({m})")


def combine(terms: Sequence, label: str = "") -> HCochain:
    terms = [(c, F) for c, F in terms if c]
    n = terms[0][1].arity
    if any(F.arity != n for _, F in terms):
        raise ValueError("arity mismatch")

    def rule(monos):
        acc = DiffPoly()
        for c, F in terms:
            acc = acc + F.on_monomials(monos) * c
        return acc

    return HCochain(n, rule, label or " + ".join(f"{c}*{F.label}" for c, F in terms))


def hochschild_d(F: HCochain) -> HCochain:
    """(dF)(a_1..a_{n+1}) = a_1 F(a_2..) + sum_i (-1)^i F(.., a_i a_{i+1}, ..)
    + (-1)^{n+1} F(a_1..a_n) a_{n+1}."""
    n = F.arity

    def rule(monos):
        first = DiffPoly.monomial(monos[0])
        last = DiffPoly.monomial(monos[-1])
        acc = first * F.on_monomials(monos[1:])
        for i in range(1, n + 1):
            merged = monos[:i - 1] + (mono_mul(monos[i - 1], monos[i]),) + monos[i + 1:]
            acc = acc + F.on_monomials(merged) * (-1) ** i
        acc = acc + F.on_monomials(monos[:-1]) * last * (-1) ** (n + 1)
        return acc

    return HCochain(n + 1, rule, label=f"d({F.label})")


def monotone_sum(k: int, F: HCochain) -> HCochain:
    """sum over pi in M_n^k of (-1)^dr(pi) F(a_pi(1), ..., a_pi(n)); the
    identity for k = 1."""
    n = F.arity
    terms = [(pi.perm, drop_sign(pi)) for pi in enumerate_monotone(n, k)]

    def rule(monos):
        acc = DiffPoly()
        for p, s in terms:
            acc = acc + F.on_monomials(tuple(monos[i - 1] for i in p)) * s
        return acc

    return HCochain(n, rule, label=f"L{k}({F.label})")


def harrison_L(k: int, F: HCochain) -> HCochain:
    if not 2 <= k <= F.arity:
        raise ValueError(f"k = {k} out of range 2..{F.arity}")
    return monotone_sum(k, F)


def _fmt(monos) -> str:
    return "(" + ", ".join(mono_str(m) for m in monos) + ")"


def total_derivative_defect(F: HCochain, monos: tuple) -> DiffPoly:
    """sum_i F(.., d a_i, ..) - d F(a_1..a_n); zero for d-linear F."""
    acc = DiffPoly()
    for i in range(F.arity):
        for m2, c in mono_derive_k(monos[i], 1):
            acc = acc + F.on_monomials(monos[:i] + (m2,) + monos[i + 1:]) * c
    return acc - F.on_monomials(monos).derive()


def is_dlinear(F: HCochain, tuples) -> CheckResult:
    for ms in tuples:
        if total_derivative_defect(F, ms):
            return CheckResult(f"{F.label} commutes with d", "F(d(a_1 (x) .. (x) a_n)) = d F(a)",
                               False, len(tuples), f"at {_fmt(ms)}")
    return CheckResult(f"{F.label} commutes with d", "F(d(a_1 (x) .. (x) a_n)) = d F(a)", True, len(tuples))


def is_harrison(F: HCochain, tuples) -> list:
    """L_k F = F for 2 <= k <= n on the sampled tuples, plus d-linearity."""
    out = []
    for k in range(2, F.arity + 1):
        L = harrison_L(k, F)
        fail = ""
        for ms in tuples:
            if L.on_monomials(ms) != F.on_monomials(ms):
                fail = f"at {_fmt(ms)}: L{k}F = {L.on_monomials(ms)}, F = {F.on_monomials(ms)}"
                break
        out.append(CheckResult(f"L{k} {F.label} = {F.label}", "Harrison condition", not fail, len(tuples), fail))
    out.append(is_dlinear(F, tuples))
    return out


def vanishes(F: HCochain, tuples) -> str:
    """Empty string when F is zero on every tuple, else a description."""
    for ms in tuples:
        val = F.on_monomials(ms)
        if val:
            return f"at {_fmt(ms)}: {val}"
    return ""


# ---------------------------------------------------------------------------
# test cochains


def multidifferential(n: int, table: Sequence, label: str = "") -> HCochain:
    """F(a_1..a_n) = sum_t c_t w_t prod_r d^{e_tr} a_r from a table of
    ``(c, w, (e_1..e_n))`` with w a monomial; d-linear when every w is 1."""
    table = [(c, tuple(w), tuple(es)) for c, w, es in table]

    def rule(monos):
        acc = DiffPoly()
        for c, w, es in table:
            term = DiffPoly.monomial(w, c)
            for m, e in zip(monos, es):
                term = term * DiffPoly.monomial(m).derive(e)
                if not term:
                    break
            acc = acc + term
        return acc

    return HCochain(n, rule, label)


def random_cochain(n: int, rng: random.Random, generators=("u",), dlinear: bool = True,
                   terms: int = 3, max_order: int = 1) -> HCochain:
    """Random multidifferential cochain with small integer coefficients."""
    table = []
    for _ in range(terms):
        c = rng.choice([-2, -1, 1, 2, 3])
        es = tuple(rng.randint(0, max_order) for _ in range(n))
        if dlinear:
            w = ONE
        else:
            g = rng.choice(generators)
            w = rng.choice([ONE, ((g, 0),), ((g, 1),)])
        table.append((c, w, es))
    return multidifferential(n, table, label=f"rand{n}")


def symmetric_cochain(F: HCochain) -> HCochain:
    """F(a, b) + F(b, a); for arity 2 the Harrison condition is symmetry."""
    if F.arity != 2:
        raise ValueError("only defined for arity 2")
    return HCochain(2, lambda ms: F.on_monomials(ms) + F.on_monomials(ms[::-1]), label=f"sym({F.label})")
