"""Random sesquilinear cochains for property tests.

On a line with path components I_1..I_s the value is

    P(mu_1..mu_s) [w_1 mu_1 [w_2 mu_2 [ ... [w_{s-1} mu_{s-1} w_s]]]]

with mu_a the sum of the lambda's over I_a, w_a = h_a(v_{I_a}) for a
constant-coefficient multidifferential operator h_a, and P a scalar
polynomial.  Such values obey both sesquilinearity conditions for any
bracket table, so no axioms are needed of the table.
"""
from __future__ import annotations

import random

from .algebra import DiffPoly, LambdaPoly, normalize
from .graphs import LineGraph, enumerate_lines
from .operad import ClCochain
from .pva import PVAStructure, bracket_into, virasoro


def _component_operator(size: int, rng: random.Random, max_order: int) -> list:
    exps = {tuple(rng.randint(0, max_order) for _ in range(size)) for _ in range(rng.randint(1, 2))}
    return [(rng.choice([-2, -1, 1, 2]), es) for es in sorted(exps)]


def _apply_operator(op, monos) -> DiffPoly:
    acc = DiffPoly()
    for c, es in op:
        term = DiffPoly.const(c)
        for m, e in zip(monos, es):
            term = term * DiffPoly.monomial(m).derive(e)
        acc = acc + term
    return acc


def random_sesquilinear(n: int, seed, table: PVAStructure | None = None, max_order: int = 1,
                        label: str = "") -> ClCochain:
    """Seeded random cochain of arity n satisfying the cycle relations and
    sesquilinearity (not symmetric in general)."""
    table = table or virasoro()
    rng = random.Random(f"sesq/{n}/{seed}")
    plan = {}
    for L in enumerate_lines(n):
        ops = [_component_operator(len(p), rng, max_order) for p in L.paths]
        scalar = [rng.choice([-1, 1, 2])] + [rng.choice([0, 0, 1, -1]) for _ in L.paths]
        plan[L] = (ops, scalar)

    def rule(L: LineGraph, monos) -> LambdaPoly:
        ops, scalar = plan[L]
        s = len(L.paths)
        ws = [_apply_operator(op, tuple(monos[v - 1] for v in path)) for op, path in zip(ops, L.paths)]
        R = LambdaPoly._raw(s, {((0,) * s, m): c for m, c in ws[-1].items()})
        for a in range(s - 2, -1, -1):
            nxt = LambdaPoly.zero(s)
            for m, c in ws[a].items():
                nxt = nxt + bracket_into(table, m, R, a) * c
            R = nxt
        # P(mu) = c0 + sum c_a mu_a
        Pm = LambdaPoly.scalar(scalar[0], s)
        for a in range(s):
            if scalar[a + 1]:
                Pm = Pm + LambdaPoly.lam(a + 1, s) * scalar[a + 1]
        val = Pm * R
        images = []
        for path in L.paths:
            form = [0] * n
            for v in path:
                form[v - 1] = 1
            images.append(tuple(form))
        return normalize(val.substitute(images, n))

    return ClCochain(n, rule, label=label or f"Z{n}[{seed}]")
