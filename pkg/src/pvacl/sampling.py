"""Seeded, bounded samples of monomials and monomial tuples."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import monomials_up_to


@dataclass(frozen=True)
class Bounds:
    max_degree: int = 2
    max_order: int = 2
    max_tuples: int = 48
    seed: int = 0


def monomial_pool(generators, bounds: Bounds) -> list:
    """Every monomial within the degree and order bounds, unit included."""
    return monomials_up_to(generators, bounds.max_degree, bounds.max_order)


def sample_tuples(pool, arity: int, bounds: Bounds, salt: str = "") -> list:
    """All arity-tuples from the pool when there are at most
    ``bounds.max_tuples`` of them, else a seeded sample of that size.

    The sample depends only on the pool, the arity, the seed and the salt.
    """
    pool = list(pool)
    total = len(pool) ** arity
    if total <= bounds.max_tuples:
        return [tuple(t) for t in product(pool, repeat=arity)]
    rng = random.Random(f"{bounds.seed}/{salt}/{arity}")
    picks = sorted(rng.sample(range(total), bounds.max_tuples))
    out = []
    for code in picks:
        t = []
        for _ in range(arity):
            code, r = divmod(code, len(pool))
            t.append(pool[r])
        out.append(tuple(t))
    return out
