"""Permutations in one-line notation, shuffles, block composition and
monotone permutations.

A permutation of {1..n} is a tuple ``(p(1), ..., p(n))``.  Composition is
``compose(s, t)(i) = s(t(i))``.  The left action on n-tuples is
``s(x_1..x_n) = (x_{s^-1(1)}, ..., x_{s^-1(n)})``.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import NamedTuple, Sequence

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {list(p)}")
    return p


def compose(s: Perm, t: Perm) -> Perm:
    if len(s) != len(t):
        raise ValueError("cannot compose permutations of different sizes")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def sign(p: Perm) -> int:
    return -1 if inversions(p) % 2 else 1


def format_perm(p: Perm) -> str:
    return "[" + " ".join(str(x) for x in p) + "]"


def parse_perm(text: str) -> Perm:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        vals = [int(x) for x in body.replace(",", " ").split()]
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}") from exc
    return check_perm(vals)


# ---------------------------------------------------------------------------
# actions


def act_on_tuple(s: Perm, objs: Sequence) -> tuple:
    """Left action: slot k receives the entry at position s^-1(k)."""
    if len(objs) != len(s):
        raise ValueError("arity mismatch")
    inv = inverse(s)
    return tuple(objs[inv[k] - 1] for k in range(len(s)))


def koszul_sign(s: Perm, parities: Sequence[int]) -> int:
    """Product of (-1)^(p_i p_j) over pairs i<j with s(i) > s(j)."""
    n = len(s)
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if s[i] > s[j]:
                e += parities[i] * parities[j]
    return -1 if e % 2 else 1


def act_on_tensor(s: Perm, parities: Sequence[int]) -> tuple:
    """Return ``(order, sign)``: the acted tensor is
    ``sign * v_{order[0]} (x) ... (x) v_{order[-1]}`` (1-based indices)."""
    if len(parities) != len(s):
        raise ValueError("arity mismatch")
    return inverse(s), koszul_sign(s, parities)


# ---------------------------------------------------------------------------
# shuffles and block composition


def enumerate_shuffles(m: int, n: int) -> list:
    """All (m, n)-shuffles, increasing on the first m and the last n slots."""
    if m < 0 or n < 0:
        return []
    out = []
    for first in combinations(range(1, m + n + 1), m):
        rest = [x for x in range(1, m + n + 1) if x not in first]
        out.append(tuple(first) + tuple(rest))
    return sorted(out)


def block_compose(s: Perm, taus: Sequence[Perm]) -> Perm:
    """The permutation of M symbols that applies each tau_i inside block i
    and then permutes the blocks by s."""
    if len(taus) != len(s):
        raise ValueError("need one block permutation per entry of s")
    sizes = [len(t) for t in taus]
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    blocks = []
    for i, t in enumerate(taus):
        symbols = tuple(range(starts[i] + 1, starts[i] + sizes[i] + 1))
        blocks.append(act_on_tuple(t, symbols))
    arranged = act_on_tuple(s, blocks)
    seq = tuple(x for b in arranged for x in b)
    # seq[k] is rho^-1(k+1)
    return inverse(seq)


# ---------------------------------------------------------------------------
# monotone permutations


class MonotonePerm(NamedTuple):
    perm: Perm
    start: int
    drops: tuple


def is_monotone(p: Perm) -> bool:
    for i in range(1, len(p)):
        prev = p[:i]
        if not (max(prev) < p[i] or min(prev) > p[i]):
            return False
    return True


def drop_positions(p: Perm) -> tuple:
    """Positions i >= 2 where p(i) is smaller than every earlier value."""
    return tuple(i + 1 for i in range(1, len(p)) if min(p[:i]) > p[i])


def as_monotone(p: Sequence[int]) -> MonotonePerm:
    p = check_perm(p)
    if not is_monotone(p):
        raise ValueError(f"{format_perm(p)} is not monotone")
    return MonotonePerm(p, p[0], drop_positions(p))


def from_drops(n: int, k: int, drops: Sequence[int]) -> MonotonePerm:
    drops = tuple(sorted(drops))
    vals = [0] * n
    vals[0] = k
    small = iter(range(k - 1, 0, -1))
    big = iter(range(k + 1, n + 1))
    for pos in range(2, n + 1):
        vals[pos - 1] = next(small) if pos in drops else next(big)
    return MonotonePerm(tuple(vals), k, drops)


def enumerate_monotone(n: int, k: int) -> list:
    """Monotone permutations of {1..n} starting at k, one per (k-1)-subset of
    drop positions in {2..n}."""
    if not 1 <= k <= n:
        raise ValueError(f"start {k} out of range for n={n}")
    return [from_drops(n, k, d) for d in combinations(range(2, n + 1), k - 1)]


def monotone_by_filter(n: int, k: int) -> list:
    """Reference enumeration: filter S_n by the defining conditions."""
    return [as_monotone(p) for p in permutations(range(1, n + 1)) if p[0] == k and is_monotone(p)]


def drop_sum(pi: MonotonePerm) -> int:
    return sum(pi.drops)


def drop_sign(pi) -> int:
    """(-1)^dr(pi), dr being the sum of the drop positions."""
    if not isinstance(pi, MonotonePerm):
        pi = as_monotone(pi)
    elif not is_monotone(pi.perm):
        raise ValueError("not monotone")
    return -1 if drop_sum(pi) % 2 else 1


def restrict_second(pi: MonotonePerm) -> tuple:
    """Drop the second entry of pi.

    Returns ``(pibar, exponent)`` where pibar lies in M_{n-1}^{k-1} when
    pi(2) = k-1 and in M_{n-1}^k when pi(2) = k+1, and ``exponent`` is the
    shift with (-1)^dr(pibar) = (-1)^(dr(pi) + exponent).
    """
    if not isinstance(pi, MonotonePerm):
        pi = as_monotone(pi)
    p, k = pi.perm, pi.start
    n = len(p)
    if n < 2:
        raise ValueError("need n >= 2")
    if p[1] == k - 1:
        head, shift = k - 1, k
    elif p[1] == k + 1:
        head, shift = k, k - 1
    else:
        raise ValueError(f"{format_perm(p)}: second entry is neither k-1 nor k+1")
    rest = [p[i] if p[i] < k else p[i] - 1 for i in range(2, n)]
    return as_monotone((head, *rest)), shift


def restrict_last(pi: MonotonePerm) -> tuple:
    """Drop the last entry of pi (which is 1 or n).

    Returns ``(pitilde, exponent)`` with (-1)^dr(pitilde) =
    (-1)^(dr(pi) + exponent); exponent is n when pi(n) = 1 and 0 otherwise.
    """
    if not isinstance(pi, MonotonePerm):
        pi = as_monotone(pi)
    p = pi.perm
    n = len(p)
    if n < 2:
        raise ValueError("need n >= 2")
    if p[-1] == 1:
        return as_monotone(tuple(x - 1 for x in p[:-1])), n
    if p[-1] == n:
        return as_monotone(p[:-1]), 0
    raise ValueError(f"{format_perm(p)}: last entry is neither 1 nor n")
