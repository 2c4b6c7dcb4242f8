"""The map phi from symmetric cochains to Hochschild cochains, its inverse
on the top grade, and the chain-map identity relating ad X to the
Hochschild differential."""
from __future__ import annotations

from itertools import permutations

from .algebra import DiffPoly, LambdaPoly, mono_str
from .graphs import LineGraph, enumerate_lines, make_line, perm_of_connected_line
from .hochschild import HCochain, hochschild_d, is_harrison, monotone_sum
from .operad import ClCochain, act_at, bracket, grade_component, symmetry_defect
from .perms import inverse, sign
from .report import CheckResult


def standard_line(n: int) -> LineGraph:
    """The line 1 -> 2 -> ... -> n."""
    return make_line(n, [tuple(range(1, n + 1))])


def _fmt(ms) -> str:
    return "(" + ", ".join(mono_str(m) for m in ms) + ")"


def phi(Y: ClCochain) -> HCochain:
    """F(v_1..v_n) = Y on the standard line, read as an element of V."""
    n = Y.arity
    top = standard_line(n)

    def rule(monos):
        val = Y.on_line(top, monos)
        if not val.is_lambda_free():
            raise ValueError(f"{Y.label} is not sesquilinear on the standard line at {_fmt(monos)}")
        return val.to_diffpoly()

    return HCochain(n, rule, label=f"phi({Y.label})")


def lift_top(F: HCochain, check_tuples=None) -> ClCochain:
    """The cochain supported on connected lines with value F on the standard
    line: on tau(standard line), tau(1) = 1, it is sign(tau) F(v_tau(1), ...).

    With ``check_tuples`` the Harrison conditions are verified first.
    """
    n = F.arity
    if check_tuples is not None:
        bad = [r for r in is_harrison(F, check_tuples) if not r.passed]
        if bad:
            raise ValueError(f"{F.label}: Harrison check failed ({bad[0].name} {bad[0].detail})")

    def rule(L: LineGraph, monos) -> LambdaPoly:
        if not L.is_connected():
            return LambdaPoly.zero(n)
        tau = perm_of_connected_line(L)
        val = F.on_monomials(tuple(monos[t - 1] for t in tau))
        return LambdaPoly.from_diffpoly(val, n) * sign(tau)

    return ClCochain(n, rule, label=f"lift({F.label})")


def agree(F: HCochain, G: HCochain, tuples) -> str:
    for ms in tuples:
        a, b = F.on_monomials(ms), G.on_monomials(ms)
        if a != b:
            return f"at {_fmt(ms)}: {a} != {b}"
    return ""


def lift_symmetry_trace(F: HCochain, monos: tuple) -> list:
    """For each s in S_n and each connected line tau(standard line), the pair
    ``(lhs, rhs)`` with lhs = (Y^s) on that line and
    rhs = sign(tau) (L_k F)(v_tau(1), ..., v_tau(n)), k = tau^-1 s^-1 (1),
    where Y = lift_top(F).  Returns tuples ``(s, tau, k, lhs, rhs)``."""
    n = F.arity
    Y = lift_top(F)
    out = []
    for s in permutations(range(1, n + 1)):
        for L in enumerate_lines(n):
            if not L.is_connected():
                continue
            tau = perm_of_connected_line(L)
            k = inverse(tau)[inverse(s)[0] - 1]
            lhs = act_at(Y, s, L, monos).to_diffpoly()
            rhs = monotone_sum(k, F).on_monomials(tuple(monos[t - 1] for t in tau)) * sign(tau)
            out.append((s, tau, k, lhs, rhs))
    return out


def chain_map_defect(X: ClCochain, Y: ClCochain, tuples) -> str:
    """Compare [X, Y] on the standard (n+1)-line with (-1)^{n+1} d(phi(Y))."""
    n = Y.arity
    lhs = bracket(X, Y)
    rhs = hochschild_d(phi(Y))
    top = standard_line(n + 1)
    sgn = (-1) ** (n + 1)
    for ms in tuples:
        a = lhs.on_line(top, ms)
        b = rhs.on_monomials(ms) * sgn
        if not a.is_lambda_free() or a.to_diffpoly() != b:
            return f"at {_fmt(ms)}: [X,Y] = {a}, (-1)^(n+1) d phi(Y) = {b}"
    return ""


def check_chain_map(X: ClCochain, Y: ClCochain, tuples) -> CheckResult:
    detail = chain_map_defect(X, Y, tuples)
    return CheckResult(f"chain map at n={Y.arity} for {Y.label}",
                       "[X,Y] on the standard line = (-1)^(n+1) d phi(Y)",
                       not detail, len(tuples), detail)


def check_cocycle(X: ClCochain, Y: ClCochain, tuples_big) -> CheckResult:
    """If [X, Y] vanishes on the samples then d phi(Y) vanishes too."""
    n = Y.arity
    br = bracket(X, Y)
    for L in enumerate_lines(n + 1):
        for ms in tuples_big:
            if br.on_line(L, ms):
                return CheckResult(f"cocycle for {Y.label}", "[X,Y] = 0 implies d phi(Y) = 0",
                                   False, len(tuples_big), f"[X,Y] != 0 on {L} at {_fmt(ms)}")
    dF = hochschild_d(phi(Y))
    for ms in tuples_big:
        val = dF.on_monomials(ms)
        if val:
            return CheckResult(f"cocycle for {Y.label}", "[X,Y] = 0 implies d phi(Y) = 0",
                               False, len(tuples_big), f"d phi(Y) = {val} at {_fmt(ms)}")
    return CheckResult(f"cocycle for {Y.label}", "[X,Y] = 0 implies d phi(Y) = 0", True, len(tuples_big))


def check_lift(F: HCochain, tuples, perms=None) -> list:
    """lift_top(F) is symmetric, lives in the top grade and phi recovers F."""
    n = F.arity
    Y = lift_top(F)
    out = []
    bad = symmetry_defect(Y, tuples, perms)
    detail = "" if bad is None else f"Y^{list(bad[0])} != Y on {bad[1]} at {_fmt(bad[2])}"
    out.append(CheckResult(f"lift of {F.label} is symmetric", "Y^s = Y", bad is None, len(tuples), detail))
    detail = agree(phi(Y), F, tuples)
    out.append(CheckResult(f"phi(lift({F.label})) = {F.label}", "round trip on the standard line",
                           not detail, len(tuples), detail))
    detail = ""
    for r in range(n + 1):
        if r == n - 1:
            continue
        G = grade_component(Y, r)
        for L in enumerate_lines(n):
            for ms in tuples:
                if G.on_line(L, ms):
                    detail = f"grade {r} part nonzero on {L}"
                    break
            if detail:
                break
    out.append(CheckResult(f"lift of {F.label} has grade n-1", "supported on connected lines",
                           not detail, len(tuples), detail))
    return out


def check_top_uniqueness(Y: ClCochain, tuples) -> CheckResult:
    """A symmetric Y of top grade equals lift_top(phi(Y))."""
    Z = lift_top(phi(Y))
    for L in enumerate_lines(Y.arity):
        for ms in tuples:
            if Y.on_line(L, ms) != Z.on_line(L, ms):
                return CheckResult(f"top grade of {Y.label} determined by phi", "Y = lift(phi(Y))",
                                   False, len(tuples), f"on {L} at {_fmt(ms)}")
    return CheckResult(f"top grade of {Y.label} determined by phi", "Y = lift(phi(Y))", True, len(tuples))


def phi_value(Y: ClCochain, vs) -> DiffPoly:
    return phi(Y)(*vs)
