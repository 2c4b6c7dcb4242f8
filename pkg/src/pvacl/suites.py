"""Verification suites.  Each suite is a list of independent tasks; a task
returns ``(heading, [CheckResult])`` and depends only on its arguments, so
tasks may run in a process pool while the report keeps a fixed order."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import permutations
from math import comb

from . import graph_oracle, graphs, hochschild, morphism, operad, perms, pva
from .algebra import ONE
from .cochains import random_sesquilinear
from .report import CheckResult, Report
from .sampling import Bounds, monomial_pool, sample_tuples


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    max_degree: int = 2
    max_order: int = 2
    max_arity: int = 3
    max_tuples: int = 16
    structure: str = "gfz"
    n: int = 0  # suite-specific size; 0 picks the suite default

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.max_degree, self.max_order, self.max_tuples, self.seed)


def load_structure(name: str) -> pva.PVAStructure:
    if name in pva.SHIPPED:
        return pva.shipped(name)
    if name.endswith(".json"):
        from .parse import load_pva
        return load_pva(name)
    raise KeyError(f"unknown structure {name!r}; choose from {', '.join(pva.SHIPPED)} or a .json descriptor")


def _pool(cfg: RunConfig, generators=("u",), unit=True) -> list:
    pool = monomial_pool(generators, cfg.bounds)
    return pool if unit else [m for m in pool if m != ONE]


def _tuples(cfg: RunConfig, arity: int, salt: str, generators=("u",), unit=True) -> list:
    return sample_tuples(_pool(cfg, generators, unit), arity, cfg.bounds, salt)


def _check(name, identity, failures, cases) -> CheckResult:
    return CheckResult(name, identity, not failures, cases, failures[0] if failures else "")


# ---------------------------------------------------------------------------
# monotone permutations


def task_monotone(n: int):
    out = []
    fails, cases = [], 0
    for k in range(1, n + 1):
        cases += 1
        got = len(perms.enumerate_monotone(n, k))
        if got != comb(n - 1, k - 1):
            fails.append(f"k={k}: {got} != {comb(n - 1, k - 1)}")
    out.append(_check(f"count n={n}", "|M_n^k| = C(n-1, k-1)", fails, cases))
    fails, cases = [], 0
    for k in range(1, n + 1):
        a = sorted(p.perm for p in perms.enumerate_monotone(n, k))
        b = sorted(p.perm for p in perms.monotone_by_filter(n, k))
        cases += 1
        if a != b:
            fails.append(f"k={k}: drop-set enumeration differs from filtering S_n")
    out.append(_check(f"enumeration n={n}", "drop sets <-> monotone permutations", fails, cases))
    fails, cases = [], 0
    for k in range(1, n + 1):
        for pi in perms.enumerate_monotone(n, k):
            cases += 1
            if perms.drop_sign(pi) != (-1) ** (k - 1) * perms.sign(pi.perm):
                fails.append(f"{perms.format_perm(pi.perm)}")
    out.append(_check(f"sign law n={n}", "(-1)^dr = (-1)^(k-1) sign", fails, cases))
    if n >= 2:
        out.append(_restriction_check(n, "second", perms.restrict_second,
                                      lambda pi, k: pi.perm[1] == k - 1, "drop the second entry"))
        out.append(_restriction_check(n, "last", perms.restrict_last,
                                      lambda pi, k: pi.perm[-1] == 1, "drop the last entry"))
    return (f"monotone permutations, n={n}", out)


def _restriction_check(n, which, fn, goes_down, identity):
    fails, cases = [], 0
    for k in range(1, n + 1):
        images = {k - 1: [], k: []}
        for pi in perms.enumerate_monotone(n, k):
            cases += 1
            img, shift = fn(pi)
            target = k - 1 if goes_down(pi, k) else k
            if img.start != target:
                fails.append(f"{perms.format_perm(pi.perm)} lands in start {img.start}, expected {target}")
                continue
            if which == "second":
                want = k if target == k - 1 else k - 1
            else:
                want = n if target == k - 1 else 0
            if shift != want or perms.drop_sign(img) != perms.drop_sign(pi) * (-1) ** shift:
                fails.append(f"sign shift wrong at {perms.format_perm(pi.perm)}")
            images[target].append(img.perm)
        for t, imgs in images.items():
            if t < 1 or t > n - 1:
                if imgs:
                    fails.append(f"k={k}: images in empty target start {t}")
                continue
            want = sorted(p.perm for p in perms.enumerate_monotone(n - 1, t))
            if sorted(imgs) != want:
                fails.append(f"k={k}: map onto M_(n-1)^{t} is not bijective")
    return _check(f"restriction ({which}) n={n}", identity, fails, cases)


# ---------------------------------------------------------------------------
# lines


def task_line_basis(n: int):
    ora = graph_oracle.oracle(n)
    out = [CheckResult(f"quotient dimension n={n}", "dim of graphs modulo cycle relations = |L(n)|",
                       ora.quotient_dimension == len(graphs.enumerate_lines(n)), 1,
                       "" if ora.quotient_dimension == len(graphs.enumerate_lines(n))
                       else f"{ora.quotient_dimension} != {len(graphs.enumerate_lines(n))}")]
    out.append(CheckResult(f"lines form a basis n={n}", "non-line columns are pivots",
                           ora.lines_form_basis(), 1, "" if ora.lines_form_basis() else "lines do not span"))
    fails, cases = [], 0
    for g in graph_oracle.all_digraphs(n):
        cases += 1
        if graphs.reduce_graph(g) != ora.reduce({g: 1}):
            fails.append(f"reduction of {graphs.format_graph(g)} disagrees with the rank oracle")
            break
    out.append(_check(f"rewriting = rank oracle n={n}", "constructive reduction matches linear algebra",
                      fails, cases))
    return (f"line basis, n={n}", out)


def task_line_identities(n: int):
    out = []
    res = graphs.reduce_to_lines(graphs.insertion_sum(n))
    out.append(CheckResult(f"insertion sum n={n}", "sum of vertex 1 inserted along 2->...->n is 0",
                           not res, 1, graphs.format_coordinates(res) if res else ""))
    fails = []
    for k in range(1, n + 1):
        res = graphs.reduce_to_lines(graphs.monotone_line_sum(n, k))
        if res:
            fails.append(f"k={k}: {graphs.format_coordinates(res)}")
    out.append(_check(f"monotone line sums n={n}", "Lambda_n = -(-1)^k sum_{M_n^k} pi(Lambda_n)", fails, n))
    return (f"identities on lines, n={n}", out)


# ---------------------------------------------------------------------------
# operad axioms


def _compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _nonzero(C: operad.ClCochain, tuples) -> int:
    return sum(1 for L in graphs.enumerate_lines(C.arity) for ms in tuples if C.on_line(L, ms))


def task_unit(cfg: RunConfig, n: int):
    f = random_sesquilinear(n, f"{cfg.seed}/unit")
    tuples = _tuples(cfg, n, f"unit/{n}")
    fails = []
    if operad.first_difference(operad.compose(f, [operad.unit()] * n), f, tuples):
        fails.append("f(1, ..., 1) != f")
    if operad.first_difference(operad.compose(operad.unit(), [f]), f, tuples):
        fails.append("1(f) != f")
    nz = _nonzero(f, tuples)
    if not nz:
        fails.append("sampled cochain vanishes identically")
    return (f"unit, arity {n}", [_check(f"unit axioms arity {n}", "f(1..1) = 1(f) = f", fails, len(tuples))])


def task_associativity(cfg: RunConfig, ms: tuple, ls: tuple):
    tag = f"{cfg.seed}/assoc/{ms}/{ls}"
    f = random_sesquilinear(len(ms), f"{tag}/f")
    gs = [random_sesquilinear(m, f"{tag}/g{i}") for i, m in enumerate(ms)]
    hs = [random_sesquilinear(l, f"{tag}/h{j}") for j, l in enumerate(ls)]
    inner, pars, off = [], [], 0
    for g in gs:
        H = hs[off:off + g.arity]
        off += g.arity
        inner.append(operad.compose(g, H))
        pars.append(sum(h.parity for h in H))
    e = sum(gs[j].parity * pars[i] for j in range(len(gs)) for i in range(j))
    lhs = operad.combine([((-1) ** e, operad.compose(f, inner))])
    rhs = operad.compose(operad.compose(f, gs), hs)
    tuples = _tuples(cfg, sum(ls), f"assoc/{ms}/{ls}")
    bad = operad.first_difference(lhs, rhs, tuples)
    fails = [f"on {bad[0]} at {bad[1]}"] if bad else []
    if not bad and not _nonzero(rhs, tuples):
        fails.append("both sides vanish on every sample")
    name = f"f{len(ms)}(g{list(ms)})(h{list(ls)})"
    return ("associativity", [_check(name, "f((g)(h)) = (f(g))(h) with Koszul sign", fails, len(tuples))])


def task_equivariance(cfg: RunConfig, ms: tuple):
    n = len(ms)
    tag = f"{cfg.seed}/equiv/{ms}"
    rng = random.Random(tag)
    f = random_sesquilinear(n, f"{tag}/f")
    gs = [random_sesquilinear(m, f"{tag}/g{i}") for i, m in enumerate(ms)]
    tuples = _tuples(cfg, sum(ms), f"equiv/{ms}")
    out = []
    for s in permutations(range(1, n + 1)):
        taus = [tuple(rng.sample(range(1, m + 1), m)) for m in ms]
        lhs = operad.compose(operad.act_cochain(f, s), [operad.act_cochain(g, t) for g, t in zip(gs, taus)])
        inv = perms.inverse(s)
        eps = perms.koszul_sign(s, [g.parity for g in gs])
        inner = operad.compose(f, [gs[inv[k] - 1] for k in range(n)])
        rhs = operad.combine([(eps, operad.act_cochain(inner, perms.block_compose(s, taus)))])
        bad = operad.first_difference(lhs, rhs, tuples)
        fails = [f"on {bad[0]} at {bad[1]}"] if bad else []
        if not bad and not _nonzero(lhs, tuples):
            fails.append("both sides vanish on every sample")
        out.append(_check(f"s={perms.format_perm(s)} taus={[perms.format_perm(t) for t in taus]} blocks={list(ms)}",
                          "f^s(g^t) = (f(s(g)))^{s(t)}", fails, len(tuples)))
    return (f"equivariance, blocks {list(ms)}", out)


# ---------------------------------------------------------------------------
# PVA


def task_pva_axioms(cfg: RunConfig):
    P = load_structure(cfg.structure)
    out = pva.check_axioms(P, cfg.bounds)
    if P.extension == "leibniz":
        pairs = _tuples(cfg, 2, f"{P.name}/recursive", P.generators, unit=False)
        fails = []
        from .algebra import DiffPoly
        for a, b in pairs:
            x = pva.lambda_bracket(P, DiffPoly.monomial(a), DiffPoly.monomial(b))
            y = pva.lambda_bracket_recursive(P, DiffPoly.monomial(a), DiffPoly.monomial(b))
            if x != y:
                fails.append(f"at ({a}, {b}): {x} != {y}")
                break
        out.append(_check("closed formula = rule-by-rule expansion", "two routes to the extended bracket",
                          fails, len(pairs)))
    return (f"axioms of {P.name}: {P.description}", out)


def task_master_square(cfg: RunConfig):
    P = load_structure(cfg.structure)
    axioms = pva.check_axioms(P, cfg.bounds)
    X = pva.build_master(P, strict=False)
    square = pva.check_master_square(X, P.generators, cfg.bounds, P.name)
    pairs = _tuples(cfg, 2, f"{P.name}/readback", P.generators, unit=False)
    fails = []
    from .algebra import DiffPoly, mono_mul
    for a, b in pairs:
        prod, br = pva.read_back(X, a, b)
        if prod != DiffPoly.monomial(mono_mul(a, b)) or br != pva.bracket_monomials(P, a, b):
            fails.append(f"read back differs at ({a}, {b})")
            break
    out = list(square)
    out.append(_check("read back product and bracket from X", "round trip structure -> X -> structure",
                      fails, len(pairs)))
    ax, sq = pva.passes(axioms), pva.passes(square)
    out.append(CheckResult("axioms hold <=> X box X = 0", "correspondence on this structure", ax == sq, 1,
                           "" if ax == sq else f"axioms {'pass' if ax else 'fail'}, square {'pass' if sq else 'fail'}"))
    return (f"master element of {P.name}: axioms {'pass' if ax else 'fail'}", out)


# ---------------------------------------------------------------------------
# Hochschild and Harrison


def task_hochschild(cfg: RunConfig, n: int):
    rng = random.Random(f"{cfg.seed}/hoch/{n}")
    out = []
    for dlin in (True, False):
        F = hochschild.random_cochain(n, rng, dlinear=dlin)
        dd = hochschild.hochschild_d(hochschild.hochschild_d(F))
        tuples = _tuples(cfg, n + 2, f"dd/{n}/{dlin}")
        detail = hochschild.vanishes(dd, tuples)
        out.append(CheckResult(f"d d F = 0, arity {n}, {'d-linear' if dlin else 'general'}",
                               "Hochschild differential squares to zero", not detail, len(tuples), detail))
        if dlin:
            tuples1 = _tuples(cfg, n + 1, f"dlin/{n}")
            r = hochschild.is_dlinear(hochschild.hochschild_d(F), tuples1)
            out.append(CheckResult(f"d F commutes with d, arity {n}", r.identity, r.passed, r.cases, r.detail))
    return (f"Hochschild complex, arity {n}", out)


def task_hochschild_spot(cfg: RunConfig):
    from .algebra import DiffPoly
    out = []
    tuples1 = _tuples(cfg, 1, "spot/1")
    tuples2 = _tuples(cfg, 2, "spot/2")
    m = DiffPoly.var("u", 1)
    d0 = hochschild.hochschild_d(hochschild.constant_cochain(m))
    det = hochschild.vanishes(d0, tuples1)
    out.append(CheckResult("d of a constant", "(dm)(a) = a m - m a = 0", not det, len(tuples1), det))
    D = hochschild.HCochain(1, lambda ms: DiffPoly.monomial(ms[0]).derive(), "d/dx")
    det = hochschild.vanishes(hochschild.hochschild_d(D), tuples2)
    out.append(CheckResult("derivations are cocycles", "d(D) = 0 for the derivation D = d", not det, len(tuples2), det))
    mult = hochschild.HCochain(1, lambda ms: DiffPoly.monomial(ms[0]) * DiffPoly.var("u"), "u*")
    dm = hochschild.hochschild_d(mult)
    fails = []
    for a, b in tuples2:
        want = DiffPoly.monomial(a) * DiffPoly.var("u") * DiffPoly.monomial(b)
        if dm.on_monomials((a, b)) != want:
            fails.append(f"at ({a}, {b})")
            break
    out.append(_check("multiplication operator", "(dF)(a, b) = a u b for F(a) = u a", fails, len(tuples2)))
    return ("Hochschild spot checks", out)


def _harrison_input(cfg: RunConfig, n: int) -> hochschild.HCochain:
    rng = random.Random(f"{cfg.seed}/har/{n}")
    if n == 1:
        return hochschild.random_cochain(1, rng)
    if n == 2:
        return hochschild.symmetric_cochain(hochschild.random_cochain(2, rng))
    return morphism.phi(operad.symmetrize(random_sesquilinear(n, f"{cfg.seed}/har/{n}")))


def task_harrison_closure(cfg: RunConfig, n: int):
    F = _harrison_input(cfg, n)
    tuples = _tuples(cfg, n, f"har/{n}")
    tuples1 = _tuples(cfg, n + 1, f"har/{n + 1}")
    out = []
    pre = hochschild.is_harrison(F, tuples)
    out.append(CheckResult(f"input of arity {n} is Harrison", "L_k F = F and F commutes with d",
                           pva.passes(pre), len(tuples), next((r.detail for r in pre if not r.passed), "")))
    post = hochschild.is_harrison(hochschild.hochschild_d(F), tuples1)
    out.append(CheckResult(f"d F of arity {n + 1} is Harrison", "Harrison cochains form a subcomplex",
                           pva.passes(post), len(tuples1), next((r.detail for r in post if not r.passed), "")))
    nz = any(hochschild.hochschild_d(F).on_monomials(ms) for ms in tuples1)
    out.append(CheckResult(f"d F of arity {n + 1} is nonzero on the samples", "non-vacuous closure test",
                           nz, len(tuples1), "" if nz else "d F vanishes on every sample"))
    return (f"Harrison closure, arity {n}", out)


# ---------------------------------------------------------------------------
# phi, lift and the chain map


def _symmetric_input(cfg: RunConfig, n: int) -> operad.ClCochain:
    return operad.symmetrize(random_sesquilinear(n, f"{cfg.seed}/sym/{n}"))


def task_symmetric_lift(cfg: RunConfig, n: int):
    Y = _symmetric_input(cfg, n)
    F = morphism.phi(Y)
    tuples = _tuples(cfg, n, f"lift/{n}")
    out = []
    res = hochschild.is_harrison(F, tuples)
    out.append(CheckResult(f"phi(Y) is Harrison, n={n}", "symmetric Y gives a Harrison cochain",
                           pva.passes(res), len(tuples), next((r.detail for r in res if not r.passed), "")))
    nz = any(F.on_monomials(ms) for ms in tuples)
    out.append(CheckResult(f"phi(Y) nonzero, n={n}", "non-vacuous input", nz, len(tuples),
                           "" if nz else "phi(Y) vanishes on every sample"))
    out.extend(morphism.check_lift(F, tuples))
    return (f"symmetric cochains and Harrison cochains, n={n}", out)


def _table_for(P: pva.PVAStructure) -> pva.PVAStructure:
    """Bracket table used to build random cochains over P's generators."""
    return pva.virasoro() if P.generators == ("u",) else P


def task_chain_map(cfg: RunConfig, n: int):
    P = load_structure(cfg.structure)
    X = pva.build_master(P, strict=False)
    tuples = _tuples(cfg, n + 1, f"chain/{n}", P.generators)
    # redraw (deterministically) while d phi(Y) vanishes, e.g. when phi(Y) is a derivation
    for attempt in range(8):
        Y = operad.symmetrize(random_sesquilinear(n, f"{cfg.seed}/chain/{n}/{attempt}", table=_table_for(P)))
        nz = any(hochschild.hochschild_d(morphism.phi(Y)).on_monomials(ms) for ms in tuples)
        if nz:
            break
    out = [morphism.check_chain_map(X, Y, tuples)]
    out.append(CheckResult(f"d phi(Y) nonzero, n={n}", "non-vacuous input", nz, len(tuples),
                           "" if nz else "both sides vanish on every sample"))
    return (f"chain map for {P.name}, n={n}", out)


def task_cocycle(cfg: RunConfig, n: int):
    """[X, Y] = 0 forces d phi(Y) = 0, for Y = X (n = 2) and Y = [X, Z]."""
    P = load_structure(cfg.structure)
    X = pva.build_master(P, strict=False)
    gens = P.generators
    if n == 2:
        Y = X
    else:
        Z = operad.symmetrize(random_sesquilinear(n - 1, f"{cfg.seed}/cocycle/{n}", table=_table_for(P)))
        Y = operad.bracket(X, Z)
    big = _tuples(cfg, n + 1, f"cocycle/{n}", gens)
    if n > 2:
        # [X, [X, Z]] is a double composite; keep the sample small
        big = big[:max(2, cfg.max_tuples // 4)]
    return (f"cocycles for {P.name}, n={n}", [morphism.check_cocycle(X, Y, big)])


def task_diagram(cfg: RunConfig, n: int):
    P = load_structure(cfg.structure)
    X = pva.build_master(P, strict=False)
    gens = P.generators
    out = []
    Z = random_sesquilinear(n, f"{cfg.seed}/diagram/{n}", table=_table_for(P))
    Y = operad.symmetrize(Z)
    tuples = _tuples(cfg, n, f"diagram/{n}", gens)
    F = morphism.phi(Y)
    res = hochschild.is_harrison(F, tuples)
    out.append(CheckResult(f"phi lands in Harrison cochains, n={n}", "phi(Y) is Harrison", pva.passes(res),
                           len(tuples), next((r.detail for r in res if not r.passed), "")))
    out.extend(morphism.check_lift(F, tuples))
    top = operad.grade_component(Y, n - 1)
    out.append(morphism.check_top_uniqueness(top, tuples))
    # phi(Y^s) = phi(Y) for symmetric Y
    fails = []
    for s in permutations(range(1, n + 1)):
        if morphism.agree(morphism.phi(operad.act_cochain(Y, s)), F, tuples):
            fails.append(f"s={perms.format_perm(s)}")
            break
    out.append(_check(f"phi invariant under the action, n={n}", "phi(Y^s) = phi(Y)", fails, len(tuples)))
    if n <= cfg.max_arity:
        big = _tuples(cfg, n + 1, f"diagram/{n + 1}", gens)
        out.append(morphism.check_chain_map(X, Y, big))
    if n == 3:
        tr = morphism.lift_symmetry_trace(F, tuples[-1])
        bad = [t for t in tr if t[3] != t[4]]
        out.append(CheckResult("symmetry of the lift, step by step", "(Y^s) on tau(Lambda) = sign(tau) L_k F",
                               not bad, len(tr), "" if not bad else f"s={bad[0][0]} tau={bad[0][1]}"))
    return (f"diagram for {P.name}, n={n}", out)


# ---------------------------------------------------------------------------
# registry


def _tasks(name: str, cfg: RunConfig) -> list:
    A = cfg.max_arity
    if name == "monotone-lemmas":
        top = cfg.n or 7
        return [(task_monotone, (n,)) for n in range(1, top + 1)]
    if name == "line-identities":
        top = cfg.n or 5
        basis = [(task_line_basis, (n,)) for n in range(2, min(top, graph_oracle.MAX_ORACLE_N) + 1)]
        return basis + [(task_line_identities, (n,)) for n in range(3, top + 1)]
    if name == "operad-axioms":
        out = [(task_unit, (cfg, n)) for n in range(1, A + 1)]
        for total in range(1, A + 1):
            for ms in _compositions(total):
                for ls in _ls_for(sum(ms), A):
                    out.append((task_associativity, (cfg, ms, ls)))
        for total in range(1, A + 1):
            for ms in _compositions(total):
                out.append((task_equivariance, (cfg, ms)))
        return out
    if name == "pva-axioms":
        return [(task_pva_axioms, (cfg,))]
    if name == "master-square":
        return [(task_master_square, (cfg,))]
    if name == "hochschild":
        return [(task_hochschild_spot, (cfg,))] + [(task_hochschild, (cfg, n)) for n in range(0, min(A, 3) + 1)]
    if name == "harrison-closure":
        out = [(task_harrison_closure, (cfg, n)) for n in range(1, min(A, 3) + 1)]
        return out + [(task_symmetric_lift, (cfg, n)) for n in range(1, (cfg.n or 4) + 1)]
    if name == "chain-map":
        out = [(task_chain_map, (cfg, n)) for n in range(1, A + 1)]
        return out + [(task_cocycle, (cfg, n)) for n in range(2, A + 1)]
    if name == "diagram":
        return [(task_diagram, (cfg, n)) for n in range(1, A + 1)]
    raise KeyError(name)


def _ls_for(inputs: int, A: int):
    """Arity tuples for the third layer: one entry per inner input, total <= A."""
    for total in range(inputs, A + 1):
        for ls in _compositions(total):
            if len(ls) == inputs:
                yield ls


SUITES = ("monotone-lemmas", "line-identities", "operad-axioms", "pva-axioms", "master-square",
          "hochschild", "harrison-closure", "chain-map", "diagram")


def _run(task):
    fn, args = task
    return fn(*args)


def run_suite(name: str, cfg: RunConfig, jobs: int = 1) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tasks = _tasks(name, cfg)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]
    config = {k: v for k, v in asdict(cfg).items()}
    report = Report(f"verify {name}", config)
    for heading, checks in results:
        report.add(heading, checks)
    return report
