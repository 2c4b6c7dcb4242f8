"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line
(visible with ``pytest -s``) and enforces its time limit."""

import time
from math import comb

import pytest

from pvacl import graph_oracle, graphs, perms
from pvacl.cli import main
from pvacl.suites import (
    RunConfig,
    run_suite,
    task_line_basis,
    task_line_identities,
    task_master_square,
    task_monotone,
    task_symmetric_lift,
)


def _all_pass(results) -> list:
    return [f"{c.name}: {c.detail}" for _, checks in results for c in checks if not c.passed]


@pytest.fixture
def verdict(capsys):
    def record(num: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        in_time = elapsed < limit
        status = "PASS" if ok and in_time else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {num:2d} {status}  {title}  ({elapsed:.1f}s, limit {limit:g}s)"
                  + (f"  {detail}" if status == "FAIL" else ""))
        assert ok, detail
        assert in_time, f"took {elapsed:.1f}s, limit {limit}s"
    return record


def test_criterion_01_monotone_counts(verdict):
    t = time.perf_counter()
    bad = [(n, k) for n in range(1, 9) for k in range(1, n + 1)
           if len(perms.enumerate_monotone(n, k)) != comb(n - 1, k - 1)]
    verdict(1, "monotone counts n <= 8", not bad, time.perf_counter() - t, 1, f"mismatch at {bad[:3]}")


def test_criterion_02_sign_law_and_restrictions(verdict):
    t = time.perf_counter()
    bad = _all_pass([task_monotone(n) for n in range(1, 8)])
    verdict(2, "drop-sign law and restriction bijections n <= 7", not bad, time.perf_counter() - t, 5,
            "; ".join(bad[:3]))


def test_criterion_03_line_basis_dimension(verdict):
    t = time.perf_counter()
    dims = {n: graph_oracle.quotient_dimension(n) for n in (2, 3, 4)}
    lines = {n: len(graphs.enumerate_lines(n)) for n in (2, 3, 4)}
    bad = _all_pass([task_line_basis(n) for n in (2, 3, 4)])
    ok = dims == lines and dims[2] == 2 and dims[3] == 6 and not bad
    verdict(3, f"quotient dimensions {dims} = line counts", ok, time.perf_counter() - t, 60,
            f"{dims} vs {lines}; {bad[:2]}")


def test_criterion_04_line_identities(verdict):
    t = time.perf_counter()
    bad = _all_pass([task_line_identities(n) for n in range(2, 6)])
    verdict(4, "insertion and monotone line sums vanish n <= 5", not bad, time.perf_counter() - t, 30,
            "; ".join(bad[:3]))


def test_criterion_05_operad_axioms(verdict):
    t = time.perf_counter()
    report = run_suite("operad-axioms", RunConfig(max_arity=3, max_degree=2, max_order=2))
    bad = [line for line in report.to_text().splitlines() if line.lstrip().startswith("[FAIL]")]
    verdict(5, "associativity, equivariance, unit at arity <= 3", report.passed, time.perf_counter() - t, 300,
            "; ".join(bad[:3]))


EQUIVALENCE = {
    "gfz": True, "affine": True, "zero": True, "central": False,
    "broken-skew": False, "broken-jacobi": False, "broken-leibniz": False,
}


def test_criterion_06_master_square_equivalence(verdict):
    t = time.perf_counter()
    bad = []
    for name, expect in EQUIVALENCE.items():
        heading, checks = task_master_square(RunConfig(structure=name))
        corr = checks[-1]
        axioms_pass = heading.endswith("axioms pass")
        if not corr.passed:
            bad.append(f"{name}: {corr.detail}")
        elif axioms_pass != expect:
            bad.append(f"{name}: axioms {'pass' if axioms_pass else 'fail'}, expected otherwise")
    verdict(6, "axioms <=> X box X = 0 on 7 structures", not bad, time.perf_counter() - t, 300, "; ".join(bad))


def test_criterion_07_hochschild(verdict):
    t = time.perf_counter()
    cfg = RunConfig(max_arity=3, n=3)
    r1 = run_suite("hochschild", cfg)
    r2 = run_suite("harrison-closure", cfg)
    verdict(7, "d d = 0 and Harrison closure n <= 3", r1.passed and r2.passed, time.perf_counter() - t, 60,
            "hochschild or harrison-closure suite failed")


def test_criterion_08_lift(verdict):
    t = time.perf_counter()
    bad = _all_pass([task_symmetric_lift(RunConfig(), n) for n in range(1, 5)])
    verdict(8, "phi(symmetric) is Harrison and lift round trip n <= 4", not bad, time.perf_counter() - t, 300,
            "; ".join(bad[:3]))


def test_criterion_09_chain_map(verdict):
    t = time.perf_counter()
    bad = []
    for name in ("gfz", "zero"):
        report = run_suite("chain-map", RunConfig(structure=name, max_arity=3))
        text = report.to_text()
        for n in (2, 3):
            if f"chain map for {name}, n={n}" not in text or f"cocycles for {name}, n={n}" not in text:
                bad.append(f"{name}: arity {n} not covered")
        if not report.passed:
            bad.append(f"{name}: suite failed")
    verdict(9, "[X, Y] = (-1)^(n+1) d phi(Y) and cocycles, gfz and zero", not bad,
            time.perf_counter() - t, 600, "; ".join(bad))


def test_criterion_10_determinism(verdict, tmp_path, capsys):
    t = time.perf_counter()
    same = True
    for suite, extra in (("pva-axioms", ["--structure", "broken-jacobi"]),
                         ("diagram", ["--max-arity", "2"]),
                         ("monotone-lemmas", ["--n", "5", "--jobs", "2"])):
        files = []
        for run in range(2):
            txt, js = tmp_path / f"{suite}{run}.txt", tmp_path / f"{suite}{run}.json"
            main(["verify", suite, "--seed", "7", *extra, "--output", str(txt), "--json", str(js)])
            files.append((txt.read_bytes(), js.read_bytes()))
        same = same and files[0] == files[1]
    capsys.readouterr()
    verdict(10, "repeated verify runs are byte-identical", same, time.perf_counter() - t, 600,
            "reports differ between runs")
