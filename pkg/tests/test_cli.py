import json
import subprocess
import sys

import pytest

from pvacl.cli import main
from pvacl.report import CheckResult, Report
from pvacl.sampling import Bounds, sample_tuples
from pvacl.suites import RunConfig, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_monotone_listing(capsys):
    code, out, _ = run(capsys, "monotone", "5", "3")
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("[")]
    assert len(rows) == 6
    assert rows[0].startswith("[3 2 1 4 5]  drops {2, 3}")
    code, out, _ = run(capsys, "monotone", "4", "1")
    assert [l for l in out.splitlines() if l.startswith("[")] == ["[1 2 3 4]  drops {}  (-1)^dr +1"]
    code, out, _ = run(capsys, "monotone", "8", "4")
    assert len([l for l in out.splitlines() if l.startswith("[")]) == 35


def test_shuffles(capsys):
    code, out, _ = run(capsys, "shuffles", "2", "2")
    assert code == 0 and out.splitlines()[-1] == "# 6 (2,2)-shuffles"


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "n=2; edges: 2>1")
    assert code == 0 and out.strip() == "-1 * (n=2; edges: 1>2)"
    code, out, _ = run(capsys, "reduce",
                       "(n=3; edges: 1>2, 2>3) + (n=3; edges: 2>3, 3>1) + (n=3; edges: 3>1, 1>2)")
    assert out.strip() == "0"


def test_reduce_insertion_identity_n4(capsys):
    terms = ["(n=4; edges: 1>2, 2>3, 3>4)", "(n=4; edges: 2>1, 1>3, 3>4)",
             "(n=4; edges: 2>3, 3>1, 1>4)", "(n=4; edges: 2>3, 3>4, 4>1)"]
    code, out, _ = run(capsys, "reduce", " + ".join(terms))
    assert code == 0 and out.strip() == "0"


def test_cocompose(capsys):
    code, out, _ = run(capsys, "cocompose", "n=8; edges: 1>2, 1>3, 2>4, 2>5, 2>6, 7>8", "--sizes", "3,1,4")
    assert code == 0
    assert "X(4) = {1, 3}" in out
    assert "quotient is a forest: no" in out


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "u", "u'", "--structure", "virasoro")
    assert code == 0 and out.strip() == "(2*u)*λ^2 + (3*u')*λ + u''"


@pytest.mark.parametrize("argv", [
    ["monotone", "3", "5"],
    ["reduce", "n=2; edges: 1-2"],
    ["bracket", "u", "q"],
    ["bracket", "u", "u", "--structure", "nope"],
    ["bracket", "u", "u", "--structure", "/nonexistent/x.json"],
    ["cocompose", "n=3", "--sizes", "1,1"],
])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_verify_pass_and_fail(tmp_path, capsys):
    out = tmp_path / "r.txt"
    js = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "pva-axioms", "--structure", "gfz", "--output", str(out), "--json", str(js))
    assert code == 0 and "PASS" in err
    assert out.read_text().endswith("result: PASS\n")
    assert json.loads(js.read_text())["passed"] is True
    code, stdout, _ = run(capsys, "verify", "pva-axioms", "--structure", "broken-skew")
    assert code == 1
    assert "[FAIL] skewsymmetry" in stdout and "counterexample:" in stdout


def test_verify_json_descriptor(tmp_path, capsys):
    path = tmp_path / "v.json"
    path.write_text(json.dumps({"name": "vir", "generators": ["u"], "brackets": {"u u": "u' + 2*lam*u"}}))
    code, out, _ = run(capsys, "verify", "master-square", "--structure", str(path), "--max-tuples", "8")
    assert code == 0, out


def test_report_has_no_timing_and_is_deterministic():
    cfg = RunConfig(n=4)
    a = run_suite("monotone-lemmas", cfg).to_text()
    b = run_suite("monotone-lemmas", cfg).to_text()
    assert a == b
    assert "seconds" not in a and "time" not in a


def test_parallel_matches_serial():
    cfg = RunConfig(max_tuples=8)
    assert run_suite("hochschild", cfg, jobs=2).to_text() == run_suite("hochschild", cfg).to_text()


def test_report_format():
    r = Report("t", {"seed": 1})
    r.add("h", [CheckResult("a", "x = y", True, 3), CheckResult("b", "p = q", False, 2, "at (u)")])
    text = r.to_text()
    assert "[PASS] a -- x = y (3 cases)" in text
    assert "[FAIL] b -- p = q (2 cases)\n    counterexample: at (u)" in text
    assert text.endswith("result: FAIL\n")
    assert json.loads(r.to_json())["sections"][0]["checks"][1]["detail"] == "at (u)"


def test_sampling_is_seeded():
    pool = list(range(10))
    b = Bounds(max_tuples=5, seed=3)
    assert sample_tuples(pool, 3, b, "x") == sample_tuples(pool, 3, b, "x")
    assert sample_tuples(pool, 3, b, "x") != sample_tuples(pool, 3, Bounds(max_tuples=5, seed=4), "x")
    assert len(sample_tuples(pool, 1, b)) == 5
    assert len(sample_tuples([1, 2], 2, b)) == 4


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "pvacl.cli", "monotone", "3", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and "# 2 monotone permutations" in res.stdout
