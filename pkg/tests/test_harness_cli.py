import io
import json
import subprocess
import sys

import pytest

from circllt import harness as hs
from circllt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_example(capsys):
    code, out, _ = run(capsys, "expand", "--diagram", "1,0", "--kind", "chromatic", "--basis", "e")
    assert code == 0
    assert json.loads(out) == {"(2)": "1+q"}


def test_expand_full_record(capsys):
    code, out, _ = run(capsys, "expand", "--diagram", "1,1", "--kind", "llt-shifted", "--full")
    rec = json.loads(out)
    assert rec["schema"] == 1 and rec["kind"] == "llt-shifted"
    assert rec["coeffs"] == {"(2)": "2*q", "(1,1)": "1"}


def test_expand_other_bases(capsys):
    _, out, _ = run(capsys, "expand", "--diagram", "1,0", "--kind", "llt", "--basis", "F")
    assert json.loads(out) == {"(1,1)": "q", "(2)": "1"}
    _, out, _ = run(capsys, "expand", "--diagram", "1,0", "--kind", "tutte", "--basis", "m")
    assert json.loads(out) == {"(2)": "1+q", "(1,1)": "2"}
    _, out, _ = run(capsys, "expand", "--diagram", "1,1,0;strict=1-3;weak=", "--kind", "llt", "--basis", "s")
    assert json.loads(out)


def test_expand_csv_and_table(capsys):
    _, out, _ = run(capsys, "expand", "--diagram", "1,0", "--format", "csv")
    assert out.splitlines() == ["diagram,basis,index,polynomial", '"1,0",e,(2),1+q']
    _, out, _ = run(capsys, "expand", "--diagram", "2,2,3,2,1,0", "--format", "table")
    assert "(4,2)" in out


def test_count(capsys):
    assert run(capsys, "count", "--family", "circular", "--n", "3")[1].strip() == "18"
    code, out, _ = run(capsys, "count", "--family", "circular-vstrip", "--n", "5", "--upto", "--format", "json")
    assert json.loads(out)["counts"] == {"1": 1, "2": 9, "3": 65, "4": 449, "5": 3009}


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "expand", "--diagram", "9,9")[0] == 2
    assert run(capsys, "expand", "--diagram", "1,x")[0] == 2
    assert run(capsys, "expand", "--diagram", "1,1,0;strict=1-2;weak=", "--kind", "llt")[0] == 2
    assert run(capsys, "expand", "--diagram", "1,1,0;strict=1-3;weak=", "--kind", "chromatic")[0] == 2
    assert run(capsys, "verify", "--only", "no_such_check")[0] == 2
    assert run(capsys, "sweep", "--conjectures", "no_such")[0] == 2
    assert run(capsys, "rook", "--diagram", "1,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_verify_small_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--nmax", "3", "--no-timing")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["ok"]
    kinds = {r["check"]: (r["kind"], r["status"]) for r in doc["reports"]}
    assert kinds["sink_identity"] == ("theorem", "pass")
    assert kinds["printed_golden_223210"] == ("expected_failure", "reproduced")
    for r in doc["reports"]:
        assert set(r) == {"schema", "check", "kind", "family", "n", "tested", "status", "failures"}


def test_theorem_failure_exits_1(capsys, monkeypatch):
    def broken(n):
        return 1, [("1,0", "deliberately broken")]

    monkeypatch.setitem(hs.THEOREMS, "broken", ("theorem", "dyck", 2, broken))
    code, out, _ = run(capsys, "verify", "--only", "broken")
    assert code == 1
    doc = json.loads(out)
    assert doc["reports"][0]["failures"][0] == {"diagram": "1,0", "witness": "deliberately broken"}


def test_conjecture_counterexample_is_a_finding(capsys, monkeypatch):
    def fake(n):
        return 1, [("1,1", "negative coefficient")]

    monkeypatch.setitem(hs.CONJECTURES, "fake", ("conjecture", "circular", 1, fake))
    code, out, _ = run(capsys, "sweep", "--conjectures", "fake")
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["status"] == "finding" and rep["failures"]


def test_not_symmetric_exits_1(capsys, monkeypatch):
    from circllt.symfunc import NotSymmetric

    def boom(*a, **k):
        raise NotSymmetric((2, 1), (1, 2), 0, 1)

    monkeypatch.setattr(hs, "expand", boom)
    code, out, _ = run(capsys, "expand", "--diagram", "1,0")
    assert code == 1
    assert json.loads(out)["error"] == "NotSymmetric"


def test_parallel_runs_match_serial():
    only = {"sink_identity", "bounce_vanishing", "counts", "parking"}
    serial = hs.strip_timing(hs.run_identity_suite(4, jobs=1, only=only))
    parallel = hs.strip_timing(hs.run_identity_suite(4, jobs=3, only=only))
    assert serial == parallel
    a = hs.strip_timing(hs.sweep_conjectures(3, "chromatic_e_positivity,hatc_positivity", jobs=1))
    b = hs.strip_timing(hs.sweep_conjectures(3, "chromatic_e_positivity,hatc_positivity", jobs=2))
    assert a == b


def test_byte_identical_output(capsys):
    outs = [run(capsys, "verify", "--nmax", "3", "--no-timing", "--jobs", j)[1] for j in ("1", "2")]
    assert outs[0] == outs[1]


def test_report_status_rules():
    r = hs.CheckReport("x", "theorem", "dyck", 3)
    assert r.status == "pass" and not r.blocking
    r.failures.append(("a", "w"))
    assert r.status == "fail" and r.blocking
    c = hs.CheckReport("y", "conjecture", "dyck", 3, failures=[("a", "w")])
    assert c.status == "finding" and not c.blocking
    x = hs.CheckReport("z", "expected_failure", "dyck", 3)
    assert x.status == "unexpected-pass"


def test_csv_export():
    buf = io.StringIO()
    hs.write_csv([hs.expand("1,0", "chromatic", "e"), hs.expand("0,0", "chromatic", "m")], buf)
    rows = buf.getvalue().splitlines()
    assert rows[0] == "diagram,basis,index,polynomial"
    assert '"0,0",m,(2),1' in rows and '"0,0",m,"(1,1)",2' in rows


def test_inspection_commands(capsys):
    code, out, _ = run(capsys, "pexpand", "--diagram", "2,1,0", "--side", "llt")
    assert code == 0 and json.loads(out)["agrees"]
    _, out, _ = run(capsys, "rook", "--diagram", "1,0")
    doc = json.loads(out)
    assert doc["placements"] == 2 and doc["inv_polynomial"] == "1+q"
    _, out, _ = run(capsys, "rook", "--diagram", "2,1,0", "--v", "0,0,0")
    assert json.loads(out)["inversions"] == [0, 0, 0]
    _, out, _ = run(capsys, "orientations", "--diagram", "1,1,1")
    assert json.loads(out)["count"] == 6
    _, out, _ = run(capsys, "orientations", "--diagram", "1,1,1", "--kind", "ostar", "--limit", "2")
    doc = json.loads(out)
    assert doc["count"] == 7 and len(doc["items"]) == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "circllt", "count", "--family", "dyck", "--n", "4"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.strip() == "14"
