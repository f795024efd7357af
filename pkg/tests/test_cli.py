import json
from pathlib import Path

import pytest

from favourable import __version__
from favourable.cli import main
from favourable.jsonio import emit_json, lattice_set_from_json
from favourable.polytope import build_polytope, lattice_points
from favourable.rootsys import Family, LieType

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_essential_json_shape(capsys):
    code, out, _ = run_cli(capsys, "essential", "--type", "A", "--rank", "3", "--weight", "0,1,0", "--radical")
    assert code == 0
    report = json.loads(out)
    assert list(report) == ["command", "inputs", "results", "version"]
    assert report["version"] == __version__
    ess = report["results"]["essential"]
    assert ess["dimension"] == 6 and ess["pbw_hilbert"] == [1, 4, 1]
    assert ess["es_monomials"][-1] == "f_a[1,3]*f_a[2,2]"


def test_output_is_byte_identical(capsys):
    args = ("lattice", "--type", "C", "--rank", "2", "--weight", "1,1")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_lattice_round_trip(capsys):
    _, out, _ = run_cli(capsys, "lattice", "--type", "A", "--rank", "2", "--weight", "1,1")
    res = json.loads(out)["results"]
    s = lattice_set_from_json(res["S"])
    assert s == lattice_points(build_polytope(LieType(Family.A, 2), (1, 1)))
    assert res["count"] == res["weyl_dim"] == 8
    assert json.loads(emit_json({"S": s})) == {"S": res["S"]["points"]}


def test_golden_files(capsys):
    base = ("essential", "--type", "A", "--rank", "3", "--weight", "0,1,0", "--radical")
    code, out, _ = run_cli(capsys, *base, "--expect", str(GOLDEN / "lambda2_c4_essential.json"))
    assert code == 0 and json.loads(out)["golden"]["match"]
    code, out, _ = run_cli(capsys, *base, "--expect", str(GOLDEN / "lambda2_c4_wrong.json"))
    assert code == 1 and not json.loads(out)["golden"]["match"]


def test_golden_file_is_current(capsys):
    _, out, _ = run_cli(capsys, "essential", "--type", "A", "--rank", "3", "--weight", "0,1,0", "--radical")
    golden = json.loads((GOLDEN / "lambda2_c4_essential.json").read_text())
    assert json.loads(out) == golden


@pytest.mark.parametrize("argv", [
    ("lattice", "--type", "A", "--rank", "2", "--weight", "1,x"),
    ("lattice", "--type", "A", "--rank", "2", "--weight", "1,0,0"),
    ("lattice", "--type", "A", "--rank", "2", "--weight=-1,0"),
    ("lattice", "--type", "B", "--rank", "2", "--weight", "1,0"),
    ("lattice", "--type", "A", "--weight", "1,0"),
    ("lattice", "--type", "A", "--rank", "2"),
    ("essential", "--type", "G2", "--weight", "1,0"),
    ("essential", "--type", "C", "--rank", "2", "--weight", "1,0", "--radical"),
    ("normality", "--type", "A", "--rank", "2", "--weight", "1,1", "--n-max", "0"),
    ("demazure", "--type", "C", "--rank", "2"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2 and out == "" and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lattice"])
    assert exc.value.code == 2


def test_ieqs_format(capsys):
    code, out, _ = run_cli(capsys, "polytope", "--type", "A", "--rank", "2", "--weight", "1,1", "--format", "ieqs")
    rows = json.loads(out)["results"]["ieqs"].splitlines()
    assert code == 0 and rows[2] == "2 -1 -1 -1" and len(rows) == 6


def test_timing_only_on_request(capsys):
    args = ("hilbert", "--type", "A", "--rank", "1", "--weight", "1")
    _, out, err = run_cli(capsys, *args)
    assert "timing" not in json.loads(out) and "hilbert" in err
    _, out, _ = run_cli(capsys, *args, "--timing")
    report = json.loads(out)
    assert report["results"]["hilbert"] == [1, 2, 3, 4] and "timing" in report


def test_verify_favourable(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "verify-favourable", "--type", "C", "--rank", "2", "--max-coeff", "1")
    res = json.loads(out)["results"]
    assert code == 0 and res["all_ok"] and len(res["weights"]) == 4
    monkeypatch.setenv("FAVOURABLE_THREADS", "2")
    code, out2, _ = run_cli(capsys, "verify-favourable", "--type", "C", "--rank", "2", "--max-coeff", "1")
    assert code == 0 and out2 == out


def test_other_commands(capsys):
    code, out, _ = run_cli(capsys, "demazure", "--rank", "3")
    assert code == 0 and json.loads(out)["results"]["count"] == 13
    code, out, _ = run_cli(capsys, "minkowski", "--type", "G2", "--weight", "1,1")
    assert code == 0 and json.loads(out)["results"]["decomposition"]
    code, out, _ = run_cli(capsys, "minkowski", "--type", "A", "--rank", "2", "--weight", "1,0", "--weight2", "0,2")
    assert code == 0 and json.loads(out)["results"]["equal"]
    code, out, _ = run_cli(capsys, "normality", "--type", "C", "--rank", "2", "--weight", "1,1")
    assert code == 0 and json.loads(out)["results"]["normal"]
    code, out, _ = run_cli(capsys, "valuation", "--type", "A", "--rank", "2", "--weight", "1,0")
    assert code == 0 and json.loads(out)["results"]["inside_polytope"]
    code, out, _ = run_cli(capsys, "gob", "--type", "A", "--rank", "2")
    assert code == 0 and len(json.loads(out)["results"]["generators"]) == 6


def test_text_output(capsys):
    code, out, _ = run_cli(capsys, "lattice", "--type", "A", "--rank", "1", "--weight", "2", "--text")
    assert code == 0 and "count 3, Weyl dimension 3" in out
