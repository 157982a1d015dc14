import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from conftest import data_path
from ehrtrans.cli import main
from ehrtrans.polytope import load
from ehrtrans.quasipoly import QuasiPolynomial
from ehrtrans.translate import ehr_translated

TRAP, RHOMB, RHOMB3, PAR = (data_path(n) for n in ("trapezoid.json", "rhombus.json", "rhombus3.json", "parallelogram.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    ((TRAP, "-v", "0,0", "-t", "1"), "5"),
    ((RHOMB, "-v", "0,0", "-t", "2"), "7"),
    ((PAR, "-v", "1,1", "-t", "0"), "1"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and out.strip() == expected


def test_ehrhart_display(capsys):
    code, out, _ = run(capsys, "ehrhart", PAR, "-v", "1/6,1/3")
    assert code == 0
    assert out.splitlines() == [
        "period 6",
        "3t^2 + 2t + 1  (t ≡ 0 (mod 6))",
        "3t^2  (t ≡ 1,2,4,5 (mod 6))",
        "3t^2 + t  (t ≡ 3 (mod 6))",
    ]


def test_ehrhart_structured_round_trip(capsys):
    code, out, _ = run(capsys, "--format", "structured", "ehrhart", RHOMB, "-v", "1/3,1/3")
    assert code == 0
    doc = json.loads(out)
    f = QuasiPolynomial.from_document(doc["quasi_polynomial"])
    assert f == ehr_translated(load(RHOMB), (F(1, 3), F(1, 3)))
    assert f.period == 6


def test_global_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "tl", TRAP, "--format", "structured")
    assert code == 0 and json.loads(out)["quasi_polynomial"]["period"] == 1


def test_tl_minimize_and_interior(capsys):
    code, out, _ = run(capsys, "tl", RHOMB, "--minimize-period")
    assert out.splitlines()[0] == "period 1"
    code, out, _ = run(capsys, "tl", TRAP, "--interior")
    assert "3/2t^2 - 5/2t + 1" in out


@pytest.mark.parametrize("path,kind,n", [(TRAP, "delta", 6), (TRAP, "lambda", 4), (RHOMB, "delta", 16)])
def test_cells(capsys, path, kind, n):
    code, out, _ = run(capsys, "--format", "structured", "cells", path, "--kind", kind)
    assert code == 0
    assert len(json.loads(out)["cells"]) == n


def test_plot(capsys, tmp_path):
    target = tmp_path / "t.svg"
    code, out, _ = run(capsys, "plot", TRAP, "-v", "17/100,52/100", "--kmax", "99", "-o", str(target))
    assert code == 0
    root = ET.fromstring(target.read_text())
    assert sum(1 for e in root.iter() if e.get("class") == "orbit") == 100
    code, out, _ = run(capsys, "plot", RHOMB)
    assert out.startswith("<svg")


def test_verify_rhombus(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify", RHOMB, "--checks", "reciprocity,symmetry")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_all_checks_on_rhombus(capsys):
    checks = "reciprocity,symmetry,projection,automorphisms,fingerprint,cs-parity,minkowski"
    code, out, _ = run(capsys, "--format", "structured", "verify", RHOMB, "--checks", checks, "--t-max", "3")
    doc = json.loads(out)
    assert code == 0, [c for c in doc["checks"] if not c["passed"]]


def test_verify_denominator_three_rhombus(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify", RHOMB3, "--checks", "symmetry")
    item = json.loads(out)["checks"][0]["items"][0]
    assert code == 0
    assert item["predicate_ii"] is False and item["sampled_symmetric"] is False
    assert item["witness"] is not None and item["consistent"] is True


def test_verify_fingerprint_against_other(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify", TRAP, "--checks", "fingerprint", "--other", PAR)
    assert code == 0


def test_cs_parity_precondition(capsys):
    code, _, err = run(capsys, "verify", TRAP, "--checks", "cs-parity")
    assert code == 3 and "error" in err


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", TRAP)
    assert code == 0 and out.splitlines() == ["alpha 0", "q 1", "d 2", "Q(z) 1 2"]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "count", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "count", str(bad))[0] == 2
    assert run(capsys, "count", TRAP, "-v", "1/0,1")[0] == 2
    assert run(capsys, "count", TRAP, "-v", "1,2,3")[0] == 2
    assert run(capsys, "verify", TRAP, "--checks", "nonsense")[0] == 2
    assert run(capsys, "--max-dim", "1", "count", TRAP)[0] == 3
    assert run(capsys, "--max-facets", "3", "cells", TRAP)[0] == 3
    line = tmp_path / "line.json"
    line.write_text('{"dimension": 1, "vertices": [["0"], ["1"]]}')
    assert run(capsys, "plot", str(line))[0] == 3


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "ehrtrans", "count", TRAP], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "5"


def test_output_is_deterministic(capsys):
    first = run(capsys, "--format", "structured", "cells", RHOMB)[1]
    assert run(capsys, "--format", "structured", "cells", RHOMB)[1] == first


def test_verify_switches(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify", RHOMB, "--projection", "--minkowski", "--t-max", "2")
    assert code == 0
    assert [c["check"] for c in json.loads(out)["checks"]] == ["projection", "minkowski"]
    code, out, _ = run(capsys, "--format", "structured", "verify", RHOMB)
    assert [c["check"] for c in json.loads(out)["checks"]] == ["reciprocity", "symmetry"]
