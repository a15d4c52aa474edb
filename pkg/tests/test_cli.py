import json
import shutil
import subprocess
import sys

import pytest

from virtualcm.cli import main
from virtualcm.io import certificate_from_doc, read_document


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.lstrip().startswith("{") else out)


def test_check_cm(capsys):
    code, out = run(capsys, "check-cm", "fixtures/example14_delta")
    assert code == 1 and out["value"] is False and out["witness"] == {"face": ["y2"], "degree": 0}
    code, out = run(capsys, "check-cm", "example14_delta_prime", "--field", "gf:2")
    assert code == 0 and out["value"] is True and out["field"] == "gf:2"


def test_betti_codim(capsys):
    assert run(capsys, "betti", "example14_delta")[1]["totals"] == [1, 4, 4, 1]
    assert run(capsys, "codim", "example14_delta")[1]["value"] == 2


def test_cover_verify(capsys):
    code, out = run(capsys, "cover", "verify", "fixtures/example14_cert")
    assert code == 0 and out["status"] == "pass"
    assert run(capsys, "cover", "verify", "section5_cert")[0] == 0


def test_saturate(capsys):
    code, out = run(capsys, "saturate", "fixtures/remark_J", "--by", "B_X", "--equals", "fixtures/example14_IDelta_sat")
    assert code == 0 and out["generators"] == ["x0*y1", "x0*x1*y2", "x1*y0*y2", "y0*y1*y2"]
    code, out = run(capsys, "saturate", "remark_J", "--by", "B_X", "--equals", "remark_J")
    assert code == 1 and out["witness"] == {"missing": [], "extra": ["y0*y1*y2"]}


def test_shelling(capsys):
    assert run(capsys, "shelling", "verify", "example14_delta_prime")[0] == 0
    code, out = run(capsys, "shelling", "verify", "example14_delta_prime", "--order", "0,3,1,2")
    assert code == 1 and out["witness"]["position"] == 1
    assert run(capsys, "shelling", "find", "example14_delta")[0] == 1


def test_vshelling(capsys, tmp_path):
    code, out = run(capsys, "vshelling", "check-prop", "example3x_delta", "--irrelevant", "example3x_C")
    assert code == 1 and out["condition"] == 2 and out["details"]["attaching"] == ["x0", "y0", "y2"]
    code, out = run(capsys, "vshelling", "check-prop", "example14_delta")
    assert code == 0 and out["details"]["xi"] == [[["x0", "y0"]], [["x1", "y0"]], [["x1", "y1"]]]
    target = tmp_path / "built.json"
    code, out = run(capsys, "vshelling", "construct", "example14_delta", "--out", str(target))
    assert code == 0 and len(out["certificate"]["delta_prime"]["vertices"]) == 6
    assert read_document(target) == out["certificate"]
    assert run(capsys, "vshelling", "verify", str(target))[0] == 0
    assert run(capsys, "cover", "verify", str(target))[0] == 0
    assert run(capsys, "vshelling", "verify", "example3x_cert")[0] == 0


def test_construct_output_round_trips(capsys, tmp_path, fx):
    target = tmp_path / "c.json"
    run(capsys, "vshelling", "construct", "example14_delta", "--out", str(target))
    back = certificate_from_doc(read_document(target))
    hand = fx.cert("example14_constructed_cert")
    assert back.psi == hand.psi and back.order == hand.order


def test_sr_ideal_out_round_trips(capsys, tmp_path, fx):
    target = tmp_path / "i.json"
    code, _ = run(capsys, "sr-ideal", "example14_delta", "--out", str(target))
    assert code == 0
    code, _ = run(capsys, "saturate", str(target), "--by", "B_X", "--equals", "example14_IDelta")
    assert code == 0


def test_homology_commands(capsys):
    assert run(capsys, "homology", "example14_delta")[1]["reduced"] == {"1": 1}
    out = run(capsys, "rel-homology-z", "example14_delta")[1]
    assert out["groups"] == {"1": {"rank": 1, "torsion": []}}


def test_link_and_corollary(capsys):
    code, out = run(capsys, "link-decompose", "example3x_cert", "--vertex", "x0")
    assert code == 0 and len(out["components"]) == 2
    code, out = run(capsys, "corollary", "order", "example14_delta")
    assert code == 0 and out["details"]["relative_homology"] == {"rank": 0, "torsion": []}
    assert "certificate" in out
    code, out = run(capsys, "corollary", "order", "example3x_delta")
    assert code == 1 and out["status"] == "refuted-hypothesis"


def test_toric_flag(capsys, tmp_path):
    doc = read_document("example14_delta")
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps({"vertices": doc["vertices"], "facets": doc["facets"]}))
    ctx = tmp_path / "ctx.json"
    ctx.write_text(json.dumps({"blocks": doc["blocks"]}))
    assert run(capsys, "vshelling", "check-prop", str(bare))[0] == 2
    assert run(capsys, "vshelling", "check-prop", str(bare), "--toric", str(ctx))[0] == 0


@pytest.mark.parametrize("argv", [
    ["check-cm", "no_such_file"],
    ["shelling", "verify", "example14_delta", "--order", "0,0,1,2"],
    ["shelling", "verify", "example14_delta", "--order", "a,b"],
    ["check-cm", "example14_delta", "--field", "gf:4"],
    ["frobnicate"],
    ["link-decompose", "example14_cert", "--vertex", "nope"],
])
def test_input_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_malformed_document(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": ["a"], "facets": [[3]]}))
    code, out = run(capsys, "check-cm", str(bad))
    assert code == 2 and out["status"] == "error"


def test_fixtures_run(capsys, tmp_path):
    code, out = run(capsys, "fixtures", "run")
    assert code == 0 and out["rows"] and all(r["ok"] for r in out["rows"])
    code, out = run(capsys, "fixtures", "run", str(tmp_path))
    assert code == 0 and out["rows"] == []
    code, text = run(capsys, "fixtures", "run", "--pretty")
    assert code == 0 and "PASS" in text


def test_console_script():
    exe = shutil.which("virtualcm")
    cmd = [exe] if exe else [sys.executable, "-m", "virtualcm.cli"]
    proc = subprocess.run(cmd + ["cover", "verify", "fixtures/example14_cert"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["status"] == "pass"
