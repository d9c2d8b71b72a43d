import json
import subprocess
import sys

import pytest

from mha.catalog import by_name
from mha.cli import main, render_report, run
from mha.errors import InternalInconsistency, InvalidInput
from mha.ls_engine import Verdict
from mha.specfile import export_spec
from mha import cli


@pytest.fixture
def spec_dir(tmp_path):
    for name in ("Q[C2]", "H4", "monoid"):
        entry = by_name(name)
        (tmp_path / f"{name}.mha").write_text(export_spec(entry.algebra, entry.comult))
    return tmp_path


def test_classify_monoid(spec_dir):
    r = run("classify", {"file": str(spec_dir / "monoid.mha")})
    assert r["verdict"] == "not_hopf"
    assert r["reason"] == "no faithful left integral"
    assert r["violated_definition"] == "faithful functional"
    text = render_report(r, "text")
    assert "violated definition: faithful functional" in text


def test_classify_h4_both_routes(spec_dir):
    r = run("classify", {"file": str(spec_dir / "H4.mha"), "route": "both"})
    assert r["verdict"] == "hopf"
    (agreement,) = [s for s in r["stages"] if s["stage"] == "agreement"]
    assert agreement["integral"] == agreement["cointegral"] == "hopf"
    assert r["antipode_images"]["S(x)"] == "-gx"


def test_construct_c2(spec_dir):
    r = run("construct", {"file": str(spec_dir / "Q[C2].mha")})
    assert r["epsilon"] == ["1", "1"]
    assert r["antipode"] == [["1", "0"], ["0", "1"]]
    out = render_report(r, "json")
    assert '"verdict": "hopf"' in out
    assert json.loads(out)["input"]["sha256"] == r["input"]["sha256"]


def test_rendering_is_deterministic(spec_dir):
    for fmt in ("json", "text"):
        a = render_report(run("classify", {"file": str(spec_dir / "H4.mha")}), fmt)
        b = render_report(run("classify", {"file": str(spec_dir / "H4.mha")}), fmt)
        assert a == b


def test_other_commands(spec_dir):
    h4 = str(spec_dir / "H4.mha")
    r = run("check", {"file": h4})
    assert r["result"] == "valid"
    assert r["stages"][-1]["ranks"] == {"T1": 16, "T2": 16, "T1'": 16, "T2'": 16}
    r = run("integrals", {"file": h4, "side": "right"})
    assert r["stages"][0]["basis"] == [["0", "0", "1", "0"]]
    r = run("cointegrals", {"file": h4, "side": "left"})
    assert r["stages"][0]["faithful"] == [True]
    r = run("kg", {"group": "dihedral", "seed": 5})
    assert r["stages"][0]["seed"] == 5 and r["result"] == "all checks exact"


def test_route_disagreement_is_internal():
    a = Verdict("hopf", route="integral")
    b = Verdict("not_hopf", route="cointegral")
    with pytest.raises(InternalInconsistency):
        cli._combine(a, b)
    kind, _ = cli._combine(Verdict("inconclusive"), b)
    assert kind == "not_hopf"


def test_exit_codes(spec_dir, tmp_path, capsys, monkeypatch):
    assert main(["classify", str(spec_dir / "monoid.mha")]) == 0
    bad = tmp_path / "bad.mha"
    bad.write_text("mha-spec v1\ndim 2\nbasis e s\nm 0 0 5 1\n")
    assert main(["check", str(bad)]) == 2
    assert "line 4" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.mha")]) == 2

    def broken(*args, **kwargs):
        raise InternalInconsistency("forced", stage="identities")

    monkeypatch.setattr(cli, "classify", broken)
    assert main(["classify", str(spec_dir / "H4.mha")]) == 3


def test_format_flag_in_either_position(spec_dir):
    path = str(spec_dir / "Q[C2].mha")
    out = subprocess.run(
        [sys.executable, "-m", "mha", "--format", "json", "construct", path], capture_output=True, text=True
    )
    assert out.returncode == 0 and json.loads(out.stdout)["verdict"] == "hopf"
    out = subprocess.run([sys.executable, "-m", "mha", "construct", path, "--format", "json"], capture_output=True, text=True)
    assert json.loads(out.stdout)["verdict"] == "hopf"


def test_unknown_command():
    with pytest.raises(InvalidInput):
        run("explode", {})
