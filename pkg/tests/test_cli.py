import json
import subprocess
import sys

import pytest

from gtsp.cli import main
from gtsp.modules import Bounded, special_upper
from gtsp.tableau import tableau_to_json

H = "1/2"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enum_count_only(capsys):
    code, out, _ = run(capsys, "enum", "--series", "C", "--lambda", "0,-1", "--count-only")
    assert code == 0 and out.strip() == '{"count":4,"weyl":4,"match":true}'


def test_enum_listing_and_csv(capsys):
    code, out, _ = run(capsys, "enum", "--series", "D", "--lambda", "-1/2,-1/2")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "--format", "csv", "enum", "--series", "D", "--lambda", "-1/2,-1/2")
    lines = out.strip().splitlines()
    assert lines[0] == "type,n,rows,primed" and len(lines) == 3


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--series", "C", "--lambda", "-1,-2")
    assert code == 0 and json.loads(out)["match"] is True


def test_lagrange_exit_codes(capsys):
    assert run(capsys, "verify", "lagrange", "--k", "2", "--c", "0,5")[0] == 0
    assert run(capsys, "verify", "lagrange", "--k", "2", "--c", "1,1")[0] == 2
    assert run(capsys, "verify", "lagrange", "--k", "6", "--seed", "4")[0] == 0


def test_primitive(capsys):
    code, out, _ = run(capsys, "primitive", "--lambda", "-1/2,-1/2")
    report = json.loads(out)
    assert code == 0 and report["failures"] == [] and report["primitive"] is True


def test_malformed_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enum", "--lambda", "0,1.5"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "enum", "--lambda", "1,0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "special", "--mu", "1,2", "--lambda", "-1/2,-1/2")
    assert code == 2


@pytest.fixture
def files(tmp_path):
    mu, lam = ("1/3", "2/5"), ("-1/2", "-1/2")
    spec = Bounded(mu, lam)
    (tmp_path / "module.json").write_text(json.dumps(spec.to_json()))
    (tmp_path / "tab.json").write_text(json.dumps(tableau_to_json(special_upper(spec.mu, spec.lam))))
    (tmp_path / "a.json").write_text(json.dumps({"mu": list(mu), "lambda": list(lam), "sigma": []}))
    (tmp_path / "b.json").write_text(json.dumps({"mu": ["4/3", "7/5"], "lambda": list(lam), "sigma": []}))
    (tmp_path / "c.json").write_text(json.dumps({"mu": list(mu), "lambda": list(lam), "sigma": [1]}))
    return tmp_path


def test_act_weight_weights(capsys, files):
    code, out, _ = run(capsys, "act", "--gen", "F(1,-1)", "--tableau", str(files / "tab.json"),
                       "--module", str(files / "module.json"))
    terms = json.loads(out)["terms"]
    assert code == 0 and [t["coefficient"] for t in terms] == ["1"]
    code, out, _ = run(capsys, "weight", "--tableau", str(files / "tab.json"))
    assert json.loads(out) == {"weight": ["7/6", "13/10"]}
    code, out, _ = run(capsys, "weights", "--module", str(files / "module.json"), "--gamma", "13/6,23/10")
    assert code == 0 and json.loads(out)["dimension"] == 1
    code, out, _ = run(capsys, "weights", "--module", str(files / "module.json"), "--gamma", "13/6,13/10")
    data = json.loads(out)
    assert data["basis"] == [] and "diagnostic" in data


def test_verify_on_module_file(capsys, files):
    for suite in ("relations", "casimir", "multiplicity"):
        code, out, _ = run(capsys, "verify", suite, "--module", str(files / "module.json"),
                           "--samples", "3", "--radius", "2")
        assert code == 0, out


def test_verify_failure_exit_code(capsys, tmp_path):
    # the tau_1 image module is not closed under the action: reported, exit 1
    (tmp_path / "m.json").write_text(json.dumps(Bounded(("-1/6", "2/5"), ("1/2", "-1/2")).to_json()))
    code, out, _ = run(capsys, "verify", "casimir", "--module", str(tmp_path / "m.json"), "--samples", "5")
    assert code == 1 and json.loads(out)["failures"]


def test_classify_and_reach(capsys, files):
    assert json.loads(run(capsys, "classify", str(files / "a.json"), str(files / "b.json"))[1]) == {"isomorphic": True}
    assert json.loads(run(capsys, "classify", str(files / "a.json"), str(files / "c.json"))[1]) == {"isomorphic": False}
    assert json.loads(run(capsys, "reach", "--lambda", "-1/2,-1/2", "--target", "1/2,-1/2")[1]) == {"mu": None}
    code, out, _ = run(capsys, "reach", "--lambda", "-1/2,-1/2", "--target", "1/2,1/2")
    assert code == 0 and json.loads(out)["mu"] is not None


def test_special_and_vanishing(capsys):
    code, out, _ = run(capsys, "special", "--which", "lower", "--mu", "1/2,1/2", "--lambda", "-1/2,-1/2")
    assert code == 0 and json.loads(out)["type"] == "C"
    code, out, _ = run(capsys, "verify", "vanishing", "--lambda", "-1/2,-1/2,-3/2")
    assert code == 0


def test_module_entry_point_is_byte_stable():
    argv = [sys.executable, "-m", "gtsp", "verify", "oscillator", "--mu", "1/2,1/2", "--lambda", "-1/2,-1/2",
            "--sigma", "1", "--radius", "2", "--samples", "3"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
