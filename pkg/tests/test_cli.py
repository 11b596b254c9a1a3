import json
import subprocess
import sys

import pytest

from incidence_proofs import fixtures as F
from incidence_proofs.cli import main
from incidence_proofs.proof_io import parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def flipped(tmp_path):
    text = F.golden_path("desargues", "quad").read_text()
    p = tmp_path / "flip.proof"
    p.write_text(text.replace("face U = D l2 A l4", "face U = D l4 A l2"))
    return p


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert out.splitlines()[0] == "desargues: binomial quad cm"
    assert len(out.splitlines()) == len(F.FIXTURE_IDS)


def test_list_json(capsys):
    code, out, _ = run(capsys, "--json", "list")
    recs = [json.loads(l) for l in out.splitlines()]
    assert recs[1] == {"fixture": "pappus", "forms": ["binomial", "quad", "cm_ceva", "cm_menelaus"]}


def test_verify_fixture(capsys):
    code, out, _ = run(capsys, "verify", "toblerone")
    assert code == 0
    assert len(out.splitlines()) == 4
    assert all("numeric ok" in l for l in out.splitlines())


def test_verify_single_form_with_seed(capsys):
    code, out, _ = run(capsys, "verify", "sixteen_point_v1.quad", "--seed", "9")
    assert code == 0 and "chi=0" in out


def test_verify_theorem_only(capsys):
    code, out, _ = run(capsys, "verify", "ceva3d")
    assert code == 0 and "conclusion holds" in out


def test_verify_with_config(capsys, tmp_path):
    from incidence_proofs.certify import run_recipe
    fx = F.load("desargues")
    cfg = run_recipe(fx.theorem, 3)
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({k: [int(x) for x in v.coords] for k, v in cfg.points.items()}))
    code, out, _ = run(capsys, "verify", "desargues.binomial", "--config", str(p))
    assert code == 0 and "numeric ok" in out
    # break one point
    data = json.loads(p.read_text())
    data["A"][0] += 1
    p.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", "desargues.binomial", "--config", str(p))
    assert code == 1 and "ProofFormDisagreement" in err


def test_flipped_cube_exit_one(capsys, flipped):
    code, _, err = run(capsys, "verify", str(flipped))
    assert code == 1
    assert "FormalResidue" in err


def test_flipped_cube_json(capsys, flipped):
    code, out, err = run(capsys, "--json", "verify", str(flipped))
    assert code == 1 and out == ""
    d = json.loads(err)
    assert d["code"] == "FormalResidue" and d["level"] == "error"


def test_parse_error_exit_two(capsys, tmp_path):
    p = tmp_path / "bad.proof"
    p.write_text("proof t\nkind binomial\ndim 2\npoints A B C\neq e1: [A A B] = [A B C]\n")
    code, _, err = run(capsys, "--json", "verify", str(p))
    assert code == 2
    assert json.loads(err) == {"code": "zero-bracket", "level": "error", "line": 5, "col": 8,
                               "message": "bracket [A A B] has a repeated label and is identically zero"}


def test_parse_error_text(capsys, tmp_path):
    p = tmp_path / "bad.proof"
    p.write_text("proof t\nkind nonsense\n")
    code, _, err = run(capsys, "verify", str(p))
    assert code == 2 and "(line 2, col 6)" in err


def test_unknown_target(capsys):
    code, _, err = run(capsys, "verify", "no_such_thing")
    assert code == 2 and "neither a file nor a fixture" in err


def test_unknown_form(capsys):
    code, _, err = run(capsys, "verify", "desargues.blocks")
    assert code == 2 and "no form" in err


def test_bad_arguments(capsys):
    assert main(["certify"]) == 2
    assert main(["translate", "desargues", "--from", "quad", "--to", "nowhere"]) == 2


def test_certify_desargues(capsys):
    code, out, _ = run(capsys, "certify", "desargues", "--trials", "100", "--seed", "7")
    assert code == 0
    assert "100/100" in out


def test_certify_json(capsys):
    code, out, _ = run(capsys, "--json", "certify", "pappus.quad", "--trials", "10")
    rec = json.loads(out)
    assert code == 0
    assert (rec["passed"], rec["requested"], rec["failed"]) == (10, 10, 0)
    assert rec["forms"] == {"pappus.quad": 10}


def test_translate_to_menelaus(capsys):
    code, out, _ = run(capsys, "translate", "desargues", "--from", "quad", "--to", "menelaus")
    assert code == 0
    assert sum(l.startswith("tri ") for l in out.splitlines()) == 4
    doc = parse(out)
    assert doc.kind == "cm"


def test_translate_to_binomial_file(capsys, tmp_path):
    dest = tmp_path / "d.proof"
    code, out, _ = run(capsys, "translate", "desargues", "--from", "quad", "--to", "binomial", "-o", str(dest))
    assert code == 0 and out == ""
    doc = parse(dest.read_text())
    assert len(doc.proof.equations) == 10
    # the written file verifies on its own
    code, _, _ = run(capsys, "verify", str(dest))
    assert code == 0


def test_translate_missing_form(capsys):
    code, _, err = run(capsys, "translate", "ceva3d", "--from", "quad", "--to", "binomial")
    assert code == 2


def test_translate_unsupported_pair(capsys):
    code, _, err = run(capsys, "translate", "desargues", "--from", "binomial", "--to", "quad")
    assert code == 2 and "no translation" in err


def test_render(capsys):
    code, out, _ = run(capsys, "render", "desargues.quad")
    assert code == 0 and out.startswith('graph "desargues.quad" {')


def test_gp_selftest(capsys):
    code, out, _ = run(capsys, "gp-selftest", "--trials", "200", "--seed", "3")
    assert code == 0 and "200/200" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "incidence_proofs", "list"], capture_output=True, text=True)
    assert r.returncode == 0 and "toblerone" in r.stdout
