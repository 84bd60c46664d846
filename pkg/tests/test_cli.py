import io
import json

import pytest

from qgda.calculus import Basis, KForm
from qgda.cli import main
from qgda.evaluate import EvalError, Session, evaluate_source
from qgda.extension import ExtElement
from qgda.instances import quantum_plane, quaternions, save_algebra_file
from qgda.parser import ParseError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def qp3():
    return Session.open(quantum_plane(3))


def text(src, s):
    return str(evaluate_source(src, s))


def test_eval_examples(qp3):
    assert text("der(x^2, x)", qp3) == "(1 + q)*x"
    assert text("d(1)", qp3) == "0"
    assert text("P(3)", qp3) == "0"
    assert text("x^3", qp3) == "1"
    assert text("x*t - q*t*x", qp3) == "0"


def test_eval_matches_library(qp3):
    E = quantum_plane(3)
    assert evaluate_source("d(x) * x^-1", qp3) == (E.tau() * (1 - E.q))


def test_eval_errors(qp3):
    for src in ("foo", "d(x, x)", "P(x)", "P(7)", "x^-1 * (1 + x + x^2)^-1", "der(x, 1)", "phi(t, 1)"):
        with pytest.raises(EvalError):
            evaluate_source(src, qp3)
    with pytest.raises(ParseError):
        evaluate_source("x^", qp3)


def test_quaternion_symbols():
    s = Session.open(quaternions())
    assert text("i*i", s) == "-1"
    assert text("i*j - k", s) == "0"
    assert text("Delta(3 + 5*j)", s) == "10*j"
    assert text("der(der(2 + 7*j, j), j)", s) == "0"


def test_dx_basis_session():
    s = Session.open(quantum_plane(3), basis=Basis.DX)
    r = evaluate_source("d(x^2)", s)
    assert isinstance(r, KForm) and r.degree == 1
    assert str(r.coeff) == "(1 + q)*x"


def test_cli_eval_text():
    code, out = run("eval", "der(x^2, x)", "P(3)")
    assert code == 0
    assert out.splitlines() == ["der(x^2, x) = (1 + q)*x", "P(3) = 0"]


def test_cli_eval_json_round_trip():
    E = quantum_plane(4)
    code, out = run("eval", "-a", "quantum-plane:4", "-f", "json", "d(x*t + 3)")
    assert code == 0
    payload = json.loads(out)
    value = ExtElement.from_json(E, payload["value"])
    assert value == evaluate_source("d(x*t + 3)", Session.open(E))


def test_cli_form_json_round_trip():
    E = quantum_plane(3)
    code, out = run("eval", "--dx-basis", "-f", "json", "d(x^2)")
    payload = json.loads(out)
    assert payload["kind"] == "form"
    form = KForm.from_json(E.base, payload["value"])
    assert form == evaluate_source("d(x^2)", Session.open(E, basis=form.basis))


def test_cli_batch(tmp_path):
    f = tmp_path / "batch.txt"
    f.write_text("# comment\nd(1)\n\nx^3\n")
    code, out = run("eval", "--batch", str(f))
    assert code == 0 and out.splitlines() == ["d(1) = 0", "x^3 = 1"]


def test_cli_exit_codes():
    assert run("eval", "x^")[0] == 2
    assert run("eval", "nosuch")[0] == 2
    assert run("eval")[0] == 2
    assert run("verify", "bogus")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("eval", "-a", "no-such-algebra", "x")[0] == 2
    assert run("poly", "-x", "1 + x + x^2")[0] == 2


@pytest.mark.parametrize("algebra", ["quantum-plane:3", "quaternion"])
def test_cli_verify_all(algebra):
    code, out = run("verify", "all", "-a", algebra, "--samples", "10")
    assert code == 0, out
    assert "FAIL" not in out


def test_cli_verify_deterministic():
    a = run("verify", "extension", "--seed", "4", "--samples", "5", "-f", "json")
    b = run("verify", "extension", "--seed", "4", "--samples", "5", "-f", "json")
    assert a == b


def corrupt(tmp_path):
    path = tmp_path / "bad.json"
    save_algebra_file(quantum_plane(3), path)
    data = json.loads(path.read_text())
    data["structure"][1][1][2] = ["2/1", "0/1"]
    path.write_text(json.dumps(data))
    return path


def test_cli_verify_corrupted_algebra_reports_witness(tmp_path):
    code, out = run("verify", "extension", "-a", str(corrupt(tmp_path)), "--samples", "5")
    assert code == 1
    assert "[FAIL]" in out and "witness:" in out


def test_cli_validation_gate(tmp_path):
    bad = str(corrupt(tmp_path))
    assert run("algebra", "validate", "-a", bad)[0] == 3
    assert run("eval", "-a", bad, "x")[0] == 3
    assert run("poly", "-a", bad)[0] == 3
    assert run("algebra", "validate")[0] == 0


def test_cli_algebra_file_round_trip(tmp_path):
    code, out = run("algebra", "show", "-a", "quaternion", "-f", "json")
    path = tmp_path / "h.json"
    path.write_text(out)
    assert run("algebra", "validate", "-a", str(path))[0] == 0
    code, out = run("eval", "-a", str(path), "j*j")
    assert out.strip() == "j*j = -1"


def test_cli_poly():
    code, out = run("poly", "Phi", "-a", "quantum-plane:4")
    assert code == 0
    assert "Phi_1 = " in out and "twisted, q^k" in out
    code, out = run("poly", "Q", "-k", "2", "-f", "json")
    payload = json.loads(out)
    assert list(payload["polynomials"]["Q"]) == ["1", "2"]
