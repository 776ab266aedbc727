import json
import subprocess
import sys
from fractions import Fraction

from kmaut.algebra import make_algebra
from kmaut.autg import identity_automorphism, standard_involution
from kmaut.cli import main
from kmaut.loopaut import StandardLoopAutomorphism


def run_cli(args, capsys):
    rc = main(args)
    out = capsys.readouterr().out
    return rc, out


def test_tables_json(capsys):
    rc, out = run_cli(["tables", "--family", "a", "--n", "1", "--k", "1",
                       "--kind", "2"], capsys)
    assert rc == 0
    rows = json.loads(out)
    assert rows[0]["count"] == 3
    assert rows[0]["algebra"] == "a1^(1)"


def test_tables_text_and_latex(capsys):
    rc, out = run_cli(["tables", "--family", "d", "--n", "4", "--k", "3",
                       "--kind", "1", "--emit", "text"], capsys)
    assert rc == 0 and "1+1" in out
    rc, out = run_cli(["tables", "--family", "g2", "--emit", "latex"], capsys)
    assert rc == 0 and out.startswith("\\begin{tabular}")


def test_tables_invalid_k(capsys):
    rc, out = run_cli(["tables", "--family", "b", "--n", "2", "--k", "2"],
                      capsys)
    assert rc == 2
    assert "error" in json.loads(out)


def _write_aut(tmp_path, name="aut.json"):
    su2 = make_algebra("a", 1, "compact")
    iden = identity_automorphism(su2)
    tau = standard_involution(su2, "rho1")
    phi = StandardLoopAutomorphism(iden, 1, 1, Fraction(1, 2), None, tau)
    path = tmp_path / name
    path.write_text(json.dumps(phi.to_json()))
    return path


def test_invariant_verb(tmp_path, capsys):
    path = _write_aut(tmp_path)
    rc, out = run_cli(["invariant", "--in", str(path)], capsys)
    assert rc == 0
    inv = json.loads(out)
    assert inv == {"kind": 1, "q": 2, "p": 1, "rho": "id",
                   "beta": {"rep": "id", "k": 1}}


def test_conjugate_verb(tmp_path, capsys):
    path = _write_aut(tmp_path)
    rc, out = run_cli(["conjugate", "--a", str(path), "--b", str(path)],
                      capsys)
    assert rc == 0
    assert json.loads(out)["result"] == "conjugate"


def test_realize_verb_roundtrips(tmp_path, capsys):
    inv = {"kind": 2, "algebra": {"family": "a", "n": 1},
           "pair": ["mu", "id"], "k": 1, "order": 2}
    path = tmp_path / "inv.json"
    path.write_text(json.dumps(inv))
    rc, out = run_cli(["realize", "--in", str(path)], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert payload["epsilon"] == -1
    # the emitted automorphism re-parses and has the asked invariant
    phi = StandardLoopAutomorphism.from_json(payload)
    from kmaut.loopaut import invariant_second_kind
    got = invariant_second_kind(phi)
    assert [repr(x) for x in got.pair] == ["rho0", "rho1"]


def test_realform_verb(tmp_path, capsys):
    rc, out = run_cli(["realform", "--pair", "mu,id", "--algebra", "a1",
                       "--window", "4"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert payload["l"] == 2
    assert payload["bracket_closed"] is True
    dims = payload["coefficient_dims"]
    assert dims["0"] == 1 and dims["1"] == 2


def test_bad_inputs(tmp_path, capsys):
    rc, out = run_cli(["realform", "--pair", "mu", "--algebra", "a1"], capsys)
    assert rc == 2
    path = tmp_path / "garbage.json"
    path.write_text("{}")
    rc, out = run_cli(["invariant", "--in", str(path)], capsys)
    assert rc == 2
    rc, out = run_cli(["invariant", "--in", str(tmp_path / "missing.json")],
                      capsys)
    assert rc == 2


def test_table_output_byte_stable(capsys):
    rc1, out1 = run_cli(["tables", "--family", "d", "--n", "4"], capsys)
    rc2, out2 = run_cli(["tables", "--family", "d", "--n", "4"], capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "kmaut.cli", "tables",
                           "--family", "a", "--n", "2", "--kind", "1",
                           "--k", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert rows[0]["count"] == "2+2"
