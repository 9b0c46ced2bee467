import io
import json
import subprocess
import sys

import pytest

from nsres import apery_resolution as ar
from nsres import emit
from nsres import m4_special as m4
from nsres import series_golod as sg
from nsres.assoc_graded import initial_ideal_truncated
from nsres.cli import run
from nsres.matrices import SymbolicMatrix
from nsres.semigroup import from_generators as G


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_apery_json():
    code, out, _ = cli("apery", "4", "5", "7", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "nsres/1"
    assert (doc["m"], doc["apery"], doc["med"]) == (4, [5, 10, 7], False)


def test_apery_text():
    code, out, _ = cli("apery", "4", "5", "7")
    assert code == 0 and "apery: 5 10 7" in out and "frobenius: 6" in out


def test_betti_text():
    assert cli("betti", "4", "5", "6", "7", "--steps", "4")[1].strip() == "1 4 12 36 108"
    assert cli("betti", "4", "5", "7", "--steps", "3", "--method", "oracle")[1].strip() == "1 3 6 12"


def test_golod_text():
    code, out, _ = cli("golod", "4", "5", "7", "--steps", "10")
    assert code == 0 and out.splitlines()[0] == "Golod through degree 10: true"
    assert cli("golod", "4", "5", "6", "--steps", "5")[1].splitlines()[0] == "Golod through degree 5: false"
    assert "P_I^Q (given): 3 2" in cli("golod", "4", "5", "7", "--piq", "3,2")[1]


def test_ideal_and_kunz():
    out = cli("ideal", "4", "5", "7")[1].splitlines()
    assert "x_1x_3 - y^3" in out and len(out) == 6
    assert "tight pairs: (1,1)" in cli("kunz", "4", "5", "7")[1]
    dot = cli("kunz", "4", "5", "7", "--format", "dot")[1]
    assert dot.startswith("digraph kunz {")
    assert cli("same-face", "4", "5", "7", "--other", "4", "13", "31")[1].strip() == "true"
    assert cli("same-face", "4", "5", "7", "--other", "4", "5", "6")[1].strip() == "false"


def test_homology_and_m4():
    code, out, _ = cli("homology", "4", "5", "7", "--steps", "2")
    assert code == 0 and "exact: true" in out
    out = cli("homology", "4", "5", "6", "--steps", "1", "--construction", "m4")[1]
    assert "exact: true" in out
    out = cli("m4", "4", "5", "7", "--steps", "2", "--symbolic")[1]
    assert out.startswith("face: NonCIFacet (unit 1)")
    assert "-x_1y^{b_{33}}" in out


def test_grm_and_koszul():
    out = cli("grm", "5", "6", "19")[1]
    assert "x_1^5" in out and "quadratic through degree 6: false" in out
    assert cli("koszul", "8", "9", "10", "12", "23")[1].startswith("Koszul through step 3 and degree 6: true")
    assert cli("koszul", "8", "81", "90", "108", "207")[1].startswith("Koszul through step 3 and degree 6: false")


def test_exit_codes():
    code, _, err = cli("apery", "2", "4")
    assert code == 1 and "GcdNotOne" in err
    assert cli("m4", "4", "5", "6", "7")[0] == 1
    assert cli("nonsense")[0] == 2
    assert cli("betti", "4", "x")[0] == 2
    assert cli("betti", "4", "5", "--format", "dot")[0] == 2
    assert cli("betti", "4", "5", "--field", "fp:4")[0] == 2


def test_threads_env(monkeypatch):
    monkeypatch.setenv("NSRES_THREADS", "zero")
    assert cli("apery", "3", "4")[0] == 1
    monkeypatch.setenv("NSRES_THREADS", "2")
    assert cli("apery", "3", "4")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nsres", "apery", "3", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "apery: 10 5" in proc.stdout


def test_resolve_json_round_trip():
    code, out, _ = cli("resolve", "4", "5", "7", "--steps", "2", "--format", "json")
    assert code == 0
    assert emit.loads(out) == ar.resolution(G((4, 5, 7)), 2)
    code, out, _ = cli("resolve", "4", "5", "7", "--steps", "2", "--format", "json", "--symbolic")
    assert emit.loads(out) == [ar.symbolic_differential(4, d) for d in (1, 2)]


@pytest.mark.parametrize(
    "obj",
    [
        G((4, 5, 7)),
        ar.differential(G((4, 5, 7)), 2),
        m4.symbolic_resolution(G((4, 5, 7)), 3)[2],
        ar.betti_via_tensor(G((4, 5, 6)), 3),
        sg.golod_check(G((4, 5, 7)), 6),
    ],
)
def test_json_round_trip(obj):
    text = emit.dumps(obj)
    assert emit.loads(text) == obj
    assert emit.dumps(emit.loads(text)) == text


def test_gr_presentation_round_trip():
    pres = initial_ideal_truncated(G((5, 6, 19)), 6)
    back = emit.loads(emit.dumps(pres))
    assert back.rendered_generators() == pres.rendered_generators()
    assert back.hilbert() == pres.hilbert()


def test_bad_schema():
    with pytest.raises(ValueError):
        emit.loads('{"schema": "other/9", "type": "semigroup"}')


def test_latex():
    sym = m4.symbolic_resolution(G((4, 5, 7)), 2)[1]
    tex = emit.matrix_latex(sym)
    for token in ("x_1^2", "-y^{b_{12}}", "x_1y^{b_{33}}"):
        assert token in tex
    ray = emit.matrix_latex(m4.symbolic_resolution(G((4, 5)), 2)[1])
    for token in ("x_1", "-y^{b_{13}}", "-y", "x_1^3"):
        assert token in ray
    assert ray.startswith(r"\begin{array}{c|cc}")
    assert emit.matrix_latex(SymbolicMatrix(4, (), (), {})) == r"\begin{array}{}\end{array}"
    concrete = emit.matrix_latex(ar.differential(G((4, 5, 7)), 2))
    assert "-t^{8}" in concrete and " 1 " not in concrete.split("\n")[1]
