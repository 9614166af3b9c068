import io
import json
from pathlib import Path

import pytest

from knotalg.cli import run
from knotalg.corpus import catalog_corpus, load_corpus
from knotalg.errors import InvalidSeifertMatrix, ParseError
from knotalg.infection import Verdict
from knotalg.seifert import SeifertMatrix

BUNDLED = Path(__file__).resolve().parent.parent / "corpus" / "catalog.json"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_alex():
    code, out, _ = cli("alex", "left_trefoil")
    assert code == 0
    assert out.splitlines()[0] == "t^2 - t + 1"
    code, out, _ = cli("alex", "[[1,-1],[0,1]]", "--json")
    assert json.loads(out) == {"alexander": "t^2 - t + 1", "invariant_factors": ["t^2 - t + 1"]}


def test_sig_integral():
    assert cli("sig-integral", "right_trefoil") == (0, "-4/3 (exact)\n", "")
    code, out, _ = cli("sig-integral", "left_cinquefoil", "--eps", "1/1000")
    assert code == 0 and out.startswith("[")
    code, out, _ = cli("sig-integral", "left_trefoil", "--json")
    assert json.loads(out) == {"lo": "4/3", "hi": "4/3", "exact": True, "text": "4/3"}


def test_sig_variants():
    assert cli("sig", "left_trefoil", "--ordinary")[1] == "2\n"
    assert cli("sig", "left_trefoil", "--omega=-1,0")[1] == "2\n"
    assert cli("sig", "left_trefoil", "--s", "1/2")[1] == "0\n"
    assert cli("sig", "left_trefoil", "--s", "0")[0] == 1  # omega = 1


def test_sig_profile_table():
    code, out, _ = cli("sig-profile", "left_trefoil")
    assert code == 0
    lines = out.splitlines()
    assert "1/6" in lines[1] and "5/6" in lines[2]
    code, out, _ = cli("sig-profile", "left_trefoil", "--json")
    data = json.loads(out)
    assert [c["exact"] for c in data["cuts"]] == ["1/6", "5/6"]
    assert [r["signature"] for r in data["arcs"]] == [0, 2]


def test_infect_worked_example():
    argv = ["infect", "--base", "left_trefoil", "--eta", "a", "--n", "1",
            "--j1", "left_trefoil", "--j2", "right_trefoil", "--eps", "1/1000000"]
    code, out, _ = cli(*argv)
    assert code == 0
    data = json.loads(out)
    assert data["bln_distinguished"] == "Distinguished"
    assert data["evidence"]["rho1"]["text"] == "4/3"
    assert data["evidence"]["rho2"]["text"] == "-4/3"
    assert isinstance(data["evidence"]["citations"]["main"], str)
    v = Verdict.from_json(data)
    assert Verdict.from_json(v.to_json()) == v


def test_other_commands():
    assert cli("iso", "left_trefoil", "right_trefoil")[1] == "isomorphic\n"
    assert cli("iso", "left_trefoil", "figure_eight")[1] == "not isomorphic\n"
    code, out, _ = cli("blanchfield", "left_trefoil")
    assert code == 0 and out.count("[") == 2
    code, out, _ = cli("derived", "--word", "[a,b]", "--level", "2", "--json")
    assert json.loads(out)["member"] is False
    assert cli("derived", "--word", "[a,b]", "--level", "1")[1] == "A B a b in F^(1): true\n"
    code, out, _ = cli("s-equiv", "left_trefoil", "--moves", "4", "--seed", "7")
    SeifertMatrix.from_json(out)
    assert "left_trefoil (fibered)" in cli("catalog")[1]


def test_exit_codes():
    assert cli("alex", "no_such_knot")[0] == 1
    assert cli("alex", "[[1,0],[0,1]]")[0] == 1
    assert cli("infect", "--base", "figure_eight", "--eta", "a", "--n", "0",
               "--j1", "left_trefoil", "--j2", "left_trefoil")[0] == 1
    code, _, err = cli("sig-integral", "left_trefoil", "--eps", "-1")
    assert code == 2 and "--eps" in err
    code, _, err = cli("alex", "left_trefoil", "--bogus")
    assert code == 2 and "--bogus" in err
    assert cli()[0] == 2
    code, _, err = cli("derived", "--word", "a", "--level", "9")
    assert code == 2 and "--max-level" in err


def test_determinism():
    for argv in (["s-equiv", "granny", "--moves", "6", "--seed", "3"],
                 ["sig-integral", "left_torus_2_7", "--json"],
                 ["sig-profile", "trefoil_figure_eight", "--approx"]):
        assert cli(*argv) == cli(*argv)


def test_json_outputs_round_trip():
    code, out, _ = cli("s-equiv", "granny", "--moves", "3", "--json")
    data = json.loads(out)
    assert SeifertMatrix.from_json(data["seifert"]).to_json() == data["seifert"]
    assert json.loads(json.dumps(data)) == data


def test_corpus_check_bundled():
    code, out, _ = cli("corpus-check", str(BUNDLED))
    assert code == 0 and out.endswith("all pass\n")
    assert load_corpus(BUNDLED).to_json() == catalog_corpus(0).to_json()
    assert cli("corpus-check")[0] == 0


def test_corpus_check_corrupted(tmp_path):
    data = catalog_corpus().to_json()
    data["entries"].append({"name": "broken", "seifert": {"size": 2, "rows": [[1, 0], [0, 1]]}})
    p = tmp_path / "c.json"
    p.write_text(json.dumps(data))
    code, out, _ = cli("corpus-check", str(p), "--variants", "1")
    assert code == 1
    assert "FAIL  broken" in out


def test_corpus_check_empty(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text('{"seed": 0, "entries": []}')
    code, out, _ = cli("corpus-check", str(p), "--json")
    assert code == 0
    assert json.loads(out) == {"entries": 0, "ok": True, "results": []}


def test_corpus_parse_error_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"seed": 0,\n  "entries": [\n    {"name": "x",}\n  ]\n}')
    with pytest.raises(ParseError) as exc:
        load_corpus(p)
    assert exc.value.line == 3
    code, _, err = cli("corpus-check", str(p))
    assert code == 1 and "line 3" in err


def test_corpus_names_resolve(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"entries": [{"name": "my_knot", "seifert": [[-1, 1], [0, -1]], "fibered": True}]}))
    assert cli("sig-integral", "my_knot", "--corpus", str(p))[1] == "-4/3 (exact)\n"
    code, out, _ = cli("infect", "--base", "my_knot", "--eta", "a", "--n", "1", "--j1", "left_trefoil",
                       "--j2", "my_knot", "--corpus", str(p))
    assert json.loads(out)["bln_distinguished"] == "Distinguished"


def test_corpus_duplicates_and_strict_mode():
    entry = {"name": "k", "seifert": [[1, -1], [0, 1]]}
    with pytest.raises(ParseError, match="duplicate"):
        load_corpus({"entries": [entry, entry]})
    bad = {"entries": [{"name": "z", "seifert": [[2, 0], [0, 2]]}]}
    assert load_corpus(bad).rejected.keys() == {"z"}
    with pytest.raises(InvalidSeifertMatrix):
        load_corpus(bad, strict=True)
