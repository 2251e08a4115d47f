import json

import pytest

from clusterlift import export_dot, load_fixture, make_seed, parse_expression as P
from clusterlift.cases.fixtures import fixture_names
from clusterlift.cli import run
from clusterlift.errors import MalformedSeed, NotSkewSymmetrizable, ParseError
from clusterlift.io import (
    dumps,
    fan_from_dict,
    fan_to_dict,
    lifted_from_dict,
    lifted_to_dict,
    load_json,
    seed_from_dict,
    seed_to_dict,
)

ALL = [n for n in fixture_names() if "<n>" not in n] + ["projective-chain-3", "projective-trivial-2"]


@pytest.mark.parametrize("name", ALL)
def test_fixture_round_trip(name):
    fx = load_fixture(name)
    doc = seed_to_dict(fx.seed)
    s, _ = seed_from_dict(json.loads(dumps(doc)))
    assert s == fx.seed
    assert dumps(seed_to_dict(s)) == dumps(doc)
    if fx.lifted is not None:
        ldoc = lifted_to_dict(fx.lifted)
        L = lifted_from_dict(json.loads(dumps(ldoc)))
        assert L.seed == fx.lifted.seed and L.grading == fx.lifted.grading
        assert dumps(lifted_to_dict(L)) == dumps(ldoc)
    if fx.fan is not None:
        assert fan_from_dict(fan_to_dict(fx.fan)) == fx.fan


def test_canonical_dump():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert dumps({"a": 1}, canonical=False) == '{\n  "a": 1\n}'


def test_mutated_seed_round_trip():
    fx = load_fixture("diag-a1")
    from clusterlift import mutate_seed

    s = mutate_seed(fx.lifted.seed, "1")
    back, _ = seed_from_dict(seed_to_dict(s))
    assert back.cluster == s.cluster and back.provenance == ("1",)


def test_tampered_lifted_document():
    doc = lifted_to_dict(load_fixture("diag-a1").lifted)
    doc["seed"]["cluster"]["1"] = "x1"
    with pytest.raises(MalformedSeed):
        lifted_from_dict(doc)


def test_bad_documents(tmp_path):
    with pytest.raises(ParseError):
        seed_from_dict({"matrix": {}})
    with pytest.raises(ParseError):
        seed_from_dict({"vertices": [{"id": "1", "kind": "liquid"}], "matrix": {}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_json(bad)
    with pytest.raises(ParseError):
        load_json(tmp_path / "missing.json")


# -- DOT ------------------------------------------------------------------------

def test_dot_label_example():
    text = export_dot(load_fixture("label-example").seed)
    assert '"1" -> "2" [label="3,1"];' in text
    assert '"2" -> "3" [label="2,2"];' in text
    assert '"4" -> "2";' in text
    assert '"3" [label="3", shape=square];' in text
    assert "fillcolor=black" in text
    always = export_dot(load_fixture("label-example").seed, always_label=True)
    assert '"4" -> "2" [label="1,1"];' in always


def test_dot_a2():
    text = export_dot(make_seed(["1", "2"], {}, [[0, 1], [-1, 0]]))
    assert text.count("->") == 1 and '"1" -> "2";' in text
    assert "shape=circle" in text


def test_dot_diag_a3():
    text = export_dot(load_fixture("diag-a3").lifted.seed)
    for a, b in [("1", "2"), ("2", "3"), ("2", "1'"), ("3", "2'"), ("2'", "1"), ("3'", "2")]:
        assert f'"{a}" -> "{b}";' in text
    assert text.count("->") == 6


def test_dot_rejects_invalid():
    with pytest.raises(NotSkewSymmetrizable):
        export_dot(make_seed(["1", "2"], {}, [[0, 1], [1, 0]]))


# -- CLI ------------------------------------------------------------------------

def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(dumps(doc))
    return str(p)


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_cli_validate(tmp_path, capsys):
    path = write(tmp_path, "label.json", seed_to_dict(load_fixture("label-example").seed))
    assert run(["validate", path]) == 0
    doc = out_json(capsys)
    assert doc["symmetrizer"] == {"1": 1, "2": 3} and doc["maximal_rank"]


def test_cli_validate_failure(tmp_path, capsys):
    path = write(tmp_path, "bad.json", seed_to_dict(make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])))
    doc = json.loads(open(path).read())
    doc["matrix"]["entries"] = [[0, 1], [1, 0]]
    path = write(tmp_path, "bad.json", doc)
    assert run(["validate", path]) == 1
    assert "NotSkewSymmetrizable" in capsys.readouterr().err


def test_cli_mutate_involution(tmp_path, capsys):
    s = load_fixture("fano-a2").seed
    path = write(tmp_path, "fano.json", seed_to_dict(s))
    assert run(["mutate", path, "--seq", "1,1"]) == 0
    back, _ = seed_from_dict(out_json(capsys))
    assert back == s
    assert run(["mutate", path, "--seq", "1,2"]) == 0
    doc = out_json(capsys)
    assert P(doc["cluster"]["2"]) == P("(x1+x2+1)/(x1*x2)")


def test_cli_mutate_graded(tmp_path, capsys):
    path = write(tmp_path, "l.json", lifted_to_dict(load_fixture("diag-a1").lifted))
    assert run(["mutate", path, "--seq", "1"]) == 0
    assert out_json(capsys)["grading"]["degrees"]["1"] == {"1'": -1}


def test_cli_explore(tmp_path, capsys):
    path = write(tmp_path, "fano.json", seed_to_dict(load_fixture("fano-a2").seed))
    assert run(["explore", path, "--cap", "100"]) == 0
    doc = out_json(capsys)
    assert len(doc["nodes"]) == 5 and doc["complete"] is True
    assert run(["explore", path, "--cap", "100", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph exchange_graph {")


def test_cli_lift(tmp_path, capsys):
    fx = load_fixture("fano-a2")
    seed = write(tmp_path, "fano.json", seed_to_dict(fx.seed))
    from clusterlift.io import lifting_to_dict

    nu = write(tmp_path, "nu.json", lifting_to_dict(fx.lifting))
    assert run(["lift", seed, "--nu", nu]) == 0
    L = lifted_from_dict(out_json(capsys))
    assert L.seed == fx.lifted.seed


def test_cli_check_upper(tmp_path, capsys):
    path = write(tmp_path, "a2.json", seed_to_dict(make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])))
    assert run(["check-upper", path, "--expr", "(1+x2)/x1", "--assert"]) == 0
    assert out_json(capsys) == {"member": True, "exact": True}
    assert run(["check-upper", path, "--expr", "1/x1"]) == 0
    assert out_json(capsys)["member"] is False
    assert run(["check-upper", path, "--expr", "1/x1", "--assert"]) == 1


def test_cli_homogenize_and_valuation(tmp_path, capsys):
    path = write(tmp_path, "t.json", lifted_to_dict(load_fixture("projective-trivial-2").lifted))
    assert run(["homogenize", path, "--expr", "z1*z2 + z1"]) == 0
    doc = out_json(capsys)
    assert doc["n"] == {"0": 2} and P(doc["ftilde"]) == P("z1*z2 + Z0*z1")
    path = write(tmp_path, "d.json", lifted_to_dict(load_fixture("diag-a1").lifted))
    assert run(["valuation", path, "--expr", "(1+x2)/X1'", "--vertex", "1'"]) == 0
    assert out_json(capsys)["valuation"] == -1
    assert run(["valuation", path, "--expr", "0", "--vertex", "1'"]) == 0
    assert out_json(capsys)["valuation"] == "inf"
    assert run(["valuation", path, "--expr", "x1", "--vertex", "1"]) == 1


def test_cli_toric(tmp_path, capsys):
    path = write(tmp_path, "fan.json", {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "base_cone": [1, 2]})
    assert run(["toric", path]) == 0
    doc = out_json(capsys)
    assert doc["cox"]["rank"] == 3
    assert doc["lifting"]["nu"]["entries"] == [[1, 1]]
    path = write(tmp_path, "bad.json", {"rank": 2, "rays": [[2, 0], [0, 1]], "base_cone": [1, 2]})
    assert run(["toric", path]) == 1


def test_cli_diag(tmp_path, capsys):
    a3 = load_fixture("diag-a3").seed
    path = write(tmp_path, "a3.json", seed_to_dict(a3))
    assert run(["diag-compactify", path]) == 1
    assert "NotMaximalRank" in capsys.readouterr().err
    assert run(["diag-compactify", path, "--non-strict"]) == 0
    captured = capsys.readouterr()
    assert "factorial" in captured.err
    L = lifted_from_dict(json.loads(captured.out))
    assert L.seed == load_fixture("diag-a3").lifted.seed


def test_cli_export_dot(tmp_path, capsys):
    path = write(tmp_path, "label.json", seed_to_dict(load_fixture("label-example").seed))
    assert run(["export-dot", path]) == 0
    assert 'label="3,1"' in capsys.readouterr().out
    assert run(["export-dot", path, "--always-label"]) == 0
    assert 'label="1,1"' in capsys.readouterr().out


def test_cli_fixture(capsys):
    assert run(["fixture", "list"]) == 0
    assert "fano-a2" in out_json(capsys)["fixtures"]
    assert run(["fixture", "diag-a1", "--dump"]) == 0
    doc = out_json(capsys)
    assert lifted_from_dict(doc["lifted"]).seed == load_fixture("diag-a1").lifted.seed
    assert run(["fixture", "unknown"]) == 1


def test_cli_exit_codes(tmp_path, capsys):
    assert run([]) == 2
    assert run(["validate", str(tmp_path / "missing.json")]) == 2
    path = write(tmp_path, "a2.json", seed_to_dict(make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])))
    assert run(["check-upper", path, "--expr", "x1 x2"]) == 2
    assert run(["mutate", path, "--seq", "9"]) == 1
    assert run(["explore", path, "--cap", "0"]) == 2
    assert run(["--pretty", "validate", path]) == 0
    assert "\n  " in capsys.readouterr().out


def test_cli_accepts_fixture_dump(tmp_path, capsys):
    assert run(["fixture", "fano-a2", "--dump"]) == 0
    path = tmp_path / "fano.json"
    path.write_text(capsys.readouterr().out)
    assert run(["explore", str(path), "--cap", "100"]) == 0
    assert len(out_json(capsys)["nodes"]) == 5
