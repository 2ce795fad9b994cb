import json
import pathlib

import jsonschema
import pytest

import susp

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"

CASES = [
    ("nf", ["--ring", "QQ[x]", "--f", "x", "nf", "u^2*v + 1"]),
    ("nf", ["--ring", "QQ[x,y]", "nf", "x*y"]),
    ("mul", ["--ring", "QQ[x]", "--f", "x", "mul", "u", "v"]),
    ("factor", ["--ring", "QQ[x]", "--f", "x", "factor", "x+u"]),
    ("factor", ["--ring", "QQ[x,y]", "--f", "x*y", "factor", "u"]),
    ("factor", ["--ring", "QQ[x,y]", "factor", "x^2*y - y"]),
    ("is-prime", ["--ring", "QQ[x]", "--f", "x^2", "is-prime"]),
    ("is-prime", ["--ring", "QQ[x]", "--f", "x", "is-prime", "v+1"]),
    ("is-unit", ["--ring", "QQ[x]", "--f", "x", "is-unit", "u"]),
    ("class-group", ["--ring", "QQ[x,y]", "--f", "x^2*y^2", "class-group"]),
    ("smooth", ["--ring", "QQ[x,y]", "smooth", "x*y"]),
    ("smooth", ["--ring", "QQ[x,y]", "--f", "(x-1)*x*y+1", "smooth"]),
    ("report", ["--ring", "QQ[x,y]", "--f", "(x-1)*x*y+1", "report"]),
    ("report", ["--ring", "QQ[x,y]", "--f", "x*y", "report"]),
    ("snf", ["snf", "[[2,4],[6,8]]"]),
    ("fitting", ["--ring", "QQ[y1,y2]", "fitting", '[["y1","0"],["0","y2"]]', "1"]),
    ("fitting", ["--gm-example", "fitting"]),
    ("fitting", ["--gm-example", "fitting", '[["y1+1","-y1"],["y2","0"]]']),
    ("verify-paper", ["verify-paper"]),
    ("error", ["--ring", "QQ[x]", "nf", "x^^2"]),
    ("error", ["bogus"]),
]


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


@pytest.mark.parametrize("name,args", CASES)
def test_json_output_validates(name, args):
    code, out, err = susp.run(args + ["--json"])
    assert err == ""
    doc = json.loads(out)
    jsonschema.validate(doc, schema(name))
    if name == "error":
        assert code == 2
    else:
        assert code in (0, 1)
        assert doc["verb"] == name


def test_every_verb_has_a_schema():
    verbs = ["nf", "mul", "factor", "is-prime", "is-unit", "class-group", "smooth", "report",
             "snf", "fitting", "verify-paper"]
    for v in verbs + ["error"]:
        jsonschema.Draft202012Validator.check_schema(schema(v))
    assert {n for n, _ in CASES} == set(verbs) | {"error"}
