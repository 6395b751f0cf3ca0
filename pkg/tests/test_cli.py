import io
import json

import pytest

from silc.cli import character_json, element_json, graph_dot, main
from silc.afweyl import identity, si_covers, box_elements
from silc.rootdata import build_cartan


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_order_example():
    code, data = run_json("order", "--type", "A", "--rank", "1", "--x", "; 0", "--y", "1 ; 1")
    assert code == 0
    assert data["result"] is True and data["oracle"] is True
    assert data["schema"] == "silc/1"


def test_gch_example():
    code, data = run_json("gch", "--type", "A", "--rank", "1", "--lambda", "1", "--x", "; 0", "--qmin", "-1")
    assert code == 0
    assert data["character"] == [
        {"weight": [-1], "q": -1, "coeff": 1}, {"weight": [-1], "q": 0, "coeff": 1},
        {"weight": [1], "q": -1, "coeff": 1}, {"weight": [1], "q": 0, "coeff": 1},
    ]


def test_serializers():
    assert element_json(identity(build_cartan("A", 1))) == {"word": [], "trans": [0]}
    recs = character_json({((1,), 0): 1, ((-1,), -1): 1})
    assert recs == [{"weight": [-1], "q": -1, "coeff": 1}, {"weight": [1], "q": 0, "coeff": 1}]


def test_output_is_deterministic():
    args = ("enumerate", "--type", "A", "--rank", "2", "--lambda", "1,0", "--qmin", "-1")
    assert run(*args) == run(*args)


def test_json_round_trip():
    _, text = run("pieri", "--type", "A", "--rank", "1", "--lambda", "1", "--qmin", "-1")
    data = json.loads(text)
    assert json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n" == text


def test_input_errors_exit_2():
    code, data = run_json("gch", "--type", "A", "--rank", "1", "--lambda", "1,2")
    assert code == 2 and data["error"]["kind"] == "input"
    assert run("gch", "--type", "Z", "--rank", "1", "--lambda", "1")[0] == 2
    assert run("order", "--type", "A", "--rank", "1", "--x", "5 ; 0", "--y", "; 0")[0] == 2
    assert run("order", "--type", "A", "--rank", "1", "--x", "no separator", "--y", "; 0")[0] == 2
    assert run("--bogus-flag")[0] == 2
    assert run()[0] == 2


def test_budget_exit_3():
    code, data = run_json("enumerate", "--type", "A", "--rank", "1", "--lambda", "1", "--qmin", "-4",
                          "--budget", "3")
    assert code == 3 and data["error"]["kind"] == "resource"


def test_verification_exit_codes():
    assert run("nildaha-check", "--type", "A", "--rank", "1", "--samples", "20")[0] == 0
    code, data = run_json("nildaha-check", "--type", "A", "--rank", "1", "--samples", "20", "--corrupt")
    assert code == 1 and "cross[0]" in data["details"]["failed"]
    assert run("smt-check", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "1", "--qmin", "-1")[0] == 0
    assert run("smt-check", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "1", "--qmin", "-1",
               "--rule", "reversed")[0] == 1
    assert run("dem-check", "--type", "A", "--rank", "1", "--lambda", "2", "--mu", "1", "--x", "1 ; 0",
               "--qmin", "-2")[0] == 0
    assert run("pieri-check", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "2", "--x", "1 ; 0",
               "--qmin", "-2")[0] == 0
    assert run("gch-shift", "--type", "A", "--rank", "2", "--lambda", "1,0", "--x", "1 ; 0 0",
               "--xi", "1,1", "--qmin", "-2")[0] == 0


def test_pij_and_min_lift():
    code, data = run_json("pij", "--type", "A", "--rank", "2", "--x", "2 1 ; 0 0", "--J", "1")
    assert code == 0 and data["result"] == {"word": [2], "trans": [0, 0]}
    code, data = run_json("min-lift", "--type", "A", "--rank", "1", "--x", "; 0", "--y", "1 ; 1")
    assert code == 0 and data["result"] == {"word": [1], "trans": [1]}


def test_graph_dot_has_one_edge_per_cover():
    d = build_cartan("A", 1)
    dot = graph_dot(d, (), 1)
    nodes = set(box_elements(d, (), 1))
    want = sum(1 for x in nodes for _, y in si_covers(x, ()) if y in nodes)
    assert dot.count("->") == want
    assert dot.startswith("digraph")
    code, text = run("graph", "--type", "A", "--rank", "1", "--format", "dot")
    assert code == 0 and text == dot


def test_job_file(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"series": "A", "rank": 1, "cmd": "gch", "lambda": [1]}))
    code, data = run_json("--job", str(job))
    assert code == 0 and len(data["character"]) == 2
    code, data = run_json("--job", str(job), "--lambda", "2")
    assert {tuple(r["weight"]) for r in data["character"]} == {(2,), (0,), (-2,)}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("--job", str(bad))[0] == 2


def test_path_file(tmp_path):
    good = tmp_path / "p.json"
    good.write_text(json.dumps({"shape": [2], "directions": [{"word": [], "trans": [1]}, {"word": [], "trans": [0]}],
                                "breaks": ["0", "1/2", "1"]}))
    code, data = run_json("path-check", "--type", "A", "--rank", "1", "--path", str(good))
    assert code == 0 and data["details"]["valid"] is True
    bad = tmp_path / "q.json"
    bad.write_text(json.dumps({"shape": [1], "directions": [{"word": [], "trans": [0]}], "breaks": ["0", "1/x"]}))
    code, data = run_json("path-check", "--type", "A", "--rank", "1", "--path", str(bad))
    assert code == 2 and "/breaks/1" in data["error"]["message"]


def test_text_format():
    code, text = run("pij", "--type", "A", "--rank", "1", "--x", "1 ; 1", "--format", "text")
    assert code == 0 and "result:" in text


@pytest.mark.parametrize("criteria", ["4,8"])
def test_selftest_subset(criteria):
    code, text = run("selftest", "--type", "A", "--rank", "1", "--qmin", "-1", "--criteria", criteria,
                     "--format", "text")
    assert code == 0
    assert text.splitlines() == ["criterion 4: PASS enumeration", "criterion 8: PASS classical-pieri"]
