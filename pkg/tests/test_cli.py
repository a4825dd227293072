import json

import pytest

from orientpow.cli import main
from orientpow.expr import GroupExprSyntaxError, parse_group_expr
from orientpow.groups import Cyclic, DirectProduct, Quaternion, realize
from orientpow.powgraph import UndirectedGraph, power_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParser:
    def test_examples(self):
        assert parse_group_expr("Z(6)") == Cyclic(6)
        assert parse_group_expr("Q(8) x Z(3)") == DirectProduct((Quaternion(8), Cyclic(3)))
        assert parse_group_expr("Z(2)xZ(6)") == DirectProduct((Cyclic(2), Cyclic(6)))

    def test_left_associative(self):
        spec = parse_group_expr("Z(2) x Z(3) X Z(5)")
        assert spec == DirectProduct((DirectProduct((Cyclic(2), Cyclic(3))), Cyclic(5)))
        assert realize(spec).n == 30

    @pytest.mark.parametrize("text,offset", [("Z(3", 3), ("Z(6))", 4), ("Y(3)", 0), ("Z()", 2), ("", 0),
                                             ("Z(2) x", 6), ("é Z(2)", 0), ("Z(2) é", 5)])
    def test_errors_carry_byte_offset(self, text, offset):
        with pytest.raises(GroupExprSyntaxError) as exc:
            parse_group_expr(text)
        assert exc.value.offset == offset

    def test_cayley_file(self, tmp_path):
        p = tmp_path / "z3.json"
        p.write_text(json.dumps({"table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "name": "z3"}))
        G = realize(parse_group_expr(f"@{p} x Z(2)"))
        assert G.n == 6 and G.is_cyclic


def test_table(capsys):
    code, out, _ = run(capsys, "table", "zn", "--max", "12", "--json")
    rows = json.loads(out)
    assert code == 0
    assert [r["od"] for r in rows] == [0, "inf", 2, 3, 2, 3, 2, 2, 2, 2, 2, 2]
    assert all(r["verified"] for r in rows)


def test_classify_verify(capsys):
    code, out, _ = run(capsys, "classify", "Z(6)xZ(6)", "--orient", "--verify")
    rep = json.loads(out)
    assert code == 0 and rep["od"] == 4 and rep["verified"] and rep["orientation"]["diameter"] == 4


def test_classify_complete_arcs(capsys):
    code, out, _ = run(capsys, "classify", "Q(8)", "--complete", "--arcs")
    rep = json.loads(out)
    assert code == 0 and rep["orientation"]["unoriented"] == [] and rep["orientation"]["diameter"] == 3


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "Z(6)")
    assert code == 0 and json.loads(out)["od"] == 3
    code, out, _ = run(capsys, "oracle", "Q(8)", "--k", "2")
    assert json.loads(out)["answer"] == "no"


def test_graph_round_trip(capsys):
    code, out, _ = run(capsys, "graph", "Z(2)xZ(6)", "--format", "json")
    assert code == 0
    assert UndirectedGraph.from_json(out) == power_graph(realize(parse_group_expr("Z(2)xZ(6)")))
    code, out, _ = run(capsys, "graph", "Z(4)", "--kind", "com", "--format", "dot")
    assert out.count(" -- ") == 6


@pytest.mark.parametrize("method,expr,claim", [("glued4", "Z(3)xZ(3)", 4), ("cyclic2", "Z(12)", 2),
                                               ("cyclic3", "Z(9)", 3), ("quaternion3", "Q(16)", 3),
                                               ("nilpotent3", "Q(8)xZ(3)", 3), ("auto", "Z(6)", 3)])
def test_orient_methods(capsys, method, expr, claim):
    code, out, _ = run(capsys, "orient", expr, "--method", method)
    data = json.loads(out)
    assert code == 0 and data["claimed"] == claim and data["diameter"] <= claim


def test_orient_dot(capsys):
    code, out, _ = run(capsys, "orient", "Z(4)", "--method", "cyclic3", "--format", "dot")
    assert code == 0 and out.startswith("//") and "digraph" in out


def test_info(capsys):
    code, out, _ = run(capsys, "info", "Z(2)xZ(6)")
    data = json.loads(out)
    assert code == 0 and data["element_orders"] == {"1": 1, "2": 3, "3": 2, "6": 6}


@pytest.mark.parametrize("argv,code", [
    (["bogus"], 1),
    (["classify"], 1),
    (["classify", "Z(3"], 2),
    (["classify", "Q(12)"], 2),
    (["orient", "Z(2)xZ(2)"], 2),
    (["orient", "Z(6)", "--method", "cyclic2"], 2),
    (["orient", "Z(6)xZ(6)", "--method", "nilpotent3"], 2),
    (["classify", "@/nonexistent/table.json"], 2),
])
def test_exit_codes(capsys, argv, code):
    if code == 1:  # argparse usage errors exit from inside the parser
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 1
    else:
        assert main(argv) == code
    assert capsys.readouterr().err


def test_corpus_run(capsys, monkeypatch):
    monkeypatch.setenv("ORIENTPOW_THREADS", "4")
    code, out, _ = run(capsys, "corpus", "run", "--json")
    rows = json.loads(out)
    assert code == 0 and all(r["agrees"] and r["verified"] for r in rows)
    code2, out2, _ = run(capsys, "corpus", "run", "--json")
    assert out == out2


def test_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("ORIENTPOW_THREADS", "many")
    code, _, err = run(capsys, "corpus", "run")
    assert code == 2 and "ORIENTPOW_THREADS" in err
