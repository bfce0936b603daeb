"""Command-line surface: formats, exit codes, schema conformance."""

import json
from importlib import resources

import jsonschema
import pytest

from hsnet.cli import main
from hsnet.graphs import format_graph_text, parse_graph_text
from hsnet.designer import build_cycle


def run(args):
    return main(args)


def schema(name):
    ref = resources.files("hsnet.schemas").joinpath(name)
    return json.loads(ref.read_text())


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.graph"
    p.write_text(format_graph_text(build_cycle(4)))
    return p


def test_solve_c4(tmp_path, c4_file):
    out = tmp_path / "sol.json"
    code = run(
        ["solve", "--graph", str(c4_file), "--family", "linear", "--beta", "1",
         "--output", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, schema("solve.schema.json"))
    assert data["value"] == "0/1"
    assert data["capture_probability"] == "3/4"


def test_solve_single_node(tmp_path):
    g = tmp_path / "one.graph"
    g.write_text("n 1\n")
    out = tmp_path / "sol.json"
    assert run(["solve", "--graph", str(g), "--beta", "2", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["value"] == "-2/1"


def test_solve_malformed_edge_line(tmp_path, capsys):
    g = tmp_path / "bad.graph"
    g.write_text("n 3\ne 0 1\ne 2 1\n")
    code = run(["solve", "--graph", str(g)])
    assert code == 2
    err = capsys.readouterr().err
    assert "line 3" in err


def test_solve_json_graph_input(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}))
    out = tmp_path / "sol.json"
    assert run(["solve", "--graph", str(g), "--beta", "1", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == "0/1"


def test_design_report(tmp_path):
    out = tmp_path / "design.json"
    dot = tmp_path / "design.dot"
    code = run(
        ["design", "--n", "8", "--family", "linear", "--beta", "2",
         "--output", str(out), "--dot", str(dot)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, schema("design.schema.json"))
    assert data["topology"] == "maximal_cp_even"
    assert data["predicted_value"] == "4/1"
    assert "periphery" in dot.read_text()


def test_design_cycle_and_singletons(tmp_path):
    out = tmp_path / "d.json"
    assert run(["design", "--n", "12", "--family", "power", "--gamma", "2",
                "--beta", "1", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["topology"] == "cycle"
    assert run(["design", "--n", "6", "--family", "linear", "--beta", "1000",
                "--output", str(out)]) == 0
    assert json.loads(out.read_text())["topology"] == "all_singletons"


def test_design_inline_utility_json(tmp_path):
    out = tmp_path / "d.json"
    spec = json.dumps({"family": "ratio_power", "params": {"gamma": "2"}, "beta": "1/2"})
    assert run(["design", "--n", "8", "--utility", spec, "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["utility"]["family"] == "ratio_power"


def test_value_table(tmp_path):
    out = tmp_path / "table.csv"
    code = run(["value-table", "--n", "8", "--family", "linear", "--beta", "2",
                "--output", str(out)])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,s,m,T,A,B,rho,lambda_S,Q,Qbar"
    rows = [line.split(",") for line in lines[1:]]
    ss = {int(r[1]) for r in rows}
    assert ss == {0, 1, 2, 3, 4, 8}  # s in {n-3, n-2, n-1} absent
    # threshold column is constant in m within an (n, s) block
    for s in (0, 1):
        ts = {r[3] for r in rows if int(r[1]) == s}
        assert len(ts) == 1


def test_value_table_range(tmp_path):
    out = tmp_path / "table.csv"
    assert run(["value-table", "--n", "4", "--n-max", "5", "--family", "linear",
                "--output", str(out)]) == 0
    ns = {line.split(",")[0] for line in out.read_text().strip().splitlines()[1:]}
    assert ns == {"4", "5"}


def test_verify_passing_cell(tmp_path):
    out = tmp_path / "verify.json"
    csv_path = tmp_path / "verify.csv"
    code = run(["verify", "--n-max", "4", "--families", "linear", "--betas", "2",
                "--output", str(out), "--csv", str(csv_path)])
    assert code == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, schema("verify.schema.json"))
    assert data["all_passed"]
    assert csv_path.read_text().startswith("n,family,beta")


def test_verify_mutation_self_test(tmp_path):
    out = tmp_path / "verify.json"
    code = run(["verify", "--n-max", "4", "--families", "linear", "--betas", "2",
                "--mutate", "--output", str(out)])
    assert code == 1
    assert not json.loads(out.read_text())["all_passed"]


def test_verify_reports_boundary_tie(tmp_path):
    # the 4-node boundary: disjoint edges tie the optimal design, so the
    # small-component check legitimately fails and the exit code says so
    out = tmp_path / "verify.json"
    code = run(["verify", "--n-max", "4", "--families", "linear", "--betas", "0",
                "--output", str(out)])
    assert code == 1
    data = json.loads(out.read_text())
    cell = data["cells"][0]
    assert cell["value_match"]
    failed = {c["name"] for c in cell["checks"] if not c["passed"]}
    assert "no_small_components" in failed


def test_verify_rejects_tiny_boards(tmp_path):
    assert run(["verify", "--n-max", "3"]) == 2


def test_enumerate(tmp_path):
    out = tmp_path / "enum.json"
    assert run(["enumerate", "--n", "4", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, schema("enumerate.schema.json"))
    assert data["count"] == 11
    assert len(data["graphs"]) == 11
    assert run(["enumerate", "--n", "9", "--output", str(out)]) == 2


def test_export_roundtrip(tmp_path, c4_file):
    out = tmp_path / "g.dot"
    assert run(["export", "--graph", str(c4_file), "--format", "dot",
                "--output", str(out)]) == 0
    assert "0 -- 1;" in out.read_text()
    out = tmp_path / "g.json"
    assert run(["export", "--graph", str(c4_file), "--format", "json",
                "--output", str(out)]) == 0
    out2 = tmp_path / "g.txt"
    assert run(["export", "--graph", str(out), "--format", "text",
                "--output", str(out2)]) == 0
    assert parse_graph_text(out2.read_text()) == build_cycle(4)


def test_byte_identical_reports(tmp_path, c4_file):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for target in (a, b):
        run(["solve", "--graph", str(c4_file), "--family", "power", "--beta", "1/2",
             "--output", str(target)])
    assert a.read_bytes() == b.read_bytes()


def test_inexact_utility_flagged(tmp_path, c4_file):
    out = tmp_path / "sol.json"
    code = run(["solve", "--graph", str(c4_file), "--family", "power",
                "--gamma", "3/2", "--beta", "1", "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data.get("float") is True
    assert "/" not in data["value"] or "." in data["value"]


def test_missing_table_values():
    assert run(["solve", "--graph", "/nonexistent", "--family", "table"]) == 2
