"""Command-line interface: exit codes, output formats, caps, determinism."""
from pathlib import Path

import pytest

from negflow.cli import main

TRIANGLE = "p 3 3\na 1 2 -1\na 2 3 -1\na 3 1 -1\n"
TAUTOLOGY = "p cnf 1 1\n1 -1 0\n"
UNSAT = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n"


@pytest.fixture
def triangle(tmp_path: Path) -> Path:
    p = tmp_path / "tri.graph"
    p.write_text(TRIANGLE)
    return p


@pytest.fixture
def fig3(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> Path:
    assert main(["gen", "fig3", "--k", "1"]) == 0
    p = tmp_path / "fig3.graph"
    p.write_text(capsys.readouterr().out)
    return p


def test_vertices(triangle: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["vertices", str(triangle)]) == 0
    assert capsys.readouterr().out == "v 0 1/3 1 1/3 2 1/3\n"


def test_directions_empty(triangle: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["directions", str(triangle)]) == 0
    assert capsys.readouterr().out == ""


def test_directions_nonempty(fig3: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["directions", str(fig3)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("d ") for line in lines)


def test_oracle_matches_formula(
    triangle: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["vertices", str(triangle)]) == 0
    formula = capsys.readouterr().out
    assert main(["oracle", str(triangle)]) == 0
    assert capsys.readouterr().out == formula


def test_oracle_prime_empty(triangle: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["oracle", str(triangle), "--prime"]) == 0
    assert capsys.readouterr().out == "c polyhedron empty\n"


def test_verify_reports_match(triangle: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", str(triangle)]) == 0
    out = capsys.readouterr().out
    assert "vertices_match: true" in out
    assert "directions_match: true" in out


def test_decompose(
    triangle: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    vec = tmp_path / "tri.vec"
    vec.write_text("e 0 1/3\ne 1 1/3\ne 2 1/3\n")
    assert main(["decompose", str(triangle), str(vec)]) == 0
    assert capsys.readouterr().out == "t 1/3 : C -3 : 0 1 2\n"


def test_decompose_rejects_noncirculation(
    triangle: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    vec = tmp_path / "bad.vec"
    vec.write_text("e 0 1\n")
    assert main(["decompose", str(triangle), str(vec)]) == 1
    assert "error:" in capsys.readouterr().err


def test_reduce_stdout(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cnf = tmp_path / "t.cnf"
    cnf.write_text(TAUTOLOGY)
    assert main(["reduce", str(cnf)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("c reduction: 1 variables, 1 clauses, 2 occurrences\n")
    assert "c role: 1 v0" in out
    assert "p 7 13" in out


def test_reduce_output_files(tmp_path: Path) -> None:
    cnf = tmp_path / "t.cnf"
    cnf.write_text(TAUTOLOGY)
    graph_file = tmp_path / "out.graph"
    x_file = tmp_path / "out.x"
    assert main(["reduce", str(cnf), "-o", str(graph_file),
                 "--emit-x", str(x_file)]) == 0
    assert graph_file.read_text().startswith("c reduction:")
    x_lines = x_file.read_text().splitlines()
    assert len(x_lines) == 2
    assert all(line.startswith("v ") for line in x_lines)


def test_decide_satisfiable(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cnf = tmp_path / "t.cnf"
    cnf.write_text(TAUTOLOGY)
    assert main(["decide", str(cnf)]) == 0
    out = capsys.readouterr().out
    assert "satisfiable: true" in out
    assert "trivial_equals_vertices: false" in out
    assert "witness: x1=" in out


def test_decide_unsatisfiable(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cnf = tmp_path / "u.cnf"
    cnf.write_text(UNSAT)
    assert main(["decide", str(cnf)]) == 0
    out = capsys.readouterr().out
    assert "satisfiable: false" in out
    assert "trivial_equals_vertices: true" in out
    assert "witness: -" in out


def test_gen_fig1_round_trips(capsys: pytest.CaptureFixture[str]) -> None:
    for shape in ("edge-disjoint", "three-path"):
        assert main(["gen", "fig1", "--shape", shape]) == 0
        out = capsys.readouterr().out
        assert out.startswith(f"c family fig1 shape={shape}\n")


def test_gen_random_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["gen", "random", "--nodes", "5", "--arcs", "8",
            "--wmax", "3", "--seed", "11"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("c family random nodes=5 arcs=8 wmax=3 seed=11\n")


def test_missing_file_exits_2(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["vertices", "/nonexistent/x.graph"]) == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_exits_2(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    bad = tmp_path / "bad.graph"
    bad.write_text("p 1 1\na 5 1 0\n")
    assert main(["vertices", str(bad)]) == 2
    assert "out of range" in capsys.readouterr().err


def test_cap_exceeded_exits_3(fig3: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["vertices", str(fig3), "--max-cycles", "2"]) == 3
    err = capsys.readouterr().err
    assert "cycles cap 2 exceeded" in err
    assert "--max-cycles / NEGFLOW_MAX_CYCLES" in err


def test_oracle_cap_hint(triangle: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["oracle", str(triangle), "--max-oracle", "2"]) == 3
    assert "--max-oracle" in capsys.readouterr().err


def test_env_cap(
    fig3: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setenv("NEGFLOW_MAX_CYCLES", "2")
    assert main(["vertices", str(fig3)]) == 3
    capsys.readouterr()
    # explicit flag wins over the environment
    assert main(["vertices", str(fig3), "--max-cycles", "50"]) == 0


def test_env_cap_must_be_integer(
    fig3: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setenv("NEGFLOW_MAX_CYCLES", "many")
    assert main(["vertices", str(fig3)]) == 2
    assert "integer" in capsys.readouterr().err


def test_cap_must_be_positive(fig3: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["vertices", str(fig3), "--max-cycles", "0"]) == 2
    assert "error:" in capsys.readouterr().err
