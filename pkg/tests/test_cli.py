"""End-to-end CLI behaviour and report formats."""

import pytest

from triflow.cli import run
from triflow.generate import fixtures
from triflow.plane_graph import parse_plane_graph, to_text


@pytest.fixture(scope="module")
def fx():
    return fixtures()


@pytest.fixture()
def hexquad_file(tmp_path, fx):
    path = tmp_path / "hex_quad.pg"
    path.write_text(to_text(fx["HEX_QUAD"]))
    return str(path)


@pytest.fixture()
def chord_file(tmp_path, fx):
    path = tmp_path / "c8_chord.pg"
    path.write_text(to_text(fx["C8_CHORD"]))
    return str(path)


def test_faces_command(hexquad_file, capsys):
    assert run(["faces", hexquad_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("face 0 outer length 6")
    assert out[-1] == "S {}"


def test_extend_not_extends(hexquad_file, capsys):
    assert run(["extend", hexquad_file, "--coloring", "1,2,3,1,2,3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "verdict NOT_EXTENDS"


def test_extend_with_witness(hexquad_file, capsys):
    assert run(["extend", hexquad_file, "--coloring", "1,2,1,2,1,2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "verdict EXTENDS"
    # the hub sits on three vertices colored 1, so it gets 2 or 3
    assert "witness color 7 2" in out or "witness color 7 3" in out


def test_witness_command(hexquad_file, capsys):
    assert run(["witness", hexquad_file, "--coloring", "1,2,1,2,1,2"]) == 0
    out = capsys.readouterr().out
    assert "color 7 2" in out or "color 7 3" in out
    assert run(["witness", hexquad_file, "--coloring", "1,2,3,1,2,3"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_classify_chord_is_case_c(chord_file, capsys):
    assert run(["classify", chord_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "class C"


def test_classify_hexagon(hexquad_file, capsys):
    assert run(["classify", hexquad_file]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "class CRITICAL_QUADRANGULATION"


def test_critical_command(chord_file, capsys):
    assert run(["critical", chord_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "critical true"
    assert any(line.startswith("witness 1-5") for line in out)


def test_enumerate_streams_parseable_graphs(capsys):
    assert run(["enumerate", "--k", "6", "--budget", "1"]) == 0
    out = capsys.readouterr().out
    blocks = [b for b in out.split("---") if b.strip()]
    assert len(blocks) == 6
    for block in blocks:
        parse_plane_graph(block)


def test_crosscheck_small_corpus(capsys):
    assert run(["crosscheck", "--k", "6", "--budget", "1"]) == 0
    out = capsys.readouterr().out
    assert "mismatches 0" in out
    assert "graphs 6" in out


def test_bad_coloring_is_reported(hexquad_file, capsys):
    assert run(["extend", hexquad_file, "--coloring", "1,1,1,1,1,1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_file_is_reported(tmp_path, capsys):
    path = tmp_path / "broken.pg"
    path.write_text("vertices zz\n")
    assert run(["faces", str(path)]) == 1
    assert "error: line 1" in capsys.readouterr().err


def test_invalid_graph_invariant_reported(tmp_path, capsys):
    path = tmp_path / "triangle.pg"
    path.write_text(
        "vertices 4\nouter 1 2 3 4\nrot 1: 2 3 4\nrot 2: 3 1\nrot 3: 4 1 2\nrot 4: 1 3\n"
    )
    assert run(["faces", str(path)]) == 1
    assert "triangle" in capsys.readouterr().err
