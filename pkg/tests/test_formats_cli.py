import json
import os

import pytest

from strictspan import cli, corpus, formats
from strictspan.complex import Complex
from strictspan.errors import DuplicateFacet, EmptyInput, NonMaximalFacet, ParseError

EX32_TEXT = """
1 2 6 7
1 2 7 8
1 2 6 8
1 3 5 8
1 3 6 8
1 3 4 6
1 4 6 7
1 4 5 7
1 5 7 8
5 8 9 11
3 5 8 9
3 6 8 9
3 6 9 10
3 4 6 10
4 6 7 10
4 7 10 11
4 5 7 11
5 7 8 11
3 4 10 13
3 10 12 13
3 9 10 12
3 5 9 12
5 9 12 14
5 9 11 14
4 5 11 14
4 11 13 14
4 10 11 13
6 7 10 13
6 10 12 13
6 9 10 12
6 8 9 12
8 9 12 14
8 9 11 14
7 8 11 14
7 11 13 14
7 10 11 13
"""


def test_parse_text_basics():
    c = formats.parse_text("# a comment\n3 1 2 4\n\n2 3 4 5  # trailing\n")
    assert c == Complex([(1, 2, 3, 4), (2, 3, 4, 5)])


def test_parse_example_list(ex32):
    c = formats.parse_complex(EX32_TEXT)
    assert c == ex32 and len(c.facets) == 36 and len(c.vertices) == 14


@pytest.mark.parametrize("text,exc", [
    ("1 2 3\n1 2\n", NonMaximalFacet),
    ("1 2 3\n3 2 1\n", DuplicateFacet),
    ("# nothing\n\n", EmptyInput),
    ("1 2 x\n", ParseError),
    ("1 2 0\n", ParseError),
    ("1 2 -3\n", ParseError),
    ("1 1 2\n", ParseError),
])
def test_parse_text_errors(text, exc):
    with pytest.raises(exc):
        formats.parse_text(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        formats.parse_text("1 2 3\n\n4 five 6\n")
    assert info.value.line == 3


@pytest.mark.parametrize("text", [
    "[1, 2]", '{"facets": 3}', '{"facets": [[1, 2], 3]}', '{"facets": [[1, true]]}',
    '{"name": 4, "facets": [[1]]}', "{oops",
])
def test_parse_json_errors(text):
    with pytest.raises(ParseError):
        formats.parse_json(text)


def test_json_name_and_detection():
    c, name = formats.parse_named('{"name": "tri", "facets": [[3, 2, 1]]}')
    assert name == "tri" and c == Complex([(1, 2, 3)])
    assert formats.detect_format("  {") == formats.JSON
    assert formats.detect_format("1 2 3") == formats.TEXT
    with pytest.raises(ParseError):
        formats.parse_complex(b"\xff\xfe")


@pytest.mark.parametrize("name", corpus.names())
@pytest.mark.parametrize("fmt", [formats.TEXT, formats.JSON])
def test_round_trip(name, fmt):
    inst = corpus.get(name)
    text = formats.export(inst.complex, fmt, inst.name)
    back, got_name = formats.parse_named(text, fmt)
    assert back == inst.complex
    assert formats.export(back, fmt, got_name if fmt == formats.JSON else inst.name) == text


def test_export_is_byte_stable(ex32):
    a = formats.export_text(ex32)
    assert a == formats.export_text(Complex(reversed(sorted(ex32.facets))))
    assert len(a.splitlines()) == 36 and a.endswith("\n")


# -- CLI ---------------------------------------------------------------------


def run(*argv):
    return cli.run(list(argv))


def test_analyze_example(ex32):
    code, out, err = run("analyze", "corpus:example-3-2")
    assert code == cli.EXIT_OK and not err
    data = json.loads(out)
    assert data["verdict"] == "unknown" and data["reduced"] is True and data["facets"] == 36
    code, text, _ = run("analyze", "corpus:example-3-2", "--format", "text")
    assert "spanning edge 1-2: strict" in text and "verdict: unknown" in text


def test_analyze_invalid():
    code, out, _ = run("analyze", "corpus:disjoint-tetrahedra")
    assert code == cli.EXIT_INVALID and json.loads(out)["verdict"] == "invalid-input"


def test_analyze_file(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("1 2 3 4\n2 3 4 5\n")
    code, out, _ = run("analyze", str(p))
    assert code == 0 and json.loads(out)["input"] == str(p)
    code, _, err = run("analyze", str(tmp_path / "missing.txt"))
    assert code == cli.EXIT_INVALID and "cannot read" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n1 2\n")
    code, _, err = run("analyze", str(bad))
    assert code == cli.EXIT_INVALID and err


def test_oracle_commands():
    code, out, _ = run("oracle", "corpus:example-3-2")
    data = json.loads(out)
    assert code == 0 and data["verified"] is True and len(data["certificate"]["order"]) == 36
    code, out, _ = run("oracle", "corpus:example-3-2", "--method", "constructible", "--mode", "literal")
    assert code == 0 and json.loads(out)["verified"] is True
    code, out, _ = run("oracle", "corpus:example-3-2", "--method", "constructible", "--no-fast-path")
    assert code == cli.EXIT_BUDGET and json.loads(out)["outcome"] == "budget-exceeded"
    code, out, _ = run("oracle", "corpus:disjoint-tetrahedra", "--method", "constructible")
    assert code == cli.EXIT_ABSENT and json.loads(out)["outcome"] == "absent"
    code, _, _ = run("oracle", "corpus:disjoint-tetrahedra")
    assert code == cli.EXIT_ABSENT


def test_oracle_timeout():
    code, out, _ = run("oracle", "corpus:random-ball:40", "--seed", "7", "--budget-secs", "0.0001",
                       "--backend", "python", "--method", "constructible", "--no-fast-path", "--facet-cap", "64")
    assert code == cli.EXIT_BUDGET and json.loads(out)["outcome"] == "timeout"


def test_env_budget_and_flag_precedence(monkeypatch):
    monkeypatch.setenv(cli.ENV_CAP, "1")
    code, out, _ = run("oracle", "corpus:bipyramid", "--method", "constructible", "--no-fast-path")
    assert code == cli.EXIT_BUDGET and json.loads(out)["facet_cap"] == 1
    code, out, _ = run("oracle", "corpus:bipyramid", "--method", "constructible", "--no-fast-path", "--facet-cap", "5")
    assert code == 0 and json.loads(out)["facet_cap"] == 5
    monkeypatch.setenv(cli.ENV_BUDGET, "3.5")
    assert json.loads(run("oracle", "corpus:simplex")[1])["budget_secs"] == 3.5
    monkeypatch.setenv(cli.ENV_BUDGET, "soon")
    code, _, err = run("oracle", "corpus:simplex")
    assert code == cli.EXIT_INVALID and cli.ENV_BUDGET in err


def test_validate_command():
    assert run("validate", "corpus:example-3-2")[0] == 0
    code, out, _ = run("validate", "corpus:tetrahedron-boundary")
    assert code == cli.EXIT_FAILED and json.loads(out)["passed"] is False
    assert run("validate", "corpus:tetrahedron-boundary", "--claim", "sphere2")[0] == 0
    assert run("validate", "corpus:random-disk:6", "--claim", "ball2", "--seed", "3")[0] == 0


def test_corpus_command(ex32):
    code, out, _ = run("corpus", "list", "--format", "text")
    assert code == 0 and "example-3-2\t36 facets\tdim 3" in out
    names = [row["name"] for row in json.loads(run("corpus", "list")[1])]
    assert names == corpus.names()
    code, out, _ = run("corpus", "export", "example-3-2", "--format", "text")
    assert code == 0 and formats.parse_text(out) == ex32
    code, _, err = run("corpus", "export", "example-3-1")
    assert code == cli.EXIT_INVALID and "unavailable" in err
    assert run("corpus", "export")[0] == cli.EXIT_INVALID
    assert run("corpus", "export", "nope")[0] == cli.EXIT_INVALID


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run("analyze", "corpus:simplex", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["verdict"] == "unknown"
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]


def test_stdin_input(monkeypatch):
    import io
    import sys
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"1 2 3 4\n")))
    assert run("validate", "-")[0] == 0


def test_runs_are_deterministic():
    for argv in (
        ("analyze", "corpus:example-3-2"),
        ("oracle", "corpus:example-3-2", "--method", "constructible", "--mode", "literal"),
        ("oracle", "corpus:random-ball:12", "--seed", "5", "--method", "constructible", "--no-fast-path"),
        ("corpus", "export", "random-ball:20", "--seed", "9"),
    ):
        assert run(*argv) == run(*argv)


def test_main_writes_stdout(capsys):
    assert cli.main(["corpus", "export", "simplex", "--format", "text"]) == 0
    assert capsys.readouterr().out == "1 2 3 4\n"


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "strictspan", "corpus", "export", "simplex", "--format", "text"],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0 and proc.stdout == "1 2 3 4\n"
