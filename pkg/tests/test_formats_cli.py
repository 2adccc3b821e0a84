"""File formats (canonical JSON round-trips) and the command-line surface."""

import json

import pytest

from mgres import cli, formats
from mgres.errors import FormatError
from helpers import DATA, xy_example


def test_morphism_roundtrip_byte_identical():
    raw = formats.load_json(DATA / "ex4.mmor")
    phi = formats.morphism_from_dict(raw)
    once = formats.canonical_dumps(formats.morphism_to_dict(phi))
    again = formats.canonical_dumps(
        formats.morphism_to_dict(formats.morphism_from_dict(json.loads(once)))
    )
    assert once == again


def test_complex_roundtrip_byte_identical():
    from mgres import taylor_complex

    x = taylor_complex(xy_example())
    once = formats.canonical_dumps(formats.complex_to_dict(x))
    loaded = formats.complex_from_dict(json.loads(once))
    again = formats.canonical_dumps(formats.complex_to_dict(loaded))
    assert once == again
    assert loaded == x


def test_complex_file_shift_revalidation(tmp_path):
    from mgres import taylor_complex

    d = formats.complex_to_dict(taylor_complex(xy_example()))
    d["differentials"][0][0]["shift"] = [9, 9]
    with pytest.raises(FormatError):
        formats.complex_from_dict(d)


def test_morphism_rejects_bad_coeff():
    raw = formats.load_json(DATA / "ex4.mmor")
    raw["entries"][0]["coeff"] = "one"
    with pytest.raises(FormatError):
        formats.morphism_from_dict(raw)


def test_entry_text_rendering():
    from mgres import QQ

    vars_ = ("x", "y")
    assert formats.entry_text(QQ, QQ.zero, (0, 0), vars_) == "0"
    assert formats.entry_text(QQ, QQ.one, (0, 2), vars_) == "y^2"
    assert formats.entry_text(QQ, QQ.of(-2), (1, 1), vars_) == "-2xy"
    assert formats.entry_text(QQ, QQ.of(-1), (1, 0), vars_) == "-x"
    assert formats.entry_text(QQ, QQ.of(3), (0, 0), vars_) == "3"
    assert formats.entry_text(QQ, QQ.parse("3/2"), (1, 0), vars_) == "(3/2)x"


def test_cli_validate_ok(capsys):
    assert cli.run(["validate", str(DATA / "ex4.mmor")]) == 0
    assert "valid" in capsys.readouterr().out


def test_cli_validate_negative_shift(tmp_path, capsys):
    raw = formats.load_json(DATA / "ex4.mmor")
    raw["target_degrees"][1] = [4, 0]
    bad = tmp_path / "broken.mmor"
    bad.write_text(json.dumps(raw))
    assert cli.run(["validate", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "(2, 1)" in err


def test_cli_validate_zero_column(tmp_path, capsys):
    raw = formats.load_json(DATA / "ex4.mmor")
    raw["entries"] = [e for e in raw["entries"] if e["col"] != 4]
    bad = tmp_path / "zerocol.mmor"
    bad.write_text(json.dumps(raw))
    assert cli.run(["validate", str(bad)]) == 2
    assert cli.run(["validate", "--allow-zero-columns", str(bad)]) == 0
    capsys.readouterr()


def test_cli_garbage_json(tmp_path, capsys):
    bad = tmp_path / "garbage.mmor"
    bad.write_text("{not json")
    assert cli.run(["validate", str(bad)]) == 2
    capsys.readouterr()


def test_cli_scarf_text_matches_printed_matrix(capsys):
    assert cli.run(["scarf", str(DATA / "ex4.mmor"), "--output", "text"]) == 0
    out = capsys.readouterr().out
    for needle in ["y^2", "-2xy", "x^2", "-3y^2", "2xy"]:
        assert needle in out


def test_cli_taylor_then_verify_roundtrip(tmp_path, capsys):
    taylor_json = tmp_path / "ex4_taylor.json"
    assert (
        cli.run(
            ["taylor", str(DATA / "ex4.mmor"), "--output", "json", "--out", str(taylor_json)]
        )
        == 0
    )
    assert cli.run(["verify", str(taylor_json)]) == 0
    out = capsys.readouterr().out
    assert "exact: true, minimal: false" in out
    # requiring minimality flips the verdict
    assert cli.run(["verify", str(taylor_json), "--minimal"]) == 1
    capsys.readouterr()


def test_cli_verify_morphism_file(capsys):
    assert cli.run(["verify", str(DATA / "ex4.mmor")]) == 0
    assert "exact: true" in capsys.readouterr().out


def test_cli_verify_non_exact(tmp_path, capsys):
    bad = {
        "field": "Q",
        "n": 2,
        "vars": ["x", "y"],
        "source_degrees": [[1, 0], [0, 1], [2, 0]],
        "target_degrees": [[0, 0], [0, 0]],
        "entries": [
            {"row": 1, "col": 1, "coeff": "1"},
            {"row": 2, "col": 1, "coeff": "2"},
            {"row": 1, "col": 2, "coeff": "2"},
            {"row": 2, "col": 2, "coeff": "4"},
            {"row": 2, "col": 3, "coeff": "1"},
        ],
    }
    path = tmp_path / "deficient.mmor"
    path.write_text(json.dumps(bad))
    assert cli.run(["verify", str(path)]) == 1
    capsys.readouterr()


def test_cli_minimize_and_analyze(tmp_path, capsys):
    assert cli.run(["minimize", str(DATA / "ex4.mmor"), "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [len(level) for level in payload["levels"]] == [2, 4, 2]

    assert cli.run(["analyze", str(DATA / "ex4.mmor"), "--output", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rank"] == 2
    assert report["generic"] is True
    assert len(report["lcm_lattice"]) == 10
    assert len(report["scarf_faces"]) == 7
    assert report["nonscarf_degrees"] == [[2, 3], [3, 2], [3, 3]]


def test_cli_relabel_flow(tmp_path, capsys):
    scarf_json = tmp_path / "scarf.json"
    assert (
        cli.run(
            ["scarf", str(DATA / "ex4.mmor"), "--output", "json", "--out", str(scarf_json)]
        )
        == 0
    )
    assert (
        cli.run(
            [
                "relabel",
                str(DATA / "ex7_relabel.json"),
                str(scarf_json),
                str(DATA / "ex7_prime.mmor"),
                "--output",
                "text",
            ]
        )
        == 0
    )
    out = capsys.readouterr().out
    for needle in ["w", "-2u", "-3uw", "2vw", "uv"]:
        assert needle in out


def test_cli_relabel_missing_key_is_input_error(tmp_path, capsys):
    scarf_json = tmp_path / "scarf.json"
    cli.run(["scarf", str(DATA / "ex4.mmor"), "--output", "json", "--out", str(scarf_json)])
    partial = tmp_path / "partial.json"
    partial.write_text(json.dumps([{"from": [3, 0], "to": [2, 1, 0]}]))
    assert (
        cli.run(
            ["relabel", str(partial), str(scarf_json), str(DATA / "ex7_prime.mmor")]
        )
        == 2
    )
    capsys.readouterr()


def test_cli_output_to_file(tmp_path):
    out = tmp_path / "report.json"
    assert (
        cli.run(["analyze", str(DATA / "ex4.mmor"), "--output", "json", "--out", str(out)])
        == 0
    )
    assert json.loads(out.read_text())["rank"] == 2


@pytest.mark.parametrize(
    "payload",
    [
        "[]",
        "42",
        '{"field": "Q"}',
        '{"field": "R", "n": 2, "vars": ["x","y"], "source_degrees": [[1,0]], "target_degrees": [[0,0]], "entries": []}',
        '{"field": "Q", "n": 2, "vars": ["x"], "source_degrees": [[1,0]], "target_degrees": [[0,0]], "entries": [{"row":1,"col":1,"coeff":"1"}]}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "source_degrees": "no", "target_degrees": [[0,0]], "entries": []}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "source_degrees": [[1,0]], "target_degrees": [[0,0]], "entries": ["zap"]}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "source_degrees": [[1,-1]], "target_degrees": [[0,0]], "entries": [{"row":1,"col":1,"coeff":"1"}]}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "levels": "zip", "differentials": []}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "levels": [["zap"]], "differentials": []}',
        '{"field": "Q", "n": 2, "vars": ["x","y"], "levels": [[{"degree": [0,0], "label": "g1"}]], "differentials": [[]]}',
    ],
)
def test_cli_malformed_inputs_exit_2(tmp_path, capsys, payload):
    path = tmp_path / "fuzz.json"
    path.write_text(payload)
    for command in (["validate", str(path)], ["verify", str(path)]):
        assert cli.run(command) == 2
    capsys.readouterr()


def test_prime_field_morphism_file(tmp_path):
    raw = formats.load_json(DATA / "ex4.mmor")
    raw["field"] = "GF(7)"
    path = tmp_path / "mod7.mmor"
    path.write_text(json.dumps(raw))
    phi = formats.load_morphism(path)
    assert phi.field.name == "GF(7)"
    once = formats.canonical_dumps(formats.morphism_to_dict(phi))
    again = formats.canonical_dumps(
        formats.morphism_to_dict(formats.morphism_from_dict(json.loads(once)))
    )
    assert once == again
    assert cli.run(["verify", str(path)]) == 0


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "mgres.cli", "validate", str(DATA / "ex4.mmor")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "valid" in proc.stdout
