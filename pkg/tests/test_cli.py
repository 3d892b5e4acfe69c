import json

from multifilt.cli import main

FS = {"dim": 2, "steps": [{"index": 0, "basis": [["1", "0"], ["0", "1"]]}, {"index": 2, "basis": [["1", "1/2"]]}]}


def _run(capsys, args, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gr_example(tmp_path, capsys):
    path = tmp_path / "fs.json"
    path.write_text(json.dumps({"dim": 1, "steps": [{"index": 0, "basis": [["1"]]}]}))
    code, out, _ = _run(capsys, ["gr", str(path)])
    assert code == 0
    assert json.loads(out) == {"0": 1}


def test_rees_derees_round_trip_bytes(tmp_path, capsys):
    path = tmp_path / "fs.json"
    path.write_text(json.dumps(FS))
    code, derees_in, _ = _run(capsys, ["rees", str(path)])
    assert code == 0
    mod_path = tmp_path / "mod.json"
    mod_path.write_text(derees_in)
    code, out1, _ = _run(capsys, ["derees", str(mod_path)])
    assert code == 0
    # normalize the original through the same pipeline a second time
    fs_path = tmp_path / "fs2.json"
    fs_path.write_text(out1)
    code, again, _ = _run(capsys, ["rees", str(fs_path)])
    assert code == 0
    mod_path.write_text(again)
    code, out2, _ = _run(capsys, ["derees", str(mod_path)])
    assert code == 0
    assert out1 == out2


def test_filtration_command(capsys):
    code, out, _ = _run(capsys, ["filtration", "--label", "2,0", "--variety", "BinaryQuadraticForms"])
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 3
    assert [s["index"] for s in payload["steps"]] == [-2, -1, 0]


def test_multiplicity_single_label(capsys):
    code, out, _ = _run(capsys, ["multiplicity", "--variety", "BinaryQuadraticForms", "--label", "2,2"])
    assert code == 0
    assert out.strip() == "1"


def test_multiplicity_grid_tsv_deterministic(capsys):
    args = ["--format", "tsv", "multiplicity", "--variety", "BinaryQuadraticForms", "--grid", "n=0..2,m=-1..1"]
    code, out1, _ = _run(capsys, args)
    assert code == 0
    code, out2, _ = _run(capsys, args)
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "n\tm\tmultiplicity"
    table = {tuple(map(int, line.split("\t")[:2])): int(line.split("\t")[2]) for line in lines[1:]}
    assert table[(0, 0)] == 1 and table[(2, 0)] == 1 and table[(1, 0)] == 0


def test_oracle_agrees_with_multiplicity(capsys):
    for label in ("2,0", "2,1", "4,2"):
        code, hom_out, _ = _run(capsys, ["multiplicity", "--variety", "BinaryQuadraticForms", "--label", label])
        assert code == 0
        code, oracle_out, _ = _run(capsys, ["oracle", "--variety", "BinaryQuadraticForms", "--label", label])
        assert code == 0
        assert hom_out == oracle_out


def test_hom_dim_command(tmp_path, capsys):
    obj = {
        "rep": {"group": "GL2", "label": [0, 0]},
        "h_action": {"dim": 1, "intertwiner_constraints": [[["0"]]]},
        "filtrations": [{"dim": 1, "steps": [{"index": 0, "basis": [["1"]]}]}],
    }
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"a": obj, "b": obj}))
    code, out, _ = _run(capsys, ["hom-dim", str(path)])
    assert code == 0
    assert out.strip() == "1"


def test_custom_variety_file(tmp_path, capsys):
    spec = {
        "group_rank": 2,
        "group": "GL2",
        "cocharacters": [[1, 0]],
        "x_module_weights": [[-2, 0], [-1, -1], [0, -2]],
    }
    path = tmp_path / "custom.json"
    path.write_text(json.dumps(spec))
    code, out, _ = _run(capsys, ["oracle", "--variety-file", str(path), "--label", "2,0"])
    assert code == 0
    assert out.strip() == "1"


def test_error_exit_codes(tmp_path, capsys, monkeypatch):
    code, _, err = _run(capsys, ["rees", "-"], stdin="not json", monkeypatch=monkeypatch)
    assert code == 2
    assert "parse error" in err

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "steps": [{"index": 0, "basis": [["1", "0", "3"]]}]}))
    code, _, err = _run(capsys, ["rees", str(bad)])
    assert code == 2
    assert "steps[0]" in err

    code, _, err = _run(capsys, ["multiplicity", "--variety", "Nope", "--label", "0,0"])
    assert code == 2

    code, _, err = _run(capsys, ["--convention", "other", "multiplicity", "--variety", "BinaryQuadraticForms", "--label", "0,0"])
    assert code == 2

    code, _, err = _run(capsys, ["multiplicity", "--variety", "BinaryQuadraticForms"])
    assert code == 2


def test_print_conventions(capsys):
    code, out, _ = _run(capsys, ["--print-conventions"])
    assert code == 0
    assert "sym-dual" in out
    assert "m >= 0" in out


def test_h_style_flag(capsys):
    # the connected-torus style misses the reflection parity condition
    code, out, _ = _run(capsys, ["--h-style", "lie_only", "multiplicity", "--variety", "BinaryQuadraticForms", "--label", "2,1"])
    assert code == 0
    assert out.strip() == "1"
    code, out, _ = _run(capsys, ["--h-style", "lie_plus_elements", "multiplicity", "--variety", "BinaryQuadraticForms", "--label", "2,1"])
    assert code == 0
    assert out.strip() == "0"
