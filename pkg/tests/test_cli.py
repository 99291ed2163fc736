import hashlib
import json

import pytest

from minuscule import UnsupportedPosetError, poset_from_shape, ShapeDiagram, verify_csp
from minuscule.cli import emit, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_emit_formats():
    header = ["a", "b"]
    rows = [[1, 2], [3, 4]]
    assert emit((header, rows), "csv") == "a,b\n1,2\n3,4\n"
    assert emit((header, []), "csv") == "a,b\n"  # empty table keeps its header
    assert json.loads(emit((header, rows), "json")) == [{"a": 1, "b": 2}, {"a": 3, "b": 4}]
    text = emit((header, rows), "text")
    assert text.endswith("\n") and "a" in text.splitlines()[0]
    assert emit((header, rows), "csv") == emit((header, rows), "csv")  # stable


def test_verify_csp_rejects_custom_shapes():
    hook = poset_from_shape(ShapeDiagram([(0, 2), (0, 1)]))
    with pytest.raises(UnsupportedPosetError):
        verify_csp(hook, 1)


def test_rowmotion_orbits_formats(capsys):
    code, out, _ = run(capsys, "rowmotion-orbits", "--poset", "rectangle-2x2", "--k", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[:3] == ["orbit_size,multiplicity", "2,1", "4,1"]
    code, out, _ = run(capsys, "rowmotion-orbits", "--poset", "rectangle-2x2", "--k", "1", "--format", "json")
    assert code == 0
    payload = [json.loads(line) for line in out.strip().splitlines()]
    assert payload[0] == [{"multiplicity": 1, "orbit_size": 2}, {"multiplicity": 1, "orbit_size": 4}]


def test_gapless_table_output_is_thread_independent(capsys):
    outs = []
    for threads in ("1", "2"):
        code, out, _ = run(
            capsys, "gapless-table", "--poset", "cayley-moufang", "--fresh",
            "--threads", threads, "--format", "csv",
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert outs[0].splitlines()[1] == "11,1,1"


def test_gapless_table_uses_packaged_cache(capsys):
    # Without --fresh the shipped table is used, so this is instant.
    code, out, _ = run(capsys, "gapless-table", "--poset", "freudenthal", "--format", "csv")
    assert code == 0
    assert len(out.splitlines()) == 26  # header + 25 rows


def test_qpoly_output(capsys):
    code, out, _ = run(capsys, "qpoly", "--poset", "propeller-3", "--k", "1")
    assert code == 0
    coeffs = json.loads(out)
    assert coeffs == [1, 1, 1, 2, 1, 1, 1]
    assert sum(coeffs) == 8


def test_period_command(capsys):
    code, out, _ = run(capsys, "period", "--poset", "freudenthal", "--m", "24")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"m": 24, "max_orbit": 72, "period": 144}


def test_verify_csp_json(capsys):
    code, out, _ = run(capsys, "verify-csp", "--poset", "propeller-4", "--k", "2", "--json")
    assert code == 0
    verdict = json.loads(out)
    assert verdict["holds"] is True
    assert verdict["order"] == verdict["m"] == 9


def test_frame_check_exit_codes(capsys):
    code, out, _ = run(capsys, "frame-check")
    assert code == 0 and json.loads(out)["match"] is True
    code, out, _ = run(capsys, "frame-check", "--poset", "cayley-moufang")
    assert code == 1 and json.loads(out)["match"] is False


def test_poset_file_input(tmp_path, capsys):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps({"shape": {"rows": [[0, 2], [0, 2]]}}))
    code, out, _ = run(capsys, "rowmotion-orbits", "--poset", str(path), "--k", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:3] == ["2,1", "4,1"]


def test_bad_input_exit_code(capsys):
    code, _, err = run(capsys, "rowmotion-orbits", "--poset", "dodecahedron", "--k", "1")
    assert code == 3 and "error" in err
    code, _, err = run(capsys, "period", "--poset", "cayley-moufang", "--m", "5")
    assert code == 3


def test_resource_cap_exit_code(capsys):
    code, _, err = run(capsys, "rowmotion-orbits", "--poset", "cayley-moufang", "--k", "2", "--state-cap", "10")
    assert code == 2 and "state cap" in err


def test_manifest(tmp_path, capsys):
    path = tmp_path / "manifest.json"
    code, out, _ = run(capsys, "qpoly", "--poset", "propeller-3", "--k", "1", "--manifest", str(path))
    assert code == 0
    manifest = json.loads(path.read_text())
    assert manifest["subcommand"] == "qpoly"
    assert manifest["parameters"]["poset"] == "propeller-3"
    assert manifest["output_sha256"] == hashlib.sha256(out.encode()).hexdigest()
    assert manifest["exit_code"] == 0


def test_reproduce_everything(capsys):
    code, out, _ = run(capsys, "reproduce", "--threads", "2")
    lines = out.strip().splitlines()
    assert code == 0, out
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("OK")
    # every headline item is present
    for needle in (
        "gapless-table cayley-moufang",
        "gapless-table freudenthal",
        "gapless-table propeller-6",
        "verify-csp freudenthal k=5 (fails)",
        "period freudenthal m=24",
        "frame-check freudenthal",
        "tableau operator fixtures",
        "orbit multisets agree",
        "generating function point counts",
    ):
        assert any(needle in line for line in lines), needle
