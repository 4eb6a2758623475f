import json

import pytest

from qschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_drinfeld_single_segment(capsys):
    code, out, _ = run(capsys, "drinfeld", "--n", "3", "--segments", "1@0:2")
    assert code == 0
    assert "P_2(u) = u + (-1)" in out


def test_drinfeld_two_centers(capsys):
    code, out, _ = run(capsys, "drinfeld", "--n", "2", "--segments", "1@0:1,1@4:1",
                       "--json")
    assert code == 0
    data = json.loads(out)
    # P_1 = (u-1)(u-q^-2) = u^2 - (1+q^-2) u + q^-2
    p1 = data["polynomials"][0]
    assert len(p1) == 3
    assert p1[2] == "1"
    assert data["polynomials"][1] == ["1"]


def test_bad_segment_spec_exits_2(capsys):
    code, _, err = run(capsys, "build", "--n", "2", "--segments", "1@0:0")
    assert code == 2
    assert "length" in err


def test_malformed_spec_position(capsys):
    code, _, err = run(capsys, "drinfeld", "--n", "2", "--segments", "1@0:2,zz")
    assert code == 2
    assert "position" in err


def test_relations_pass(capsys):
    code, out, _ = run(capsys, "relations", "--n", "2", "--segments", "1@0:2")
    assert code == 0
    assert "PASS" in out


def test_relations_json(capsys):
    code, out, _ = run(capsys, "relations", "--n", "2", "--segments", "1@0:1",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert all(r["pass"] for r in data["relations"])


def test_build_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--n", "2", "--segments", "1@0:2")
    assert code == 0
    path = tmp_path / "mod.json"
    path.write_text(out)
    code, out1, _ = run(capsys, "relations", "--n", "2", "--module-file", str(path))
    assert code == 0
    code, out2, _ = run(capsys, "relations", "--n", "2", "--segments", "1@0:2")
    assert code == 0
    assert out1 == out2  # identical reports after re-ingestion


def test_check_single(capsys):
    code, out, _ = run(capsys, "check", "eq-12", "--n", "2", "--ell", "2,3")
    assert code == 0
    assert "PASS eq-12" in out


def test_check_thm76_example(capsys):
    code, out, _ = run(capsys, "check", "thm-7.6", "--n", "3", "--segments", "1@0:2")
    assert code == 0


def test_check_unknown_id(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "nonsense"])
    assert exc.value.code == 2


def test_character(capsys):
    code, out, _ = run(capsys, "character", "--n", "2", "--segments", "1@0:2",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3
    assert sum(m for _, m in data["character"]) == 3


def test_isomorphic_self(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--n", "2", "--segments", "1@0:2")
    f = tmp_path / "a.json"
    data = json.loads(out)
    f.write_text(json.dumps(data["F"]))
    code, out, _ = run(capsys, "isomorphic", "--n", "2", str(f), str(f))
    assert code == 0
    assert "isomorphic" in out


def test_isomorphic_distinct_parameters(tmp_path, capsys):
    files = []
    for i, spec in enumerate(["1@0:2", "1@2:2"]):
        code, out, _ = run(capsys, "build", "--n", "2", "--segments", spec)
        f = tmp_path / f"m{i}.json"
        f.write_text(json.dumps(json.loads(out)["F"]))
        files.append(str(f))
    code, out, _ = run(capsys, "isomorphic", "--n", "2", *files)
    assert code == 1
    assert "not isomorphic" in out


def test_large_ell_needs_force(capsys):
    code, _, err = run(capsys, "build", "--n", "1", "--segments", "1@0:1,2@0:1")
    assert code == 2
    assert "--force" in err
    code, out, _ = run(capsys, "build", "--n", "1", "--segments", "1@0:1,2@0:1",
                       "--force")
    assert code == 0


def test_specialized_backend(capsys):
    code, out, _ = run(capsys, "relations", "--n", "2", "--segments", "1@0:2",
                       "--backend", "rational:5/3")
    assert code == 0
    assert "PASS" in out


def test_relations_accepts_affine_descriptor_directly(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--n", "2", "--segments", "1@0:2")
    f = tmp_path / "F.json"
    f.write_text(json.dumps(json.loads(out)["F"]))
    code, out, _ = run(capsys, "relations", "--n", "2", "--module-file", str(f))
    assert code == 0
    assert "PASS" in out


def test_exit_codes_stable_across_backends(capsys):
    for cid in ("eq-12", "prop-3.4c"):
        codes = []
        for backend in ("symbolic", "rational:5/3"):
            code, _, _ = run(capsys, "check", cid, "--n", "2", "--ell", "2",
                             "--backend", backend)
            codes.append(code)
        assert codes == [0, 0], (cid, codes)
