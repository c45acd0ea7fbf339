import json
import math

import numpy as np
import pytest

from spherica import cli

S4_FILE = {"degree": 4, "group_generators": [[1, 0, 2, 3], [1, 2, 3, 0]],
           "subgroup_generators": []}


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestCheck:
    def test_builtin_sym3(self, capsys):
        code, out, _ = run(capsys, "check", "--builtin", "sym:3")
        payload = json.loads(out)
        assert code == 0
        assert payload == {"order": 6, "subgroup_order": 2, "num_double_cosets": 2,
                           "gelfand": True, "defect": 0.0}

    def test_builtin_sym4_two_cosets(self, capsys):
        code, out, _ = run(capsys, "check", "--builtin", "sym:4")
        payload = json.loads(out)
        assert code == 0
        assert payload["num_double_cosets"] == 2
        assert payload["gelfand"] is True

    def test_non_gelfand_file_exits_one(self, capsys, tmp_path):
        path = write_json(tmp_path / "s4.json", S4_FILE)
        code, out, _ = run(capsys, "check", path)
        payload = json.loads(out)
        assert code == 1
        assert payload["gelfand"] is False and payload["defect"] > 0

    def test_parse_error_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{", encoding="utf-8")
        code, _, err = run(capsys, "check", str(bad))
        assert code == 2 and "error" in err

    def test_requires_exactly_one_source(self, capsys, tmp_path):
        path = write_json(tmp_path / "s4.json", S4_FILE)
        code, _, err = run(capsys, "check", path, "--builtin", "sym:3")
        assert code == 2 and "exactly one" in err
        code, _, err = run(capsys, "check")
        assert code == 2

    def test_unknown_builtin(self, capsys):
        code, _, err = run(capsys, "check", "--builtin", "alt:5")
        assert code == 2
        code, _, err = run(capsys, "check", "--builtin", "cyc:1000")
        assert code == 2

    def test_order_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SPHERICA_MAX_ORDER", "5")
        code, _, err = run(capsys, "check", "--builtin", "sym:3")
        assert code == 2 and "too large" in err


class TestSpherical:
    def test_sym3_json(self, capsys):
        code, out, _ = run(capsys, "spherical", "--builtin", "sym:3")
        payload = json.loads(out)
        assert code == 0
        assert payload["values"] == [[[1.0, 0.0], [1.0, 0.0]], [[1.0, 0.0], [-0.5, 0.0]]]
        assert payload["weights"] == [1.0, 2.0]
        assert payload["positive_definite"] == [True, True]

    def test_cyc4_characters(self, capsys):
        code, out, _ = run(capsys, "spherical", "--builtin", "cyc:4")
        payload = json.loads(out)
        assert code == 0
        assert payload["num_double_cosets"] == 4
        assert np.allclose(payload["weights"], 1.0, atol=1e-12)
        values = [[complex(re, im) for re, im in row] for row in payload["values"]]
        expected = {tuple(np.round([1j ** (k * j % 4) for j in range(4)], 9)) for k in range(4)}
        assert {tuple(np.round(row, 9)) for row in values} == expected

    def test_full5_single_row(self, capsys):
        code, out, _ = run(capsys, "spherical", "--builtin", "full:5")
        payload = json.loads(out)
        assert code == 0
        assert payload["values"] == [[[1.0, 0.0]]]

    def test_csv_output(self, capsys, tmp_path):
        out_path = tmp_path / "table.csv"
        code, _, _ = run(capsys, "spherical", "--builtin", "sym:3", "--format", "csv",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0].startswith("index,re_0,im_0,re_1,im_1,l2_norm_sq,weight")
        assert len(lines) == 3

    def test_non_gelfand_exits_one(self, capsys, tmp_path):
        path = write_json(tmp_path / "s4.json", S4_FILE)
        code, _, err = run(capsys, "spherical", path)
        assert code == 1 and "not a Gelfand pair" in err


class TestTransformApply:
    def test_round_trip_files(self, capsys, tmp_path):
        fn = write_json(tmp_path / "f.json",
                        {"basis": "coset", "values": [[1.0, 0.5], [-0.25, 2.0]]})
        vec_path = tmp_path / "spec.json"
        code, _, _ = run(capsys, "transform", "--builtin", "sym:3", fn, "--out", str(vec_path))
        assert code == 0
        vec = json.loads(vec_path.read_text())
        assert vec["convention"] == "plancherel" and len(vec["coeffs"]) == 2
        code, out, _ = run(capsys, "transform", "--builtin", "sym:3", str(vec_path), "--inverse")
        assert code == 0
        back = json.loads(out)["values"]
        assert np.allclose(back, [[1.0, 0.5], [-0.25, 2.0]], atol=1e-10)

    def test_group_basis_function_is_projected(self, capsys, tmp_path):
        fn = write_json(tmp_path / "fg.json",
                        {"basis": "group", "values": [[6.0, 0.0]] + [[0.0, 0.0]] * 5})
        code, out, _ = run(capsys, "transform", "--builtin", "sym:3", fn)
        coeffs = json.loads(out)["coeffs"]
        # projection of 6*delta_e has coordinates (3, 0); its transform is (1, 1)
        assert np.allclose(coeffs, [[1.0, 0.0], [1.0, 0.0]], atol=1e-12)

    def test_apply_identity_multiplier_projects(self, capsys, tmp_path):
        m = write_json(tmp_path / "m.json",
                       {"convention": "plancherel", "values": [[1.0, 0.0], [1.0, 0.0]]})
        fn = write_json(tmp_path / "f.json",
                        {"basis": "group", "values": [[1.0, 0.0]] * 2 + [[0.0, 0.0]] * 4})
        code, out, _ = run(capsys, "apply", "--builtin", "sym:3", m, fn)
        assert code == 0
        values = json.loads(out)["values"]
        assert np.allclose(values, [[1.0, 0.0], [0.0, 0.0]], atol=1e-12)

    def test_multiplier_length_mismatch_exits_two(self, capsys, tmp_path):
        m = write_json(tmp_path / "m.json",
                       {"convention": "plancherel", "values": [[1.0, 0.0]] * 3})
        fn = write_json(tmp_path / "f.json", {"basis": "coset", "values": [[1.0, 0.0]] * 2})
        code, _, err = run(capsys, "apply", "--builtin", "sym:3", m, fn)
        assert code == 2 and "multiplier length" in err

    def test_ambiguous_basis_exits_two(self, capsys, tmp_path):
        # on cyc:3 the group and coset bases have equal length, so basis is required
        fn = write_json(tmp_path / "f.json", {"values": [[1.0, 0.0]] * 3})
        code, _, err = run(capsys, "transform", "--builtin", "cyc:3", fn)
        assert code == 2 and "basis" in err


class TestSchattenCommand:
    def test_sym3_counting(self, capsys, tmp_path):
        m = write_json(tmp_path / "m.json",
                       {"convention": "counting", "values": [[1.0, 0.0], [1.0, 0.0]]})
        code, out, _ = run(capsys, "schatten", "--builtin", "sym:3", m)
        assert code == 0
        payload = json.loads(out)
        assert np.allclose(payload["singular_values"], [1.0, 0.5], atol=1e-12)
        assert payload["schatten"]["1.0"] == pytest.approx(1.5, abs=1e-12)
        assert payload["convention"] == "counting"

    def test_convention_override(self, capsys, tmp_path):
        m = write_json(tmp_path / "m.json",
                       {"convention": "counting", "values": [[1.0, 0.0], [1.0, 0.0]]})
        code, out, _ = run(capsys, "schatten", "--builtin", "sym:3", m,
                           "--convention", "plancherel")
        payload = json.loads(out)
        assert np.allclose(payload["singular_values"], [1.0, 1.0], atol=1e-12)

    def test_bad_p_grid(self, capsys, tmp_path):
        m = write_json(tmp_path / "m.json",
                       {"convention": "counting", "values": [[1.0, 0.0], [1.0, 0.0]]})
        code, _, err = run(capsys, "schatten", "--builtin", "sym:3", m, "--p-grid", "0.5,2")
        assert code == 2 and "invalid exponent" in err


class TestVerifyCommand:
    def test_pass_and_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--builtin", "dih:4", "--trials", "40",
                           "--out", str(out_path))
        assert code == 0
        assert out.strip().splitlines()[-1] == "PASS"
        payload = json.loads(out_path.read_text())
        assert [c["id"] for c in payload["checks"]] == [f"V{i}" for i in range(1, 16)]

    def test_byte_identical_reports(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            code, _, _ = run(capsys, "verify", "--builtin", "cyc:5", "--trials", "40",
                             "--out", str(target))
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_non_gelfand_exits_one(self, capsys, tmp_path):
        path = write_json(tmp_path / "s4.json", S4_FILE)
        code, _, err = run(capsys, "verify", path)
        assert code == 1
