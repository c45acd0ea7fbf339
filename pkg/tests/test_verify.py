import numpy as np
import pytest

from spherica import builtin_pairs, gelfand, serialization, verify

EXPECTED_IDS = tuple(f"V{i}" for i in range(1, 16))


@pytest.fixture(scope="module")
def sym3():
    pair = builtin_pairs.build_builtin("sym:3")
    return pair, gelfand.compute_spherical_functions(pair)


@pytest.fixture(scope="module")
def cyc6():
    pair = builtin_pairs.build_builtin("cyc:6")
    return pair, gelfand.compute_spherical_functions(pair)


@pytest.fixture(scope="module")
def sym3_report(sym3):
    pair, table = sym3
    return verify.run_suite(pair, table, trials=100, seed=0, label="sym:3")


@pytest.fixture(scope="module")
def cyc6_report(cyc6):
    pair, table = cyc6
    return verify.run_suite(pair, table, trials=200, seed=0, label="cyc:6")


class TestRandomMultiplier:
    def test_deterministic(self):
        a = verify.random_multiplier(5, 3)
        b = verify.random_multiplier(5, 3)
        assert np.array_equal(a, b)

    def test_nonnegative(self):
        m = verify.random_multiplier(6, 0, kind="nonnegative")
        assert np.all(m.real >= 0) and np.all(m.imag == 0)

    def test_sparse_zero_count(self):
        m = verify.random_multiplier(4, 1, kind="sparse")
        assert int(np.sum(m == 0)) == 2

    def test_rademacher(self):
        m = verify.random_multiplier(8, 2, kind="rademacher")
        assert set(np.unique(m.real)) <= {-1.0, 1.0}
        assert np.all(m.imag == 0)

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="kind"):
            verify.random_multiplier(4, 0, kind="uniform")


class TestSuiteStructure:
    def test_check_ids_fixed_and_unique(self, cyc6_report):
        assert tuple(rec["id"] for rec in cyc6_report.checks) == EXPECTED_IDS

    def test_abelian_pair_all_pass(self, cyc6_report):
        assert cyc6_report.passed()
        for rec in cyc6_report.checks:
            assert rec["pass"], rec["id"]

    def test_abelian_diagnostics_exactly_zero(self, cyc6_report):
        assert cyc6_report.check("V15")["worst"] <= 1e-12

    def test_sym3_passes_with_convention_gap(self, sym3_report):
        assert sym3_report.passed()
        details = sym3_report.check("V15")["details"]
        assert details["uncorrected_canonical"] >= 0.1
        assert details["isometry_onto_defect"] == pytest.approx(0.5, abs=1e-12)

    def test_modes_marked(self, cyc6_report):
        modes = {rec["id"]: rec["mode"] for rec in cyc6_report.checks}
        assert modes["V7"] == "exact" and modes["V8"] == "exact"
        assert modes["V9"] == "sampled"
        assert modes["V15"] == "diagnostic"

    def test_zero_trials_runs_deterministic_cases_only(self, sym3):
        pair, table = sym3
        report = verify.run_suite(pair, table, trials=0, seed=0)
        assert report.passed()
        assert report.trials == 0

    def test_requires_certified_pair(self, sym3):
        pair, table = sym3
        uncertified = gelfand.double_cosets(pair.group, pair.subgroup_elements)
        assert uncertified.commutative is None
        with pytest.raises(ValueError, match="not a Gelfand pair"):
            verify.run_suite(uncertified, table)

    def test_pair_descriptor(self, sym3_report):
        assert sym3_report.pair == {
            "label": "sym:3", "order": 6, "subgroup_order": 2, "num_double_cosets": 2,
        }


class TestDeterminism:
    def test_reports_byte_identical(self, sym3):
        pair, table = sym3
        a = verify.run_suite(pair, table, trials=60, seed=9, label="sym:3")
        b = verify.run_suite(pair, table, trials=60, seed=9, label="sym:3")
        assert serialization.theorem_report_to_json(a) == serialization.theorem_report_to_json(b)

    def test_seed_changes_witnesses(self, sym3):
        pair, table = sym3
        a = verify.run_suite(pair, table, trials=30, seed=0)
        b = verify.run_suite(pair, table, trials=30, seed=1)
        assert serialization.theorem_report_to_json(a) != serialization.theorem_report_to_json(b)


class TestWitnessReplay:
    @pytest.mark.parametrize("check_id", [f"V{i}" for i in range(1, 14)])
    def test_replay_reproduces_recorded_value(self, sym3, sym3_report, check_id):
        _, table = sym3
        rec = sym3_report.check(check_id)
        assert verify.replay_witness(table, rec) == pytest.approx(rec["worst"], abs=1e-14)

    @pytest.mark.parametrize("check_id", [f"V{i}" for i in range(1, 14)])
    def test_replay_on_abelian_pair(self, cyc6, cyc6_report, check_id):
        _, table = cyc6
        rec = cyc6_report.check(check_id)
        assert verify.replay_witness(table, rec) == pytest.approx(rec["worst"], abs=1e-13)

    def test_replay_after_json_round_trip(self, sym3, sym3_report):
        import json

        _, table = sym3
        payload = json.loads(serialization.theorem_report_to_json(sym3_report))
        for rec in payload["checks"]:
            if rec["id"] in ("V14", "V15"):
                continue
            assert verify.replay_witness(table, rec) == pytest.approx(rec["worst"], abs=1e-13)

    def test_no_replay_for_structural_checks(self, sym3, sym3_report):
        _, table = sym3
        with pytest.raises(ValueError, match="no replay"):
            verify.replay_witness(table, sym3_report.check("V14"))
