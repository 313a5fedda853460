"""Registry behavior: coverage, reproducibility, skipping, fault injection."""

import json

import pytest

from quanta.verify import (
    OMEGA_TOUCHING_IDS,
    REGISTRY,
    SPECIAL_TABLES,
    flipped_omega_coupling,
    mutation_sensitivity,
    reports_to_csv,
    run_all,
    run_check,
)

# One check per in-scope identity; this frozen set is the coverage contract.
EXPECTED_IDS = {
    "def0", "comp3", "00", "WW4", "WW8", "ex00",
    "diff1", "diff3", "IAexp2",
    "G0", "FD3", "H2", "F1100", "k00", "space4", "FA2",
    "S1", "S11",
    "infinite_params", "gen1", "gen2", "gen5",
    "AU5", "AU9", "AU11",
    "PP00", "PP00Q", "PP1A", "ABAB", "DA", "root2", "phi", "root3", "FL",
    "AU7",
    "U14", "U16", "U18", "G2f", "ABCD12", "ABCD12G",
    "G4", "G6", "G7", "Che", "Dic",
    "G6X", "primeFib", "harmonic", "lagarias",
}


class TestRegistryCoverage:
    def test_ids_match_expected_set(self):
        assert set(REGISTRY) == EXPECTED_IDS

    def test_ids_unique_and_consistent(self):
        for id, check in REGISTRY.items():
            assert check.id == id
            assert check.full is not None

    def test_special_tables_have_checks(self):
        assert set(SPECIAL_TABLES) <= set(REGISTRY)


class TestRunCheck:
    def test_au7_sweep(self):
        report = run_check("AU7", {"nmax": 2000})
        assert report.status == "pass"
        assert report.cases_run == 1999

    def test_k00_default(self):
        report = run_check("k00", {"nmax": 20, "coord": 2}, profile="quick")
        assert report.status == "pass"

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            run_check("nonexistent")

    def test_override_applies(self):
        report = run_check("harmonic", {"nmax": 57})
        assert report.cases_run == 7  # n in {9, 17, ..., 57}

    def test_schema_keys(self):
        report = run_check("G4", {"nmax": 2})
        payload = report.to_dict()
        assert list(payload) == [
            "id", "anchor", "grid", "cases_run", "failures", "elapsed_ms", "status",
        ]


class TestReproducibility:
    def test_identical_bytes_without_timing(self):
        a = run_check("WW8", {"nmax": 10}, seed=7).to_json(volatile=False)
        b = run_check("WW8", {"nmax": 10}, seed=7).to_json(volatile=False)
        assert a.encode() == b.encode()

    def test_seed_recorded_in_grid(self):
        report = run_check("WW8", {"nmax": 6}, seed=3)
        assert "seed=3" in report.grid


class TestRunAll:
    def test_quick_profile_coverage(self):
        reports = run_all("quick", ids=["ABCD12", "ABCD12G", "G4", "U18"])
        by_id = {r.id: r for r in reports}
        assert by_id["ABCD12"].status == "skipped"
        assert by_id["ABCD12G"].status == "skipped"
        assert by_id["G4"].status == "pass"
        assert by_id["U18"].status == "pass"

    def test_ordered_by_id(self):
        ids = ["G4", "AU7", "def0"]
        reports = run_all("quick", ids=ids)
        assert [r.id for r in reports] == sorted(ids)

    def test_empty_registry(self):
        assert run_all("quick", registry={}) == []

    def test_bad_profile(self):
        with pytest.raises(ValueError):
            run_all("fast")

    def test_workers_agree_with_serial(self):
        ids = ["def0", "comp3", "00"]
        serial = [r.to_json(volatile=False) for r in run_all("quick", ids=ids)]
        threaded = [
            r.to_json(volatile=False)
            for r in run_all("quick", ids=ids, workers=3)
        ]
        assert serial == threaded


class TestCsv:
    def test_summary_format(self):
        reports = run_all("quick", ids=["G4", "U18"])
        text = reports_to_csv(reports, volatile=False)
        lines = text.strip().splitlines()
        assert lines[0] == "id,status,cases_run,failures,elapsed_ms"
        assert lines[1].startswith("G4,pass,")


class TestFaultInjection:
    def test_flipped_coupling_changes_tables(self):
        from quanta.sequences import QPoint, omega_top

        clean = omega_top(QPoint(1, 1), 7)
        with flipped_omega_coupling():
            perturbed = omega_top(QPoint(1, 1), 7)
        assert clean != perturbed
        assert omega_top(QPoint(1, 1), 7) == clean  # flag restored

    def test_sensitivity_is_high(self):
        fraction, statuses = mutation_sensitivity()
        assert set(statuses) == OMEGA_TOUCHING_IDS
        assert fraction >= 0.9

    def test_zero_coupling_point_is_insensitive(self):
        # at (0, -1) the coupling coefficient is zero, so the flip is inert
        from quanta.sequences import QPoint, omega_top

        with flipped_omega_coupling():
            assert omega_top(QPoint(0, -1), 9) == omega_top(QPoint(0, -1), 9)
