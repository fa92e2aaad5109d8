"""Campaign engine tests: registry coverage, determinism, suite filtering,
tolerance overrides, and report formats."""

import json

import pytest

from pauliq.checks import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    PROPERTY_NAMES,
    REGISTRY,
    SUITE_NAMES,
    CheckReport,
    RunConfig,
    format_report,
    run_suite,
)

QUICK = RunConfig(trials=50)


@pytest.fixture(scope="module")
def report():
    return run_suite("all", QUICK)


def test_defaults():
    cfg = RunConfig()
    assert cfg.seed == DEFAULT_SEED == 42
    assert cfg.trials == DEFAULT_TRIALS == 1000
    assert cfg.c == 1.0


def test_registry_names_unique_and_grouped():
    assert len(set(PROPERTY_NAMES)) == len(PROPERTY_NAMES)
    assert {p.suite for p in REGISTRY} == set(SUITE_NAMES)


def test_all_properties_pass(report):
    assert isinstance(report, CheckReport)
    assert len(report.results) == len(REGISTRY)
    failures = [r.name for r in report.results if not r.passed]
    assert report.all_passed, f"failing properties: {failures}"


def test_runs_are_deterministic(report):
    again = run_suite("all", QUICK)
    assert [r.max_deviation for r in again.results] == [
        r.max_deviation for r in report.results
    ]
    assert [r.name for r in again.results] == [r.name for r in report.results]


def test_property_substreams_stable_across_suite_selection(report):
    sub = run_suite("reflsum", QUICK)
    by_name = {r.name: r for r in report.results}
    for r in sub.results:
        assert r.suite == "reflsum"
        assert r.max_deviation == by_name[r.name].max_deviation


def test_different_seed_changes_random_deviations(report):
    # single componentwise deviations are quantized to the ulp lattice and
    # may collide across seeds, so compare across the whole suite and lean
    # on the scale-relative (continuously distributed) properties
    other = run_suite("biquat", RunConfig(trials=50, seed=7))
    by_name = {r.name: r for r in report.results}
    devs_other = [r.max_deviation for r in other.results]
    devs_base = [by_name[r.name].max_deviation for r in other.results]
    assert devs_other != devs_base
    norm = next(r for r in other.results if r.name == "norm_multiplicativity")
    assert norm.max_deviation != by_name["norm_multiplicativity"].max_deviation


def test_tolerance_override_can_force_failure():
    rep = run_suite("biquat", RunConfig(trials=20, tolerances={"associativity": 0.0}))
    assoc = next(r for r in rep.results if r.name == "associativity")
    assert assoc.tolerance == 0.0
    assert not assoc.passed
    assert not rep.all_passed


def test_unknown_tolerance_name_rejected():
    with pytest.raises(ValueError, match="associativityy"):
        run_suite("biquat", RunConfig(tolerances={"associativityy": 1.0}))


def test_invalid_suite_and_trials_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")
    with pytest.raises(ValueError):
        run_suite("biquat", RunConfig(trials=0))


def test_campaign_respects_c(report):
    scaled = run_suite("lorentz", RunConfig(trials=50, c=299792458.0))
    assert scaled.all_passed


def test_json_format(report):
    payload = json.loads(format_report(report, "json"))
    assert payload["suite"] == "all"
    assert payload["seed"] == 42
    assert payload["all_pass"] is True
    assert len(payload["results"]) == len(REGISTRY)
    first = payload["results"][0]
    assert set(first) == {
        "suite", "property", "trials", "tolerance", "max_deviation", "pass",
    }
    assert "wall_time" not in payload


def test_csv_format(report):
    lines = format_report(report, "csv").splitlines()
    assert lines[0] == "suite,property,trials,tolerance,max_deviation,pass"
    assert len(lines) == len(REGISTRY) + 1
    assert all(line.endswith(("true", "false")) for line in lines[1:])


def test_table_format(report):
    text = format_report(report, "table")
    assert "all passed" in text
    for name in PROPERTY_NAMES:
        assert name in text


def test_unknown_format_rejected(report):
    with pytest.raises(ValueError):
        format_report(report, "yaml")
