"""
Tests for the verification suites, their loader and the concurrent runner.
"""

import importlib

import pytest

from markedmcg.data_structures import SharedReportBuffer
from markedmcg.suite_runner import SuiteRunner, expand_suite_names, run_suites
from markedmcg.suite_utils import (
    SUITE_MODULES,
    VerificationSuite,
    load_suite_definition,
    validate_options,
    validate_suite_structure,
)

SMALL_RUNS = [
    ("braid", {"max_n": 4, "samples": 10}),
    ("purebraid", {"max_n": 4, "samples": 10}),
    ("sphere", {"max_n": 5}),
    ("genus0", {"max_n": 2}),
    ("genus1-emit", {"max_n": 1}),
    ("annulus", {"depth": 3, "max_n": 2, "samples": 5}),
    ("flips", {"depth": 2}),
    ("extension", {}),
    ("fourpunct", {"depth": 2, "samples": 5}),
    ("autgroup", {"samples": 20}),
]


def test_every_suite_has_a_small_run():
    assert sorted(name for name, _ in SMALL_RUNS) == sorted(SUITE_MODULES)


@pytest.mark.parametrize("name, overrides", SMALL_RUNS)
def test_suite_passes(name, overrides):
    suite = VerificationSuite.from_module(name)
    assert suite.name == name
    results = suite.run(overrides)
    assert results
    failures = [r.format_line() for r in results if not r.passed]
    assert failures == []
    assert all(r.suite == name for r in results)


def test_resolve_options():
    suite = VerificationSuite.from_module("braid")
    options = suite.resolve_options({"max_n": 3, "depth": 9, "samples": None})
    assert options["max_n"] == 3
    assert options["samples"] == suite.defaults["samples"]
    assert "depth" not in options
    with pytest.raises(ValueError):
        suite.resolve_options({"max_n": 0})


def test_validate_suite_structure():
    def run_suite(options):
        return []

    validate_suite_structure({"name": "ok", "options": {"max_n": 3}}, run_suite)
    with pytest.raises(ValueError, match="name"):
        validate_suite_structure({"options": {}}, run_suite)
    with pytest.raises(ValueError, match="unknown options"):
        validate_suite_structure({"name": "x", "options": {"width": 3}}, run_suite)
    with pytest.raises(ValueError, match="run_suite"):
        validate_suite_structure({"name": "x", "options": {}}, None)


def test_validate_options():
    validate_options({"rng_seed": -4, "samples": 1})
    with pytest.raises(ValueError):
        validate_options({"samples": True})
    with pytest.raises(ValueError):
        validate_options({"limit": "10"})


def test_unknown_suite():
    with pytest.raises(ValueError, match="Unknown suite"):
        load_suite_definition("genus7")
    with pytest.raises(ValueError):
        run_suites(["genus7"])


def test_expand_suite_names():
    assert expand_suite_names(["all"]) == list(SUITE_MODULES)
    assert expand_suite_names(["sphere", "braid", "sphere"]) == ["sphere", "braid"]
    assert expand_suite_names(["flips", "all"])[0] == "flips"


def test_runner_keeps_submission_order():
    names = ["extension", "sphere", "braid"]
    overrides = {"max_n": 4, "samples": 5}
    threaded = SuiteRunner(workers=3).run(names, overrides)
    serial = SuiteRunner(workers=1).run(names, overrides)
    assert [(r.suite, r.name) for r in threaded] == [(r.suite, r.name) for r in serial]
    suites_in_order = [r.suite for r in threaded]
    assert suites_in_order == sorted(suites_in_order, key=names.index)


def test_runner_reports_crashing_suite(monkeypatch):
    module = importlib.import_module("markedmcg.suites.extension")

    def explode(options):
        raise RuntimeError("boom")

    monkeypatch.setattr(module, "run_suite", explode)
    results = run_suites(["extension"], workers=1)
    assert len(results) == 1
    assert not results[0].passed
    assert results[0].name == "run"
    assert "boom" in results[0].detail


def test_runner_validation():
    with pytest.raises(ValueError):
        SuiteRunner(workers=0)
    buffer = SharedReportBuffer()
    runner = SuiteRunner(workers=1, shared_buffer=buffer)
    runner.run(["extension"])
    assert buffer.size() == 0
