"""The named checks are run one by one so a regression names its check."""

import pytest

from mzeta import suite
from mzeta.errors import InvalidInputError

EXAMPLE_CHECKS = [
    name for name in suite.check_names() if not name.startswith("acceptance_")
]


def test_registry_names_are_unique_and_complete():
    names = suite.check_names()
    assert len(names) == len(set(names))
    acceptance = [n for n in names if n.startswith("acceptance_")]
    assert len(acceptance) == 9


@pytest.mark.parametrize("name", EXAMPLE_CHECKS)
def test_named_check(name):
    outcome = suite.run_checks([name])[0]
    assert outcome.ok, outcome.error


def test_unknown_name_rejected():
    with pytest.raises(InvalidInputError):
        suite.run_checks(["no_such_check"])


def test_outcome_shape():
    outcome = suite.run_checks(["ring_square_zero_product"])[0]
    assert outcome.to_json() == {"name": "ring_square_zero_product", "ok": True}
    assert str(outcome).startswith("PASS ring_square_zero_product")


def test_default_run_covers_everything():
    outcomes = suite.run_checks(["ring_square_zero_product", "mu_k3"])
    assert [o.name for o in outcomes] == ["ring_square_zero_product", "mu_k3"]


def test_failures_are_captured_not_raised():
    name = "probe_failure_capture"

    @suite.check(name)
    def probe(rng):
        raise AssertionError("intentional probe failure")

    try:
        outcome = suite.run_checks([name])[0]
        assert not outcome.ok
        assert "intentional probe failure" in outcome.error
        assert outcome.to_json()["error"] == "intentional probe failure"
        assert str(outcome).startswith("FAIL %s" % name)
    finally:
        del suite._REGISTRY[name]


def test_unexpected_exceptions_are_captured():
    name = "probe_exception_capture"

    @suite.check(name)
    def probe(rng):
        raise ValueError("boom")

    try:
        outcome = suite.run_checks([name])[0]
        assert not outcome.ok
        assert outcome.error == "ValueError: boom"
    finally:
        del suite._REGISTRY[name]


def test_duplicate_registration_rejected():
    with pytest.raises(ValueError):

        @suite.check("ring_square_zero_product")
        def clash(rng):
            pass


def test_seed_controls_randomized_checks():
    for seed in (1, 77, 1729):
        outcome = suite.run_checks(["series_scale_involution"], seed=seed)[0]
        assert outcome.ok, "seed %d: %s" % (seed, outcome.error)
