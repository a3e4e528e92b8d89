"""Acceptance battery: one pass or fail line per criterion.

Run with -s (or read the captured stdout on failure) to see the lines.
Each criterion is a named check in mzeta.suite, so the same battery is
reachable from the command line via `mzeta suite`.
"""

import pytest

from mzeta import suite

ACCEPTANCE_CHECKS = [
    name for name in suite.check_names() if name.startswith("acceptance_")
]


def test_battery_is_complete():
    assert len(ACCEPTANCE_CHECKS) == 9


@pytest.mark.parametrize("name", ACCEPTANCE_CHECKS)
def test_acceptance(name):
    outcome = suite.run_checks([name])[0]
    tag = "PASS" if outcome.ok else "FAIL"
    print("%s %s (%.2fs)" % (tag, name, outcome.seconds))
    assert outcome.ok, outcome.error
