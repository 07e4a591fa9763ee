"""Acceptance suite: one test per shipped criterion, exact tolerances throughout.

Each test runs the corresponding check from ``lspaceknots.verify`` (the same
code the ``verify-paper`` subcommand executes) and prints a PASS/FAIL line.
"""

import pytest

from lspaceknots.verify import CHECKS

CRITERIA = [
    ("criterion-1", "torus-3-7-invariants"),
    ("criterion-2", "pretzel-237-gap-set"),
    ("criterion-3", "cabling-formula-coherence"),
    ("criterion-4", "jk-generator-presentation"),
    ("criterion-5", "jk-upsilon-segments"),
    ("criterion-6", "lambda-matrix-triangular"),
    ("criterion-7", "consecutive-torus-decomposition"),
    ("criterion-8", "structural-properties"),
    ("criterion-9", "jump-equality-on-combinations"),
]

CHECKS_BY_NAME = {check.name: check for check in CHECKS}


def test_every_criterion_is_covered():
    assert sorted(name for _, name in CRITERIA) == sorted(CHECKS_BY_NAME)


@pytest.mark.parametrize(("criterion", "name"), CRITERIA, ids=[c for c, _ in CRITERIA])
def test_acceptance(criterion, name):
    check = CHECKS_BY_NAME[name]
    failures = check.run()
    if failures:
        print(f"FAIL {criterion} {name}: {failures[0]}")
    else:
        print(f"PASS {criterion} {name}")
    assert not failures, f"{criterion} ({name}): " + "; ".join(failures[:6])
