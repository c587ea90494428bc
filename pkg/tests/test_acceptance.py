"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The per-criterion lines are also collected in ``RESULTS`` and echoed in the
terminal summary (see conftest.py) so they show up without ``-s``.
"""

import pytest

from hypermaps import verify

RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(verify.CRITERIA), ids=lambda n: f"criterion{n}")
def test_criterion(number):
    name, fn = verify.CRITERIA[number]
    checks = fn()
    failed = [c for c in checks if not c.passed]
    status = "FAIL" if failed or not checks else "PASS"
    line = f"{status} criterion {number}: {name} ({len(checks) - len(failed)}/{len(checks)} checks)"
    RESULTS[number] = line
    print(line)
    for c in checks:
        print("    " + c.line())
    assert checks, "criterion produced no checks"
    assert not failed, "\n".join(c.line() for c in failed)
