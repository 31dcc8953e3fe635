"""Acceptance gate: one test per criterion, each printing a pass/fail line.

The lines are also collected and echoed in the pytest terminal summary.
"""

from __future__ import annotations

import pytest

from shortlocal.acceptance import ALL, run_all

LINES: list[str] = []


@pytest.fixture(scope="module")
def results():
    return {r.key: r for r in run_all()}


@pytest.mark.parametrize("key", [k for k, _ in ALL])
def test_criterion(results, key):
    res = results[key]
    line = res.line() + f"  ({res.seconds:.2f}s)"
    LINES.append(line)
    print(line)
    assert res.passed, line


def test_suite_runtime(results):
    total = sum(r.seconds for r in results.values())
    print(f"acceptance suite total: {total:.1f}s")
    assert total < 30
