"""The acceptance gate: one PASS/FAIL line per criterion, shown in the session summary."""

import os
import subprocess
import sys

import pytest

from conftest import CRITERIA
from silc.acceptance import full_suite


@pytest.mark.parametrize("number,thunk", full_suite(), ids=[f"criterion{n}" for n, _ in full_suite()])
def test_criterion(number, thunk):
    CRITERIA[number] = False
    report = thunk()
    CRITERIA[number] = report.ok
    assert report.ok, report.witness


def _selftest_bytes(seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run(
        [sys.executable, "-m", "silc", "selftest", "--type", "A", "--rank", "2", "--qmin", "-1"],
        env=env, capture_output=True, timeout=600,
    )
    assert proc.returncode == 0, proc.stdout
    return proc.stdout


def test_criterion11_selftest_is_deterministic():
    CRITERIA[11] = False
    first, second = _selftest_bytes(1), _selftest_bytes(2)
    CRITERIA[11] = first == second
    assert first == second
