"""The eleven acceptance criteria, one test each; every run prints a pass/fail line."""

import pytest

from z2lab.acceptance import CRITERIA, _Ctx, run_criterion
from z2lab.corpus import witness_dir


@pytest.fixture(scope="module")
def ctx():
    # shared so that certificates from criteria 8 and 9 reach criterion 11
    return _Ctx(witness_dir())


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"criterion-{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, ctx):
    result = run_criterion(number, ctx=ctx)
    print("\n" + result.line())
    assert result.passed, result.detail
