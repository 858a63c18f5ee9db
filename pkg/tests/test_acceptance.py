"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from liecone.acceptance import CRITERIA, DEFAULT_SEED, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA],
                         ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number, DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_selftest_cli_passes(capsys):
    from liecone import cli
    code = cli.main(["selftest"])
    out = capsys.readouterr().out
    assert code == 0 and "11/11 criteria passed" in out
