"""Acceptance gate: every criterion runs at its stated size and tolerance
(everything here is exact arithmetic, so the tolerance is equality) and
prints one pass/fail line."""

import pytest

from kmaut import selftest

CHECKS = {fn.__name__: fn for fn in selftest.ALL_CHECKS}


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, capsys):
    check_name, ok, detail = CHECKS[name]()
    with capsys.disabled():
        print("\n[acceptance] %-24s %s  %s"
              % (check_name, "PASS" if ok else "FAIL", detail))
    assert ok, "%s: %s" % (check_name, detail)
