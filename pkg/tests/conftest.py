from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def rationals(max_num: int = 100, max_den: int = 100, min_value=None, max_value=None):
    s = st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )
    if min_value is not None:
        s = s.filter(lambda q: q >= min_value)
    if max_value is not None:
        s = s.filter(lambda q: q <= max_value)
    return s


def positive_rationals(max_num: int = 100, max_den: int = 100):
    return st.builds(Fraction, st.integers(1, max_num), st.integers(1, max_den))


def pytest_terminal_summary(terminalreporter):
    from report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        title, ok = RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}")
