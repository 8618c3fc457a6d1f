import re

import pytest

from skeinkit.diagram import catalog_lookup
from skeinkit.jones import reduced_colored


@pytest.fixture(scope="session")
def colored():
    """Memoized reduced colored invariant of a catalog entry.

    Several modules need the same handful of (knot, color) values; the
    higher colors are the expensive part of the whole suite, so compute
    each exactly once per run.
    """
    cache = {}

    def get(name, n):
        key = (name, n)
        if key not in cache:
            cache[key] = reduced_colored(catalog_lookup(name), n)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per numbered acceptance criterion."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)",
                          nodeid)
            if m and getattr(rep, "when", "call") == "call":
                results[int(m.group(1))] = status
    if not results:
        return
    try:
        import test_acceptance as acc
    except ImportError:
        return
    tw = terminalreporter
    tw.write_sep("-", "acceptance criteria")
    for k in sorted(acc.CRITERIA):
        if k not in results:
            continue
        ok = results[k] == "passed"
        note = acc.SOFT_NOTES.get(k)
        word = "PASS" if ok else "FAIL"
        line = f"[{word}] criterion {k:2d}: {acc.CRITERIA[k]}"
        if note:
            line += f"  [soft miss: {note}]"
        tw.write_line(line, green=ok, red=not ok)
