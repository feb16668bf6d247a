from collections import defaultdict

import pytest

from leibniz import GF, QQ, LeibnizAlgebra
from leibniz.catalog import abelian, cyclic_nilpotent_dim2, heisenberg, lei4, lei5


def cyclic3(F):
    # nilpotent one-generator algebra: [a, a] = b, [a, b] = c
    return LeibnizAlgebra.from_brackets(F, ("a", "b", "c"), {(0, 0): {1: 1}, (0, 1): {2: 1}})


def sl2(F):
    # [h, e] = 2e, [h, f] = -2f, [e, f] = h, basis (e, f, h)
    return LeibnizAlgebra.from_brackets(
        F,
        ("e", "f", "h"),
        {(2, 0): {0: 2}, (0, 2): {0: -2}, (2, 1): {1: -2}, (1, 2): {1: 2}, (0, 1): {2: 1}, (1, 0): {2: -1}},
    )


def zoo(F):
    """Algebras used by the invariant suites; every one is a checked Leibniz algebra."""
    out = {
        "lei4": lei4(F, 1).algebra,
        "lei5": lei5(F, 1).algebra,
        "cyclic2": cyclic_nilpotent_dim2(F).algebra,
        "abelian2": abelian(F, 2).algebra,
        "heisenberg": heisenberg(F).algebra,
        "cyclic3": cyclic3(F),
    }
    if F.characteristic != 2:
        out["sl2"] = sl2(F)
    return out


FIELDS = [QQ, GF(2), GF(3), GF(5)]


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


# -- one PASS/FAIL line per acceptance criterion ---------------------------

_criteria = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for kw in report.keywords:
        if kw.startswith("criterion_"):
            _criteria[int(kw.split("_")[1])].append(report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.keywords[f"criterion_{mark.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({sum(results)}/{len(results)} checks passed)")
