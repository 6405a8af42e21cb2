"""Shared fixtures and the per-criterion acceptance summary."""
from __future__ import annotations

from collections import OrderedDict

import pytest

from kinkspec import (
    build_mollified,
    convergence_study,
    derive_params,
    exact_kink,
    kink_mollified,
    linearize,
)

GAMMA = 0.75
EPSILONS = (0.08, 0.04, 0.02)

_criteria: "OrderedDict[str, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion checked by the test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    cid, title = mark.args
    entry = _criteria.setdefault(cid, {"title": title, "parts": []})
    entry["parts"].append((item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid, entry in _criteria.items():
        ok = all(passed for _, passed in entry["parts"])
        failed = [name for name, passed in entry["parts"] if not passed]
        line = f"{cid:<5} {'PASS' if ok else 'FAIL'}  {entry['title']}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        tr.write_line(line)


@pytest.fixture(scope="session")
def params():
    return derive_params(GAMMA)


@pytest.fixture(scope="session")
def W0(params):
    return linearize(exact_kink(params))


@pytest.fixture(scope="session")
def mollified():
    """Mollified model, kink and linearized potential at gamma=0.75, eps=0.02."""
    model = build_mollified(GAMMA, 0.02)
    kink = kink_mollified(model)
    return model, kink, linearize(kink)


@pytest.fixture(scope="session")
def convergence():
    return convergence_study(GAMMA, EPSILONS)
