from __future__ import annotations

import pytest

from nisonto import data_path
from nisonto.dsl import compile_measures, load_measures
from nisonto.turtle import load_turtle

SEED_DSL = data_path("nis-seed.dsl")
SEED_TTL = data_path("nis-articles-7-10.ttl")
FACTS = {i: data_path(f"individual{i}.ttl") for i in (1, 2, 3)}

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def seed_kb():
    return load_turtle(SEED_TTL)


@pytest.fixture
def compiled_seed():
    return compile_measures(load_measures(SEED_DSL))


def world(*individuals: int):
    """Seed ontology merged with the given individual fixtures."""
    kb = load_turtle(SEED_TTL)
    for i in individuals:
        kb.merge(load_turtle(FACTS[i]))
    return kb.freeze()


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    doc = dict(report.user_properties).get("criterion", name)
    _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, doc in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome}  {name}: {doc}")
