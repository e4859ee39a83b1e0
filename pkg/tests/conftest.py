from __future__ import annotations

from pathlib import Path

import pytest

from ladderchoice import DecisionTask, parse_scenario

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"
CASES = ("case1", "case2", "case3", "case4")


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_case(name: str) -> DecisionTask:
    return parse_scenario(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def case1() -> DecisionTask:
    return load_case("case1")


@pytest.fixture(scope="session")
def case2() -> DecisionTask:
    return load_case("case2")


@pytest.fixture(scope="session")
def case3() -> DecisionTask:
    return load_case("case3")


@pytest.fixture(scope="session")
def case4() -> DecisionTask:
    return load_case("case4")
