"""Shared helpers: fixture loading and the cached arrangement pipeline."""

from __future__ import annotations

import time
from importlib import resources

import pytest
from hypothesis import settings

from arrgroup import (
    Arrangement,
    compute_lattice,
    genericize,
    lefschetz_pairs,
    parse_arrangement,
    presentation,
)

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")

SESSION_T0 = time.perf_counter()

FIXTURE_NAMES = (
    "pencil",
    "nearpencil",
    "triangle",
    "triangle_plus_line",
    "cycle5",
    "ceva",
)


def fixture_text(name: str) -> str:
    return resources.files("arrgroup").joinpath(f"fixtures/{name}.lines").read_text()


def fixture_arrangement(name: str) -> Arrangement:
    return parse_arrangement(fixture_text(name))


class Pipeline:
    """Everything the sweep produces for one fixture, computed once."""

    def __init__(self, name: str):
        self.arrangement = fixture_arrangement(name)
        self.generic, self.transform = genericize(self.arrangement)
        self.lattice = compute_lattice(self.generic)
        self.pairs = lefschetz_pairs(self.generic)
        self.presentation = presentation(self.pairs)


_PIPELINES: dict = {}


def pipeline(name: str) -> Pipeline:
    if name not in _PIPELINES:
        _PIPELINES[name] = Pipeline(name)
    return _PIPELINES[name]


@pytest.fixture(scope="session")
def session_start() -> float:
    return SESSION_T0


def pytest_collection_modifyitems(items):
    # the acceptance gate checks whole-suite wall clock, so it goes last
    items.sort(key=lambda item: item.path.name == "test_acceptance.py")
