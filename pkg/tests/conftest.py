"""Shared fixtures: the corpus of diagram files used across the test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from railknot import parse_diagram

FIXTURES = Path(__file__).parent / "fixtures"

CORPUS_NAMES = (
    "empty",
    "kink",
    "trefoil_arc",
    "fig8_arc",
    "rail_wrap",
    "rail_wrap2",
    "figure7_witness",
)


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load(name: str):
    return parse_diagram(fixture_path(name).read_bytes())


@pytest.fixture(scope="session")
def corpus():
    return {name: load(name) for name in CORPUS_NAMES}
