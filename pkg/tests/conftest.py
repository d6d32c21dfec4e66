"""Shared fixtures: bundled judgment data, reference tables, and outcomes."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from panelrank import evaluate_round, parse_judgments

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile(
    "bulk",
    deadline=None,
    suppress_health_check=(HealthCheck.too_slow,),
)
settings.load_profile("bulk")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def rounds():
    return parse_judgments((FIXTURES / "supplier_rounds.json").read_bytes())


@pytest.fixture(scope="session")
def round1(rounds):
    return next(r for r in rounds if r.round_label == "r1")


@pytest.fixture(scope="session")
def tables():
    return json.loads((FIXTURES / "round1_tables.json").read_text())


@pytest.fixture(scope="session")
def outcomes():
    return json.loads((FIXTURES / "reference_outcomes.json").read_text())


@pytest.fixture(scope="session")
def report1(round1):
    return evaluate_round(round1)
