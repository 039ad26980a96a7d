"""Shared fixtures: small graph corpora and a seeded random-graph maker."""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

from sqenergy.enumeration import enumerate_connected
from sqenergy.graphs import Graph, from_edges, stats

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def connected_by_order() -> dict[int, list[Graph]]:
    """All connected graphs of order 1..7, one list per order."""
    return {n: list(enumerate_connected(n)) for n in range(1, 8)}


def random_connected(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    """Seeded G(n, p) conditioned on connectivity (retries until connected)."""
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = from_edges(n, edges)
        if stats(g).connected:
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
