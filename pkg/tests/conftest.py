"""Shared fixtures: cached pipeline objects and seeded random metrics."""

import numpy as np
import pytest

from flagconn import (
    MetricSpec,
    build_m_basis,
    build_root_system,
    chevalley_constants,
    killing_gram,
)

# the systems exercised by the acceptance sweep
SWEEP = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]

# every classical system of rank <= 4
RANK_LE_4 = (
    [("A", r) for r in (1, 2, 3, 4)]
    + [("B", r) for r in (2, 3, 4)]
    + [("C", r) for r in (2, 3, 4)]
    + [("D", r) for r in (3, 4)]
)


class Pipeline:
    """Root system plus everything metric-independent, built once."""

    def __init__(self, family, rank):
        self.rs = build_root_system(family, rank)
        self.sc = chevalley_constants(self.rs)
        self.mb = build_m_basis(self.rs)
        self.killing = killing_gram(self.rs, self.sc)


_CACHE = {}


def pipeline(family, rank):
    key = (family, rank)
    if key not in _CACHE:
        _CACHE[key] = Pipeline(family, rank)
    return _CACHE[key]


def random_metric(rs, seed):
    """Seeded coefficients drawn from [0.5, 5.0], one per positive root."""
    rng = np.random.default_rng(seed)
    return MetricSpec.from_values(rs, rng.uniform(0.5, 5.0, len(rs.positive_roots)))


def random_mvector(dim, rng):
    return rng.normal(size=dim)


@pytest.fixture
def a2():
    return pipeline("A", 2)


@pytest.fixture
def a3():
    return pipeline("A", 3)


@pytest.fixture
def b2():
    return pipeline("B", 2)
