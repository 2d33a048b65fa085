import random

import pytest

from seagrad.baseline import mine_temporal
from seagrad.ingest import from_rows
from seagrad.model import Direction, GradualItem

from oracles import brute_force_temporal

AGE_UP = GradualItem("age", Direction.UP)


def random_db(rng, max_m=3, max_ell=5, max_n=3):
    ell = rng.randint(2, max_ell)
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    rows = [tuple(float(rng.randint(0, 5)) for _ in range(n)) for _ in range(m * ell)]
    return from_rows(rows, tuple(f"a{i+1}" for i in range(n)), ell)


def test_age_up_support_is_14_of_23(purchases_db):
    patterns = {p.items: p.support for p in mine_temporal(purchases_db, 0.601)}
    assert patterns[frozenset({AGE_UP})] == pytest.approx(14 / 23)


def test_contradictory_pairs_never_generated(purchases_db):
    for p in mine_temporal(purchases_db, 0.01):
        attrs = [g.attribute for g in p.items]
        assert len(attrs) == len(set(attrs))


def test_theta_validation(purchases_db):
    with pytest.raises(ValueError):
        mine_temporal(purchases_db, 0.0)
    with pytest.raises(ValueError):
        mine_temporal(purchases_db, 1.2)


def test_matches_brute_force_on_random_databases():
    rng = random.Random(61)
    for _ in range(60):
        db = random_db(rng)
        theta = rng.choice([0.1, 0.3, 0.5, 0.8])
        got = {p.items: p.support for p in mine_temporal(db, theta)}
        want = brute_force_temporal(db, theta)
        assert got == want


def test_cross_boundary_off_restricts_couples():
    # one rising pair per cycle boundary only: visible iff boundaries count
    rows = [(0.0,), (2.0,), (1.0,), (3.0,)]
    db = from_rows(rows, ("x",), 2)
    on = {p.items: p.support for p in mine_temporal(db, 0.1)}
    off = {p.items: p.support for p in mine_temporal(db, 0.1, cross_boundary=False)}
    up = frozenset({GradualItem("x", Direction.UP)})
    down = frozenset({GradualItem("x", Direction.DOWN)})
    assert on[up] == pytest.approx(2 / 3)
    assert on[down] == pytest.approx(1 / 3)
    assert off[up] == 1.0
    assert down not in off


def test_downward_closed_and_anti_monotone():
    rng = random.Random(67)
    for _ in range(60):
        db = random_db(rng)
        patterns = {p.items: p.support for p in mine_temporal(db, 0.2)}
        for items, support in patterns.items():
            for item in items:
                if len(items) > 1:
                    sub = items - {item}
                    assert sub in patterns
                    assert patterns[sub] >= support


def test_deterministic_ordering(purchases_db):
    a = mine_temporal(purchases_db, 0.25)
    b = mine_temporal(purchases_db, 0.25)
    assert [(p.items, p.support) for p in a] == [(p.items, p.support) for p in b]
    sizes = [len(p.items) for p in a]
    assert sizes == sorted(sizes)
