import random

import pytest

from seagrad.gradual import Run, build_gamma, compute_runs, respects
from seagrad.ingest import from_rows
from seagrad.model import Direction, GradualItem, PeriodLabel

from conftest import EXPECTED_GAMMA
from oracles import brute_force_runs, brute_force_runs_db


def fmt(runs):
    return ",".join(r.display for r in runs)


def random_db(rng, max_cells=20):
    ell = rng.randint(2, 8)
    m = rng.randint(1, max(1, max_cells // ell))
    n = rng.randint(1, 3)
    rows = [tuple(float(rng.randint(0, 6)) for _ in range(n)) for _ in range(m * ell)]
    return from_rows(rows, tuple(f"a{i+1}" for i in range(n)), ell)


def test_respects_examples():
    assert respects([22, 24, 28], Direction.UP)
    assert not respects([28, 20], Direction.UP)
    assert respects([5], Direction.DOWN)
    with pytest.raises(ValueError):
        respects([], Direction.UP)


def test_respects_non_strict():
    assert not respects([1, 1, 2], Direction.UP)
    assert respects([1, 1, 2], Direction.UP, strict=False)


def test_run_requires_two_observations():
    with pytest.raises(ValueError):
        Run((PeriodLabel(1),), 0)


def test_age_up_runs_match_worked_example(purchases_db):
    runs = compute_runs(purchases_db, GradualItem("age", Direction.UP))
    assert fmt(runs) == EXPECTED_GAMMA["age^+"]


def test_freight_up_includes_boundary_run(purchases_db):
    runs = compute_runs(purchases_db, GradualItem("freight_value", Direction.UP))
    displays = [r.display for r in runs]
    assert "(d8,d1,d2,d3)" in displays
    assert "(d6,d7,d8,d1)" in displays


def test_constant_attribute_has_no_runs():
    db = from_rows([(1.0,)] * 8, ("flat",), 4)
    for direction in (Direction.UP, Direction.DOWN):
        assert compute_runs(db, GradualItem("flat", direction)) == []


def test_cross_boundary_off_splits_boundary_runs(purchases_db):
    runs = compute_runs(purchases_db, GradualItem("freight_value", Direction.UP),
                        cross_boundary=False)
    # derived with the per-cycle window oracle
    assert fmt(runs) == "(d1,d2),(d5,d6),(d1,d2,d3),(d6,d7,d8),(d3,d4),(d7,d8)"


def test_build_gamma_matches_full_expected_table(purchases_db):
    gamma = build_gamma(purchases_db)
    assert len(gamma.entries) == 8
    assert [item.display for item in gamma.items] == list(EXPECTED_GAMMA)
    for item, runs in gamma.entries:
        assert fmt(runs) == EXPECTED_GAMMA[item.display]


def test_gamma_on_monotone_single_attribute():
    db = from_rows([(float(i),) for i in range(5)], ("x",), 5)
    gamma = build_gamma(db)
    assert len(gamma.entries) == 2
    up_runs = gamma.runs_for(GradualItem("x", Direction.UP))
    assert len(up_runs) == 1 and up_runs[0].length == 5
    assert gamma.runs_for(GradualItem("x", Direction.DOWN)) == ()


def test_long_run_transaction_deduplicates_labels(caplog):
    import logging
    db = from_rows([(float(i),) for i in range(8)], ("x",), 4)
    with caplog.at_level(logging.WARNING):
        (run,) = compute_runs(db, GradualItem("x", Direction.UP))
    assert run.length == 8
    assert run.transaction_labels() == tuple(PeriodLabel(i) for i in (1, 2, 3, 4))
    assert any("longer than one cycle" in r.message for r in caplog.records)


def test_runs_match_brute_force_on_random_databases():
    rng = random.Random(23)
    for _ in range(100):
        db = random_db(rng)
        for attr in db.attributes:
            for direction in (Direction.UP, Direction.DOWN):
                item = GradualItem(attr, direction)
                for cross in (True, False):
                    got = [r.labels for r in compute_runs(db, item, cross_boundary=cross)]
                    want = brute_force_runs_db(db, item, cross_boundary=cross)
                    assert got == want


def test_maximality_cannot_extend_either_side():
    rng = random.Random(5)
    for _ in range(200):
        values = [float(rng.randint(0, 5)) for _ in range(rng.randint(2, 14))]
        for direction in (Direction.UP, Direction.DOWN):
            for (i, j) in brute_force_runs(values, direction):
                assert respects(values[i:j], direction)
                if i > 0:
                    assert not respects(values[i - 1:j], direction)
                if j < len(values):
                    assert not respects(values[i:j + 1], direction)


def test_runs_are_disjoint_and_bounded(purchases_db):
    rng = random.Random(73)
    dbs = [purchases_db] + [random_db(rng) for _ in range(50)]
    for db in dbs:
        bound = db.m * db.cycle_length // 2
        for attr in db.attributes:
            for direction in (Direction.UP, Direction.DOWN):
                runs = compute_runs(db, GradualItem(attr, direction))
                assert len(runs) <= bound
                positions = [set(range(r.start, r.start + r.length)) for r in runs]
                for a in range(len(positions)):
                    for b in range(a + 1, len(positions)):
                        assert not positions[a] & positions[b]


def test_mirror_property():
    rng = random.Random(91)
    for _ in range(200):
        ell = rng.randint(2, 6)
        m = rng.randint(1, 3)
        values = [float(rng.randint(-5, 5)) for _ in range(m * ell)]
        db = from_rows([(v,) for v in values], ("x",), ell)
        mirrored = from_rows([(-v,) for v in values], ("x",), ell)
        up = compute_runs(db, GradualItem("x", Direction.UP))
        down = compute_runs(mirrored, GradualItem("x", Direction.DOWN))
        assert [(r.labels, r.start) for r in up] == [(r.labels, r.start) for r in down]
