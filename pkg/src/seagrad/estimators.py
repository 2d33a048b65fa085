"""Scikit-learn style wrappers so the miners compose with sklearn pipelines.

X may be a TemporalSequenceDatabase, or a 2D array-like of shape
(n_observations, n_attributes) in timeline order together with cycle_length.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils import check_array

from .baseline import mine_temporal
from .gradual import build_gamma
from .ingest import TemporalSequenceDatabase, from_rows
from .seasonal import count_report, mine_seasonal


def _as_database(X, cycle_length, attributes) -> TemporalSequenceDatabase:
    if isinstance(X, TemporalSequenceDatabase):
        return X
    if cycle_length is None:
        raise ValueError("cycle_length is required for array input")
    X = check_array(X, dtype="float64")
    names = tuple(attributes) if attributes is not None else tuple(
        f"a{i + 1}" for i in range(X.shape[1]))
    if len(names) != X.shape[1]:
        raise ValueError("attributes length does not match number of columns")
    rows = [tuple(float(v) for v in row) for row in X]
    return from_rows(rows, names, cycle_length)


class GradualRunTransformer(TransformerMixin, BaseEstimator):
    """Stateless transformer from cyclic numeric data to the per-gradual-item
    run-sequence database."""

    def __init__(self, cycle_length=None, attributes=None, cross_boundary=True,
                 strict=True):
        self.cycle_length = cycle_length
        self.attributes = attributes
        self.cross_boundary = cross_boundary
        self.strict = strict

    def fit(self, X, y=None):
        db = _as_database(X, self.cycle_length, self.attributes)
        self.n_features_in_ = db.n_attributes
        return self

    def transform(self, X):
        db = _as_database(X, self.cycle_length, self.attributes)
        return build_gamma(db, cross_boundary=self.cross_boundary, strict=self.strict)


class SeasonalGradualPatternMiner(BaseEstimator):
    """Fits by mining; discovered patterns land in patterns_."""

    def __init__(self, theta=0.5, min_sup_abs=None, cycle_length=None,
                 attributes=None, cross_boundary=True, strict=True,
                 contiguous_only=False, all_seasons=False, min_items=1,
                 prune_subsumed=False):
        self.theta = theta
        self.min_sup_abs = min_sup_abs
        self.cycle_length = cycle_length
        self.attributes = attributes
        self.cross_boundary = cross_boundary
        self.strict = strict
        self.contiguous_only = contiguous_only
        self.all_seasons = all_seasons
        self.min_items = min_items
        self.prune_subsumed = prune_subsumed

    def fit(self, X, y=None):
        db = _as_database(X, self.cycle_length, self.attributes)
        self.n_features_in_ = db.n_attributes
        self.patterns_ = mine_seasonal(
            db, self.theta, min_sup_abs=self.min_sup_abs,
            cross_boundary=self.cross_boundary, strict=self.strict,
            contiguous_only=self.contiguous_only, all_seasons=self.all_seasons,
            min_items=self.min_items, prune_subsumed=self.prune_subsumed)
        self.n_patterns_, self.n_seasonality_ = count_report(self.patterns_)
        return self

    def discover(self, X):
        return self.fit(X).patterns_


class TemporalGradualMiner(BaseEstimator):
    """Reference miner over the whole timeline, without seasonality."""

    def __init__(self, theta=0.5, cycle_length=None, attributes=None,
                 strict=True, cross_boundary=True):
        self.theta = theta
        self.cycle_length = cycle_length
        self.attributes = attributes
        self.strict = strict
        self.cross_boundary = cross_boundary

    def fit(self, X, y=None):
        db = _as_database(X, self.cycle_length, self.attributes)
        self.n_features_in_ = db.n_attributes
        self.patterns_ = mine_temporal(db, self.theta, strict=self.strict,
                                       cross_boundary=self.cross_boundary)
        self.n_patterns_ = len(self.patterns_)
        return self

    def discover(self, X):
        return self.fit(X).patterns_
