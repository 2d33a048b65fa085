"""Seasonal gradual pattern mining over cyclic numeric sequence data."""

from .baseline import TemporalGradualPattern, mine_temporal
from .bench import BenchRecord, emit_plot_data, load_plot_data, run_sweep
from .estimators import (GradualRunTransformer, SeasonalGradualPatternMiner,
                         TemporalGradualMiner)
from .gradual import GammaDatabase, Run, build_gamma, compute_runs, respects
from .ingest import (DataError, IngestConfig, PlantSpec, SyntheticSpec,
                     TemporalSequenceDatabase, generate_synthetic, load_csv,
                     load_saved, save_csv)
from .model import Direction, GradualItem, PeriodLabel, parse_gradual_item, parse_label
from .periodic import (PeriodicPattern, TransactionSequence, is_cyclic_interval,
                       max_periodicity, mine, periods, ratio_classic,
                       ratio_modified, stddev_periods, support_in_sequence)
from .seasonal import (SeasonalGradualPattern, count_report, mine_seasonal,
                       min_sup_from_theta, seasonal_support)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord", "DataError", "Direction", "GammaDatabase", "GradualItem",
    "GradualRunTransformer", "IngestConfig", "PeriodLabel", "PeriodicPattern",
    "PlantSpec", "Run", "SeasonalGradualPattern", "SeasonalGradualPatternMiner",
    "SyntheticSpec", "TemporalGradualMiner", "TemporalGradualPattern",
    "TemporalSequenceDatabase", "TransactionSequence", "build_gamma",
    "compute_runs", "count_report", "emit_plot_data", "generate_synthetic",
    "is_cyclic_interval", "load_csv", "load_plot_data", "load_saved",
    "max_periodicity", "mine", "mine_seasonal", "mine_temporal",
    "min_sup_from_theta", "parse_gradual_item", "parse_label", "periods",
    "ratio_classic", "ratio_modified", "respects", "run_sweep", "save_csv",
    "seasonal_support", "stddev_periods", "support_in_sequence",
]
