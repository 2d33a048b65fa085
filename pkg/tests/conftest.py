import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seagrad.ingest import IngestConfig, TemporalSequenceDatabase, load_csv

# Customer-purchase example: 3 cycles of 8 periods over 4 attributes.
PURCHASES_HEADER = "age,freight_value,payment_installments,payment_value"
PURCHASES_ROWS = [
    # cycle 1
    (22, 8.72, 2, 18.12),
    (24, 22.76, 3, 141.46),
    (28, 19.22, 4, 179.12),
    (20, 17.20, 1, 72.20),
    (18, 8.72, 1, 28.62),
    (35, 27.36, 3, 175.26),
    (38, 16.05, 4, 65.95),
    (44, 15.17, 4, 75.16),
    # cycle 2
    (32, 16.05, 3, 35.95),
    (34, 19.77, 4, 161.42),
    (36, 30.53, 5, 159.06),
    (40, 16.13, 5, 114.13),
    (25, 14.23, 2, 50.13),
    (23, 12.805, 2, 32.70),
    (20, 13.11, 1, 54.36),
    (41, 14.05, 4, 46.45),
    # cycle 3
    (28, 77.45, 3, 1376.45),
    (33, 15.10, 4, 43.09),
    (38, 11.85, 6, 29.75),
    (35, 16.97, 5, 62.15),
    (38, 8.96, 4, 118.86),
    (44, 8.71, 5, 88.90),
    (52, 7.78, 6, 17.28),
    (41, 57.58, 4, 187.57),
]


# Expected run table for the purchases database under strict comparison with
# cross-boundary adjacency, verified against the window-enumeration oracle.
EXPECTED_GAMMA = {
    "age^+": "(d1,d2,d3),(d5,d6,d7,d8),(d1,d2,d3,d4),(d7,d8),(d1,d2,d3),(d4,d5,d6,d7)",
    "age^-": "(d3,d4,d5),(d8,d1),(d4,d5,d6,d7),(d8,d1),(d3,d4),(d7,d8)",
    "freight_value^+": "(d1,d2),(d5,d6),(d8,d1,d2,d3),(d6,d7,d8,d1),(d3,d4),(d7,d8)",
    "freight_value^-": "(d2,d3,d4,d5),(d6,d7,d8),(d3,d4,d5,d6),(d1,d2,d3),(d4,d5,d6,d7)",
    "payment_installments^+": "(d1,d2,d3),(d5,d6,d7),(d1,d2,d3),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
    "payment_installments^-": "(d3,d4),(d8,d1),(d4,d5),(d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
    "payment_value^+": "(d1,d2,d3),(d5,d6),(d7,d8),(d1,d2),(d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
    "payment_value^-": "(d3,d4,d5),(d6,d7),(d8,d1),(d2,d3,d4,d5,d6),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
}


def purchases_csv_text() -> str:
    lines = [PURCHASES_HEADER]
    lines += [",".join(str(v) for v in row) for row in PURCHASES_ROWS]
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def purchases_csv(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("data") / "purchases.csv"
    path.write_text(purchases_csv_text())
    return path


@pytest.fixture(scope="session")
def purchases_db(purchases_csv) -> TemporalSequenceDatabase:
    return load_csv(purchases_csv, IngestConfig(cycle_length=8))
