"""Command-line front door: transform, mine, mine-baseline, mine-periodic, bench, synth.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .baseline import mine_temporal
from .bench import emit_plot_data, run_sweep
from .gradual import build_gamma, sequences_from_json
from .ingest import (DataError, IngestConfig, PlantSpec, SyntheticSpec,
                     generate_synthetic, load_csv, save_csv)
from .model import parse_gradual_item, parse_label
from .periodic import mine
from .seasonal import count_report, mine_seasonal


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_config_file(path: str) -> dict:
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"bad config line {line!r} (expected key=value)")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _ingest_config(args) -> IngestConfig:
    cycle_length = args.cycle_length
    label_column = args.label_column
    attributes = args.attributes
    drop_missing = args.drop_missing
    if args.config:
        cfg = _read_config_file(args.config)
        if cycle_length is None and "cycle_length" in cfg:
            cycle_length = int(cfg["cycle_length"])
        if label_column is None and "label_column" in cfg:
            label_column = cfg["label_column"]
        if attributes is None and "attributes" in cfg:
            attributes = cfg["attributes"]
        if "drop_missing" in cfg and args.drop_missing:
            drop_missing = cfg["drop_missing"].lower() not in ("false", "0", "no")
    attrs = tuple(a.strip() for a in attributes.split(",")) if attributes else None
    try:
        return IngestConfig(cycle_length=cycle_length, label_column=label_column,
                            attributes=attrs, drop_missing=drop_missing)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load(args):
    if not args.input:
        raise UsageError("--input is required")
    return load_csv(args.input, _ingest_config(args))


def _add_ingest_flags(parser):
    parser.add_argument("--input", help="input CSV path")
    parser.add_argument("--cycle-length", type=int, dest="cycle_length")
    parser.add_argument("--label-column", dest="label_column")
    parser.add_argument("--attributes", help="comma-separated attribute columns")
    parser.add_argument("--drop-missing", action=argparse.BooleanOptionalAction,
                        default=True, dest="drop_missing")
    parser.add_argument("--config", help="key=value config file (flags win)")


def _add_transform_flags(parser):
    parser.add_argument("--cross-boundary", choices=("on", "off"), default="on")
    parser.add_argument("--non-strict", action="store_true",
                        help="relax comparisons to >=/<= (exploration only)")


def _add_mine_flags(parser):
    parser.add_argument("--theta", type=float)
    parser.add_argument("--min-sup-abs", type=int, dest="min_sup_abs")
    parser.add_argument("--contiguous-only", action="store_true")
    parser.add_argument("--all-seasons", action="store_true")
    parser.add_argument("--min-items", type=int, default=1)
    parser.add_argument("--prune-subsumed", action="store_true")


def _pattern_json(pattern) -> dict:
    return {
        "items": [{"attribute": g.attribute, "direction": g.direction.value}
                  for g in pattern.sorted_items()],
        "season": [l.display for l in pattern.sorted_season()],
        "support": pattern.support,
        "per_item_support": {g.display: pattern.per_item_support[g]
                             for g in pattern.sorted_items()},
    }


def _require_output(args, *allowed):
    if args.output not in allowed:
        raise UsageError(f"--output {args.output} not supported here "
                         f"(choose from {', '.join(allowed)})")


def _cmd_transform(args) -> int:
    _require_output(args, "json", "table")
    db = _load(args)
    gamma = build_gamma(db, cross_boundary=args.cross_boundary == "on",
                        strict=not args.non_strict)
    if args.output == "json":
        print(gamma.to_json())
    else:
        print(gamma.display)
    return 0


def _cmd_mine(args) -> int:
    _require_output(args, "json", "table")
    db = _load(args)
    if args.theta is None and args.min_sup_abs is None:
        raise UsageError("--theta or --min-sup-abs is required")
    t0 = time.perf_counter()
    try:
        results = mine_seasonal(
            db, args.theta, min_sup_abs=args.min_sup_abs,
            cross_boundary=args.cross_boundary == "on", strict=not args.non_strict,
            contiguous_only=args.contiguous_only, all_seasons=args.all_seasons,
            min_items=args.min_items, prune_subsumed=args.prune_subsumed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    runtime_ms = (time.perf_counter() - t0) * 1000.0
    n_patterns, n_seasonality = count_report(results)
    if args.output == "table":
        print(f"{'items':<40} {'season':<24} {'support':>8}")
        for p in results:
            items = " ".join(g.display for g in p.sorted_items())
            season = "{" + ",".join(l.display for l in p.sorted_season()) + "}"
            print(f"{items:<40} {season:<24} {p.support:>8.3f}")
        print(f"{n_patterns} patterns, {n_seasonality} seasonality, "
              f"{runtime_ms:.1f} ms")
    else:
        for p in results:
            print(json.dumps(_pattern_json(p)))
        print(json.dumps({"n_patterns": n_patterns, "n_seasonality": n_seasonality,
                          "runtime_ms": runtime_ms}))
    return 0


def _cmd_mine_baseline(args) -> int:
    _require_output(args, "json", "table")
    db = _load(args)
    if args.theta is None:
        raise UsageError("--theta is required")
    t0 = time.perf_counter()
    try:
        results = mine_temporal(db, args.theta,
                                strict=not args.non_strict,
                                cross_boundary=args.cross_boundary == "on")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    runtime_ms = (time.perf_counter() - t0) * 1000.0
    if args.output == "table":
        for p in results:
            print(f"{' '.join(g.display for g in p.sorted_items()):<40} {p.support:>8.3f}")
        print(f"{len(results)} patterns, {runtime_ms:.1f} ms")
    else:
        for p in results:
            print(json.dumps({
                "items": [{"attribute": g.attribute, "direction": g.direction.value}
                          for g in p.sorted_items()],
                "support": p.support,
            }))
        print(json.dumps({"n_patterns": len(results), "runtime_ms": runtime_ms}))
    return 0


def _cmd_mine_periodic(args) -> int:
    if not args.gamma:
        raise UsageError("--gamma is required")
    try:
        sequences = sequences_from_json(Path(args.gamma).read_text())
    except OSError as exc:
        raise DataError(f"cannot read {args.gamma}: {exc}") from exc
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        raise DataError(f"malformed run database dump: {exc}") from exc
    if not sequences:
        raise DataError("run database dump holds no sequences")
    min_ra = args.min_ra if args.min_ra is not None else 1.0 / len(sequences)
    try:
        patterns = mine(sequences, args.min_sup, min_ra)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = [{
        "itemset": [l.display for l in p.sorted_labels()],
        "ratio": p.ratio,
        "cover": sorted(sid.display for sid in p.cover),
        "supports": {sid.display: cnt for sid, cnt in sorted(
            p.supports.items(), key=lambda kv: kv[0].display)},
    } for p in patterns]
    print(json.dumps(out, indent=2))
    return 0


def _cmd_bench(args) -> int:
    db = _load(args)
    try:
        thetas = [float(t) for t in args.thetas.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --thetas: {exc}") from exc
    algorithms = tuple(a.strip() for a in args.algorithms.split(","))
    try:
        records = run_sweep(db, thetas, algorithms, repeats=args.repeats)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        emit_plot_data(records, args.out)
        print(f"wrote {args.out}")
    else:
        print(",".join(("theta", "algorithm", "n_patterns", "n_seasonality",
                        "runtime_ms")))
        for r in sorted(records, key=lambda r: (r.algorithm, r.theta)):
            n_sea = "" if r.n_seasonality is None else r.n_seasonality
            n_pat = "" if r.n_patterns is None else r.n_patterns
            rt = "" if r.runtime_ms is None else repr(r.runtime_ms)
            print(f"{r.theta!r},{r.algorithm},{n_pat},{n_sea},{rt}")
    return 0


def _parse_plant(text: str) -> PlantSpec:
    # items@window@probability, e.g.  a1^+,a2^-@d1-d3@0.7
    parts = text.split("@")
    if len(parts) != 3:
        raise UsageError(f"bad --plant {text!r} (expected items@dI-dJ@prob)")
    try:
        items = tuple((g.attribute, g.direction)
                      for g in (parse_gradual_item(p) for p in parts[0].split(",")))
        lo, _, hi = parts[1].partition("-")
        window = (parse_label(lo).index, parse_label(hi).index)
        probability = float(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad --plant {text!r}: {exc}") from exc
    return PlantSpec(items, window, probability)


def _cmd_synth(args) -> int:
    if args.cycle_length is None:
        raise UsageError("--cycle-length is required")
    plants = tuple(_parse_plant(p) for p in args.plant or ())
    spec = SyntheticSpec(m=args.cycles, cycle_length=args.cycle_length,
                         n_attributes=args.num_attributes, plants=plants)
    try:
        db = generate_synthetic(spec, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    save_csv(db, args.out)
    print(f"wrote {args.out} ({db.m} cycles x {db.cycle_length} periods "
          f"x {db.n_attributes} attributes)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seagrad",
                     description="Seasonal gradual pattern mining over cyclic numeric data")
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("json", "table", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="emit the per-gradual-item run database")
    _add_ingest_flags(p)
    _add_transform_flags(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("mine", parents=[common], help="mine seasonal gradual patterns")
    _add_ingest_flags(p)
    _add_transform_flags(p)
    _add_mine_flags(p)
    p.set_defaults(func=_cmd_mine)

    p = sub.add_parser("mine-baseline", parents=[common],
                       help="mine temporal gradual patterns")
    _add_ingest_flags(p)
    _add_transform_flags(p)
    p.add_argument("--theta", type=float)
    p.set_defaults(func=_cmd_mine_baseline)

    p = sub.add_parser("mine-periodic", parents=[common],
                       help="mine a run-database JSON dump directly")
    p.add_argument("--gamma", help="JSON dump produced by 'transform --output json'")
    p.add_argument("--min-sup", type=int, default=1, dest="min_sup")
    p.add_argument("--min-ra", type=float, default=None, dest="min_ra",
                   help="ratio threshold (default: 1/number-of-sequences)")
    p.set_defaults(func=_cmd_mine_periodic)

    p = sub.add_parser("bench", parents=[common],
                       help="sweep thresholds and record counts and runtimes")
    _add_ingest_flags(p)
    p.add_argument("--thetas", required=True, help="comma-separated ascending thresholds")
    p.add_argument("--algorithms", default="msgp,temporal")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--out", help="CSV output path (stdout if omitted)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("synth", parents=[common],
                       help="generate a synthetic database CSV")
    p.add_argument("--cycles", type=int, required=True)
    p.add_argument("--cycle-length", type=int, dest="cycle_length")
    p.add_argument("--num-attributes", type=int, required=True)
    p.add_argument("--plant", action="append",
                   help="planted co-variation, e.g. 'a1^+,a2^-@d1-d3@0.7' (repeatable)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_synth)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
