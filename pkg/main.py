"""
Laplace uyum iyiligi testleri - komut satiri
- calibrate: kritik deger CSV'si
- power: secili alt modeller icin guc tahmini
- study: tam guc calismasi (kritik degerler + guc + metadata)
- report: gruplama ortalamalari, gap ve rank
- curves: durum indeksine gore guc egrileri
- test: kullanici verisine tek test, Monte Carlo p-degeri ile

Cikis kodlari: 0 basarili, 2 konfigurasyon, 3 veri, 4 sayisal hata
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd

try:
    from shared.config import config
except ValueError as e:
    print(f"CONFIG ERROR: {e}", file=sys.stderr)
    sys.exit(2)

from services.alternatives.submodels import SUBMODEL_IDS, submodel_grid
from services.gof_statistics.registry import TEST_NAMES, get_test
from services.harness import tables
from services.harness.aggregate import Grouping, aggregate, power_curves, top_tests
from services.harness.data_test import Transform, run_data_test
from services.harness.study import CRITICAL_FILE, POWER_FILE, run_study
from services.harness.study_config import load_study_config
from services.mc_engine.engine import MonteCarloEngine
from shared.utils.logging_utils import setup_logging
from shared.utils.statistic_exceptions import StatisticError
from shared.utils.study_exceptions import StudyError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2


def _csv_list(value: str) -> List[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


# ============================================
# ALT KOMUTLAR
# ============================================

def cmd_calibrate(args) -> int:
    cfg = load_study_config(args.config, {
        "ns": args.ns, "alphas": args.alphas, "tests": args.tests,
        "calib_reps": args.reps, "seed": args.seed, "workers": args.workers,
        "chunk_size": args.chunk_size, "out_dir": args.out_dir,
    })
    out = Path(args.out) if args.out else cfg.out_path / CRITICAL_FILE
    engine = MonteCarloEngine(cfg.workers, cfg.chunk_size, cache=tables.load_region_cache(out))
    tests = [get_test(t) for t in cfg.tests]

    with engine:
        for n in cfg.ns:
            engine.calibrate_many(tests, n, cfg.alphas, cfg.calib_reps, cfg.seed)

    tables.write_critical_values(engine.cache.regions.values(), out)
    logger.info(f"CLI --- CALIBRATE --- {len(engine.cache)} regions, metrics={engine.get_metrics()}")
    return EXIT_OK


def cmd_power(args) -> int:
    cfg = load_study_config(args.config, {
        "ns": args.ns, "alphas": args.alphas, "tests": args.tests, "submodels": args.submodels,
        "calib_reps": args.calib_reps, "power_reps": args.reps, "seed": args.seed,
        "workers": args.workers, "chunk_size": args.chunk_size, "out_dir": args.out_dir,
    })
    critical = Path(args.critical) if args.critical else cfg.out_path / CRITICAL_FILE
    engine = MonteCarloEngine(cfg.workers, cfg.chunk_size, cache=tables.load_region_cache(critical))
    tests = [get_test(t) for t in cfg.tests]
    records = []

    with engine:
        for n in cfg.ns:
            regions = engine.calibrate_many(tests, n, cfg.alphas, cfg.calib_reps, cfg.seed)
            batch_tests = [t for _ in cfg.alphas for t in tests]
            batch_regions = [regions[(t.name, a)] for a in cfg.alphas for t in tests]
            for submodel_id in cfg.submodels:
                grid = submodel_grid(submodel_id, n)
                for j, (spec, value) in enumerate(zip(grid.cases, grid.param_values), start=1):
                    if args.case and j != args.case:
                        continue
                    records += engine.estimate_power_many(
                        batch_tests, batch_regions, spec, n, cfg.power_reps, cfg.seed,
                        submodel_id=submodel_id, case_index=j, param_value=value,
                    )

    tables.write_critical_values(engine.cache.regions.values(), critical)
    out = Path(args.out) if args.out else cfg.out_path / POWER_FILE
    tables.write_power(records, out)
    for r in records:
        print(f"{r.test:<9} {r.submodel_id:<11} case={r.case_index:>2} n={r.n:<3} alpha={r.alpha:<5g} "
              f"power={100 * r.power:6.2f}% errors={r.errors}")
    return EXIT_OK


def cmd_study(args) -> int:
    cfg = load_study_config(args.config, {
        "ns": args.ns, "alphas": args.alphas, "tests": args.tests, "submodels": args.submodels,
        "calib_reps": args.calib_reps, "power_reps": args.power_reps, "seed": args.seed,
        "workers": args.workers, "chunk_size": args.chunk_size, "out_dir": args.out_dir,
    })
    cache = tables.load_region_cache(cfg.out_path / CRITICAL_FILE)
    engine = MonteCarloEngine(cfg.workers, cfg.chunk_size, cache=cache)
    result = run_study(cfg, engine)
    print(f"critical values: {result.critical_path}")
    print(f"power table    : {result.power_path}")
    print(f"metadata       : {result.metadata_path}")
    return EXIT_OK


def cmd_report(args) -> int:
    power = tables.read_power_table(args.power)
    groupings = [Grouping(g) for g in args.grouping] if args.grouping else list(Grouping)

    summaries = [aggregate(power, g) for g in groupings]
    summaries = [s for s in summaries if not s.table.empty]
    if args.out:
        tables.write_report(pd.concat([s.table for s in summaries], ignore_index=True), args.out)

    for summary in summaries:
        best = top_tests(summary, k=args.top)
        for (alpha, ordering), block in best.groupby(["alpha", "ordering"], sort=False):
            label = "gap" if ordering in ("Max", "Average") else "power"
            ranked = ", ".join(f"{r.test} {r.value:.1f}" for r in block.itertuples())
            print(f"{summary.grouping.value:<15} alpha={alpha:g} {ordering:<8} ({label}): {ranked}")
    return EXIT_OK


def cmd_curves(args) -> int:
    power = tables.read_power_table(args.power)
    curves = power_curves(power)
    if args.out:
        tables.write_curves(curves, args.out)
    else:
        print(curves.to_csv(index=False), end="")
    return EXIT_OK


def cmd_test(args) -> int:
    report = run_data_test(
        path=args.data, column=args.column, test=args.test, alpha=args.alpha,
        pvalue_reps=args.reps, seed=args.seed, transform=Transform(args.transform),
        delimiter=args.delimiter, skip_header=args.skip_header,
        engine=MonteCarloEngine(args.workers, args.chunk_size),
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


# ============================================
# ARGPARSE
# ============================================

def _add_common(p: argparse.ArgumentParser, seed_required: bool = False):
    p.add_argument("--config", help="flat key = value study config file")
    # study icin zorunlu; digerlerinde config dosyasindan da gelebilir
    p.add_argument("--seed", type=int, required=seed_required, default=None, help="master seed")
    p.add_argument("--ns", type=_csv_list, help="sample sizes, comma separated")
    p.add_argument("--alphas", type=_csv_list, help="significance levels, comma separated")
    p.add_argument("--tests", type=_csv_list, help=f"subset of: {','.join(TEST_NAMES)}")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--out-dir", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laplace-gof", description="Goodness-of-fit tests for the Laplace distribution")
    parser.add_argument("--log-level", default=config.log_level)
    parser.add_argument("--log-format", choices=["text", "json"], default=config.log_format)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", help="Monte Carlo critical values")
    _add_common(p)
    p.add_argument("--reps", type=int, default=None, help="null replicates")
    p.add_argument("--out", help="critical-value CSV (reused as cache)")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("power", help="power for selected submodels")
    _add_common(p)
    p.add_argument("--submodels", type=_csv_list, help=f"subset of: {','.join(SUBMODEL_IDS)}")
    p.add_argument("--case", type=int, choices=range(1, 21), metavar="1..20")
    p.add_argument("--calib-reps", type=int, default=None)
    p.add_argument("--reps", type=int, default=None, help="power replicates per case")
    p.add_argument("--critical", help="critical-value CSV cache")
    p.add_argument("--out", help="power CSV")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("study", help="full power study")
    _add_common(p, seed_required=True)
    p.add_argument("--submodels", type=_csv_list)
    p.add_argument("--calib-reps", type=int, default=None)
    p.add_argument("--power-reps", type=int, default=None)
    p.set_defaults(func=cmd_study)

    p = sub.add_parser("report", help="group averages, gaps and ranks")
    p.add_argument("--power", required=True, help="simulated or published power CSV")
    p.add_argument("--grouping", action="append", choices=[g.value for g in Grouping])
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--out", help="report CSV")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("curves", help="power curves by case index")
    p.add_argument("--power", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("test", help="test a data column for Laplaceness")
    p.add_argument("data")
    p.add_argument("--column", type=int, default=1, help="1-based column")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--skip-header", action="store_true")
    p.add_argument("--transform", choices=[t.value for t in Transform], default=Transform.None_.value)
    p.add_argument("--test", default="DLO_X", choices=TEST_NAMES)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=config.pvalue_reps, help="null replicates for the p-value")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_test)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level, args.log_format, config.log_file)

    try:
        return args.func(args)
    except (StudyError, StatisticError) as e:
        logger.error(f"CLI --- {args.command.upper()} ERROR --- {type(e).__name__}: {e}", exc_info=True)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except (KeyError, ValueError) as e:
        logger.error(f"CLI --- {args.command.upper()} ERROR --- {e}", exc_info=True)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
