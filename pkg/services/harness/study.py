"""
Guc calismasi: her (n, alpha) icin kalibrasyon, sonra her alt model ve
durum icin guc tahmini. Kritik deger, guc CSV'si ve metadata JSON yazar.
"""
import logging
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from services.alternatives.submodels import SUBMODEL_IDS, submodel_grid
from services.gof_statistics.registry import TEST_NAMES, get_test
from services.harness import tables
from services.harness.study_config import StudyConfig
from services.mc_engine.engine import MonteCarloEngine, PowerRecord
from services.mc_engine.regions import RejectionRegion
from shared.rng import GENERATOR_NAME
from shared.utils.study_exceptions import StudyError

logger = logging.getLogger(__name__)

CRITICAL_FILE = "critical_values.csv"
POWER_FILE = "power.csv"
METADATA_FILE = "run_metadata.json"


@dataclass
class StudyResult:
    """run_study ciktisi: kayitlar ve yazilan dosyalar"""
    regions: List[RejectionRegion]
    records: List[PowerRecord]
    critical_path: Path
    power_path: Path
    metadata_path: Path


def calibrate_study(engine: MonteCarloEngine, cfg: StudyConfig) -> Dict[tuple, RejectionRegion]:
    """
    Her n icin tek null gecisiyle tum testlerin tum alpha bolgeleri

    Returns:
        Dict: (test, n, alpha) -> RejectionRegion
    """
    tests = [get_test(name) for name in cfg.tests]
    regions: Dict[tuple, RejectionRegion] = {}
    for n in cfg.ns:
        found = engine.calibrate_many(tests, n, cfg.alphas, cfg.calib_reps, cfg.seed)
        for (name, alpha), region in found.items():
            regions[(name, n, alpha)] = region
    return regions


def run_study(cfg: StudyConfig, engine: Optional[MonteCarloEngine] = None) -> StudyResult:
    """
    Calismayi calistirir ve sonuclari cfg.out_dir'e yazar

    Raises:
        CalibrationFailed: Bir null replikasyonunda hata olursa
        StudyError: Alt model/durum hatasi (hangi hucre oldugu mesajda)
    """
    started = datetime.now()
    engine = engine or MonteCarloEngine(workers=cfg.workers, chunk_size=cfg.chunk_size)
    out = cfg.out_path
    tests = [get_test(name) for name in cfg.tests]

    logger.info(
        f"STUDY --- START --- ns={cfg.ns} alphas={cfg.alphas} tests={len(tests)} "
        f"submodels={len(cfg.submodels)} calib_reps={cfg.calib_reps} power_reps={cfg.power_reps} seed={cfg.seed}"
    )

    with engine:
        regions = calibrate_study(engine, cfg)
        records: List[PowerRecord] = []

        for n in cfg.ns:
            batch_tests = [t for _ in cfg.alphas for t in tests]
            batch_regions = [regions[(t.name, n, a)] for a in cfg.alphas for t in tests]
            for submodel_id in cfg.submodels:
                grid = submodel_grid(submodel_id, n)
                for j, (spec, value) in enumerate(zip(grid.cases, grid.param_values), start=1):
                    try:
                        records += engine.estimate_power_many(
                            batch_tests, batch_regions, spec, n, cfg.power_reps, cfg.seed,
                            submodel_id=submodel_id, case_index=j, param_value=value,
                        )
                    except StudyError as e:
                        logger.error(f"STUDY --- POWER ERROR --- {submodel_id} case={j} n={n}: {e}", exc_info=True)
                        raise StudyError(f"{submodel_id} case {j} (n={n}): {e}") from e
                logger.info(f"STUDY --- POWER --- n={n} {submodel_id} done ({grid.group.value})")

    test_order = {name: i for i, name in enumerate(TEST_NAMES)}
    submodel_order = {s: i for i, s in enumerate(SUBMODEL_IDS)}
    records.sort(key=lambda r: (r.n, r.alpha, submodel_order[r.submodel_id], r.case_index, test_order[r.test]))
    region_list = list(regions.values())

    critical_path = tables.write_critical_values(region_list, out / CRITICAL_FILE)
    power_path = tables.write_power(records, out / POWER_FILE)
    metadata = {
        "seed": cfg.seed,
        "generator": GENERATOR_NAME,
        "numpy_version": np.__version__,
        "chunk_size": engine.chunk_size,
        "workers": engine.workers,
        "calib_reps": cfg.calib_reps,
        "power_reps": cfg.power_reps,
        "ns": cfg.ns,
        "alphas": cfg.alphas,
        "tests": cfg.tests,
        "submodels": cfg.submodels,
        "started_at": started.isoformat(),
        "finished_at": datetime.now().isoformat(),
        "metrics": engine.get_metrics(),
    }
    metadata_path = tables.write_metadata(metadata, out / METADATA_FILE)

    logger.info(f"STUDY --- DONE --- {len(records)} power records, {len(region_list)} regions -> {out}")
    return StudyResult(
        regions=region_list, records=records,
        critical_path=critical_path, power_path=power_path, metadata_path=metadata_path,
    )
