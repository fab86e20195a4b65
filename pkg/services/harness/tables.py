"""
CSV semalari ve okuma/yazma (pandas)

Kritik deger, guc, rapor ve egri dosyalari ile calisma metadata JSON'u.
Ayni girdiler ayni dosya govdesini uretir: satir sirasi sabittir, float'lar
sabit formatla yazilir.
"""
import json
import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional

import numpy as np
import pandas as pd

from services.gof_statistics.registry import Direction
from services.mc_engine.engine import PowerRecord
from services.mc_engine.regions import RegionCache, RejectionRegion
from shared.utils.study_exceptions import DataParseError, StudyConfigError

logger = logging.getLogger(__name__)

CRITICAL_COLUMNS = ["test", "n", "alpha", "direction", "lower", "upper", "reps", "seed"]
POWER_COLUMNS = ["test", "submodel", "case_index", "param_value", "n", "alpha", "reps", "rejections", "errors"]
PUBLISHED_COLUMNS = ["test", "submodel", "n", "alpha", "avg_power"]
REPORT_COLUMNS = ["grouping", "n", "alpha", "test", "avg_power", "gap", "rank"]
CURVE_COLUMNS = ["test", "n", "alpha", "case_index", "avg_power"]


def _g17(value: Optional[float]) -> str:
    """17 anlamli basamak; bos deger icin bos string"""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    return f"{float(value):.17g}"


def _short(value: float) -> str:
    """En kisa geri-donuslu gosterim (0.05, 1.1)"""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    return repr(float(value))


def _write(df: pd.DataFrame, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n")
    logger.info(f"TABLES --- WRITE --- {path} ({len(df)} rows)")
    return path


def _read(path: Path, required: List[str]) -> pd.DataFrame:
    path = Path(path)
    if not path.is_file():
        raise StudyConfigError(f"File not found: {path}")
    try:
        df = pd.read_csv(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise DataParseError(str(path), 1, str(e)) from e
    missing = [c for c in required if c not in df.columns]
    if missing:
        raise DataParseError(str(path), 1, f"missing columns {missing}")
    return df


# ==================== KRITIK DEGERLER ====================

def write_critical_values(regions: Iterable[RejectionRegion], path: Path) -> Path:
    rows = [
        {
            "test": r.test, "n": r.n, "alpha": _short(r.alpha), "direction": r.direction.value,
            "lower": _g17(r.lower), "upper": _g17(r.upper), "reps": r.reps, "seed": r.seed,
        }
        for r in sorted(regions, key=lambda r: (r.n, r.alpha, r.test))
    ]
    return _write(pd.DataFrame(rows, columns=CRITICAL_COLUMNS), path)


def read_critical_values(path: Path) -> List[RejectionRegion]:
    df = _read(path, CRITICAL_COLUMNS)
    regions = []
    for row in df.itertuples(index=False):
        regions.append(RejectionRegion(
            test=row.test, direction=Direction(row.direction), n=int(row.n), alpha=float(row.alpha),
            reps=int(row.reps), seed=int(row.seed),
            lower=None if pd.isna(row.lower) else float(row.lower),
            upper=None if pd.isna(row.upper) else float(row.upper),
        ))
    return regions


def load_region_cache(path: Optional[Path]) -> RegionCache:
    """Dosya varsa onbellege yukler, yoksa bos onbellek"""
    cache = RegionCache()
    if path and Path(path).is_file():
        cache.update(read_critical_values(path))
        logger.info(f"TABLES --- CACHE --- {len(cache)} regions from {path}")
    return cache


# ==================== GUC TABLOSU ====================

def power_frame(records: Iterable[PowerRecord]) -> pd.DataFrame:
    rows = [
        {
            "test": r.test, "submodel": r.submodel_id, "case_index": r.case_index,
            "param_value": _short(r.param_value), "n": r.n, "alpha": _short(r.alpha),
            "reps": r.reps, "rejections": r.rejections, "errors": r.errors,
        }
        for r in records
    ]
    return pd.DataFrame(rows, columns=POWER_COLUMNS)


def write_power(records: Iterable[PowerRecord], path: Path) -> Path:
    return _write(power_frame(records), path)


def read_power_table(path: Path) -> pd.DataFrame:
    """
    Guc tablosunu ortak bicime cevirir

    Iki tur kabul edilir: simule edilmis sayilar (rejections, reps) veya
    yayinlanmis alt model ortalamalari (avg_power, yuzde).

    Returns:
        DataFrame: test, submodel, case_index (yayinlanmista NaN), n, alpha, power (yuzde)
    """
    path = Path(path)
    df = _read(path, ["test", "submodel", "n", "alpha"])
    if "rejections" in df.columns:
        df = _read(path, POWER_COLUMNS)
        out = df[["test", "submodel", "case_index", "n", "alpha"]].copy()
        out["power"] = 100.0 * df["rejections"] / df["reps"]
    elif "avg_power" in df.columns:
        out = df[["test", "submodel", "n", "alpha"]].copy()
        out.insert(2, "case_index", np.nan)
        out["power"] = df["avg_power"].astype(float)
    else:
        raise DataParseError(str(path), 1, "expected either rejections/reps or avg_power columns")
    out["n"] = out["n"].astype(int)
    out["alpha"] = out["alpha"].astype(float)
    logger.info(f"TABLES --- READ --- {path}: {len(out)} power cells")
    return out


# ==================== RAPOR VE EGRILER ====================

def write_report(df: pd.DataFrame, path: Path) -> Path:
    out = df[REPORT_COLUMNS].copy()
    out["alpha"] = out["alpha"].map(_short)
    return _write(out, path)


def write_curves(df: pd.DataFrame, path: Path) -> Path:
    out = df[CURVE_COLUMNS].copy()
    out["alpha"] = out["alpha"].map(_short)
    return _write(out, path)


def write_metadata(metadata: dict, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(metadata, indent=2, sort_keys=True, default=str) + "\n")
    logger.info(f"TABLES --- WRITE --- {path}")
    return path
