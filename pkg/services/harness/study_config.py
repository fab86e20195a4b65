"""
Calisma (study) konfigurasyonu
Duz `anahtar = deger` dosyasi + CLI override'lari, pydantic ile dogrulanir
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from services.alternatives.submodels import SAMPLE_SIZES, SUBMODEL_IDS
from services.gof_statistics.registry import TEST_NAMES
from shared.config import config
from shared.utils.study_exceptions import StudyConfigError

logger = logging.getLogger(__name__)

ALLOWED_ALPHAS = (0.01, 0.05, 0.10)

# Virgulle ayrilmis liste olarak okunan anahtarlar
_LIST_KEYS = ("ns", "alphas", "tests", "submodels")


class StudyConfig(BaseModel):
    """
    Bir guc calismasinin tum ayarlari

    Attributes:
        ns: Orneklem buyuklukleri, {20, 50, 100, 200} alt kumesi
        alphas: Anlamlilik duzeyleri, {0.01, 0.05, 0.10} alt kumesi
        calib_reps: Kalibrasyon replikasyonu (>= 1000)
        power_reps: Durum basina guc replikasyonu (>= 1000)
        seed: Master seed
        tests: Secili testler (varsayilan 40'i)
        submodels: Secili alt modeller (varsayilan 20'si)
        out_dir: Cikti klasoru
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    ns: List[int] = Field(default_factory=lambda: list(SAMPLE_SIZES), min_length=1)
    alphas: List[float] = Field(default_factory=lambda: list(ALLOWED_ALPHAS), min_length=1)
    calib_reps: int = Field(default_factory=lambda: config.calib_reps)
    power_reps: int = Field(default_factory=lambda: config.power_reps)
    seed: int = Field(ge=0)
    tests: List[str] = Field(default_factory=lambda: list(TEST_NAMES), min_length=1)
    submodels: List[str] = Field(default_factory=lambda: list(SUBMODEL_IDS), min_length=1)
    out_dir: str = Field(default_factory=lambda: config.out_dir)
    workers: int = Field(default_factory=lambda: config.workers, ge=1)
    chunk_size: int = Field(default_factory=lambda: config.chunk_size, ge=1)

    @field_validator("ns")
    @classmethod
    def _check_ns(cls, v: List[int]) -> List[int]:
        bad = [n for n in v if n not in SAMPLE_SIZES]
        if bad:
            raise ValueError(f"unsupported sample sizes {bad}; allowed {list(SAMPLE_SIZES)}")
        return sorted(set(v))

    @field_validator("alphas")
    @classmethod
    def _check_alphas(cls, v: List[float]) -> List[float]:
        bad = [a for a in v if a not in ALLOWED_ALPHAS]
        if bad:
            raise ValueError(f"unsupported alphas {bad}; allowed {list(ALLOWED_ALPHAS)}")
        return sorted(set(v))

    @field_validator("calib_reps", "power_reps")
    @classmethod
    def _check_reps(cls, v: int) -> int:
        if v < config.min_reps:
            raise ValueError(f"must be >= {config.min_reps}, got {v}")
        return v

    @field_validator("tests")
    @classmethod
    def _check_tests(cls, v: List[str]) -> List[str]:
        unknown = [t for t in v if t not in TEST_NAMES]
        if unknown:
            raise ValueError(f"unknown tests {unknown}")
        # Kayit sirasini koru
        return [t for t in TEST_NAMES if t in v]

    @field_validator("submodels")
    @classmethod
    def _check_submodels(cls, v: List[str]) -> List[str]:
        unknown = [s for s in v if s not in SUBMODEL_IDS]
        if unknown:
            raise ValueError(f"unknown submodels {unknown}")
        return [s for s in SUBMODEL_IDS if s in v]

    @property
    def out_path(self) -> Path:
        return Path(self.out_dir)


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return value


def load_study_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> StudyConfig:
    """
    Dosya ve override'lardan StudyConfig olusturur (override'lar kazanir)

    Args:
        path: `anahtar = deger` dosyasi (opsiyonel)
        overrides: CLI'dan gelen degerler; None olanlar yok sayilir

    Raises:
        StudyConfigError: Dosya yoksa veya dogrulama basarisizsa
    """
    values: Dict[str, Any] = {}
    if path:
        if not Path(path).is_file():
            raise StudyConfigError(f"Config file not found: {path}")
        values.update({k: v for k, v in dotenv_values(path).items() if v is not None})
        logger.info(f"STUDY CONFIG --- LOAD --- {path}: {sorted(values)}")

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    for key in _LIST_KEYS:
        if key in values:
            values[key] = _split(values[key])

    try:
        return StudyConfig(**values)
    except ValidationError as e:
        raise StudyConfigError(f"Invalid study config: {e}") from e
