"""
Monte Carlo motoru
Null ornekleme, kritik deger kalibrasyonu, guc tahmini ve p-degeri

Replikasyonlar sabit boyutlu chunk'lara bolunur. Her chunk kendi Philox
akisini (seed, etiket, chunk) anahtarindan turetir; sonuclar chunk sirasiyla
birlestirildigi icin worker sayisi ciktiyi degistirmez.
"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from services.alternatives.samplers import AlternativeSpec, sample_alternative
from services.gof_statistics.laplace import Sample, laplace_quantile
from services.gof_statistics.registry import LaplaceTest, evaluate_tests_batch
from services.mc_engine.regions import (
    RegionCache,
    RejectionRegion,
    region_from_null,
    reject_mask,
    tail_pvalue,
)
from shared.config import config
from shared.rng import chunk_sizes, make_stream
from shared.utils.statistic_exceptions import CalibrationFailed
from shared.utils.study_exceptions import StudyConfigError

logger = logging.getLogger(__name__)

_TINY = np.finfo(float).tiny


def null_tag(n: int) -> str:
    """Null orneklerinin etiketi; tum testler ve alpha'lar ayni ornekleri paylasir"""
    return f"null:n={n}"


def power_tag(spec: AlternativeSpec, n: int) -> str:
    """Alternatif orneklerinin etiketi; testler arasi paylasilir"""
    return f"power:{spec.label}:n={n}"


def sample_laplace(n: int, rng: np.random.Generator) -> Sample:
    """Ters cdf ile n adet Laplace(0, 1) gozlemi"""
    u = np.maximum(rng.random(n), _TINY)
    return Sample.from_values(laplace_quantile(u))


@dataclass(frozen=True)
class PowerRecord:
    """Bir (test, alternatif, n, alpha) hucresinin red sayilari"""
    test: str
    submodel_id: str
    case_index: int
    param_value: float
    n: int
    alpha: float
    reps: int
    rejections: int
    errors: int

    @property
    def power(self) -> float:
        return self.rejections / self.reps


# ==================== WORKER FONKSIYONLARI ====================
# Process havuzunda calisir, bu yuzden modul seviyesinde tanimli

def _null_chunk(task: Tuple) -> Tuple[np.ndarray, Optional[Tuple[str, str]], int]:
    seed, tag, chunk_index, size, n, tests = task
    rng = make_stream(seed, tag, chunk_index)
    samples = [sample_laplace(n, rng) for _ in range(size)]
    values, errors = evaluate_tests_batch(tests, samples)
    failure = None
    if errors:
        # Replikasyon sirasinda ilk hata
        r, j = min(errors)
        err = errors[(r, j)]
        failure = (tests[j].name, f"{type(err).__name__}: {err}")
    return values, failure, len(errors)


def _power_chunk(task: Tuple) -> Tuple[np.ndarray, np.ndarray]:
    seed, tag, chunk_index, size, n, spec, tests, regions = task
    rng = make_stream(seed, tag, chunk_index)
    # Ayni test farkli alpha bolgeleriyle gelebilir, bir kez hesaplanir
    unique = list(dict.fromkeys(tests))
    column = [unique.index(t) for t in tests]
    samples = [sample_alternative(spec, n, rng) for _ in range(size)]
    values, row_errors = evaluate_tests_batch(unique, samples)
    failed = np.zeros(values.shape, dtype=bool)
    for r, j in row_errors:
        failed[r, j] = True
    rejections = np.array([
        int(np.sum(reject_mask(region, values[:, c]) & ~failed[:, c]))
        for c, region in zip(column, regions)
    ])
    errors = np.array([int(failed[:, c].sum()) for c in column])
    return rejections, errors


# ==================== MOTOR ====================

class MonteCarloEngine:
    """
    Replikasyon ciftligi

    Ozellikler:
    - Sabit chunk boyutu ve anahtarli akislar (worker sayisindan bagimsiz sonuc)
    - Ortak null ornekleri: bir gecis tum testler ve tum alpha'lar icin yeter
    - Kritik deger onbellegi (RegionCache)
    - self.metrics sayaclari
    """

    def __init__(self, workers: Optional[int] = None, chunk_size: Optional[int] = None,
                 cache: Optional[RegionCache] = None):
        self.workers = workers or config.workers
        self.chunk_size = chunk_size or config.chunk_size
        self.cache = cache if cache is not None else RegionCache()
        self._pool: Optional[ProcessPoolExecutor] = None
        self._null_memo: Dict[Tuple, np.ndarray] = {}

        self.metrics = {
            "samples_drawn": 0,
            "statistics_evaluated": 0,
            "statistic_errors": 0,
            "chunks_run": 0,
            "cache_hits": 0,
            "elapsed_seconds": 0.0,
        }
        logger.info(f"ENGINE --- INIT --- workers={self.workers} chunk_size={self.chunk_size}")

    # ==================== HAVUZ ====================

    def __enter__(self):
        if self.workers > 1 and self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def _map(self, func, tasks: List[Tuple]) -> list:
        """Gorevleri chunk sirasini koruyarak calistirir"""
        started = time.perf_counter()
        if self.workers <= 1:
            results = [func(task) for task in tasks]
        elif self._pool is not None:
            results = list(self._pool.map(func, tasks))
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(func, tasks))
        self.metrics["chunks_run"] += len(tasks)
        self.metrics["elapsed_seconds"] += time.perf_counter() - started
        return results

    @staticmethod
    def _check_reps(reps: int):
        if reps < config.min_reps:
            raise StudyConfigError(f"reps must be >= {config.min_reps}, got {reps}")

    # ==================== NULL VE KALIBRASYON ====================

    def null_statistics(self, tests: Sequence[LaplaceTest], n: int, reps: int, seed: int) -> np.ndarray:
        """
        reps x len(tests) null istatistik matrisi

        Raises:
            CalibrationFailed: Bir null replikasyonunda istatistik hesaplanamazsa
        """
        self._check_reps(reps)
        memo_key = (n, reps, seed, self.chunk_size, tuple(t.name for t in tests))
        if memo_key in self._null_memo:
            return self._null_memo[memo_key]

        tag = null_tag(n)
        tasks = [
            (seed, tag, i, size, n, list(tests))
            for i, size in enumerate(chunk_sizes(reps, self.chunk_size))
        ]
        logger.info(f"ENGINE --- NULL --- n={n} reps={reps} tests={len(tests)} chunks={len(tasks)}")
        results = self._map(_null_chunk, tasks)

        self.metrics["samples_drawn"] += reps
        self.metrics["statistics_evaluated"] += reps * len(tests)
        for chunk_index, (_, failure, errors) in enumerate(results):
            self.metrics["statistic_errors"] += errors
            if failure is not None:
                test_name, detail = failure
                logger.error(f"ENGINE --- NULL ERROR --- {test_name} n={n} chunk={chunk_index}: {detail}")
                raise CalibrationFailed(test_name, n, chunk_index, detail)

        values = np.vstack([v for v, _, _ in results])
        # Bellekte sadece son n icin matris tutulur
        self._null_memo = {memo_key: values}
        return values

    def calibrate_many(self, tests: Sequence[LaplaceTest], n: int, alphas: Sequence[float],
                       reps: int, seed: int) -> Dict[Tuple[str, float], RejectionRegion]:
        """
        Tum testler ve alpha'lar icin tek null gecisiyle red bolgeleri

        Returns:
            Dict: (test adi, alpha) -> RejectionRegion
        """
        regions: Dict[Tuple[str, float], RejectionRegion] = {}
        missing = []
        for test in tests:
            cached = [self.cache.get(test.name, n, a, reps, seed) for a in alphas]
            if all(c is not None for c in cached):
                for a, region in zip(alphas, cached):
                    regions[(test.name, a)] = region
                self.metrics["cache_hits"] += len(alphas)
            else:
                missing.append(test)

        if missing:
            logger.info(
                f"ENGINE --- CALIBRATE --- n={n} reps={reps} tests={len(missing)} "
                f"alphas={list(alphas)}"
            )
            null = self.null_statistics(missing, n, reps, seed)
            for j, test in enumerate(missing):
                ordered = np.sort(null[:, j])
                for a in alphas:
                    region = region_from_null(test.name, test.direction, ordered, n, a, seed)
                    regions[(test.name, a)] = region
                    self.cache.put(region)
        return regions

    def calibrate(self, test: LaplaceTest, n: int, alpha: float, reps: int, seed: int) -> RejectionRegion:
        """Tek test icin kritik deger(ler)"""
        return self.calibrate_many([test], n, [alpha], reps, seed)[(test.name, alpha)]

    # ==================== GUC ====================

    def estimate_power_many(self, tests: Sequence[LaplaceTest], regions: Sequence[RejectionRegion],
                            spec: AlternativeSpec, n: int, reps: int, seed: int,
                            submodel_id: str = "", case_index: int = 0,
                            param_value: float = math.nan) -> List[PowerRecord]:
        """
        Ayni alternatif orneklerinde tum testlerin red oranlari

        Hata veren replikasyonlar errors sutununda sayilir, reddedilmis sayilmaz.
        """
        self._check_reps(reps)
        if len(tests) != len(regions):
            raise ValueError("tests and regions must have the same length")
        for test, region in zip(tests, regions):
            if region.test != test.name or region.n != n:
                raise ValueError(f"Region for {region.test} n={region.n} does not match {test.name} n={n}")

        tag = power_tag(spec, n)
        tasks = [
            (seed, tag, i, size, n, spec, list(tests), list(regions))
            for i, size in enumerate(chunk_sizes(reps, self.chunk_size))
        ]
        logger.debug(f"ENGINE --- POWER --- {spec.label} n={n} reps={reps} tests={len(tests)}")
        results = self._map(_power_chunk, tasks)

        rejections = np.sum([r for r, _ in results], axis=0)
        errors = np.sum([e for _, e in results], axis=0)
        self.metrics["samples_drawn"] += reps
        self.metrics["statistics_evaluated"] += reps * len(set(tests))
        self.metrics["statistic_errors"] += int(errors.sum())

        return [
            PowerRecord(
                test=test.name, submodel_id=submodel_id, case_index=case_index,
                param_value=param_value, n=n, alpha=region.alpha, reps=reps,
                rejections=int(rejections[j]), errors=int(errors[j]),
            )
            for j, (test, region) in enumerate(zip(tests, regions))
        ]

    def estimate_power(self, test: LaplaceTest, region: RejectionRegion, spec: AlternativeSpec,
                       n: int, reps: int, seed: int, **labels) -> PowerRecord:
        return self.estimate_power_many([test], [region], spec, n, reps, seed, **labels)[0]

    # ==================== P-DEGERI ====================

    def mc_pvalue(self, test: LaplaceTest, n: int, statistic: float, reps: int, seed: int) -> float:
        """
        +1 duzeltmeli Monte Carlo p-degeri (kalibrasyonla ayni null akisi)

        Raises:
            ValueError: statistic sonlu degilse
        """
        if not math.isfinite(statistic):
            raise ValueError(f"statistic must be finite, got {statistic}")
        null = self.null_statistics([test], n, reps, seed)[:, 0]
        return tail_pvalue(test.direction, null, statistic)

    def get_metrics(self) -> dict:
        """
        Motor metriklerini dondurur

        Returns:
            Dict: Sayaclar ve zaman damgasi
        """
        return {
            **self.metrics,
            "workers": self.workers,
            "chunk_size": self.chunk_size,
            "timestamp": datetime.now().isoformat(),
        }
