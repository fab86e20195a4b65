"""
Ampirik cdf'e dayali sekiz istatistik: AD, CvM, KS, Ku, Wa, Z_K, Z_A, Z_C

Hepsi sirali u_(i) = Psi(z_(i)) degerleri uzerinden kapali formla hesaplanir.
Formuller son eksen boyunca indirgenir; StandardizedBatch ile satir basina
sonuc verir.
"""
import math
from enum import Enum
from typing import Union

import numpy as np

from services.gof_statistics.laplace import (
    SampleLike,
    StandardizedBatch,
    StandardizedSample,
    as_standardized,
    row_max,
    row_mean,
    row_sum,
)
from shared.utils.statistic_exceptions import NumericalOverflow

Standardized = Union[StandardizedSample, StandardizedBatch]


class EcdfKind(str, Enum):
    AD = "AD"
    CvM = "CvM"
    KS = "KS"
    Ku = "Ku"
    Wa = "Wa"
    ZK = "ZK"
    ZA = "ZA"
    ZC = "ZC"


def _ranks(n: int) -> np.ndarray:
    return np.arange(1, n + 1, dtype=float)


def _sum(values: np.ndarray):
    # n >= 1e4 icin kompanse toplam
    if values.ndim == 1 and values.size >= 10_000:
        return math.fsum(values)
    return row_sum(values)


def anderson_darling(s: Standardized):
    n = s.n
    i = _ranks(n)
    terms = (2 * i - 1) * s.log_u + (2 * (n - i) + 1) * s.log_1mu
    return -n - _sum(terms) / n


def cramer_von_mises(s: Standardized):
    n = s.n
    i = _ranks(n)
    return 1.0 / (12 * n) + _sum(((2 * i - 1) / (2 * n) - s.u_sorted) ** 2)


def d_minus_plus(s: Standardized):
    """D- (sol limit formu) ve D+"""
    n = s.n
    i = _ranks(n)
    d_minus = row_max(s.u_sorted - (i - 1) / n)
    d_plus = row_max(i / n - s.u_sorted)
    return d_minus, d_plus


def kolmogorov_smirnov(s: Standardized):
    d_minus, d_plus = d_minus_plus(s)
    return np.sqrt(s.n) * np.maximum(d_minus, d_plus)


def kuiper(s: Standardized):
    d_minus, d_plus = d_minus_plus(s)
    return np.sqrt(s.n) * (d_minus + d_plus)


def watson(s: Standardized):
    n = s.n
    u_bar = row_mean(s.u_sorted)
    return cramer_von_mises(s) - n * (u_bar - 0.5) ** 2


def zhang_k(s: Standardized):
    n = s.n
    i = _ranks(n)
    left = i - 0.5
    right = n - i + 0.5
    log_n = np.log(n)
    terms = left * (np.log(left) - log_n - s.log_u) + right * (np.log(right) - log_n - s.log_1mu)
    return row_max(terms)


def zhang_a(s: Standardized):
    n = s.n
    i = _ranks(n)
    return -_sum(s.log_u / (n - i + 0.5) + s.log_1mu / (i - 0.5))


def zhang_c(s: Standardized):
    n = s.n
    i = _ranks(n)
    # log(1/u - 1) = log(1-u) - log(u)
    log_odds = s.log_1mu - s.log_u
    reference = np.log((n - 0.5) / (i - 0.75) - 1.0)
    return _sum((log_odds - reference) ** 2)


_DISPATCH = {
    EcdfKind.AD: anderson_darling,
    EcdfKind.CvM: cramer_von_mises,
    EcdfKind.KS: kolmogorov_smirnov,
    EcdfKind.Ku: kuiper,
    EcdfKind.Wa: watson,
    EcdfKind.ZK: zhang_k,
    EcdfKind.ZA: zhang_a,
    EcdfKind.ZC: zhang_c,
}


def ecdf_values(kind: EcdfKind, batch: StandardizedBatch) -> np.ndarray:
    """Satir basina ham degerler; sonlu olmayanlari cagiran ayiklar"""
    return np.asarray(_DISPATCH[EcdfKind(kind)](batch), dtype=float).reshape(batch.rows)


def ecdf_statistic(kind: EcdfKind, s: SampleLike) -> float:
    """
    Istenen ampirik cdf istatistigini hesaplar

    Args:
        kind: Istatistik turu
        s: StandardizedSample (Sample da kabul edilir)

    Raises:
        NumericalOverflow: Sonuc sonlu degilse
    """
    s = as_standardized(s)
    value = float(_DISPATCH[EcdfKind(kind)](s))
    if not np.isfinite(value):
        raise NumericalOverflow(f"{EcdfKind(kind).value} is not finite at n={s.n}")
    return value
