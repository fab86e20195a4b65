"""
Momentlere dayali istatistikler: DLO_X, DLO_Z, Ge, GV, Ho_K/U/V/W, LK
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
from scipy.special import xlogy

from services.gof_statistics.laplace import (
    SampleLike,
    StandardizedBatch,
    StandardizedSample,
    as_standardized,
    laplace_cdf,
    row_mean,
    row_range,
)
from shared.utils.statistic_exceptions import DegenerateDenominator

Standardized = Union[StandardizedSample, StandardizedBatch]

EULER_GAMMA = float(np.euler_gamma)

# Ge sabitleri (kucuk/orta orneklem icin onerilen)
GE_C1 = 60.0
GE_C2 = 1200.0

# LK icin V^{-1}, asimptotik varyans 4 olsun diye
LK_INV_VARIANCE = 0.928


class MomentKind(str, Enum):
    DLO_X = "DLO_X"
    DLO_Z = "DLO_Z"
    Ge = "Ge"
    GV = "GV"
    HoK = "HoK"
    HoU = "HoU"
    HoV = "HoV"
    HoW = "HoW"
    LK = "LK"


@dataclass(frozen=True)
class DloComponents:
    """Birinci kuvvet carpiklik/basiklik ve z-skorlari"""
    z_s1: float
    z_k1net: float
    s1: float
    k1: float
    k1net: float

    @property
    def dlo_x(self) -> float:
        return self.z_s1 ** 2 + self.z_k1net ** 2

    @property
    def dlo_z(self) -> float:
        return self.z_k1net


# ==================== DLO ====================

# Z(S1) paydasi ve Z(K1net) merkezleme sabitleri: cift ve tek n
_DLO_EVEN = dict(s_c=1.856, s_p=1.06, k_c=0.422, k_p=1.01)
_DLO_ODD = dict(s_c=0.281, s_p=1.03, k_c=0.198, k_p=0.86)


def _dlo_variance_factor(n: int) -> float:
    if n % 2 == 0:
        return 1.0 - 1.950 / n ** 0.92 + 39.349 / n ** 2.3
    return 1.0 - 3.827 / n ** 1.04


def _dlo_parts(s: Standardized):
    n = s.n
    z = s.z_sorted
    abs_z = np.abs(z)

    s1 = row_mean(z)
    k1 = row_mean(xlogy(abs_z, abs_z))
    k1net = np.maximum(0.0, k1 - 0.5 * s1 ** 2)

    consts = _DLO_EVEN if n % 2 == 0 else _DLO_ODD
    z_s1 = np.sqrt(n) * s1 / np.sqrt(1.0 - consts["s_c"] / n ** consts["s_p"])

    center = (1.0 - EULER_GAMMA) ** 0.25 * (1.0 - consts["k_c"] / n ** consts["k_p"])
    variance = (
        (1.0 / 16.0) * (1.0 - EULER_GAMMA) ** -1.5 * (np.pi ** 2 / 3.0 - 3.0) * _dlo_variance_factor(n)
    )
    z_k1net = np.sqrt(n) * (k1net ** 0.25 - center) / np.sqrt(variance)
    return z_s1, z_k1net, s1, k1, k1net


def dlo_components(sample: SampleLike) -> DloComponents:
    """
    S1, K1, K1net ve z-skorlari; cift ve tek n icin ayri sabitler

    Note:
        z = 0 noktasinda |z| log|z| = 0 alinir (tek n'de medyan noktasi)
    """
    z_s1, z_k1net, s1, k1, k1net = _dlo_parts(as_standardized(sample))
    return DloComponents(z_s1=float(z_s1), z_k1net=float(z_k1net), s1=float(s1), k1=float(k1),
                         k1net=float(k1net))


# ==================== DIGER MOMENT TESTLERI ====================

def gel(sample: SampleLike):
    s = as_standardized(sample)
    est = s.estimates
    y = (s.x_sorted - est.mean) / (np.sqrt(2.0) * est.sigma_ml)
    sqrt_v1 = row_mean(y ** 3)
    v2 = row_mean(y ** 4)
    n = s.n
    return n / GE_C1 * sqrt_v1 ** 2 + n / GE_C2 * (v2 - 6.0) ** 2


def gonzalez_villasenor(sample: SampleLike):
    s = as_standardized(sample)
    est = s.estimates
    mad_mean = row_mean(np.abs(s.x_sorted - est.mean))
    if np.ndim(mad_mean) == 0 and mad_mean == 0.0:
        raise DegenerateDenominator("GV: mean absolute deviation about the mean is 0")
    return np.sqrt(4 * s.n) * (est.sigma_mom / mad_mean - 1.0)


def hogg(kind: MomentKind, sample: SampleLike):
    """Ho_K, Ho_U, Ho_V, Ho_W dagilim olcusu oranlari"""
    s = as_standardized(sample)
    est = s.estimates
    x = s.x_sorted
    spread = row_range(x)
    if kind == MomentKind.HoK:
        return row_mean(((x - est.mean) / est.sd) ** 4)
    if kind == MomentKind.HoU:
        return est.sd / est.sigma_ml
    if kind == MomentKind.HoV:
        return spread / (2.0 * est.sigma_ml)
    return spread / (2.0 * est.sd)


def lk_moments(sample: SampleLike):
    """W1, W2: MOM ile standardize edilmis Psi degerlerinin trigonometrik momentleri"""
    s = as_standardized(sample)
    est = s.estimates
    p = laplace_cdf((s.x_sorted - est.mean) / est.sigma_mom)
    angle = 2.0 * np.pi * p
    return row_mean(np.cos(angle)), row_mean(np.sin(angle))


def langholz_kronmal(sample: SampleLike):
    s = as_standardized(sample)
    w1, w2 = lk_moments(s)
    return LK_INV_VARIANCE * 2 * s.n * (w1 ** 2 + w2 ** 2)


def _moment_value(kind: MomentKind, s: Standardized):
    if kind in (MomentKind.DLO_X, MomentKind.DLO_Z):
        z_s1, z_k1net, _, _, _ = _dlo_parts(s)
        return z_s1 ** 2 + z_k1net ** 2 if kind == MomentKind.DLO_X else z_k1net
    if kind == MomentKind.Ge:
        return gel(s)
    if kind == MomentKind.GV:
        return gonzalez_villasenor(s)
    if kind == MomentKind.LK:
        return langholz_kronmal(s)
    return hogg(kind, s)


def moment_values(kind: MomentKind, batch: StandardizedBatch) -> np.ndarray:
    """Satir basina ham degerler; sonlu olmayanlari cagiran ayiklar"""
    return np.asarray(_moment_value(MomentKind(kind), batch), dtype=float).reshape(batch.rows)


def moment_statistic(kind: MomentKind, sample: SampleLike) -> float:
    """
    Moment tabanli istatistigi hesaplar

    Raises:
        ConstantSample: Orneklem sabitse (standardizasyondan)
        DegenerateDenominator: GV paydasi sifirsa
    """
    return float(_moment_value(MomentKind(kind), as_standardized(sample)))
