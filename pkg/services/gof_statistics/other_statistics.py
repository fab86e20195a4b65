"""
Diger istatistikler: Csiszar diverjans ailesi (AB_*), AJ, BS, KP,
iki Meintanis istatistigi, SD ve SR*
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from enum import Enum

import numpy as np
from scipy.stats import norm

from services.gof_statistics.entropy_statistics import WindowFamily, window_size
from services.gof_statistics.laplace import SampleLike, StandardizedSample, as_standardized, laplace_cdf_diff
from shared.utils.statistic_exceptions import (
    ConstantSample,
    DegenerateTies,
    UnsupportedN,
)

# Diverjans oraninin kirpma sinirlari
_RATIO_MIN = 1e-300
_RATIO_MAX = 1e300

# Meintanis agirlik parametreleri
ME1_A = 2.0
ME2_A = 0.5


class OtherKind(str, Enum):
    AB_KL = "AB_KL"
    AB_He = "AB_He"
    AB_Je = "AB_Je"
    AB_TV = "AB_TV"
    AB_chi2 = "AB_chi2"
    AJ = "AJ"
    BS = "BS"
    KP = "KP"
    Me1_a2 = "Me1_a2"
    Me2_a05 = "Me2_a05"
    SD = "SD"
    SRstar = "SRstar"


# ==================== KERNEL YOGUNLUK TAHMINI ====================

@dataclass(frozen=True)
class KdeConfig:
    """Gauss cekirdekli KDE bant genisligi"""
    bandwidth: float

    @classmethod
    def for_sample(cls, s: StandardizedSample) -> "KdeConfig":
        """h = sigma_ml * (2 / (n sqrt(pi)))^(1/5), H0 altinda optimal"""
        n = s.n
        return cls(bandwidth=s.estimates.sigma_ml * (2.0 / (n * math.sqrt(math.pi))) ** 0.2)


def kde_at_sample_points(sample: SampleLike, cfg: KdeConfig = None) -> np.ndarray:
    """
    g_hat(x_i), i = 1..n (sirali gozlemler uzerinde)

    Raises:
        ConstantSample: Bant genisligi 0 ise
    """
    s = as_standardized(sample)
    cfg = cfg or KdeConfig.for_sample(s)
    if not cfg.bandwidth > 0:
        raise ConstantSample("KDE bandwidth is 0")
    x = s.x_sorted
    diffs = (x[:, None] - x[None, :]) / cfg.bandwidth
    return norm.pdf(diffs).sum(axis=1) / (s.n * cfg.bandwidth)


_DIVERGENCES = {
    # nu(t) / t
    OtherKind.AB_KL: lambda t: np.log(t),
    OtherKind.AB_He: lambda t: 0.5 * (np.sqrt(t) - 1.0) ** 2 / t,
    OtherKind.AB_Je: lambda t: (t - 1.0) * np.log(t) / t,
    OtherKind.AB_TV: lambda t: np.abs(t - 1.0) / t,
    OtherKind.AB_chi2: lambda t: (t - 1.0) ** 2 / t,
}


def _divergence(kind: OtherKind, s: StandardizedSample) -> float:
    g_hat = kde_at_sample_points(s)
    f = np.exp(-np.abs(s.z_sorted)) / (2.0 * s.estimates.sigma_ml)
    ratio = np.clip(g_hat / f, _RATIO_MIN, _RATIO_MAX)
    return float(np.mean(_DIVERGENCES[kind](ratio)))


# ==================== MOD TAHMINI ====================

def half_sample_mode(sorted_values) -> float:
    """
    Yarim orneklem modu, tekrarli daraltma ile

    Her adimda ceil(k/2) ardisik noktanin en dar penceresi secilir.
    Esit genislikte en dusuk indeksli pencere kazanir.
    """
    data = np.asarray(sorted_values, dtype=float)
    while True:
        k = data.size
        if k == 1:
            return float(data[0])
        if k == 2:
            return float(0.5 * (data[0] + data[1]))
        if k == 3:
            # Sol bosluk eksi sag bosluk
            ind = -data[0] + 2 * data[1] - data[2]
            if ind < 0:
                return float(0.5 * (data[0] + data[1]))
            if ind > 0:
                return float(0.5 * (data[1] + data[2]))
            return float(data[1])
        half = math.ceil(k / 2)
        widths = data[half - 1:] - data[:k - half + 1]
        start = int(np.argmin(widths))
        data = data[start:start + half]


# ==================== ISTATISTIKLER ====================

def _alizadeh_jarrahiferiz(s: StandardizedSample) -> float:
    n = s.n
    m = window_size(WindowFamily.AJ, n)
    idx = np.arange(n)
    upper = np.minimum(idx + m, n - 1)
    lower = np.maximum(idx - m, 0)
    delta = laplace_cdf_diff(s.z_sorted[lower], s.z_sorted[upper])
    if np.any(delta <= 0):
        raise DegenerateTies(f"AJ: zero probability spacing with m={m}")
    return float(np.mean(2 * m / (n * delta)))


def _brain_shapiro(s: StandardizedSample) -> float:
    n = s.n
    if n < 3:
        raise UnsupportedN("BS", n)
    y = np.sort(np.abs(s.z_sorted))
    y_prev = np.concatenate(([0.0], y[:-1]))
    j = np.arange(1, n + 1)
    w = (n - j + 1) * (y - y_prev)
    total = w.sum()
    v = np.cumsum(w)[: n - 1] / total
    v_bar = float(v.mean())
    i = np.arange(1, n)
    second = n - 2 + 6 * n * v_bar - 12 * float(np.sum(i * v)) / (n - 1)
    return 12 * (n - 1) * (v_bar - 0.5) ** 2 + 5 * (n - 1) / ((n + 2) * (n - 2)) * second ** 2


def kp_ratio(s: StandardizedSample) -> float:
    """k^4: sol ve sag sapmalarin orani (1'den buyuk: sola carpik, mu ustunde gozlem yoksa inf)"""
    d = s.x_sorted - s.estimates.mu_ml
    left = np.mean(np.maximum(-d, 0.0))
    right = np.mean(np.maximum(d, 0.0))
    if right == 0.0:
        return math.inf
    return float(left / right)


def _kozubowski_panorska(s: StandardizedSample) -> float:
    k4 = kp_ratio(s)
    # k^4 -> inf limiti: n (2 - 1) = n, k^4 = 0 ile ayni deger
    if math.isinf(k4):
        return float(s.n)
    return s.n * (2.0 - (1.0 + math.sqrt(k4)) ** 2 / (1.0 + k4))


@lru_cache(maxsize=64)
def _upper_pairs(n: int):
    rows, cols = np.triu_indices(n, k=1)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


def _symmetric_double_sum(z: np.ndarray, term) -> float:
    """sum_{j,k} term((z_j - z_k)^2): kosegen n * term(0) arti iki kat ust ucgen"""
    rows, cols = _upper_pairs(z.size)
    d2 = (z[rows] - z[cols]) ** 2
    return z.size * float(term(np.zeros(1))[0]) + 2.0 * float(np.sum(term(d2)))


def _meintanis_1(s: StandardizedSample, a: float = ME1_A) -> float:
    n = s.n
    z = s.z_sorted
    a2 = a * a
    z2 = z * z
    single = 1.0 / (a2 + z2) + 2.0 * (a2 - 3.0 * z2) / (a2 + z2) ** 3

    def term(d2):
        q = a2 + d2
        return 1.0 / q + 4.0 * (a2 - 3.0 * d2) / q ** 3 + 24.0 * (a2 * a2 + 5.0 * d2 * d2 - 10.0 * a2 * d2) / q ** 5

    double = _symmetric_double_sum(z, term)
    return 2.0 * n / a - 4.0 * a * float(single.sum()) + 2.0 * a / n * double


def _meintanis_2(s: StandardizedSample, a: float = ME2_A) -> float:
    n = s.n
    z = s.z_sorted
    root = math.sqrt(math.pi / a)
    z2 = z * z
    single = (1.0 - (z2 - 2.0 * a) / (4.0 * a * a)) * np.exp(-z2 / (4.0 * a))

    def term(d2):
        return (
            0.5 - (d2 - 2.0 * a) / (4.0 * a * a) + (d2 * d2 + 12.0 * a * a - 12.0 * a * d2) / (32.0 * a ** 4)
        ) * np.exp(-d2 / (4.0 * a))

    double = _symmetric_double_sum(z, term)
    return n * root - 2.0 * root * float(single.sum()) + 2.0 / n * root * double


def _subramanian_dixit(s: StandardizedSample) -> float:
    x = s.x_sorted
    n = s.n
    theta = half_sample_mode(x)
    # Sirali veride modun rank'i
    n1 = int(np.searchsorted(x, theta, side="right"))
    n1 = min(max(n1, 1), n)
    u = float(np.sum(x[n1 - 1] - x[:n1])) if n1 > 1 else 0.0
    v = float(np.sum(x[n1:] - x[n1])) if n1 < n else 0.0
    if u == 0.0 and v == 0.0:
        return 0.5
    return u / (u + v)


def _szekely_rizzo(s: StandardizedSample) -> float:
    n = s.n
    z = s.z_sorted
    abs_z = np.abs(z)
    k = np.arange(1, n + 1)
    return (
        2.0 * float(np.sum(abs_z + np.exp(-abs_z)))
        - 1.5 * n
        - 2.0 / n * float(np.sum((2 * k - 1 - n) * z))
    )


def other_statistic(kind: OtherKind, sample: SampleLike) -> float:
    """
    Diger istatistikleri hesaplar

    Raises:
        ConstantSample: Orneklem sabitse
        DegenerateTies: AJ icin F-uzayinda sifir aralik
    """
    kind = OtherKind(kind)
    s = as_standardized(sample)
    if kind in _DIVERGENCES:
        return _divergence(kind, s)
    if kind == OtherKind.AJ:
        return _alizadeh_jarrahiferiz(s)
    if kind == OtherKind.BS:
        return _brain_shapiro(s)
    if kind == OtherKind.KP:
        return _kozubowski_panorska(s)
    if kind == OtherKind.Me1_a2:
        return _meintanis_1(s)
    if kind == OtherKind.Me2_a05:
        return _meintanis_2(s)
    if kind == OtherKind.SD:
        return _subramanian_dixit(s)
    return _szekely_rizzo(s)
