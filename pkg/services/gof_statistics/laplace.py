"""
Laplace dagilimi matematigi, konum/olcek tahmini ve standardizasyon

Tum test istatistikleri buradaki StandardizedSample uzerinden calisir.
"""
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from shared.utils.statistic_exceptions import ConstantSample, InvalidSample

# float64'te 1'den kucuk en buyuk sayi
_ONE_MINUS = 1.0 - np.finfo(float).epsneg
_TINY = np.finfo(float).tiny


# ==================== DAGILIM FONKSIYONLARI ====================

def laplace_cdf(z):
    """Standart Laplace cdf, iki kollu formul"""
    z = np.asarray(z, dtype=float)
    half_tail = 0.5 * np.exp(-np.abs(z))
    return np.where(z < 0, half_tail, 1.0 - half_tail)


def laplace_pdf(z):
    """Standart Laplace yogunlugu 0.5 * exp(-|z|)"""
    z = np.asarray(z, dtype=float)
    return 0.5 * np.exp(-np.abs(z))


def laplace_quantile(u):
    """
    Ters cdf, ornekleyici bunu kullanir

    Args:
        u: (0, 1) araligindaki olasiliklar
    """
    u = np.asarray(u, dtype=float)
    return np.where(u < 0.5, np.log(2.0 * u), -np.log(2.0 * (1.0 - u)))


def laplace_cdf_diff(za, zb):
    """
    Psi(zb) - Psi(za), za <= zb icin kuyruklarda hassasiyet kaybi olmadan

    Iki nokta da ayni kuyruktaysa fark dogrudan ustel terimlerden hesaplanir,
    boylece 1'e yuvarlanan iki cdf degeri sifir fark vermez.
    """
    za = np.asarray(za, dtype=float)
    zb = np.asarray(zb, dtype=float)
    ea = np.exp(-np.abs(za))
    eb = np.exp(-np.abs(zb))
    both_right = za >= 0
    both_left = zb < 0
    return np.where(
        both_right, 0.5 * (ea - eb),
        np.where(both_left, 0.5 * (eb - ea), 1.0 - 0.5 * ea - 0.5 * eb),
    )


def _log_cdf_pair(z: np.ndarray):
    """log Psi(z) ve log(1 - Psi(z)), ikisi de sonlu"""
    half_tail = 0.5 * np.exp(-np.abs(z))
    log_half = np.log(0.5)
    log_u = np.where(z < 0, log_half + z, np.log1p(-half_tail))
    log_1mu = np.where(z < 0, np.log1p(-half_tail), log_half - z)
    return log_u, log_1mu


# ==================== SATIR INDIRGEMELERI ====================
# 1-D orneklemde skaler, (satir, n) matriste (satir, 1) sonuc verir;
# boylece ayni formul tek orneklemde ve replikasyon matrisinde calisir

def _keep(a: np.ndarray) -> bool:
    return np.ndim(a) > 1


def row_sum(a):
    return np.sum(a, axis=-1, keepdims=_keep(a))


def row_mean(a):
    return np.mean(a, axis=-1, keepdims=_keep(a))


def row_max(a):
    return np.max(a, axis=-1, keepdims=_keep(a))


def row_range(a):
    return np.ptp(a, axis=-1, keepdims=_keep(a))


# ==================== VERI TIPLERI ====================

@dataclass(frozen=True, eq=False)
class Sample:
    """
    Ham gozlemler ve sirali gorunumu

    Attributes:
        values: Gozlemler (sira korunur)
        sorted_view: Artan siralama x_(1..n)
    """
    values: np.ndarray
    sorted_view: np.ndarray

    @classmethod
    def from_values(cls, values) -> "Sample":
        """
        Gozlemlerden Sample olusturur

        Raises:
            InvalidSample: n < 2 veya sonlu olmayan deger varsa
        """
        arr = np.array(values, dtype=float).ravel()
        if arr.size < 2:
            raise InvalidSample(f"Sample needs n >= 2, got n={arr.size}")
        if not np.all(np.isfinite(arr)):
            raise InvalidSample("Sample contains non-finite values")
        arr.setflags(write=False)
        ordered = np.sort(arr, kind="stable")
        ordered.setflags(write=False)
        return cls(values=arr, sorted_view=ordered)

    @property
    def n(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class LaplaceParams:
    """Konum ve olcek"""
    mu: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidSample(f"sigma must be > 0, got {self.sigma}")


@dataclass(frozen=True)
class Estimates:
    """ML ve moment tahminleri"""
    mu_ml: float
    sigma_ml: float
    mean: float
    sd: float
    sigma_mom: float


@dataclass(frozen=True, eq=False)
class StandardizedSample:
    """
    ML tahminleriyle standardize edilmis orneklem

    u_sorted (0, 1) icine kirpilir; log_u ve log_1mu ise kirpilmadan,
    z'den analitik olarak hesaplanir.
    """
    sample: Sample
    estimates: Estimates
    z_sorted: np.ndarray
    u_sorted: np.ndarray
    log_u: np.ndarray
    log_1mu: np.ndarray

    @property
    def n(self) -> int:
        return self.sample.n

    @property
    def x_sorted(self) -> np.ndarray:
        return self.sample.sorted_view


@dataclass(frozen=True, eq=False)
class StandardizedBatch:
    """
    Ayni n'li orneklemlerin satir matrisi olarak standardizasyonu

    Tahminler (satir, 1) seklindedir. Sabit satirlarin sigma ve sd degeri 1
    alinir ve constant maskesiyle isaretlenir; bu satirlarin sonuclari
    kullanilmaz.
    """
    x_sorted: np.ndarray
    estimates: Estimates
    z_sorted: np.ndarray
    u_sorted: np.ndarray
    log_u: np.ndarray
    log_1mu: np.ndarray
    constant: np.ndarray

    @property
    def n(self) -> int:
        return int(self.x_sorted.shape[1])

    @property
    def rows(self) -> int:
        return int(self.x_sorted.shape[0])


SampleLike = Union[Sample, StandardizedSample, StandardizedBatch]


# ==================== TAHMIN VE STANDARDIZASYON ====================

def estimate(sample: Sample) -> Estimates:
    """
    Medyan, medyandan ortalama mutlak sapma, ortalama ve 1/n bolenli sd

    Raises:
        ConstantSample: Tum gozlemler esitse
    """
    x = sample.sorted_view
    # Cift n icin iki orta degerin tam orta noktasi
    mu = float(np.median(x))
    sigma = float(np.mean(np.abs(x - mu)))
    if sigma == 0.0:
        raise ConstantSample(f"All {sample.n} observations equal {x[0]!r}")
    mean = float(np.mean(x))
    sd = float(np.std(x, ddof=0))
    return Estimates(mu_ml=mu, sigma_ml=sigma, mean=mean, sd=sd, sigma_mom=sd / np.sqrt(2.0))


def standardize(sample: Sample) -> StandardizedSample:
    """z_(i) = (x_(i) - mu_ml) / sigma_ml ve u_(i) = Psi(z_(i))"""
    est = estimate(sample)
    z = (sample.sorted_view - est.mu_ml) / est.sigma_ml
    u = np.clip(laplace_cdf(z), _TINY, _ONE_MINUS)
    log_u, log_1mu = _log_cdf_pair(z)
    for arr in (z, u, log_u, log_1mu):
        arr.setflags(write=False)
    return StandardizedSample(
        sample=sample, estimates=est, z_sorted=z, u_sorted=u, log_u=log_u, log_1mu=log_1mu,
    )


def as_standardized(obj: SampleLike) -> StandardizedSample:
    """Sample gelirse standardize eder, standardize edilmisse aynen dondurur"""
    if isinstance(obj, (StandardizedSample, StandardizedBatch)):
        return obj
    return standardize(obj)


def standardize_batch(samples: Sequence[Sample]) -> StandardizedBatch:
    """
    standardize() ile ayni tahminler, tum satirlar icin tek seferde

    Raises:
        ValueError: Orneklemler bos ya da n'leri farkliysa
    """
    if not samples:
        raise ValueError("standardize_batch needs at least one sample")
    if len({s.n for s in samples}) != 1:
        raise ValueError("standardize_batch needs samples of equal size")
    x = np.vstack([s.sorted_view for s in samples])
    mu = np.median(x, axis=1, keepdims=True)
    sigma = np.mean(np.abs(x - mu), axis=1, keepdims=True)
    constant = sigma[:, 0] == 0.0
    sigma = np.where(constant[:, None], 1.0, sigma)
    mean = np.mean(x, axis=1, keepdims=True)
    sd = np.where(constant[:, None], 1.0, np.std(x, axis=1, keepdims=True))
    est = Estimates(mu_ml=mu, sigma_ml=sigma, mean=mean, sd=sd, sigma_mom=sd / np.sqrt(2.0))

    z = (x - mu) / sigma
    u = np.clip(laplace_cdf(z), _TINY, _ONE_MINUS)
    log_u, log_1mu = _log_cdf_pair(z)
    return StandardizedBatch(
        x_sorted=x, estimates=est, z_sorted=z, u_sorted=u, log_u=log_u, log_1mu=log_1mu, constant=constant,
    )
