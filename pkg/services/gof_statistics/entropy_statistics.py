"""
Entropiye dayali istatistikler ve aralik (spacing) entropi tahmincileri

Icerik:
    - window_size: pencere genisligi m tablolari ve uzatma formulleri
    - spacing_entropy: H_v, H_e, H_y, H_a, H_z, H_c ve van Es H_e
    - theta_beta: isaretli yamuk ortalamasi (AP testlerinin olcek tahmini)
    - entropy_statistic: A_rat (log olcekte), A_ent, AP_*, AP_y_mle, CK_*

Tum tahminciler ayni indeks kirpma yardimcisini kullanir:
x_((i+m) ^ n) ve x_((i-m) v 1).
"""
import math
from enum import Enum

import numpy as np

from services.gof_statistics.laplace import SampleLike, as_standardized, laplace_cdf_diff
from shared.utils.statistic_exceptions import EmptyWindowRange, UnsupportedN, ZeroSpacing


class WindowFamily(str, Enum):
    AP_main = "AP_main"
    AP_z = "AP_z"
    CK_v = "CK_v"
    CK_c = "CK_c"
    CK_e = "CK_e"
    AJ = "AJ"
    A_ent = "A_ent"


class EntropyEstimator(str, Enum):
    Hv = "Hv"
    He = "He"
    Hy = "Hy"
    Ha = "Ha"
    Hz = "Hz"
    Hc = "Hc"
    HvanEs = "HvanEs"


class EntropyKind(str, Enum):
    A_rat_log = "A_rat"
    A_ent = "A_ent"
    AP_v = "AP_v"
    AP_e = "AP_e"
    AP_y = "AP_y"
    AP_a = "AP_a"
    AP_z = "AP_z"
    AP_y_mle = "AP_y_mle"
    CK_v = "CK_v"
    CK_c = "CK_c"
    CK_e = "CK_e"


# ==================== PENCERE TABLOLARI ====================

# (n ust siniri, AP_v/e/y/a ve AP_y_mle, AP_z)
_AP_TABLE = [
    (8, 1, 1), (15, 2, 2), (25, 4, 2), (40, 5, 3),
    (60, 6, 4), (90, 7, 5), (120, 8, 6),
]

# (n ust siniri, CK_v, CK_c, CK_e)
_CK_TABLE = [
    (4, 1, 1, 1), (6, 2, 2, 2), (8, 3, 3, 3), (10, 3, 4, 4),
    (11, 3, 3, 5), (12, 3, 2, 2), (23, 3, 3, 2), (25, 4, 3, 2),
    (33, 4, 4, 2), (37, 5, 4, 2), (46, 5, 5, 2), (50, 6, 5, 2),
]
_CK_EXTRA = {100: (10, 10, 2), 200: (20, 20, 2)}

_AJ_TABLE = [(8, 2), (15, 3), (25, 5), (35, 6), (45, 7), (60, 8), (90, 9), (120, 10)]


def _clamp_window(m: int, n: int) -> int:
    return max(1, min(m, math.ceil(n / 2) - 1))


def _table_lookup(table, n: int, column: int):
    for row in table:
        if n <= row[0]:
            return row[column]
    return None


def window_size(family: WindowFamily, n: int) -> int:
    """
    Aile ve orneklem buyuklugu icin pencere genisligi m

    Args:
        family: Pencere ailesi
        n: Orneklem buyuklugu (>= 2)

    Returns:
        int: m >= 1

    Raises:
        UnsupportedN: n < 2 veya CK aileleri icin tablo disi n
    """
    family = WindowFamily(family)
    if n < 2:
        raise UnsupportedN(family.value, n)

    if family == WindowFamily.A_ent:
        # n = 4, 5 icin m = 2 oldugu gibi uygulanir (kirpma yok)
        if n <= 3:
            return 1
        if n <= 5:
            return 2
        return int(round((n + 2) / 5))

    if family in (WindowFamily.AP_main, WindowFamily.AP_z):
        column = 1 if family == WindowFamily.AP_main else 2
        m = _table_lookup(_AP_TABLE, n, column)
        if m is None:
            power = 1.35 if family == WindowFamily.AP_main else 1.15
            m = int(round(math.log(n) ** power))
        return _clamp_window(m, n)

    if family == WindowFamily.AJ:
        m = _table_lookup(_AJ_TABLE, n, 1)
        if m is None:
            m = int(round(math.log(n) ** 1.5))
        return _clamp_window(m, n)

    # CK aileleri
    column = {WindowFamily.CK_v: 1, WindowFamily.CK_c: 2, WindowFamily.CK_e: 3}[family]
    if n <= 50:
        m = _table_lookup(_CK_TABLE, n, column)
    elif n in _CK_EXTRA:
        m = _CK_EXTRA[n][column - 1]
    else:
        raise UnsupportedN(family.value, n)
    return _clamp_window(m, n)


# ==================== ORTAK YARDIMCILAR ====================

def _window_indices(n: int, m: int):
    """0 tabanli (i+m) ^ n ve (i-m) v 1 indeksleri"""
    idx = np.arange(n)
    return np.minimum(idx + m, n - 1), np.maximum(idx - m, 0)


def _spacings(x: np.ndarray, m: int) -> np.ndarray:
    upper, lower = _window_indices(x.size, m)
    return x[upper] - x[lower]


def _checked_log(values: np.ndarray, estimator: str, m: int) -> np.ndarray:
    if np.any(values <= 0):
        raise ZeroSpacing(estimator, m)
    return np.log(values)


def xi_schedule(x: np.ndarray, m: int) -> np.ndarray:
    """xi_i = (1/2m) * sum_{k=i-m}^{i+m-1} x_((k ^ n) v 1), i = 1..n+1"""
    n = x.size
    i = np.arange(1, n + 2)
    k = i[:, None] + np.arange(-m, m)[None, :]
    return x[np.clip(k, 1, n) - 1].mean(axis=1)


def _edge_corrected(x: np.ndarray, xi: np.ndarray, m: int, left_div, right_div) -> np.ndarray:
    """
    Kenarlari duzeltilmis beta dizisi (eta, nu, tau icin ortak)

    Sol kenar: beta_i = xi_{m+1} - sum_{k=i}^m (x_(m+k) - x_(1)) / left_div(k)
    Sag kenar: beta_i = xi_{n-m+1} + sum_{k=n-m+2}^i (x_(n) - x_(k-m-1)) / right_div(k)
    """
    n = x.size
    beta = xi.copy()

    k_left = np.arange(1, m + 1)
    left_terms = (x[m + k_left - 1] - x[0]) / left_div(k_left)
    beta[:m] = xi[m] - np.cumsum(left_terms[::-1])[::-1]

    k_right = np.arange(n - m + 2, n + 2)
    if k_right.size:
        right_terms = (x[n - 1] - x[k_right - m - 2]) / right_div(k_right)
        beta[n - m + 1:] = xi[n - m] + np.cumsum(right_terms)
    return beta


def eta_schedule(x: np.ndarray, m: int) -> np.ndarray:
    n = x.size
    return _edge_corrected(
        x, xi_schedule(x, m), m,
        left_div=lambda k: m + k - 1,
        right_div=lambda k: n + m - k + 1,
    )


def nu_schedule(x: np.ndarray, m: int) -> np.ndarray:
    return _edge_corrected(
        x, xi_schedule(x, m), m,
        left_div=lambda k: np.full(k.shape, float(m)),
        right_div=lambda k: np.full(k.shape, float(m)),
    )


def tau_schedule(x: np.ndarray, m: int) -> np.ndarray:
    n = x.size
    return _edge_corrected(
        x, xi_schedule(x, m), m,
        left_div=lambda k: k.astype(float),
        right_div=lambda k: (n - k + 2).astype(float),
    )


def theta_beta(beta: np.ndarray, n: int) -> float:
    """
    Isaretli yamuk ortalamasi

    Args:
        beta: n+1 elemanli dizi (beta_1..beta_{n+1})
        n: Orneklem buyuklugu

    Raises:
        ValueError: Uzunluk n+1 degilse
    """
    beta = np.asarray(beta, dtype=float)
    if beta.size != n + 1:
        raise ValueError(f"beta must have n+1={n + 1} entries, got {beta.size}")
    trap = 0.5 * (beta[:-1] + beta[1:])
    if n % 2 == 0:
        half = n // 2
        return float((-trap[:half].sum() + trap[half:].sum()) / n)
    half = (n + 1) // 2
    middle = (beta[half] - beta[half - 1]) / (4 * n)
    return float((-trap[:half - 1].sum() + trap[half:].sum()) / n + middle)


# ==================== ENTROPI TAHMINCILERI ====================

def yousefzadeh_cdf(x: np.ndarray) -> np.ndarray:
    """
    Sirali veride F_y tahmini (esitlik durumlari parcali tanima gore)

    Raises:
        UnsupportedN: n < 3
    """
    n = x.size
    if n < 3:
        raise UnsupportedN("Hy", n)
    scale = (n - 1) / (n * (n + 1))
    f = np.empty(n)

    f[0] = scale * (n / (n - 1) + (n / (2 * n - 1) if x[0] != x[1] else 0.0))

    i = np.arange(2, n)
    prev, cur, nxt = x[i - 2], x[i - 1], x[i]
    width = nxt - prev
    safe = np.where(width != 0, width, 1.0)
    frac = np.where(width != 0, (cur - prev) / safe, 0.0)
    f[1:n - 1] = scale * ((i * (n - 1) + 1) / (n - 1) + frac)

    a, b, d = x[n - 3], x[n - 2], x[n - 1]
    if a == d:
        last = 0.0
    elif b == d:
        last = 1.0
    else:
        last = 1.0 + (n - 1) / (2 * n - 1)
    f[n - 1] = scale * (((n - 1) ** 2 + 1) / (n - 1) + last)
    return f


def _yousefzadeh_parts(x: np.ndarray, m: int):
    """(aralik, F_y farklari) ikilisi; ikisi de pozitif olmali"""
    upper, lower = _window_indices(x.size, m)
    f = yousefzadeh_cdf(x)
    spacing = x[upper] - x[lower]
    delta_f = f[upper] - f[lower]
    if np.any(spacing <= 0) or np.any(delta_f <= 0):
        raise ZeroSpacing("Hy", m)
    return spacing, delta_f


def spacing_entropy(kind: EntropyEstimator, sorted_values, m: int) -> float:
    """
    Sirali veri uzerinde aralik entropi tahmini

    Args:
        kind: Tahminci
        sorted_values: Artan sirali veri
        m: Pencere genisligi

    Raises:
        ZeroSpacing: Logaritma icindeki bir aralik sifirsa
    """
    kind = EntropyEstimator(kind)
    x = np.asarray(sorted_values, dtype=float)
    n = x.size
    i = np.arange(1, n + 1)

    if kind == EntropyEstimator.HvanEs:
        gaps = x[m:] - x[:n - m]
        ratio = (n + 1) / m
        logs = _checked_log(ratio * gaps, kind.value, m)
        harmonic = float(np.sum(1.0 / np.arange(m, n + 1)))
        return float(np.mean(logs) + harmonic - np.log(ratio))

    if kind == EntropyEstimator.Hc:
        offsets = np.arange(-m, m + 1)
        window = x[np.clip(np.arange(n)[:, None] + offsets[None, :], 0, n - 1)]
        dev = window - window.mean(axis=1, keepdims=True)
        num = np.sum((offsets / n)[None, :] * dev, axis=1)
        den = np.sum(dev ** 2, axis=1)
        if np.any(num <= 0) or np.any(den <= 0):
            raise ZeroSpacing(kind.value, m)
        return float(-np.mean(np.log(num / den)))

    if kind == EntropyEstimator.Hy:
        spacing, delta_f = _yousefzadeh_parts(x, m)
        weights = delta_f / delta_f.sum()
        return float(np.sum(weights * np.log(spacing / delta_f)))

    log_sp = _checked_log(_spacings(x, m), kind.value, m)
    if kind == EntropyEstimator.Hv:
        coeff = np.full(n, 2.0)
    elif kind == EntropyEstimator.He:
        coeff = 1.0 + np.minimum(np.minimum(i - 1, m), n - i) / m
    elif kind == EntropyEstimator.Ha:
        coeff = np.where((i <= m) | (i >= n - m + 1), 1.0, 2.0)
    else:
        coeff = np.where(i <= m, i / m, np.where(i >= n - m + 1, (n - i + 1) / m, 2.0))
    return float(np.mean(np.log(n / (coeff * m)) + log_sp))


# ==================== TEST ISTATISTIKLERI ====================

def _a_rat_log(s) -> float:
    """min_m log(A_rat), 1 <= m < min(sqrt(n), n/2)"""
    n = s.n
    bound = min(math.sqrt(n), n / 2)
    candidates = [m for m in range(1, math.ceil(bound) + 1) if m < bound]
    if not candidates:
        raise EmptyWindowRange(f"A_rat has no window m < {bound:.3f} at n={n}")

    x = s.x_sorted
    sigma = s.estimates.sigma_ml
    # log f(x_j; mu, sigma) toplami siradan bagimsiz
    log_f_sum = float(np.sum(-np.log(2.0 * sigma) - np.abs(s.z_sorted)))
    best = math.inf
    for m in candidates:
        log_sp = _checked_log(_spacings(x, m), "A_rat", m)
        value = n * math.log(2 * m / n) - float(np.sum(log_sp)) - log_f_sum
        best = min(best, value)
    return best


def _u_spacings(s, m: int) -> np.ndarray:
    """F(x_((j+m)^n)) - F(x_((j-m)v1)), kuyruklarda kesin"""
    upper, lower = _window_indices(s.n, m)
    return laplace_cdf_diff(s.z_sorted[lower], s.z_sorted[upper])


def _a_ent(s) -> float:
    n = s.n
    m = window_size(WindowFamily.A_ent, n)
    logs = _checked_log(n / (2 * m) * _u_spacings(s, m), "A_ent", m)
    return float(-np.mean(logs))


def _ap_statistic(kind: EntropyKind, s) -> float:
    x = s.x_sorted
    n = s.n
    family = WindowFamily.AP_z if kind == EntropyKind.AP_z else WindowFamily.AP_main
    m = window_size(family, n)

    if kind == EntropyKind.AP_y_mle:
        h = spacing_entropy(EntropyEstimator.Hy, x, m)
        return math.log(2 * s.estimates.sigma_ml) + 1 - h

    if kind == EntropyKind.AP_v:
        beta, h = xi_schedule(x, m), spacing_entropy(EntropyEstimator.Hv, x, m)
    elif kind == EntropyKind.AP_e:
        beta, h = eta_schedule(x, m), spacing_entropy(EntropyEstimator.He, x, m)
    elif kind == EntropyKind.AP_a:
        beta, h = nu_schedule(x, m), spacing_entropy(EntropyEstimator.Ha, x, m)
    elif kind == EntropyKind.AP_z:
        beta, h = tau_schedule(x, m), spacing_entropy(EntropyEstimator.Hz, x, m)
    else:
        _, delta_f = _yousefzadeh_parts(x, m)
        beta = 2 * m * xi_schedule(x, m) / delta_f.sum()
        h = spacing_entropy(EntropyEstimator.Hy, x, m)

    theta = theta_beta(beta, n)
    if theta <= 0:
        raise ZeroSpacing(f"theta[{kind.value}]", m)
    return math.log(2 * theta) + 1 - h


_CK_PARTS = {
    EntropyKind.CK_v: (WindowFamily.CK_v, EntropyEstimator.Hv),
    EntropyKind.CK_c: (WindowFamily.CK_c, EntropyEstimator.Hc),
    EntropyKind.CK_e: (WindowFamily.CK_e, EntropyEstimator.HvanEs),
}


def _ck_statistic(kind: EntropyKind, s) -> float:
    family, estimator = _CK_PARTS[kind]
    m = window_size(family, s.n)
    return math.exp(spacing_entropy(estimator, s.x_sorted, m)) / s.estimates.sigma_ml


def entropy_statistic(kind: EntropyKind, sample: SampleLike) -> float:
    """
    Entropi tabanli istatistigi hesaplar

    Note:
        A_rat log olcekte dondurulur; karar log'un monotonlugu nedeniyle aynidir

    Raises:
        ZeroSpacing, EmptyWindowRange, UnsupportedN
    """
    kind = EntropyKind(kind)
    s = as_standardized(sample)
    if kind == EntropyKind.A_rat_log:
        return _a_rat_log(s)
    if kind == EntropyKind.A_ent:
        return _a_ent(s)
    if kind in _CK_PARTS:
        return _ck_statistic(kind, s)
    return _ap_statistic(kind, s)
