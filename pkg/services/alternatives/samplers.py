"""
11 alternatif modelin ornekleyicileri

Tum modeller konum 0, olcek 1 standart halleriyle uretilir. Istatistikler
konum-olcek degismez oldugu icin ek standardizasyon gerekmez.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from scipy import stats

from services.gof_statistics.laplace import Sample
from shared.utils.study_exceptions import InvalidParams


class Model(str, Enum):
    ALp = "ALp"
    Gamma = "G"
    GED = "GED"
    MixL = "MixL"
    LogNormal = "LN"
    NIG = "NIG"
    MixN = "MixN"
    SkewN = "SkewN"
    StudentT = "t"
    Tukey = "Tu"
    Weibull = "W"


# Model -> parametre sayisi
_ARITY = {
    Model.ALp: 1, Model.Gamma: 1, Model.GED: 1, Model.LogNormal: 1, Model.SkewN: 1,
    Model.StudentT: 1, Model.Tukey: 1, Model.Weibull: 1,
    Model.MixL: 3, Model.MixN: 3, Model.NIG: 2,
}

_POSITIVE_K = (Model.ALp, Model.Gamma, Model.GED, Model.LogNormal, Model.StudentT, Model.Weibull)


@dataclass(frozen=True)
class AlternativeSpec:
    """
    Alternatif dagilim: model ve parametre vektoru

    Attributes:
        model: Model
        params: (k,), (omega, k1, k2) veya (k1, k2)

    Raises:
        InvalidParams: Parametre sayisi veya araligi modele uymuyorsa
    """
    model: Model
    params: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        self._validate()

    def _validate(self):
        m, p = self.model, self.params
        if len(p) != _ARITY[m]:
            raise InvalidParams(f"{m.value} takes {_ARITY[m]} parameter(s), got {len(p)}")
        if not all(math.isfinite(v) for v in p):
            raise InvalidParams(f"{m.value}: non-finite parameter {p}")
        if m in _POSITIVE_K and not p[0] > 0:
            raise InvalidParams(f"{m.value}: k must be > 0, got {p[0]}")
        if m in (Model.MixL, Model.MixN):
            omega, _, k2 = p
            if not 0.0 <= omega <= 1.0:
                raise InvalidParams(f"{m.value}: omega must be in [0, 1], got {omega}")
            if not k2 > 0:
                raise InvalidParams(f"{m.value}: k2 must be > 0, got {k2}")
        if m == Model.NIG:
            k1, k2 = p
            if not k1 > abs(k2):
                raise InvalidParams(f"NIG needs k1 > |k2|, got k1={k1}, k2={k2}")

    @property
    def label(self) -> str:
        return f"{self.model.value}({', '.join(f'{v:g}' for v in self.params)})"


# ==================== ORNEKLEYICILER ====================

def _asymmetric_laplace(k: float, n: int, rng: np.random.Generator) -> np.ndarray:
    # Sag kol Exp(k), sol kol Exp(1/k); sag kolun agirligi 1/(1+k^2)
    right = rng.random(n) < 1.0 / (1.0 + k * k)
    e = rng.standard_exponential(n)
    return np.where(right, e / k, -e * k)


def _ged(k: float, n: int, rng: np.random.Generator) -> np.ndarray:
    sign = np.where(rng.random(n) < 0.5, -1.0, 1.0)
    return sign * rng.standard_gamma(1.0 / k, size=n) ** (1.0 / k)


def _mixture(params, n: int, rng: np.random.Generator, base) -> np.ndarray:
    omega, k1, k2 = params
    pick = rng.random(n) < omega
    z = base(n)
    return np.where(pick, k1 + k2 * z, z)


def _nig(k1: float, k2: float, n: int, rng: np.random.Generator) -> np.ndarray:
    # Normal varyans-ortalama karisimi, V ~ IG(ortalama 1/gamma, sekil 1)
    gamma = math.sqrt(k1 * k1 - k2 * k2)
    v = rng.wald(1.0 / gamma, 1.0, size=n)
    return k2 * v + np.sqrt(v) * rng.standard_normal(n)


def _skew_normal(k: float, n: int, rng: np.random.Generator) -> np.ndarray:
    delta = k / math.sqrt(1.0 + k * k)
    z1 = np.abs(rng.standard_normal(n))
    z2 = rng.standard_normal(n)
    return delta * z1 + math.sqrt(1.0 - delta * delta) * z2


def _tukey(k: float, n: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.random(n)
    if k == 0.0:
        # Lojistik limit
        return np.log(u) - np.log1p(-u)
    return (u ** k - (1.0 - u) ** k) / k


def sample_alternative(spec: AlternativeSpec, n: int, rng: np.random.Generator) -> Sample:
    """
    Standart alternatif modelden n bagimsiz gozlem

    Args:
        spec: Gecerli AlternativeSpec
        n: Orneklem buyuklugu (>= 2)
        rng: Bu cagrinin sahip oldugu generator

    Returns:
        Sample
    """
    m, p = spec.model, spec.params
    if m == Model.ALp:
        x = _asymmetric_laplace(p[0], n, rng)
    elif m == Model.Gamma:
        x = rng.standard_gamma(p[0], size=n)
    elif m == Model.GED:
        x = _ged(p[0], n, rng)
    elif m == Model.MixL:
        x = _mixture(p, n, rng, lambda size: rng.laplace(0.0, 1.0, size))
    elif m == Model.LogNormal:
        x = np.exp(p[0] * rng.standard_normal(n))
    elif m == Model.NIG:
        x = _nig(p[0], p[1], n, rng)
    elif m == Model.MixN:
        x = _mixture(p, n, rng, rng.standard_normal)
    elif m == Model.SkewN:
        x = _skew_normal(p[0], n, rng)
    elif m == Model.StudentT:
        x = rng.standard_t(p[0], size=n)
    elif m == Model.Tukey:
        x = _tukey(p[0], n, rng)
    else:
        x = rng.weibull(p[0], size=n)
    return Sample.from_values(x)


def reference_distribution(spec: AlternativeSpec):
    """
    Ornekleyici kontrolu icin scipy.stats karsiligi (donmus dagilim)

    Karisimlar icin None doner; onlar bilesenlerden dogrulanir.

    Note:
        scipy'nin laplace_asymmetric, gennorm, norminvgauss ve tukeylambda
        yogunluklari buradaki standart modellerle ayni parametreleri kullanir
    """
    m, p = spec.model, spec.params
    table = {
        Model.ALp: lambda: stats.laplace_asymmetric(kappa=p[0]),
        Model.Gamma: lambda: stats.gamma(a=p[0]),
        Model.GED: lambda: stats.gennorm(beta=p[0]),
        Model.LogNormal: lambda: stats.lognorm(s=p[0]),
        Model.NIG: lambda: stats.norminvgauss(a=p[0], b=p[1]),
        Model.SkewN: lambda: stats.skewnorm(a=p[0]),
        Model.StudentT: lambda: stats.t(df=p[0]),
        Model.Tukey: lambda: stats.tukeylambda(lam=p[0]),
        Model.Weibull: lambda: stats.weibull_min(c=p[0]),
    }
    factory = table.get(m)
    return factory() if factory else None
