"""
Red bolgeleri, karar kurali ve ampirik kantil konvansiyonu
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from services.gof_statistics.registry import Direction


def empirical_quantile(sorted_values: np.ndarray, q: float) -> float:
    """
    ceil(q * reps). sira istatistigi, interpolasyon yok

    Args:
        sorted_values: Artan sirali null istatistikleri
        q: (0, 1) araligindaki olasilik
    """
    reps = sorted_values.size
    # 0.95 * 100000 gibi carpimlarda float kaymasini temizle
    index = math.ceil(round(q * reps, 9))
    index = min(max(index, 1), reps)
    return float(sorted_values[index - 1])


@dataclass(frozen=True)
class RejectionRegion:
    """
    Kabul bolgesinin uclari ve kaynagi

    UpperTail icin lower None, LowerTail icin upper None olur.
    """
    test: str
    direction: Direction
    n: int
    alpha: float
    reps: int
    seed: int
    lower: Optional[float] = None
    upper: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.direction == Direction.TwoSided and not self.lower < self.upper:
            raise ValueError(f"{self.test}: lower {self.lower} must be < upper {self.upper}")

    @property
    def key(self) -> Tuple[str, int, float, int, int]:
        return (self.test, self.n, self.alpha, self.reps, self.seed)


def region_from_null(test: str, direction: Direction, null_sorted: np.ndarray,
                     n: int, alpha: float, seed: int) -> RejectionRegion:
    """Sirali null istatistiklerinden red bolgesi (iki tarafli: alpha/2 kuyruklar)"""
    reps = int(null_sorted.size)
    lower = upper = None
    if direction == Direction.UpperTail:
        upper = empirical_quantile(null_sorted, 1.0 - alpha)
    elif direction == Direction.LowerTail:
        lower = empirical_quantile(null_sorted, alpha)
    else:
        lower = empirical_quantile(null_sorted, alpha / 2.0)
        upper = empirical_quantile(null_sorted, 1.0 - alpha / 2.0)
    return RejectionRegion(test=test, direction=direction, n=n, alpha=alpha,
                           reps=reps, seed=seed, lower=lower, upper=upper)


def decide(region: RejectionRegion, statistic: float) -> bool:
    """True ise H0 reddedilir (kesin esitsizlik)"""
    if region.direction == Direction.UpperTail:
        return statistic > region.upper
    if region.direction == Direction.LowerTail:
        return statistic < region.lower
    return statistic < region.lower or statistic > region.upper


def reject_mask(region: RejectionRegion, statistics: np.ndarray) -> np.ndarray:
    """decide'in vektor hali; NaN degerler reddedilmez"""
    with np.errstate(invalid="ignore"):
        if region.direction == Direction.UpperTail:
            return statistics > region.upper
        if region.direction == Direction.LowerTail:
            return statistics < region.lower
        return (statistics < region.lower) | (statistics > region.upper)


def tail_pvalue(direction: Direction, null_values: np.ndarray, statistic: float) -> float:
    """+1 duzeltmeli Monte Carlo p-degeri"""
    reps = null_values.size
    upper = (1 + int(np.sum(null_values >= statistic))) / (reps + 1)
    lower = (1 + int(np.sum(null_values <= statistic))) / (reps + 1)
    if direction == Direction.UpperTail:
        return upper
    if direction == Direction.LowerTail:
        return lower
    return min(1.0, 2.0 * min(upper, lower))


@dataclass
class RegionCache:
    """(test, n, alpha, reps, seed) anahtarli bellek ici kritik deger onbellegi"""
    regions: Dict[Tuple, RejectionRegion] = field(default_factory=dict)

    def get(self, test: str, n: int, alpha: float, reps: int, seed: int) -> Optional[RejectionRegion]:
        return self.regions.get((test, n, alpha, reps, seed))

    def put(self, region: RejectionRegion) -> None:
        self.regions[region.key] = region

    def update(self, regions: Iterable[RejectionRegion]) -> None:
        for region in regions:
            self.put(region)

    def __len__(self) -> int:
        return len(self.regions)
