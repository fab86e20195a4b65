"""
40 Laplace testinin kaydi

Her test bir aile, o ailenin turu ve red yonuyle tanimlanir.
Red yonu kodlari: 1 buyuk degerler (UpperTail), 2 kucuk degerler
(LowerTail), 3 iki tarafli (TwoSided).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import chi2, norm

from services.gof_statistics.ecdf_statistics import EcdfKind, ecdf_statistic, ecdf_values
from services.gof_statistics.entropy_statistics import EntropyKind, entropy_statistic
from services.gof_statistics.laplace import (
    Sample,
    SampleLike,
    StandardizedSample,
    as_standardized,
    standardize_batch,
)
from services.gof_statistics.moment_statistics import (
    MomentKind,
    dlo_components,
    lk_moments,
    moment_statistic,
    moment_values,
)
from services.gof_statistics.other_statistics import OtherKind, kp_ratio, other_statistic
from shared.utils.statistic_exceptions import ConstantSample, NumericalOverflow, StatisticError

logger = logging.getLogger(__name__)


class Family(str, Enum):
    Ecdf = "Ecdf"
    Moment = "Moment"
    Entropy = "Entropy"
    Other = "Other"


class Direction(str, Enum):
    UpperTail = "UpperTail"
    LowerTail = "LowerTail"
    TwoSided = "TwoSided"


_EVALUATORS = {
    Family.Ecdf: (EcdfKind, ecdf_statistic),
    Family.Moment: (MomentKind, moment_statistic),
    Family.Entropy: (EntropyKind, entropy_statistic),
    Family.Other: (OtherKind, other_statistic),
}

# Replikasyon matrisi uzerinde birlikte hesaplanan aileler
_BATCH_EVALUATORS = {
    Family.Ecdf: ecdf_values,
    Family.Moment: moment_values,
}
# Bu n'den itibaren ECDF toplamlari kompanse, satir satir hesaplanir
_BATCH_MAX_N = 10_000


@dataclass(frozen=True)
class LaplaceTest:
    """Tek bir test: isim, aile ve red yonu"""
    name: str
    family: Family
    direction: Direction

    @property
    def kind(self):
        kind_enum, _ = _EVALUATORS[self.family]
        return kind_enum(self.name)

    def statistic(self, sample: SampleLike) -> float:
        """
        Istatistigi hesaplar

        Raises:
            StatisticError: Alt modulden gelen hata
            NumericalOverflow: Sonuc sonlu degilse
        """
        _, func = _EVALUATORS[self.family]
        value = float(func(self.kind, sample))
        if not np.isfinite(value):
            raise NumericalOverflow(f"{self.name} is not finite")
        return value


def _build() -> Dict[str, LaplaceTest]:
    up, low, two = Direction.UpperTail, Direction.LowerTail, Direction.TwoSided
    rows = [
        (Family.Ecdf, ["AD", "CvM", "KS", "Ku", "Wa", "ZK", "ZA", "ZC"], {}),
        (Family.Moment, ["DLO_X", "DLO_Z", "Ge", "GV", "HoK", "HoU", "HoV", "HoW", "LK"],
         {"DLO_Z": two, "GV": two, "HoK": two, "HoU": two, "HoV": two, "HoW": two}),
        (Family.Entropy, ["A_rat", "A_ent", "AP_v", "AP_e", "AP_y", "AP_a", "AP_z", "AP_y_mle",
                          "CK_v", "CK_c", "CK_e"],
         {"CK_v": low, "CK_c": low, "CK_e": low}),
        (Family.Other, ["AB_KL", "AB_He", "AB_Je", "AB_TV", "AB_chi2", "AJ", "BS", "KP",
                        "Me1_a2", "Me2_a05", "SD", "SRstar"],
         {"SD": two}),
    ]
    registry = {}
    for family, names, overrides in rows:
        for name in names:
            registry[name] = LaplaceTest(name=name, family=family, direction=overrides.get(name, up))
    return registry


TESTS: Dict[str, LaplaceTest] = _build()
TEST_NAMES: List[str] = list(TESTS)


def get_test(name: str) -> LaplaceTest:
    """
    Isimden test kaydi

    Raises:
        KeyError: Bilinmeyen test
    """
    try:
        return TESTS[name]
    except KeyError:
        raise KeyError(f"Unknown test {name!r}; known: {', '.join(TEST_NAMES)}") from None


def evaluate_tests(tests: Sequence[LaplaceTest], sample: SampleLike) -> Tuple[np.ndarray, List[StatisticError]]:
    """
    Tek orneklem uzerinde birden fazla testi hesaplar

    Standardizasyon bir kez yapilir. Hata veren testin degeri NaN olur
    ve hatasi listede ayni sirada doner (hatasizsa None).

    Returns:
        (values, errors): float dizisi ve hata listesi
    """
    values = np.full(len(tests), np.nan)
    errors: List[StatisticError] = [None] * len(tests)
    try:
        prepared: StandardizedSample = as_standardized(sample)
    except StatisticError as e:
        return values, [e] * len(tests)

    for j, test in enumerate(tests):
        try:
            values[j] = test.statistic(prepared)
        except StatisticError as e:
            errors[j] = e
        except FloatingPointError as e:
            errors[j] = NumericalOverflow(f"{test.name}: {e}")
    return values, errors


def evaluate_tests_batch(tests: Sequence[LaplaceTest],
                         samples: Sequence[Sample]) -> Tuple[np.ndarray, Dict[Tuple[int, int], StatisticError]]:
    """
    Ayni n'li orneklemlerin hepsinde testleri hesaplar (Monte Carlo sicak dongusu)

    ECDF ve moment aileleri replikasyon matrisi uzerinde birlikte, diger
    aileler satir satir evaluate_tests ile hesaplanir. Hata veren hucre NaN
    olur ve hatasi (satir, sutun) anahtariyla doner.

    Returns:
        (values, errors): (satir, test) matrisi ve hata sozlugu
    """
    rows = len(samples)
    values = np.full((rows, len(tests)), np.nan)
    errors: Dict[Tuple[int, int], StatisticError] = {}
    if rows == 0:
        return values, errors

    n = samples[0].n
    vector_cols = [j for j, t in enumerate(tests) if t.family in _BATCH_EVALUATORS] if n < _BATCH_MAX_N else []
    if vector_cols:
        batch = standardize_batch(samples)
        for r in np.flatnonzero(batch.constant):
            err = ConstantSample(f"All {n} observations equal {batch.x_sorted[r, 0]!r}")
            for j in vector_cols:
                errors[(int(r), j)] = err
        with np.errstate(all="ignore"):
            for j in vector_cols:
                test = tests[j]
                column = _BATCH_EVALUATORS[test.family](test.kind, batch)
                overflow = ~np.isfinite(column) & ~batch.constant
                for r in np.flatnonzero(overflow):
                    errors[(int(r), j)] = NumericalOverflow(f"{test.name} is not finite")
                values[:, j] = np.where(overflow | batch.constant, np.nan, column)

    scalar_cols = [j for j in range(len(tests)) if j not in vector_cols]
    if scalar_cols:
        subset = [tests[j] for j in scalar_cols]
        for r, sample in enumerate(samples):
            row, row_errors = evaluate_tests(subset, sample)
            values[r, scalar_cols] = row
            for j, err in zip(scalar_cols, row_errors):
                if err is not None:
                    errors[(r, j)] = err
    return values, errors


def evaluate(name: str, values) -> float:
    """Ham degerlerden tek test istatistigi (kisa yol)"""
    return get_test(name).statistic(Sample.from_values(values))


# ==================== REFERANS P-DEGERLERI VE TANI ====================

def reference_pvalue(name: str, statistic: float) -> Optional[float]:
    """
    Asimptotik referans dagilimdan p-degeri

    DLO_Z icin N(0,1) iki tarafli, DLO_X ve LK icin ki-kare(2) ust kuyruk.
    Diger testler icin None doner.

    Note:
        Sadece bilgi amacli raporlanir, karar Monte Carlo bolgesiyle verilir
    """
    if name == "DLO_Z":
        return float(min(1.0, 2.0 * norm.sf(abs(statistic))))
    if name in ("DLO_X", "LK"):
        return float(chi2.sf(statistic, df=2))
    return None


def diagnostics(sample: SampleLike) -> Dict[str, dict]:
    """
    Reddin yonunu yorumlamak icin isaret tanilari

    Returns:
        Dict: isim -> {"value": float, "reading": str}; hesaplanamayan
        tanilar {"value": None, "reading": hata mesaji} olur
    """
    s = as_standardized(sample)
    out: Dict[str, dict] = {}

    def _add(key, compute, reading):
        try:
            value = float(compute())
        except StatisticError as e:
            out[key] = {"value": None, "reading": str(e)}
            return
        out[key] = {"value": value, "reading": reading(value)}

    comps = dlo_components(s)
    _add("Z(S1)", lambda: comps.z_s1,
         lambda v: "right-skewed" if v > 0 else "left-skewed" if v < 0 else "symmetric")
    _add("DLO_Z", lambda: comps.z_k1net,
         lambda v: "heavier tails than Laplace" if v > 0 else "lighter tails than Laplace")
    _add("KP k4-1", lambda: kp_ratio(s) - 1.0,
         lambda v: "left-skewed" if v > 0 else "right-skewed" if v < 0 else "symmetric")
    w1, w2 = lk_moments(s)
    _add("LK W1", lambda: w1, lambda v: "positive" if v > 0 else "non-positive")
    _add("LK W2", lambda: w2, lambda v: "positive" if v > 0 else "non-positive")
    _add("SD", lambda: other_statistic(OtherKind.SD, s),
         lambda v: "mode in upper part" if v > 0.5 else "mode in lower part" if v < 0.5 else "centered")
    return out
