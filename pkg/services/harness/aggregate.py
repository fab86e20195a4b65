"""
Guc tablosu ozetleri: gruplama ortalamalari, gap, rank, en iyi testler
ve durum indeksine gore guc egrileri
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np
import pandas as pd

from services.alternatives.submodels import CASES_PER_SUBMODEL, Group, submodel_group
from shared.utils.study_exceptions import IncompleteTable, StudyConfigError

logger = logging.getLogger(__name__)


class Grouping(str, Enum):
    All = "All"
    Symmetric = "Symmetric"
    SymmetricHeavy = "SymmetricHeavy"
    SymmetricLight = "SymmetricLight"
    Asymmetric = "Asymmetric"


_MEMBERS = {
    Grouping.All: {Group.SymmetricHeavy, Group.SymmetricLight, Group.Asymmetric},
    Grouping.Symmetric: {Group.SymmetricHeavy, Group.SymmetricLight},
    Grouping.SymmetricHeavy: {Group.SymmetricHeavy},
    Grouping.SymmetricLight: {Group.SymmetricLight},
    Grouping.Asymmetric: {Group.Asymmetric},
}


@dataclass
class GroupSummary:
    """
    Bir gruplamanin ozeti

    Attributes:
        grouping: Gruplama
        table: grouping, n, alpha, test, avg_power, gap, rank
        gaps: grouping, alpha, test, max_gap, avg_gap (n'ler uzerinden)
    """
    grouping: Grouping
    table: pd.DataFrame
    gaps: pd.DataFrame


def _in_grouping(power: pd.DataFrame, grouping: Grouping) -> pd.DataFrame:
    members = _MEMBERS[Grouping(grouping)]
    mask = power["submodel"].map(lambda s: submodel_group(s) in members)
    return power[mask]


def _submodel_means(power: pd.DataFrame) -> pd.DataFrame:
    """
    Her (n, alpha, test, alt model) icin durum ortalamasi

    Raises:
        IncompleteTable: Eksik (test, alt model) hucresi veya eksik durum
    """
    missing = []
    for (n, alpha), block in power.groupby(["n", "alpha"], sort=True):
        tests = block["test"].unique()
        submodels = block["submodel"].unique()
        present = set(zip(block["test"], block["submodel"]))
        missing += [(t, s, n, alpha) for t in tests for s in submodels if (t, s) not in present]

        cases = block.dropna(subset=["case_index"])
        if not cases.empty:
            counts = cases.groupby(["test", "submodel"])["case_index"].nunique()
            short = counts[counts != CASES_PER_SUBMODEL]
            missing += [(t, s, n, alpha, f"{c} cases") for (t, s), c in short.items()]
    if missing:
        raise IncompleteTable(missing)

    return power.groupby(["n", "alpha", "test", "submodel"], as_index=False, sort=True)["power"].mean()


def aggregate(power: pd.DataFrame, grouping: Grouping = Grouping.All) -> GroupSummary:
    """
    Gruplama ortalamalari, gap ve rank

    Her alt model once kendi durumlari uzerinden, sonra gruplamadaki alt
    modeller esit agirlikla ortalanir. Gap, ayni (n, alpha) icindeki en
    yuksek ortalamaya olan fark; rank azalan guce gore 1'den baslar.

    Raises:
        IncompleteTable: Tabloda eksik hucre varsa
    """
    grouping = Grouping(grouping)
    subset = _in_grouping(power, grouping)
    if subset.empty:
        empty = pd.DataFrame(columns=["grouping", "n", "alpha", "test", "avg_power", "gap", "rank"])
        return GroupSummary(grouping, empty, pd.DataFrame(columns=["grouping", "alpha", "test", "max_gap", "avg_gap"]))

    means = _submodel_means(subset)
    table = means.groupby(["n", "alpha", "test"], as_index=False, sort=True)["power"].mean()
    table = table.rename(columns={"power": "avg_power"})

    best = table.groupby(["n", "alpha"])["avg_power"].transform("max")
    table["gap"] = best - table["avg_power"]
    # Esitlikte alfabetik sira ile kesin permutasyon
    table = table.sort_values(["n", "alpha", "avg_power", "test"], ascending=[True, True, False, True])
    table["rank"] = table.groupby(["n", "alpha"]).cumcount() + 1
    # En iyi testin gap'i tanim geregi 0
    table.loc[table["rank"] == 1, "gap"] = 0.0
    table.insert(0, "grouping", grouping.value)
    table = table.reset_index(drop=True)

    gaps = table.groupby(["alpha", "test"], sort=True)["gap"].agg(max_gap="max", avg_gap="mean").reset_index()
    gaps.insert(0, "grouping", grouping.value)

    logger.info(
        f"AGGREGATE --- {grouping.value} --- tests={table['test'].nunique()} "
        f"submodels={means['submodel'].nunique()} cells={len(table)}"
    )
    return GroupSummary(grouping=grouping, table=table, gaps=gaps)


def aggregate_all(power: pd.DataFrame) -> List[GroupSummary]:
    return [aggregate(power, g) for g in Grouping]


def top_tests(summary: GroupSummary, k: int = 10) -> pd.DataFrame:
    """
    En iyi k test: her n icin guce gore, sonra maksimum ve ortalama gap'e gore

    Returns:
        DataFrame: grouping, alpha, ordering ("n=20", ..., "Max", "Average"),
        position, test, value (guc veya gap)
    """
    rows = []
    for alpha, block in summary.table.groupby("alpha", sort=True):
        for n, per_n in block.groupby("n", sort=True):
            top = per_n.nsmallest(k, "rank")
            rows += [(alpha, f"n={n}", i + 1, r.test, r.avg_power) for i, r in enumerate(top.itertuples())]
        gap_block = summary.gaps[summary.gaps["alpha"] == alpha]
        for label, column in (("Max", "max_gap"), ("Average", "avg_gap")):
            ordered = gap_block.sort_values([column, "test"]).head(k)
            rows += [(alpha, label, i + 1, r.test, getattr(r, column)) for i, r in enumerate(ordered.itertuples())]

    out = pd.DataFrame(rows, columns=["alpha", "ordering", "position", "test", "value"])
    out.insert(0, "grouping", summary.grouping.value)
    return out


def power_curves(power: pd.DataFrame) -> pd.DataFrame:
    """
    Her test ve j = 1..20 icin alt modeller uzerinden j. durum gucunun ortalamasi

    Raises:
        StudyConfigError: Tabloda durum seviyesinde guc yoksa (yayinlanmis ozet)
        IncompleteTable: Eksik (test, alt model, durum) hucresi varsa
    """
    if power["case_index"].isna().any():
        raise StudyConfigError("Power curves need case-level power (a simulated power CSV)")
    _submodel_means(power)

    curves = power.groupby(["test", "n", "alpha", "case_index"], as_index=False, sort=True)["power"].mean()
    curves = curves.rename(columns={"power": "avg_power"})
    curves["case_index"] = curves["case_index"].astype(int)
    return curves


def curve_area(curves: pd.DataFrame, test: str, n: int, alpha: float) -> float:
    """Egri altindaki alan / 20, yani egrinin ortalamasi"""
    block = curves[(curves["test"] == test) & (curves["n"] == n) & np.isclose(curves["alpha"], alpha)]
    return float(block["avg_power"].mean())
