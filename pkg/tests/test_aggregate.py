"""
Guc tablosu ozetleri: yayinlanmis alpha = 0.05 tablosu uzerinde gruplama
ortalamalari, gap, rank ve guc egrileri
"""
import numpy as np
import pandas as pd
import pytest

from services.harness import tables
from services.harness.aggregate import (
    Grouping,
    aggregate,
    aggregate_all,
    curve_area,
    power_curves,
    top_tests,
)
from shared.utils.study_exceptions import IncompleteTable, StudyConfigError


@pytest.fixture
def published(published_power_path):
    return tables.read_power_table(published_power_path)


def _row(table, test, n):
    return table[(table["test"] == test) & (table["n"] == n)].iloc[0]


# ==================== YAYINLANMIS TABLO ====================

def test_yayinlanmis_tablo_okunur(published):
    assert len(published) == 40 * 20 * 4
    assert published["case_index"].isna().all()
    assert set(published["alpha"]) == {0.05}


def test_tum_grup_n20_en_iyi_test(published):
    table = aggregate(published, Grouping.All).table
    best = _row(table, "AP_y", 20)
    assert best["rank"] == 1
    assert round(best["avg_power"], 1) == 47.0
    assert best["gap"] == 0.0
    assert abs(_row(table, "AP_e", 20)["gap"] - 0.6) < 0.05


def test_dlo_x_gap_ozetleri(published):
    gaps = aggregate(published, Grouping.All).gaps
    row = gaps[gaps["test"] == "DLO_X"].iloc[0]
    assert abs(row["avg_gap"] - 1.5) < 0.05
    assert abs(row["max_gap"] - 3.0) < 0.05


def test_rank_permutasyon_ve_gap(published):
    for summary in aggregate_all(published):
        for (n, alpha), block in summary.table.groupby(["n", "alpha"]):
            assert sorted(block["rank"]) == list(range(1, 41))
            assert (block["gap"] >= 0).all()
            assert block.loc[block["rank"] == 1, "gap"].iloc[0] == 0.0
            ordered = block.sort_values("rank")["avg_power"].to_numpy()
            assert np.all(np.diff(ordered) <= 0)


def test_asimetrik_grup(published):
    table = aggregate(published, Grouping.Asymmetric).table
    assert _row(table, "AP_v", 20)["rank"] == 1


def test_top_tests(published):
    best = top_tests(aggregate(published, Grouping.All), k=3)
    n20 = best[best["ordering"] == "n=20"]
    assert list(n20["test"]) == ["AP_y", "AP_e", "AP_z"]
    assert list(best["ordering"].unique()) == ["n=20", "n=50", "n=100", "n=200", "Max", "Average"]
    avg = best[best["ordering"] == "Average"]
    assert list(avg["value"]) == sorted(avg["value"])


def test_eksik_hucre(published):
    with pytest.raises(IncompleteTable) as exc:
        aggregate(published.iloc[1:], Grouping.All)
    assert exc.value.missing


def test_yayinlanmis_tabloda_egri_yok(published):
    with pytest.raises(StudyConfigError):
        power_curves(published)


# ==================== SIMULE EDILMIS TABLO ====================

def _simulated(tests=("KS", "AD"), submodels=("ALp", "SkewN"), n=20, alpha=0.05):
    rows = []
    for t_i, test in enumerate(tests):
        for s_i, submodel in enumerate(submodels):
            for j in range(1, 21):
                rows.append({
                    "test": test, "submodel": submodel, "case_index": j, "n": n, "alpha": alpha,
                    "power": float(j * (t_i + 1) + s_i),
                })
    return pd.DataFrame(rows)


def test_alt_model_esit_agirlik():
    table = aggregate(_simulated(), Grouping.Asymmetric).table
    # KS: ALp ortalama 10.5, SkewN 11.5
    assert _row(table, "KS", 20)["avg_power"] == pytest.approx(11.0)
    assert _row(table, "AD", 20)["avg_power"] == pytest.approx(21.5)
    assert _row(table, "KS", 20)["gap"] == pytest.approx(10.5)


def test_esitlikte_alfabetik_rank():
    power = _simulated(tests=("KS", "AD"))
    power.loc[power["test"] == "KS", "power"] = power.loc[power["test"] == "AD", "power"].to_numpy()
    table = aggregate(power, Grouping.All).table
    assert _row(table, "AD", 20)["rank"] == 1
    assert _row(table, "KS", 20)["rank"] == 2
    assert _row(table, "KS", 20)["gap"] == 0.0


def test_eksik_durum():
    power = _simulated()
    power = power[~((power["test"] == "KS") & (power["submodel"] == "ALp") & (power["case_index"] == 7))]
    with pytest.raises(IncompleteTable):
        aggregate(power, Grouping.All)


def test_bos_gruplama():
    summary = aggregate(_simulated(), Grouping.SymmetricHeavy)
    assert summary.table.empty and summary.gaps.empty


def test_guc_egrileri():
    curves = power_curves(_simulated())
    assert len(curves) == 2 * 20
    ks = curves[curves["test"] == "KS"].sort_values("case_index")
    assert list(ks["case_index"]) == list(range(1, 21))
    # j. durum: (j + j + 1) / 2
    assert ks["avg_power"].iloc[0] == pytest.approx(1.5)
    assert curve_area(curves, "KS", 20, 0.05) == pytest.approx(11.0)
