"""
Kullanici verisi testi: dosya okuma, log-getiri ve rapor
"""
import math

import numpy as np
import pytest

from services.harness.data_test import Transform, log_returns, read_column, run_data_test
from services.mc_engine.engine import MonteCarloEngine
from shared.utils.statistic_exceptions import ConstantSample
from shared.utils.study_exceptions import DataParseError, NonPositivePrice


def _write(path, lines):
    path.write_text("\n".join(lines) + "\n")
    return path


def test_log_returns():
    assert np.allclose(log_returns(np.array([1.0, math.e, math.e])), [1.0, 0.0])


def test_pozitif_olmayan_fiyat_satiri():
    with pytest.raises(NonPositivePrice) as exc:
        log_returns(np.array([1.0, 2.0, 0.0, 3.0]), first_line=2)
    assert exc.value.line == 4


def test_sutun_okuma(tmp_path):
    path = _write(tmp_path / "prices.csv", ["date,price", "d1,10.5", "d2,11", "d3,10.8"])
    values = read_column(str(path), column=2, skip_header=True)
    assert list(values) == [10.5, 11.0, 10.8]


def test_sayi_olmayan_hucre_satir_numarasi(tmp_path):
    path = _write(tmp_path / "bad.csv", ["1.0", "2.0", "abc", "4.0"])
    with pytest.raises(DataParseError) as exc:
        read_column(str(path), column=1)
    assert exc.value.line == 3


def test_olmayan_sutun(tmp_path):
    path = _write(tmp_path / "one.csv", ["1", "2", "3"])
    with pytest.raises(DataParseError):
        read_column(str(path), column=2)


def test_dosya_yok(tmp_path):
    with pytest.raises(DataParseError):
        read_column(str(tmp_path / "missing.csv"), column=1)


def test_cok_az_satir(tmp_path):
    path = _write(tmp_path / "short.csv", ["1", "2"])
    with pytest.raises(DataParseError):
        read_column(str(path), column=1)


def test_laplace_verisi_raporu(tmp_path, rng):
    path = _write(tmp_path / "x.csv", [f"{v:.10f}" for v in rng.laplace(2.0, 0.5, size=60)])
    report = run_data_test(
        str(path), column=1, test="DLO_Z", alpha=0.05, pvalue_reps=1000, seed=0,
        engine=MonteCarloEngine(workers=1, chunk_size=500),
    )
    assert report.n == 60
    assert report.direction == "TwoSided"
    assert report.lower < report.upper
    assert 1 / 1001 <= report.pvalue <= 1.0
    assert report.reference_pvalue is not None
    assert "Z(S1)" in report.diagnostics
    assert "p-value" in report.to_text()
    assert report.to_dict()["test"] == "DLO_Z"


def test_karar_ve_p_degeri_tutarli(tmp_path, rng):
    # Ustel veri: DLO_X simetrik Laplace'i reddetmeli
    path = _write(tmp_path / "exp.csv", [f"{v:.10f}" for v in rng.exponential(size=200)])
    report = run_data_test(
        str(path), column=1, test="DLO_X", alpha=0.05, pvalue_reps=1000, seed=1,
        engine=MonteCarloEngine(workers=1, chunk_size=500),
    )
    assert report.reject
    assert report.pvalue < 0.05
    assert report.lower is None


def test_log_getiri_donusumu(tmp_path, rng):
    prices = 100 * np.exp(np.cumsum(rng.laplace(0, 0.01, size=80)))
    path = _write(tmp_path / "p.csv", ["price"] + [f"{p:.8f}" for p in prices])
    report = run_data_test(
        str(path), column=1, test="KS", alpha=0.05, pvalue_reps=1000, seed=0,
        transform=Transform.LogReturns, skip_header=True,
        engine=MonteCarloEngine(workers=1, chunk_size=500),
    )
    assert report.n == 79
    assert report.transform == "log-returns"


def test_sabit_veri(tmp_path):
    path = _write(tmp_path / "flat.csv", ["5", "5", "5", "5"])
    with pytest.raises(ConstantSample):
        run_data_test(str(path), column=1, test="KS", alpha=0.05, pvalue_reps=1000, seed=0,
                      engine=MonteCarloEngine(workers=1, chunk_size=500))
