"""
Monte Carlo motoru: kantil kurali, karar, p-degeri, RNG akislari,
tekrarlanabilirlik ve null altinda test boyutu
"""
import numpy as np
import pytest
from scipy import stats

from services.alternatives.samplers import AlternativeSpec, Model
from services.gof_statistics.registry import Direction, get_test
from services.mc_engine.engine import MonteCarloEngine, null_tag, power_tag, sample_laplace
from services.mc_engine.regions import (
    RegionCache,
    RejectionRegion,
    decide,
    empirical_quantile,
    region_from_null,
    reject_mask,
    tail_pvalue,
)
from shared.rng import chunk_sizes, make_stream
from shared.utils.statistic_exceptions import CalibrationFailed
from shared.utils.study_exceptions import StudyConfigError


# ==================== KANTIL VE BOLGELER ====================

def test_empirical_quantile_sira_istatistigi():
    values = np.arange(1.0, 101.0)
    assert empirical_quantile(values, 0.95) == 95.0
    assert empirical_quantile(values, 0.025) == 3.0
    # 0.07 * 100 float'ta 7.000000000000001; yine 7. eleman
    assert empirical_quantile(values, 0.07) == 7.0


def test_iki_tarafli_bolge_yarim_alpha():
    null = np.arange(1.0, 1001.0)
    region = region_from_null("DLO_Z", Direction.TwoSided, null, 20, 0.05, seed=1)
    assert (region.lower, region.upper) == (25.0, 975.0)
    upper = region_from_null("AD", Direction.UpperTail, null, 20, 0.05, seed=1)
    assert upper.lower is None and upper.upper == 950.0
    lower = region_from_null("CK_v", Direction.LowerTail, null, 20, 0.05, seed=1)
    assert lower.lower == 50.0 and lower.upper is None


def test_karar_kesin_esitsizlik():
    up = RejectionRegion("AD", Direction.UpperTail, 20, 0.05, 1000, 0, upper=1.0)
    assert not decide(up, 1.0)
    assert decide(up, 1.0 + 1e-12)
    low = RejectionRegion("CK_v", Direction.LowerTail, 20, 0.05, 1000, 0, lower=3.0)
    assert not decide(low, 3.0)
    assert decide(low, 2.9)
    two = RejectionRegion("SD", Direction.TwoSided, 20, 0.05, 1000, 0, lower=0.2, upper=0.8)
    assert [decide(two, v) for v in (0.1, 0.2, 0.5, 0.8, 0.9)] == [True, False, False, False, True]


def test_reject_mask_nan_reddetmez():
    two = RejectionRegion("SD", Direction.TwoSided, 20, 0.05, 1000, 0, lower=0.2, upper=0.8)
    assert list(reject_mask(two, np.array([0.1, np.nan, 0.5, 0.95]))) == [True, False, False, True]


def test_iki_tarafli_bolge_sirali_olmali():
    with pytest.raises(ValueError):
        RejectionRegion("SD", Direction.TwoSided, 20, 0.05, 1000, 0, lower=0.8, upper=0.8)


def test_tail_pvalue():
    null = np.arange(1.0, 100.0)
    assert tail_pvalue(Direction.UpperTail, null, 99.5) == pytest.approx(0.01)
    assert tail_pvalue(Direction.LowerTail, null, 99.5) == pytest.approx(1.0)
    assert tail_pvalue(Direction.TwoSided, null, 99.5) == pytest.approx(0.02)
    assert tail_pvalue(Direction.TwoSided, null, 50.0) == 1.0


def test_region_cache():
    cache = RegionCache()
    region = RejectionRegion("AD", Direction.UpperTail, 20, 0.05, 1000, 7, upper=0.9)
    cache.put(region)
    assert cache.get("AD", 20, 0.05, 1000, 7) is region
    assert cache.get("AD", 20, 0.05, 1000, 8) is None
    assert len(cache) == 1


# ==================== RNG ====================

def test_chunk_sizes():
    assert chunk_sizes(2500, 1000) == [1000, 1000, 500]
    assert chunk_sizes(2000, 1000) == [1000, 1000]


def test_akislar_anahtara_bagli():
    a = make_stream(5, "null:n=20", 0).random(4)
    b = make_stream(5, "null:n=20", 0).random(4)
    c = make_stream(5, "null:n=20", 1).random(4)
    d = make_stream(5, "null:n=50", 0).random(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


def test_etiketler():
    spec = AlternativeSpec(Model.ALp, (1.1,))
    assert null_tag(20) == "null:n=20"
    assert power_tag(spec, 50) == "power:ALp(1.1):n=50"


def test_sample_laplace_dagilimi():
    x = sample_laplace(4000, make_stream(1, "check", 0)).values
    assert stats.kstest(x, stats.laplace.cdf).pvalue > 1e-4


# ==================== MOTOR ====================

def test_az_replikasyon_reddedilir():
    engine = MonteCarloEngine(workers=1, chunk_size=100)
    with pytest.raises(StudyConfigError):
        engine.calibrate(get_test("KS"), 20, 0.05, reps=999, seed=0)


def test_worker_sayisi_sonucu_degistirmez():
    tests = [get_test("KS"), get_test("DLO_Z")]
    serial = MonteCarloEngine(workers=1, chunk_size=250).null_statistics(tests, 20, 1000, seed=11)
    with MonteCarloEngine(workers=2, chunk_size=250) as engine:
        parallel = engine.null_statistics(tests, 20, 1000, seed=11)
    assert np.array_equal(serial, parallel)


def test_null_ornekleri_testler_arasi_paylasilir():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    both = engine.null_statistics([get_test("KS"), get_test("AD")], 20, 1000, seed=3)
    alone = MonteCarloEngine(workers=1, chunk_size=500).null_statistics([get_test("AD")], 20, 1000, seed=3)
    assert np.array_equal(both[:, 1], alone[:, 0])


def test_kalibrasyon_onbellegi():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    first = engine.calibrate_many([get_test("KS")], 20, [0.05, 0.10], 1000, seed=2)
    again = engine.calibrate_many([get_test("KS")], 20, [0.05, 0.10], 1000, seed=2)
    assert first == again
    assert engine.metrics["cache_hits"] == 2
    assert first[("KS", 0.10)].upper < first[("KS", 0.05)].upper


def test_null_hatasi_calibration_failed():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    with pytest.raises(CalibrationFailed) as exc:
        engine.calibrate(get_test("CK_v"), 60, 0.05, 1000, seed=0)
    assert exc.value.test == "CK_v"
    assert exc.value.n == 60


def test_null_altinda_boyut():
    # MixL(0, 0, 1) karisimsiz Laplace; guc nominal alpha'ya yakin olmali
    engine = MonteCarloEngine(workers=1, chunk_size=1000)
    ks = get_test("KS")
    region = engine.calibrate(ks, 20, 0.05, 4000, seed=21)
    record = engine.estimate_power(ks, region, AlternativeSpec(Model.MixL, (0.0, 0.0, 1.0)), 20, 4000, seed=21)
    assert record.power == pytest.approx(0.05, abs=0.02)
    assert record.errors == 0


def test_guc_kayitlari_ve_alpha_paylasimi():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    ks = get_test("KS")
    regions = engine.calibrate_many([ks], 20, [0.05, 0.10], 1000, seed=4)
    spec = AlternativeSpec(Model.ALp, (3.0,))
    records = engine.estimate_power_many(
        [ks, ks], [regions[("KS", 0.05)], regions[("KS", 0.10)]], spec, 20, 1000, seed=4,
        submodel_id="ALp", case_index=10, param_value=3.0,
    )
    assert [r.alpha for r in records] == [0.05, 0.10]
    # Ayni ornekler: daha genis bolge daha az reddetmez
    assert records[1].rejections >= records[0].rejections
    assert records[0].submodel_id == "ALp" and records[0].case_index == 10


def test_bolge_eslesmesi_kontrol_edilir():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    region = RejectionRegion("AD", Direction.UpperTail, 20, 0.05, 1000, 0, upper=1.0)
    with pytest.raises(ValueError):
        engine.estimate_power(get_test("KS"), region, AlternativeSpec(Model.ALp, (2.0,)), 20, 1000, seed=0)


def test_mc_pvalue():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    ks = get_test("KS")
    assert engine.mc_pvalue(ks, 20, 100.0, 1000, seed=0) == pytest.approx(1 / 1001)
    assert engine.mc_pvalue(ks, 20, 0.0, 1000, seed=0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        engine.mc_pvalue(ks, 20, float("nan"), 1000, seed=0)


def test_metrikler():
    engine = MonteCarloEngine(workers=1, chunk_size=500)
    engine.null_statistics([get_test("KS")], 20, 1000, seed=0)
    metrics = engine.get_metrics()
    assert metrics["samples_drawn"] == 1000
    assert metrics["chunks_run"] == 2
    assert metrics["statistic_errors"] == 0
