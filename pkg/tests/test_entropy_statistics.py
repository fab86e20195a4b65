"""
Aralik entropi tahmincileri, pencere kurallari ve entropi testleri
"""
import math

import numpy as np
import pytest

from services.gof_statistics.entropy_statistics import (
    EntropyEstimator,
    EntropyKind,
    WindowFamily,
    entropy_statistic,
    eta_schedule,
    nu_schedule,
    spacing_entropy,
    tau_schedule,
    theta_beta,
    window_size,
    xi_schedule,
    yousefzadeh_cdf,
)
from services.gof_statistics.laplace import Sample, standardize
from shared.utils.statistic_exceptions import EmptyWindowRange, UnsupportedN, ZeroSpacing


# ==================== PENCERE ====================

@pytest.mark.parametrize("family, n, m", [
    (WindowFamily.AP_main, 20, 4),
    (WindowFamily.AP_main, 8, 1),
    (WindowFamily.AP_z, 50, 4),
    (WindowFamily.AJ, 50, 8),
    (WindowFamily.A_ent, 20, 4),
    (WindowFamily.A_ent, 5, 2),
    (WindowFamily.A_ent, 3, 1),
    (WindowFamily.CK_v, 20, 3),
    (WindowFamily.CK_c, 100, 10),
    (WindowFamily.CK_e, 200, 2),
])
def test_pencere_tablosu(family, n, m):
    assert window_size(family, n) == m


def test_pencere_uzatma_formulu():
    # n > 120: round(log(n)^1.35), kirpma sinirinin altinda
    assert window_size(WindowFamily.AP_main, 200) == int(round(math.log(200) ** 1.35))
    assert window_size(WindowFamily.AJ, 200) == int(round(math.log(200) ** 1.5))


def test_pencere_kirpilir():
    # n = 4 icin m <= ceil(n/2) - 1 = 1
    assert window_size(WindowFamily.AJ, 4) == 1


@pytest.mark.parametrize("family, n", [(WindowFamily.CK_v, 51), (WindowFamily.CK_e, 150), (WindowFamily.AP_main, 1)])
def test_desteklenmeyen_n(family, n):
    with pytest.raises(UnsupportedN):
        window_size(family, n)


# ==================== TAHMINCILER ====================

def test_vasicek_dort_nokta():
    expected = (2 * math.log(2) + 2 * math.log(4)) / 4
    assert spacing_entropy(EntropyEstimator.Hv, [0, 1, 2, 3], 1) == pytest.approx(expected)


@pytest.mark.parametrize("kind", list(EntropyEstimator))
def test_buyuk_orneklemde_laplace_entropisine_yakinsar(kind, rng):
    # Laplace(0, 1) entropisi 1 + log 2
    x = np.sort(rng.laplace(size=2000))
    assert spacing_entropy(kind, x, 10) == pytest.approx(1 + math.log(2), abs=0.15)


def test_tahminciler_olcekle_kayar(rng):
    x = np.sort(rng.laplace(size=40))
    for kind in EntropyEstimator:
        shifted = spacing_entropy(kind, 3.0 * x + 1.0, 3)
        assert shifted == pytest.approx(spacing_entropy(kind, x, 3) + math.log(3.0), abs=1e-9)


def test_esit_gozlemde_zero_spacing():
    with pytest.raises(ZeroSpacing) as exc:
        spacing_entropy(EntropyEstimator.Hv, [0, 0, 0, 1, 2], 1)
    assert exc.value.m == 1


def test_yousefzadeh_cdf_artan():
    f = yousefzadeh_cdf(np.arange(10.0))
    assert np.all(np.diff(f) > 0)
    assert 0 < f[0] and f[-1] <= 1


def test_yousefzadeh_cdf_kucuk_n():
    with pytest.raises(UnsupportedN):
        yousefzadeh_cdf(np.array([0.0, 1.0]))


# ==================== BETA DIZILERI VE THETA ====================

def test_theta_n2():
    b1, b2, b3 = 0.3, 1.1, 2.9
    expected = -(b1 + b2) / 4 + (b2 + b3) / 4
    assert theta_beta(np.array([b1, b2, b3]), 2) == pytest.approx(expected)


def test_sabit_beta_cift_n_sifir():
    assert theta_beta(np.full(7, 2.5), 6) == pytest.approx(0.0)


def test_theta_uzunluk_kontrolu():
    with pytest.raises(ValueError):
        theta_beta(np.ones(4), 4)


def test_xi_ic_noktalar_pencere_ortalamasi():
    x = np.arange(1.0, 11.0)
    xi = xi_schedule(x, 2)
    assert xi.size == 11
    # i = 5: (x_3 + x_4 + x_5 + x_6) / 4
    assert xi[4] == pytest.approx((3 + 4 + 5 + 6) / 4)


@pytest.mark.parametrize("schedule", [eta_schedule, nu_schedule, tau_schedule])
def test_kenar_duzeltmeli_diziler_ortada_xi_ile_ayni(schedule):
    x = np.sort(np.random.default_rng(7).laplace(size=30))
    m = 3
    xi = xi_schedule(x, m)
    beta = schedule(x, m)
    assert beta.size == x.size + 1
    assert np.allclose(beta[m:x.size - m + 1], xi[m:x.size - m + 1])


def test_theta_laplace_olcegine_yakin(rng):
    x = np.sort(rng.laplace(scale=2.0, size=4000))
    m = window_size(WindowFamily.AP_main, 4000)
    assert theta_beta(xi_schedule(x, m), x.size) == pytest.approx(2.0, rel=0.08)


# ==================== TEST ISTATISTIKLERI ====================

def test_a_rat_n2_pencere_yok():
    with pytest.raises(EmptyWindowRange):
        entropy_statistic(EntropyKind.A_rat_log, Sample.from_values([0.0, 1.0]))


def test_ap_esit_gozlemlerde_zero_spacing():
    with pytest.raises(ZeroSpacing):
        entropy_statistic(EntropyKind.AP_v, Sample.from_values([0, 0, 0, 0, 1, 2, 3, 4]))


def test_ap_y_kucuk_n():
    with pytest.raises(UnsupportedN):
        entropy_statistic(EntropyKind.AP_y, Sample.from_values([0.0, 1.0]))


def test_ck_tablo_disi_n(rng):
    with pytest.raises(UnsupportedN):
        entropy_statistic(EntropyKind.CK_v, Sample.from_values(rng.laplace(size=60)))


def test_a_ent_ve_ck_tanim(rng):
    s = standardize(Sample.from_values(rng.laplace(size=20)))
    m = window_size(WindowFamily.CK_v, 20)
    h = spacing_entropy(EntropyEstimator.Hv, s.x_sorted, m)
    assert entropy_statistic(EntropyKind.CK_v, s) == pytest.approx(math.exp(h) / s.estimates.sigma_ml)
    assert math.isfinite(entropy_statistic(EntropyKind.A_ent, s))


def test_entropi_istatistikleri_sonlu(laplace_samples):
    for x in laplace_samples:
        s = standardize(Sample.from_values(x))
        for kind in EntropyKind:
            assert np.isfinite(entropy_statistic(kind, s))


def test_ap_v_buyuk_laplace_orneklemde_sifira_yakin(rng):
    # log(2 theta) + 1, Laplace entropisinin tutarli tahmini
    s = Sample.from_values(rng.laplace(loc=1.0, scale=3.0, size=100000))
    assert abs(entropy_statistic(EntropyKind.AP_v, s)) < 0.05


def test_xi_dort_nokta():
    assert xi_schedule(np.array([0.0, 1.0, 2.0, 3.0]), 1)[1] == pytest.approx(0.5)


def test_m1_icin_ha_ve_hz_ayni(rng):
    x = np.sort(rng.laplace(size=15))
    assert spacing_entropy(EntropyEstimator.Ha, x, 1) == pytest.approx(spacing_entropy(EntropyEstimator.Hz, x, 1))
