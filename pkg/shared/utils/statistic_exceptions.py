"""
Test istatistikleri icin ozel exceptionlar
"""


class StatisticError(Exception):
    """Base exception for statistic evaluation"""
    exit_code = 4


# ==================== VERI HATALARI ====================

class InvalidSample(StatisticError):
    """
    Orneklem gecersiz (n < 2 veya sonlu olmayan deger) -tr
    Sample is invalid (n < 2 or non-finite values) -eng
    """
    exit_code = 3


class ConstantSample(StatisticError):
    """
    Tum gozlemler esit, sigma_ml = 0 -tr
    All observations are equal, sigma_ml = 0 -eng
    """
    exit_code = 3


# ==================== SAYISAL HATALAR ====================

class NumericalOverflow(StatisticError):
    """Log argumani sifir veya negatif, sonuc sonlu degil"""
    pass


class DegenerateDenominator(StatisticError):
    """Payda sifir"""
    pass


class ZeroSpacing(StatisticError):
    """
    Logaritma icindeki bir aralik sifir (esit gozlemler) -tr
    A spacing inside a logarithm is zero (tied observations) -eng
    """
    def __init__(self, estimator: str, m: int):
        self.estimator = estimator
        self.m = m
        super().__init__(f"{estimator}: zero spacing with window m={m}")


class DegenerateTies(StatisticError):
    """F-uzayinda sifir aralik (AJ)"""
    pass


class EmptyWindowRange(StatisticError):
    """A_rat icin gecerli pencere yok"""
    pass


class UnsupportedN(StatisticError):
    """
    Bu n icin pencere kurali tanimli degil
    """
    exit_code = 2

    def __init__(self, family: str, n: int):
        self.family = family
        self.n = n
        super().__init__(f"No window rule for {family} at n={n}")


class CalibrationFailed(StatisticError):
    """
    Null replikasyonunda istatistik hesaplanamadi -tr
    A statistic failed on a null replicate -eng
    """

    def __init__(self, test: str, n: int, chunk: int, detail: str):
        self.test = test
        self.n = n
        self.chunk = chunk
        self.detail = detail
        super().__init__(f"{test} failed on a null sample (n={n}, chunk={chunk}): {detail}")

    def __reduce__(self):
        return (type(self), (self.test, self.n, self.chunk, self.detail))
