"""
Laplace uyum iyiligi test istatistikleri
"""
from services.gof_statistics.laplace import (
    Estimates,
    LaplaceParams,
    Sample,
    StandardizedSample,
    estimate,
    laplace_cdf,
    laplace_cdf_diff,
    laplace_pdf,
    laplace_quantile,
    standardize,
    standardize_batch,
)
from services.gof_statistics.registry import (
    TEST_NAMES,
    TESTS,
    Direction,
    Family,
    LaplaceTest,
    diagnostics,
    evaluate,
    evaluate_tests,
    evaluate_tests_batch,
    get_test,
    reference_pvalue,
)

__all__ = [
    "Estimates", "LaplaceParams", "Sample", "StandardizedSample", "estimate",
    "laplace_cdf", "laplace_cdf_diff", "laplace_pdf", "laplace_quantile", "standardize", "standardize_batch",
    "TEST_NAMES", "TESTS", "Direction", "Family", "LaplaceTest", "diagnostics",
    "evaluate", "evaluate_tests", "evaluate_tests_batch", "get_test", "reference_pvalue",
]
