"""
Calisma (study) ve CLI islemleri icin ozel exceptionlar
"""


class StudyError(Exception):
    """Base exception for study, harness and sampler operations"""
    exit_code = 2


class StudyConfigError(StudyError):
    """
    Konfigurasyon hatasi -tr
    Configuration error -eng
    """
    pass


class InvalidParams(StudyError):
    """Alternatif dagilim parametreleri gecersiz"""
    pass


class UnknownSubmodel(StudyError):
    """Bilinmeyen alt model"""
    pass


class IncompleteTable(StudyError):
    """
    Guc tablosunda eksik hucre var
    """
    exit_code = 3

    def __init__(self, missing: list):
        self.missing = missing
        preview = ", ".join(str(m) for m in missing[:5])
        more = f" (+{len(missing) - 5} more)" if len(missing) > 5 else ""
        super().__init__(f"Missing cells: {preview}{more}")


class DataParseError(StudyError):
    """
    Veri dosyasi okunamadi -tr
    Data file could not be parsed -eng
    """
    exit_code = 3

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


class NonPositivePrice(StudyError):
    """Log-getiri icin fiyat <= 0"""
    exit_code = 3

    def __init__(self, line: int, value: float):
        self.line = line
        self.value = value
        super().__init__(f"Non-positive price {value!r} at line {line}")
