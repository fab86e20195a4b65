"""
Laplace uyum iyiligi testleri icin config dosyasi. Bu dosya;
.env dosyasindaki ve ortamdaki tum ayarlari okur ve yonetir
"""
## env'deki verileri okumak icin kullandigimiz sistem
# Kutuphaneler
import os
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _env(name: str, default: str) -> str:
    return os.getenv(name, default)


@dataclass
class Konfigurasyon:
    """
    Tum env degiskenleri buradan okunur ve dogrulamasi yapilir
    """
    # ==================== WORKER AYARLARI ====================
    # Replikasyon havuzundaki process sayisi
    workers: int = field(default_factory=lambda: int(_env("LAPLACE_GOF_WORKERS", "1")))

    # Her RNG chunk'indaki replikasyon sayisi
    # Tekrarlanabilirlik anahtarinin parcasi, worker sayisindan bagimsiz
    chunk_size: int = field(default_factory=lambda: int(_env("LAPLACE_GOF_CHUNK_SIZE", "2000")))

    # ==================== MONTE CARLO AYARLARI ====================
    calib_reps: int = field(default_factory=lambda: int(_env("LAPLACE_GOF_CALIB_REPS", "100000")))
    power_reps: int = field(default_factory=lambda: int(_env("LAPLACE_GOF_POWER_REPS", "10000")))
    pvalue_reps: int = field(default_factory=lambda: int(_env("LAPLACE_GOF_PVALUE_REPS", "10000")))

    # ==================== CIKTI AYARLARI ====================
    out_dir: str = field(default_factory=lambda: _env("LAPLACE_GOF_OUT_DIR", "results"))

    # ==================== LOGGING AYARLARI ====================
    log_level: str = field(default_factory=lambda: _env("LOG_LEVEL", "INFO"))
    log_format: str = field(default_factory=lambda: _env("LOG_FORMAT", "text"))
    log_file: Optional[str] = field(default_factory=lambda: _env("LOG_FILE", "") or None)

    # ==================== PROPERTIES ====================
    @property
    def min_reps(self) -> int:
        """Calibrate/power/p-value icin minimum replikasyon"""
        return 1000

    # DOGRULAMA METODLARI
    def dogrula(self) -> bool:
        """
        Ayarlarin gecerli olup olmadigini kontrol eder
        Hatali varsa hepsini listeleyip hata verir
        """
        hatalar = []

        if self.workers < 1:
            hatalar.append(f"LAPLACE_GOF_WORKERS={self.workers} (>= 1 olmali)")
        if self.chunk_size < 1:
            hatalar.append(f"LAPLACE_GOF_CHUNK_SIZE={self.chunk_size} (>= 1 olmali)")

        # Replikasyon sayilari
        for isim, deger in (
            ("LAPLACE_GOF_CALIB_REPS", self.calib_reps),
            ("LAPLACE_GOF_POWER_REPS", self.power_reps),
            ("LAPLACE_GOF_PVALUE_REPS", self.pvalue_reps),
        ):
            if deger < self.min_reps:
                hatalar.append(f"{isim}={deger} (>= {self.min_reps} olmali)")

        if self.log_format not in ("text", "json"):
            hatalar.append(f"LOG_FORMAT={self.log_format!r} ('text' veya 'json' olmali)")

        if hatalar:
            raise ValueError(
                f" Gecersiz environment variable'lar: {', '.join(hatalar)}\n"
                f" Lutfen .env dosyasini kontrol edin"
            )
        return True

    def __post_init__(self):
        """Dataclass olusturulduktan sonra dogrulama yap"""
        self.dogrula()


config = Konfigurasyon()
