"""
Logging kurulumu
Duz metin veya JSON (python-json-logger) formatinda log basar
"""
import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = "INFO", fmt: str = "text", log_file: Optional[str] = None) -> None:
    """
    Root logger'i ayarlar

    Args:
        level: Log seviyesi (DEBUG, INFO, ...)
        fmt: "text" veya "json"
        log_file: Verilirse loglar bu dosyaya da yazilir

    Note:
        Loglar stderr'e gider, stdout rapor ciktisi icin bos kalir
    """
    if fmt == "json":
        formatter = jsonlogger.JsonFormatter(LOG_FORMAT)
    else:
        formatter = logging.Formatter(LOG_FORMAT)

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    root = logging.getLogger()
    # Onceki handler'lari temizle (tekrar cagrilirsa cift log olmasin)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)

    root.setLevel(level.upper())
