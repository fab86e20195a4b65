"""
Tekrarlanabilir rastgele sayi akislari

Her akis (master seed, amac etiketi, chunk indeksi) uclusunden turetilir.
Philox sayac tabanli bir uretec oldugu icin hangi worker'in hangi chunk'i
calistirdigi sonucu degistirmez.
"""
import zlib

import numpy as np

GENERATOR_NAME = "numpy.random.Philox"


def purpose_key(tag: str) -> int:
    """Etiketten 32-bit sabit anahtar (process'ler arasi ayni)"""
    return zlib.crc32(tag.encode("utf-8"))


def make_stream(seed: int, tag: str, chunk_index: int) -> np.random.Generator:
    """
    Verilen anahtar icin bagimsiz bir Generator dondurur

    Args:
        seed: Master seed (>= 0)
        tag: Amac etiketi, ornek "null:n=20" veya "power:ALp:3:n=50"
        chunk_index: Chunk numarasi (0'dan baslar)

    Returns:
        np.random.Generator: Philox tabanli generator
    """
    seq = np.random.SeedSequence([int(seed), purpose_key(tag), int(chunk_index)])
    return np.random.Generator(np.random.Philox(seq))


def chunk_sizes(reps: int, chunk_size: int) -> list:
    """reps'i sabit boyutlu chunk'lara boler (son chunk kisa olabilir)"""
    full, rest = divmod(reps, chunk_size)
    sizes = [chunk_size] * full
    if rest:
        sizes.append(rest)
    return sizes
