# bench_cli/generator.py
"""
Seeded benchmark inputs.

All randomness comes from numpy's PCG64 bit generator seeded with the
64-bit benchmark seed, so a (seed, n, key range, distribution) tuple names
exactly one key sequence on every platform.
"""
from typing import List, Optional, Tuple

import numpy as np

from common import config
from list_core import LinkedList, from_sequence
from pbit import KeyDescriptor

DISTRIBUTIONS = ("uniform", "sorted", "reversed", "equal", "few")
FEW_DISTINCT = 16
SEED_MASK = (1 << 64) - 1

KeyRange = Tuple[int, int]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & SEED_MASK))


def full_range(kd: KeyDescriptor) -> KeyRange:
    return kd.min_key, kd.max_key


def c_rand_range() -> KeyRange:
    return 0, config.C_RAND_MAX


def check_range(key_range: KeyRange, kd: KeyDescriptor) -> KeyRange:
    """
    :raises ValueError: empty interval, or bounds outside the key width
    """
    low, high = key_range
    if low > high:
        raise ValueError(f"key range [{low}, {high}] is empty")
    if not (kd.fits(low) and kd.fits(high)):
        raise ValueError(
            f"key range [{low}, {high}] does not fit {kd.bit_width}-bit "
            f"{'signed' if kd.signed else 'unsigned'} keys"
        )
    return low, high


def _draw(rng: np.random.Generator, low: int, high: int, size: int) -> List[int]:
    # offsets from ``low`` always fit in uint64, whatever the signedness
    offsets = rng.integers(0, high - low, size=size, dtype=np.uint64, endpoint=True)
    return [low + offset for offset in offsets.tolist()]


def generate_keys(n: int, seed: int, key_range: KeyRange, kd: KeyDescriptor,
                  dist: str = "uniform") -> List[int]:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if dist not in DISTRIBUTIONS:
        raise ValueError(f"distribution must be one of {DISTRIBUTIONS}, got {dist!r}")
    low, high = check_range(key_range, kd)
    rng = make_rng(seed)

    if dist == "equal":
        return _draw(rng, low, high, 1) * n
    if dist == "few":
        values = _draw(rng, low, high, FEW_DISTINCT)
        picks = rng.integers(0, FEW_DISTINCT, size=n)
        return [values[i] for i in picks.tolist()]

    keys = _draw(rng, low, high, n)
    if dist == "sorted":
        keys.sort()
    elif dist == "reversed":
        keys.sort(reverse=True)
    return keys


def generate(n: int, seed: int, key_range: Optional[KeyRange] = None,
             kd: KeyDescriptor = KeyDescriptor(), dist: str = "uniform") -> LinkedList:
    """
    Build a list of ``n`` seeded keys; each node's payload is its input index.

    :param key_range: inclusive (low, high); the whole key width when None
    :param dist: one of DISTRIBUTIONS
    :raises ValueError: invalid n, distribution or key range
    """
    if key_range is None:
        key_range = full_range(kd)
    return from_sequence(generate_keys(n, seed, key_range, kd, dist))
