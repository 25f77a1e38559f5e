# common/config.py
"""
Project-wide settings.

Values are read once from the environment at import time so that the
benchmark CLI, the sorters and the tests all agree on them.
"""
import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw, 0)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


# Benchmark defaults
FALLBACK_SEED = 20030101


def default_seed() -> int:
    """Benchmark seed: LISTSORT_LAB_SEED when set, read on every call."""
    return _env_int("LISTSORT_LAB_SEED", FALLBACK_SEED)


DEFAULT_REPEATS = 10
DEFAULT_MAX_N = 10 ** 6
DEFAULT_PATTERN_WIDTHS = (4, 8, 16)
DEFAULT_KEY_BITS = 32
C_RAND_MAX = 0x7FFF  # range of the classic C rand()

# Chain validation after every public list operation (slow, for debugging)
DEBUG_VALIDATE = os.environ.get("LISTSORT_LAB_DEBUG", "") not in ("", "0")

# Comparison sorters recurse up to this many nodes, then use an explicit stack
RECURSIVE_SORT_MAX_N = 10 ** 5

LOG_LEVEL = os.environ.get("LISTSORT_LAB_LOG_LEVEL", "WARNING").upper()

# Optional sqlite results store; empty means "do not persist"
DB_PATH = os.environ.get("LISTSORT_LAB_DB", "")
