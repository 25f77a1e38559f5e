# common/timer.py
import gc
import time
from typing import Any, Callable, Tuple


def measure_execution_time(func: Callable, *args, pause_gc: bool = True,
                           **kwargs) -> Tuple[Any, float]:
    """
    Call ``func(*args, **kwargs)`` once and time it on the monotonic clock.

    The cyclic garbage collector is paused for the call (and re-enabled
    afterwards only if it was enabled before), so collections triggered by
    earlier allocations do not land inside the measured sort.

    :return: (result, elapsed milliseconds)
    """
    was_enabled = gc.isenabled()
    if pause_gc:
        gc.disable()
    try:
        start_ns = time.perf_counter_ns()
        result = func(*args, **kwargs)
        elapsed_ns = time.perf_counter_ns() - start_ns
    finally:
        if pause_gc and was_enabled:
            gc.enable()
    return result, elapsed_ns / 1e6
