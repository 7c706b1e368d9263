from __future__ import annotations

import signal
import threading
from contextlib import contextmanager


class SolverTimeout(TimeoutError):
    pass


@contextmanager
def time_limit(seconds: float | None):
    """Raise :class:`SolverTimeout` if the block runs longer than ``seconds``.

    Uses ``SIGALRM``; a no-op off the main thread, on platforms without it,
    or when ``seconds`` is None.
    """
    usable = (seconds is not None and hasattr(signal, "setitimer")
              and threading.current_thread() is threading.main_thread())
    if not usable:
        yield
        return
    if seconds <= 0:
        raise ValueError("time limit must be positive")

    def handler(signum, frame):
        raise SolverTimeout(f"time limit of {seconds:g}s exceeded")

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)
