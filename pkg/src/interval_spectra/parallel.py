import os

THREADS_ENV = "INTERVAL_SPECTRA_THREADS"


def thread_count() -> int:
    """Worker threads allowed by ``INTERVAL_SPECTRA_THREADS`` (default: CPU count)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)
