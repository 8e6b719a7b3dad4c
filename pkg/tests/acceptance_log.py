"""Collects one line per acceptance criterion for the terminal summary."""

import functools
import sys
import time

RESULTS = []


def clear_caches():
    """Drop memoized tables so a criterion is timed from a cold start."""
    for name, module in list(sys.modules.items()):
        if name.startswith("hallforge"):
            for key, obj in vars(module).items():
                if hasattr(obj, "cache_clear"):
                    obj.cache_clear()
                elif key.endswith("_CACHE") and isinstance(obj, dict):
                    obj.clear()


def criterion(number, title, limit):
    """Time the wrapped check; it passes only if it returns without error inside `limit` seconds."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            clear_caches()
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                RESULTS.append(f"[{number:2d}] FAIL {title} ({elapsed:.1f}s / {limit}s): {type(exc).__name__}")
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < limit
            RESULTS.append(f"[{number:2d}] {'PASS' if ok else 'FAIL'} {title} ({elapsed:.1f}s / {limit}s)")
            assert ok, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"

        return run

    return wrap
