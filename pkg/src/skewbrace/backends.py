"""Execution backends for the coloring search kernels.

Two implementations of the same plan interpreter: a numba-jitted scalar
loop and a chunked vectorized numpy fallback. The active backend is chosen
at import from the SKEWBRACE_BACKEND environment variable (auto, numba, or
numpy) and can be switched at runtime with set_backend.

A plan is an int64 array of rows [kind, sA, sB, dst, tbl, mode]:

    kind 0: seed digit row; sA is the semiarc, sB the digit ordinal
    kind 1: relation row; look up t = tables[tbl, vals[sA], vals[sB]],
            then write vals[dst] = t (mode 0) or reject the seed unless
            vals[dst] == t (mode 1)

Seeds are base-n odometers over the choice digits; every seed determines
at most one full assignment.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "HAS_NUMBA",
    "available_backends",
    "set_backend",
    "current_backend",
    "count_block",
    "fill_block",
]

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


_VALID = ("auto", "numba", "numpy")
_backend = "auto"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def set_backend(name: str) -> None:
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    global _backend
    _backend = name


def current_backend() -> str:
    if _backend == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    return _backend


_env = os.environ.get("SKEWBRACE_BACKEND", "auto").strip().lower()
if _env in _VALID and (_env != "numba" or HAS_NUMBA):
    _backend = _env


@njit(cache=True, nogil=True)
def _count_scalar(plan, tbl, n, s, divs, lo, hi):  # pragma: no cover - jitted
    vals = np.zeros(s, dtype=np.int64)
    cnt = 0
    for seed in range(lo, hi):
        ok = True
        for r in range(plan.shape[0]):
            if plan[r, 0] == 0:
                vals[plan[r, 1]] = (seed // divs[plan[r, 2]]) % n
            else:
                t = tbl[plan[r, 4], vals[plan[r, 1]], vals[plan[r, 2]]]
                if plan[r, 5] == 0:
                    vals[plan[r, 3]] = t
                elif vals[plan[r, 3]] != t:
                    ok = False
                    break
        if ok:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def _fill_scalar(plan, tbl, n, s, divs, lo, hi, out):  # pragma: no cover - jitted
    vals = np.zeros(s, dtype=np.int64)
    cnt = 0
    for seed in range(lo, hi):
        ok = True
        for r in range(plan.shape[0]):
            if plan[r, 0] == 0:
                vals[plan[r, 1]] = (seed // divs[plan[r, 2]]) % n
            else:
                t = tbl[plan[r, 4], vals[plan[r, 1]], vals[plan[r, 2]]]
                if plan[r, 5] == 0:
                    vals[plan[r, 3]] = t
                elif vals[plan[r, 3]] != t:
                    ok = False
                    break
        if ok:
            for i in range(s):
                out[cnt, i] = vals[i]
            cnt += 1
    return cnt


# numpy fallback: evaluate the plan on a whole block of seeds at once.
# Rows that have already failed keep being updated; every stored value
# stays inside 0..n-1, so the vectorized lookups never go out of range.
_NP_CHUNK = 1 << 16


def _run_numpy_block(plan, tbl, n, s, divs, seeds):
    m = seeds.shape[0]
    vals = np.zeros((m, s), dtype=np.int64)
    ok = np.ones(m, dtype=bool)
    for r in range(plan.shape[0]):
        if plan[r, 0] == 0:
            vals[:, plan[r, 1]] = (seeds // divs[plan[r, 2]]) % n
        else:
            t = tbl[plan[r, 4], vals[:, plan[r, 1]], vals[:, plan[r, 2]]]
            if plan[r, 5] == 0:
                vals[:, plan[r, 3]] = t
            else:
                ok &= vals[:, plan[r, 3]] == t
    return vals, ok


def count_block(plan, tbl, n, s, divs, lo, hi) -> int:
    """Count satisfying seeds in [lo, hi) under the active backend."""
    if current_backend() == "numba":
        return int(_count_scalar(plan, tbl, n, s, divs, lo, hi))
    total = 0
    for start in range(lo, hi, _NP_CHUNK):
        seeds = np.arange(start, min(start + _NP_CHUNK, hi), dtype=np.int64)
        _, ok = _run_numpy_block(plan, tbl, n, s, divs, seeds)
        total += int(ok.sum())
    return total


def fill_block(plan, tbl, n, s, divs, lo, hi, out) -> int:
    """Write satisfying assignments for seeds in [lo, hi) into out rows."""
    if current_backend() == "numba":
        return int(_fill_scalar(plan, tbl, n, s, divs, lo, hi, out))
    cnt = 0
    for start in range(lo, hi, _NP_CHUNK):
        seeds = np.arange(start, min(start + _NP_CHUNK, hi), dtype=np.int64)
        vals, ok = _run_numpy_block(plan, tbl, n, s, divs, seeds)
        good = vals[ok]
        out[cnt : cnt + good.shape[0]] = good
        cnt += good.shape[0]
    return cnt
