"""Compare the numba and numpy coloring kernels on the bundled fixtures.

The bundled diagrams alone compile to tiny seed spaces, so each case pads
the figure-eight knot with extra zero-crossing components; every pad
multiplies the enumerated space by n and gives the kernels real work.

Usage: python3 benchmarks/bench_backends.py [--repeat N] [--jobs N]
"""

from __future__ import annotations

import argparse
import time

from skewbrace import (
    build_constraints,
    bundled_brace_names,
    bundled_links,
    counting_invariant,
    format_gauss_code,
    load_bundled_brace,
    parse_gauss_code,
    set_backend,
)
from skewbrace.coloring import _compile, derived_biquandle

# pads chosen so every case enumerates one to two million seeds
PADS = {4: 8, 6: 6, 8: 5}


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    fig8 = format_gauss_code(bundled_links()["fig8"])
    print(f"{'case':20s} {'seeds':>10s} {'numba':>10s} {'numpy':>10s} {'ratio':>7s}")
    for name in bundled_brace_names():
        brace = load_bundled_brace(name)
        pad = PADS[brace.n]
        diagram = parse_gauss_code(fig8 + " / -" * pad)
        label = f"{name}/fig8+{pad}pad"
        counting_invariant(brace, diagram, jobs=args.jobs)  # warm jit and caches
        results = {}
        for backend in ("numba", "numpy"):
            set_backend(backend)
            results[backend] = best_of(
                lambda: counting_invariant(brace, diagram, jobs=args.jobs),
                args.repeat,
            )
        set_backend("auto")
        seeds = _compile(derived_biquandle(brace), build_constraints(diagram)).total
        ratio = results["numpy"] / results["numba"] if results["numba"] > 0 else 0.0
        print(
            f"{label:20s} {seeds:10d} {results['numba'] * 1e3:9.2f}m "
            f"{results['numpy'] * 1e3:9.2f}m {ratio:6.1f}x"
        )


if __name__ == "__main__":
    main()
