"""Compare the compiled and pure-Python state-search kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case is a decorated braid-closure diagram; both kernels run the full
enumeration and the (fil, gr) tally, and the results are checked equal.
"""

from __future__ import annotations

import argparse
import statistics
import time

from altlink import _pykernels
from altlink.builders import braid_closure, pretzel
from altlink.diagram import decorate
from altlink.states import _options

try:
    from altlink import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("T(3,4) braid, 8 crossings", lambda: braid_closure([1, 2] * 4)),
    ("pretzel P(3,3,3), 9 crossings", lambda: pretzel([3, 3, 3])),
    ("mixed 4-braid, 12 crossings", lambda: braid_closure([1, -2, 3, -2, 1, 3, -2, 1, -3, 2, -1, 3], 4)),
    ("mixed 4-braid, 14 crossings", lambda: braid_closure([1, -2, 3, 1, -2, 3, -1, 2, -3, 1, 2, -3, 1, -2], 4)),
    ("T(3,7) braid, 14 crossings", lambda: braid_closure([1, 2] * 7)),
    ("mixed 5-braid, 20 crossings", lambda: braid_closure([1, -2, 3, -4, 2, -1, 4, -3] * 2 + [1, 2, 3, 4], 5)),
    ("T(4,7) braid, 21 crossings", lambda: braid_closure([1, 2, 3] * 7)),
    ("mixed 5-braid, 24 crossings", lambda: braid_closure([1, -2, 3, -4, 2, -3, 1, 4] * 3, 5)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernel not built; run: pip install -e . --no-build-isolation")
        return 1
    print(f"{'case':<40} {'states':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, build in CASES:
        d = build()
        opts, n = _options(decorate(d)), len(d.faces)
        for fn in ("enumerate_assignments", "tally_states"):
            py_t, _, py_out = best_of(lambda: getattr(_pykernels, fn)(opts, n), args.repeat)
            cy_t, _, cy_out = best_of(lambda: getattr(_kernels, fn)(opts, n), args.repeat)
            if py_out != cy_out:
                raise SystemExit(f"{name}: kernels disagree on {fn}")
            count = len(py_out) if fn == "enumerate_assignments" else sum(py_out.values())
            label = f"{name} [{'enum' if fn.startswith('enum') else 'tally'}]"
            print(f"{label:<40} {count:>8} {py_t:>10.4f} {cy_t:>10.4f} {py_t / cy_t:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
