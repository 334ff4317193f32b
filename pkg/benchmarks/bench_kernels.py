"""Time the compiled scan kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --labeled 7 --trees 9 --repeat 3

Both backends scan the same range; outputs are compared element by element
before any timing is reported.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from stablecount.graph import pair_count
from stablecount.kernels import available


def best_time(fn, repeat: int) -> tuple[float, tuple]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name: str, total: int, call, backends: dict, repeat: int) -> list[str]:
    rows, ref = [], None
    for label, mod in backends.items():
        secs, out = best_time(lambda: call(mod), repeat)
        if ref is None:
            ref = out
        elif not all(np.array_equal(a, b) for a, b in zip(ref, out)):
            raise SystemExit(f"{name}: backends disagree")
        rows.append(f"{name:<18}{label:<10}{total:>12,}{secs:>10.3f}{total / secs / 1e6:>10.2f}")
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--labeled", type=int, default=7, help="order of labeled graphs to scan (<= 8)")
    ap.add_argument("--trees", type=int, default=9, help="order of Prufer trees to scan (<= 10)")
    ap.add_argument("--limit", type=int, default=1 << 21, help="cap on graphs scanned per kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = available()
    if "compiled" not in backends:
        print("compiled extension not built; timing the numpy fallback only", file=sys.stderr)
    backends = dict(sorted(backends.items()))

    n = args.labeled
    total = min(1 << pair_count(n), args.limit)
    lines = [f"{'kernel':<18}{'backend':<10}{'graphs':>12}{'seconds':>10}{'Mgraph/s':>10}"]
    lines += bench(f"labeled n={n}", total, lambda m: m.scan_labeled(n, 0, total), backends, args.repeat)
    t = args.trees
    total = min(t ** (t - 2), args.limit)
    lines += bench(f"prufer n={t}", total, lambda m: m.scan_prufer(t, 0, total), backends, args.repeat)
    print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
