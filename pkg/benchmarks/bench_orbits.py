"""Compare the compiled and numpy orbit kernels.

Usage::

    python3 benchmarks/bench_orbits.py            # all cases, 3 repeats
    python3 benchmarks/bench_orbits.py --quick    # skip the 4^12-point census
    python3 benchmarks/bench_orbits.py --json out.json

Each case enumerates every orbit of a group (``orbit_labels``) with both
backends, checks that the outputs agree, and reports the best wall time.
"""

from __future__ import annotations

import argparse
import json
import platform
import time

import numpy as np

from irrbase import kernels
from irrbase.constructions import (
    build_counterexample,
    build_gl1,
    build_semilinear,
    build_wreath_imprimitive,
    cyclic_group,
    symmetric_group,
)
from irrbase.groups import kernel_tables

CASES = {
    "GL(1,5) wr Cyc(6)": lambda: build_wreath_imprimitive(build_gl1(5), cyclic_group(6)),
    "GammaL(1,2^2) wr Sym(6)": lambda: build_wreath_imprimitive(build_semilinear(2, 2), symmetric_group(6)),
    "GammaL(1,2^16)": lambda: build_semilinear(2, 16),
    "counterexample on F_4^12": build_counterexample,
}
LARGE = {"counterexample on F_4^12"}


def best_time(fn, repeats: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(repeats: int, quick: bool, threads: int) -> list[dict]:
    have_compiled = kernels.BACKEND == "compiled"
    rows = []
    for name, make in CASES.items():
        if quick and name in LARGE:
            continue
        G = make()
        tables, tops, B, k = kernel_tables(G)
        row = {"case": name, "points": G.degree}
        results = {}
        for backend in (["compiled"] if have_compiled else []) + ["numpy"]:
            secs, out = best_time(
                lambda b=backend: kernels.orbit_labels(tables, tops, B, k, threads=threads, backend_name=b),
                repeats if name not in LARGE else 1)
            row[f"{backend}_s"] = round(secs, 4)
            results[backend] = out
        row["orbits"] = len(results["numpy"][1])
        if have_compiled:
            a, b = results["compiled"], results["numpy"]
            row["agree"] = bool(np.array_equal(np.asarray(a[0]), np.asarray(b[0]))
                                and list(a[1]) == list(b[1]) and list(a[2]) == list(b[2]))
            row["speedup"] = round(row["numpy_s"] / row["compiled_s"], 2) if row["compiled_s"] else None
        rows.append(row)
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the full census case")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json", help="also write the rows as JSON")
    args = ap.parse_args(argv)
    rows = run(args.repeats, args.quick, args.threads)
    print(f"default backend: {kernels.BACKEND}; python {platform.python_version()}; threads {args.threads}")
    header = f"{'case':<28}{'points':>10}{'orbits':>8}{'compiled s':>12}{'numpy s':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for r in rows:
        print(f"{r['case']:<28}{r['points']:>10}{r['orbits']:>8}{r.get('compiled_s', float('nan')):>12.4f}"
              f"{r['numpy_s']:>10.4f}{r.get('speedup') or float('nan'):>9.2f}"
              + ("" if r.get("agree", True) else "  MISMATCH"))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r.get("agree", True) for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
