#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Runs three kernel-bound workloads:

  field_mul   a batch of multiplications in the degree-8 field Q(2cos(pi/30))
  length_65   the length computation l(w a^7 w) = 65 in the rank-5 group
  automaton   the full 687-state reduced-word automaton of the rank-4
              path group with middle label 5

With --compare the script re-executes itself in two subprocesses (one per
backend, selected via COXWALK_PURE) and prints a table; without it, the
current backend is timed and the results printed as JSON.
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    import random

    from coxwalk import algebra, automaton, diagram, element

    results = {}

    field = algebra.field_for_lcm(30)
    rng = random.Random(99)
    elems = [
        field.element([rng.randint(-99, 99) for _ in range(field.degree)])
        for _ in range(40)
    ]
    start = time.perf_counter()
    acc = field.one
    for _ in range(30):
        for a in elems:
            for b in elems:
                acc = a * b
    results["field_mul"] = time.perf_counter() - start

    d = diagram.parse_diagram("s t u v w; s-t:5 t-u u-v v-w")
    group = element.CoxeterGroup(d)  # fresh group: no cross-run caching
    alpha_word = (0, 1, 2, 3, 4, 0, 1, 2, 3)
    start = time.perf_counter()
    alpha = group.element_of(alpha_word)
    w = group.element_of((4,))
    a7 = group.identity
    for _ in range(7):
        a7 = a7 * alpha
    length = (w * a7 * w).length()
    results["length_65"] = time.perf_counter() - start
    assert length == 65

    start = time.perf_counter()
    auto = automaton.build(diagram.parse_diagram("s t u v; s-t t-u:5 u-v"))
    results["automaton"] = time.perf_counter() - start
    assert auto.num_states == 687

    return results


def run_single():
    import coxwalk

    payload = {"backend": coxwalk.KERNEL_BACKEND, "timings": _workloads()}
    print(json.dumps(payload))


def run_compare():
    rows = {}
    for pure in ("0", "1"):
        env = {**os.environ, "COXWALK_PURE": pure}
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        payload = json.loads(out.stdout)
        rows[payload["backend"]] = payload["timings"]
    if "compiled" not in rows:
        print("compiled kernel not built; only the pure backend was timed")
        print(json.dumps(rows, indent=2))
        return
    names = sorted(rows["pure"])
    width = max(len(n) for n in names)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  speedup")
    for name in names:
        p = rows["pure"][name]
        c = rows["compiled"][name]
        print(f"{name:<{width}}  {p:>8.3f}s  {c:>8.3f}s  {p / c:>6.2f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--compare",
        action="store_true",
        help="run both backends in subprocesses and print a table",
    )
    args = parser.parse_args()
    if args.compare:
        run_compare()
    else:
        run_single()


if __name__ == "__main__":
    main()
