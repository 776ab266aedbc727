#!/usr/bin/env python3
"""Benchmark the compiled arithmetic kernel against the pure-Python fallback.

The kernel functions (cyclotomic convolution and matrix products over integer
coefficient vectors) sit under every algebra operation; this script times
them head to head and a representative high-level workload on each.

Run:  python3 benchmarks/bench_kernel.py
The pure path is selected with KMAUT_PURE=1 in a subprocess, so one
invocation reports both.
"""

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def bench_current():
    from kmaut import kernel
    from kmaut.algebra import make_algebra
    from kmaut.autg import standard_involution
    from kmaut.cyclo import CycloMatrix, root_of_unity

    results = {"impl": kernel.IMPL}
    rng = random.Random(0)

    # raw matmul on 12x12 rational matrices (so(12) defining size)
    A = CycloMatrix.from_scalars(
        [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(12)]
         for _ in range(12)])
    B = CycloMatrix.from_scalars(
        [[Fraction(rng.randint(-3, 3)) for _ in range(12)] for _ in range(12)])
    t0 = time.time()
    n = 0
    while time.time() - t0 < 1.0:
        A * B
        n += 1
    results["matmul_12x12_per_s"] = round(n / (time.time() - t0), 1)

    # cyclotomic matmul at conductor 12 (phi = 4)
    z = root_of_unity(12, 1)
    C = CycloMatrix.from_scalars(
        [[z * rng.randint(-2, 2) + rng.randint(-2, 2) for _ in range(8)]
         for _ in range(8)])
    t0 = time.time()
    n = 0
    while time.time() - t0 < 1.0:
        C * C
        n += 1
    results["matmul_8x8_z12_per_s"] = round(n / (time.time() - t0), 1)

    # high-level workload: one loop-algebra Jacobi triple on twisted so(8)
    from kmaut.loop import affine_bracket
    from kmaut.selftest import random_affine_element
    alg = make_algebra("d", 4, "complex")
    tw = standard_involution(alg, "rho1")
    rng = random.Random(1)
    xs = [random_affine_element(alg, tw, 2, rng) for _ in range(9)]
    t0 = time.time()
    n = 0
    while time.time() - t0 < 2.0:
        x, y, zz = xs[n % 3], xs[3 + n % 3], xs[6 + n % 3]
        j = affine_bracket(x, affine_bracket(y, zz)) \
            + affine_bracket(y, affine_bracket(zz, x)) \
            + affine_bracket(zz, affine_bracket(x, y))
        assert j.is_zero()
        n += 1
    results["so8_jacobi_triples_per_s"] = round(n / (time.time() - t0), 2)
    return results


def main():
    if os.environ.get("KMAUT_BENCH_CHILD"):
        print(json.dumps(bench_current()))
        return
    here = bench_current()
    env = dict(os.environ, KMAUT_PURE="1", KMAUT_BENCH_CHILD="1")
    proc = subprocess.run([sys.executable, os.path.abspath(__file__)],
                          env=env, capture_output=True, text=True)
    other = json.loads(proc.stdout)
    rows = [("kernel", here["impl"], other["impl"])]
    for key in ("matmul_12x12_per_s", "matmul_8x8_z12_per_s",
                "so8_jacobi_triples_per_s"):
        rows.append((key, here[key], other[key]))
    width = max(len(r[0]) for r in rows) + 2
    print("%-*s %14s %14s" % (width, "", "this build", "fallback"))
    for name, a, b in rows:
        print("%-*s %14s %14s" % (width, name, a, b))
    try:
        speedup = here["so8_jacobi_triples_per_s"] / other["so8_jacobi_triples_per_s"]
        print("\nworkload speedup: %.2fx" % speedup)
    except ZeroDivisionError:
        pass


if __name__ == "__main__":
    main()
