"""Time the compiled law-scan kernels against their pure-Python twins.

Both backends get identical pre-encoded integer tables (rank codes or
common-denominator scaled values, built once outside the timed region),
so the numbers isolate the scan itself. Inputs satisfy the law under
test; a violating table would spend its time building witness lists.

Run from the repo root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 64,256 --repeat 5
"""

import argparse
import random
import time
import timeit
from fractions import Fraction

import numpy as np

from metriclat import (
    difference_valuation,
    from_kappa,
    metric_from_ultravaluation,
    metric_from_valuation,
    product_chain_lattice,
    subset_lattice,
)
from metriclat import kernels

kpy = kernels._kernels_py
kc = kernels._kernels_c  # None when the extension is absent


def near_square_heights(n):
    """Chain heights [u-1, v-1] with u*v = n and u as close to sqrt n
    as the divisors allow; falls back to a single chain for primes."""
    best = 1
    for u in range(2, int(n**0.5) + 1):
        if n % u == 0:
            best = u
    if best == 1:
        return [n - 1]
    return [best - 1, n // best - 1]


def grid_inputs(n, rng):
    L = product_chain_lattice(near_square_heights(n))
    coef = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in L.point_values[0]]
    v = [sum(c * x for c, x in zip(coef, pt)) for pt in L.point_values]
    d = metric_from_valuation(L, v).values
    w = difference_valuation(L, v)
    return L, v, d, w


def cube_inputs(n, rng):
    k = max(2, n.bit_length() - 1)
    ground = list(range(1, k + 1))
    S = subset_lattice(ground, [[a] for a in ground])
    kappa = {a: Fraction(rng.randint(1, 9), rng.randint(1, 3)) for a in ground}
    w = from_kappa(S, kappa)
    d = metric_from_ultravaluation(S.lattice, w).values
    return S.lattice, w, d, k


def np64(table):
    return np.ascontiguousarray(np.array(table, dtype=np.int64))


def build_cases(n, rng):
    """(label, py_callable, c_callable or None) triples; encoding done here."""
    L, v, d, w = grid_inputs(n, rng)
    C, wu, du, k = cube_inputs(n, rng)

    (vi,), _ = kernels.scale_encode([[v]])
    vi = vi[0]
    (wi,), _ = kernels.scale_encode([w])
    (di,), _ = kernels.scale_encode([d])
    (wui,) = kernels.rank_encode([wu])
    (dui,) = kernels.rank_encode([du])

    jl, ml = L.join_np.tolist(), L.meet_np.tolist()
    cjl = C.join_np.tolist()

    cases = [
        ("distributive_violation",
         lambda: kpy.distributive_violation(jl, ml),
         lambda: kc.distributive_violation(L.join_np, L.meet_np)),
        ("modular_violations",
         lambda: kpy.modular_violations(vi, jl, ml),
         lambda: kc.modular_violations(np64(vi), L.join_np, L.meet_np)),
        ("additive_cut_violations",
         lambda: kpy.additive_cut_violations(wi, jl, ml),
         lambda: kc.additive_cut_violations(np64(wi), L.join_np, L.meet_np)),
        ("sandwich_violations (add)",
         lambda: kpy.sandwich_violations(wi, jl, ml, 0, 1),
         lambda: kc.sandwich_violations(np64(wi), L.join_np, L.meet_np, 0, 1)),
        ("sandwich_violations (lp2)",
         lambda: kpy.sandwich_violations(wi, jl, ml, 2, 2),
         lambda: kc.sandwich_violations(np64(wi), L.join_np, L.meet_np, 2, 2)),
        ("triangle_violations",
         lambda: kpy.triangle_violations(di),
         lambda: kc.triangle_violations(np64(di))),
        ("ultra_cut_violations",
         lambda: kpy.ultra_cut_violations(wui, C.join_np.tolist(), C.meet_np.tolist()),
         lambda: kc.ultra_cut_violations(np64(wui), C.join_np, C.meet_np)),
        ("strong_triangle_violations",
         lambda: kpy.strong_triangle_violations(dui),
         lambda: kc.strong_triangle_violations(np64(dui))),
        ("d_irreducible_witnesses",
         lambda: kpy.d_irreducible_witnesses(dui, cjl),
         lambda: kc.d_irreducible_witnesses(np64(dui), C.join_np)),
    ]
    shape = "x".join(str(h + 1) for h in near_square_heights(n))
    return cases, f"grid {shape} ({L.n} elements), cube k={k} ({C.n} elements)"


def per_call_seconds(fn, repeat):
    # one calibration call; anything slow is not repeated needlessly
    t0 = time.perf_counter()
    fn()
    dt = time.perf_counter() - t0
    if dt > 0.5:
        return dt
    loops = max(1, int(0.2 / max(dt, 1e-9)))
    return min(timeit.repeat(fn, number=loops, repeat=repeat)) / loops


def fmt(seconds):
    if seconds >= 1.0:
        return f"{seconds:8.2f} s "
    if seconds >= 1e-3:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds * 1e6:8.2f} us"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="32,64,128",
                    help="comma-separated element counts (powers of two "
                         "exercise grid and cube at the same size)")
    ap.add_argument("--repeat", type=int, default=3, help="timing repeats")
    ap.add_argument("--seed", type=int, default=0, help="input table seed")
    args = ap.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    if any(n < 4 for n in sizes):
        ap.error("sizes must be at least 4")

    if kc is None:
        print("compiled extension not built; timing the pure backend only")
    else:
        print("comparing metriclat._kernels_c against metriclat._kernels_py")
    print(f"repeat={args.repeat} seed={args.seed}\n")

    for n in sizes:
        rng = random.Random(args.seed * 1000 + n)
        cases, desc = build_cases(n, rng)
        print(f"n={n}: {desc}")
        header = f"  {'kernel':<28}{'python':>12}"
        if kc is not None:
            header += f"{'c':>12}{'speedup':>10}"
        print(header)
        for label, py_fn, c_fn in cases:
            if kc is not None and py_fn() != c_fn():
                raise SystemExit(f"backend results differ for {label} at n={n}")
            t_py = per_call_seconds(py_fn, args.repeat)
            line = f"  {label:<28}{fmt(t_py):>12}"
            if kc is not None:
                t_c = per_call_seconds(c_fn, args.repeat)
                line += f"{fmt(t_c):>12}{t_py / t_c:>9.1f}x"
            print(line)
        print()


if __name__ == "__main__":
    main()
