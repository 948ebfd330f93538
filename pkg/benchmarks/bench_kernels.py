"""Compare the compiled polynomial kernel against the pure-Python fallback.

The workloads mirror the hot paths of the library: dense-ish polynomial
products, exact long division, and a fraction-free determinant of the
order-7 bi-moment matrix driven directly through the kernel dicts.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from biops._kernels import pykernel

try:
    from biops._kernels import ckernel
except ImportError:
    ckernel = None


def random_kpoly(rng, terms=12, max_deg=8, max_coeff=10**6):
    out = {}
    for _ in range(terms):
        key = (rng.randint(0, max_deg), rng.randint(0, max_deg))
        out[key] = rng.randint(-max_coeff, max_coeff)
    return {k: c for k, c in out.items() if c}


def bench_mul(kernel, rng):
    polys = [random_kpoly(rng) for _ in range(40)]
    acc = {(0, 0): 1}
    for p in polys:
        acc = kernel.kmul(acc, p)
        if len(acc) > 4000:
            acc = dict(list(acc.items())[:2000])
    return acc


def bench_div(kernel, rng):
    out = None
    for _ in range(30):
        a = random_kpoly(rng, terms=10, max_deg=6)
        b = random_kpoly(rng, terms=6, max_deg=4)
        prod = kernel.kmul(a, b)
        out = kernel.kexact_div(prod, b)
        assert out == a or kernel.ksub(out, a) == {}
    return out


def bimoment_grid(n):
    # B[i][j] = L(e1^i e2^j) via the Pascal-style recurrence
    ab = {(1, 1): 1}
    grid = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            if i == 0 and j == 0:
                grid[i][j] = {(0, 0): 1}
            elif i == 0:
                grid[i][j] = {(0, j): 1}
            elif j == 0:
                grid[i][j] = {(i, 0): 1}
            else:
                s = pykernel.kadd(grid[i][j - 1], grid[i - 1][j])
                grid[i][j] = pykernel.kmul(ab, s)
    return grid


def bench_det(kernel, rng):
    # Bareiss fraction-free elimination on the order-7 bi-moment matrix
    m = [row[:] for row in bimoment_grid(6)]
    n = len(m)
    prev = {(0, 0): 1}
    for k in range(n - 1):
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = kernel.ksub(kernel.kmul(m[k][k], m[i][j]),
                                  kernel.kmul(m[i][k], m[k][j]))
                m[i][j] = kernel.kexact_div(num, prev)
        prev = m[k][k]
    return m[n - 1][n - 1]


WORKLOADS = [("product chain", bench_mul),
             ("exact division", bench_div),
             ("bi-moment determinant", bench_det)]


def time_workload(fn, kernel, seed, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        rng = random.Random(seed)
        t0 = time.perf_counter()
        result = fn(kernel, rng)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if ckernel is None:
        print("compiled kernel unavailable; nothing to compare")
        return

    print(f"{'workload':<24}{'pykernel':>12}{'ckernel':>12}{'speedup':>10}")
    for name, fn in WORKLOADS:
        tp, rp = time_workload(fn, pykernel, args.seed, args.repeat)
        tc, rc = time_workload(fn, ckernel, args.seed, args.repeat)
        assert rp == rc, f"{name}: backends disagree"
        print(f"{name:<24}{tp:>11.4f}s{tc:>11.4f}s{tp / tc:>9.2f}x")


if __name__ == "__main__":
    main()
