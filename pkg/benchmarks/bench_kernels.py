"""Compare the compiled kernel backend against the pure-Python fallback.

Runs the same workloads under each available backend and reports wall times
and the speedup ratio. Workloads cover the four kernel entry points through
their real call sites: polynomial products via the substitution map,
straightening (leading-monomial extraction plus scaled accumulation), the
shifted-cone candidate sweep (inequality-system filtering), and exact rank
elimination.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from detring import kernels
from detring.cone import conic_equality_check
from detring.counting import hilbert_function
from detring.generic_point import SubstitutionMap, phi
from detring.poly import Poly
from detring.straighten import straighten
from detring.tableaux import Parameters


def random_x_poly(space, rng, degree, terms):
    acc = {}
    for _ in range(terms):
        e = [0] * space.nvars
        for _ in range(degree):
            e[rng.randrange(space.nvars)] += 1
        acc[tuple(e)] = acc.get(tuple(e), 0) + rng.choice((-2, -1, 1, 2, 3))
    return Poly(space, [(e, c) for e, c in acc.items() if c])


def bench_substitution(rng):
    params = Parameters(3, 3, 2)
    subst = SubstitutionMap(params)
    polys = [random_x_poly(subst.x_space, rng, 4, 6) for _ in range(40)]

    def work():
        for f in polys:
            phi(f, subst)

    return work


def bench_straighten(rng):
    params = Parameters(3, 3, 2)
    subst = SubstitutionMap(params)
    polys = [random_x_poly(subst.x_space, rng, 3, 5) for _ in range(25)]

    def work():
        for f in polys:
            straighten(f, params, subst)

    return work


def bench_cone_sweep(rng):
    params = Parameters(4, 4, 2)

    def work():
        for t in (1, 2):
            report = conic_equality_check(params, t)
            assert report.consistent

    return work


def bench_rank(rng):
    params = Parameters(3, 3, 2)

    def work():
        assert hilbert_function(params, 3, method="rank") == 164

    return work


WORKLOADS = [
    ("substitution products", bench_substitution),
    ("straightening", bench_straighten),
    ("shifted-cone sweep", bench_cone_sweep),
    ("exact rank", bench_rank),
]


def time_workload(work, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        work()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timed repetitions, best kept")
    ap.add_argument("--seed", type=int, default=7, help="workload construction seed")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    width = max(len(name) for name, _ in WORKLOADS)
    results = {}
    for name, build in WORKLOADS:
        work = build(random.Random(args.seed))
        row = {}
        for backend in backends:
            kernels.use_backend(backend)
            work()  # warm up and verify once outside the timer
            row[backend] = time_workload(work, args.repeat)
        results[name] = row
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'ratio':>10}"
    print(header)
    for name, row in results.items():
        line = f"{name:<{width}}  " + "".join(f"{row[b] * 1e3:>10.1f}ms" for b in backends)
        if "python" in row and "cython" in row and row["cython"] > 0:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
