"""Timing comparison of the pure-Python and compiled reduction kernels.

The workload is the real hot path: Gröbner-basis runs plus standard-monomial
enumeration for a mix of monomial and genuinely coupled Jacobian ideals, and
a batch of raw normal-form reductions.  Work is identical for both backends;
the inputs are fixed, so numbers differ only by kernel implementation.

Run from the repository root::

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from singspec import Polynomial, buchberger, milnor_basis, parse_polynomial, reduce_modulo
from singspec import kernel


def grobner_workload():
    cases = [
        ("x^2*y + y^4", ("x", "y"), ("3/8", "1/4")),
        ("x^3 + x*y^3", ("x", "y"), ("1/3", "2/9")),
        ("x^3*y + y^5", ("x", "y"), ("4/15", "1/5")),
        ("x^2*y + y^3 + z^3", ("x", "y", "z"), ("1/3", "1/3", "1/3")),
        ("x^6 + y^6 + z^6", ("x", "y", "z"), ("1/6", "1/6", "1/6")),
        ("x^5 + y^5 + z^5 + w^5", ("x", "y", "z", "w"), ("1/5",) * 4),
    ]
    total = 0
    for text, variables, weights in cases:
        f = parse_polynomial(text, variables)
        total += len(milnor_basis(f, tuple(Fraction(w) for w in weights)))
    return total


def reduction_workload():
    rng = random.Random(1729)
    variables = ("x", "y", "z")
    gb = buchberger(
        [
            parse_polynomial("x^2 + y*z", variables),
            parse_polynomial("y^2 + x*z", variables),
            parse_polynomial("z^2 + x*y", variables),
        ]
    )
    acc = 0
    for _ in range(300):
        terms = {
            tuple(rng.randint(0, 6) for _ in variables): rng.randint(-5, 5)
            for _ in range(8)
        }
        p = Polynomial(variables, terms)
        acc += len(reduce_modulo(p, gb).terms)
    return acc


WORKLOADS = (("groebner+basis", grobner_workload), ("normal-form batch", reduction_workload))


def best_of(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    args = ap.parse_args()

    backends = kernel.available_backends()
    if len(backends) < 2:
        print("compiled kernel not available; nothing to compare")

    times = {}
    checks = {}
    for name in backends:
        kernel.use_backend(name)
        for wname, fn in WORKLOADS:
            t, result = best_of(fn, args.repeat)
            times[(name, wname)] = t
            checks.setdefault(wname, set()).add(result)

    for wname, results in checks.items():
        assert len(results) == 1, f"backends disagree on {wname}: {results}"

    width = max(len(w) for w, _ in WORKLOADS)
    print(f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + "   speedup")
    for wname, _ in WORKLOADS:
        row = [times[(b, wname)] for b in backends]
        cells = "  ".join(f"{t * 1e3:9.2f}ms" for t in row)
        speed = row[0] / row[-1] if len(row) > 1 else 1.0
        print(f"{wname:<{width}}  {cells}   {speed:6.2f}x")


if __name__ == "__main__":
    main()
