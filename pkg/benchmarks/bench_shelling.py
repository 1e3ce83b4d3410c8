"""Compare the compiled and pure-Python shelling kernels.

    python3 benchmarks/bench_shelling.py [--repeat N] [--budget-secs S]
"""
import argparse
import statistics
import time

from strictspan import _backend
from strictspan.complex import Complex
from strictspan.corpus import example_3_2, random_shellable_ball
from strictspan.errors import Timeout
from strictspan.oracles import is_shellable


def cases():
    yield "example-3-2", example_3_2().complex
    for n in (20, 40, 60):
        yield f"random-ball n={n}", random_shellable_ball(n, n)
    # a ball plus a loose tetrahedron: never shellable, so the search must exhaust
    for n in (12, 16, 20):
        ball = random_shellable_ball(3, n)
        yield f"ball n={n} + stray tet", Complex(ball.facets | {(900, 901, 902, 903)})


def time_one(c, backend, repeat, budget):
    is_shellable(Complex([(1, 2, 3, 4)]), budget, backend)  # warm-up
    samples = []
    outcome = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        try:
            outcome = "found" if is_shellable(c, budget, backend) is not None else "absent"
        except Timeout:
            outcome = "timeout"
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), outcome


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--budget-secs", type=float, default=60.0)
    args = p.parse_args(argv)
    backends = _backend.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'instance':<26}" + "".join(f"{b:>21}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, c in cases():
        row = {b: time_one(c, b, args.repeat, args.budget_secs) for b in backends}
        cells = "".join(f"{row[b][0] * 1000:>10.2f} ms {row[b][1]:>7}" for b in backends)
        extra = ""
        if len(backends) > 1 and row["cython"][0] > 0:
            extra = f"   {row['python'][0] / row['cython'][0]:7.1f}x"
        print(f"{name:<26}{cells}{extra}")


if __name__ == "__main__":
    main()
