"""Compare the GMP rational backend with the pure-Python fallback.

Each backend runs in a fresh interpreter (the scalar type is fixed at import)
on the same workload: degree analysis plus an 8-point sampling check of
constructed motions with exceptional reductions.

    python3 benchmarks/bench_backends.py [--repeat N] [--motions M]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
from fractions import Fraction
import ratmotion
from ratmotion.analysis import predicted_degree
from ratmotion.construct import exceptional
from ratmotion.quat_algebra import Quaternion
from ratmotion.quat_poly import DualQuatPoly, QuatPoly

T = QuatPoly((0, 1))

def rat(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

def linear_motion(rng):
    p = Quaternion(*(rat(rng) for _ in range(4)))
    w = Quaternion(0, *(rat(rng) for _ in range(3)))
    v = Quaternion(0, p.x, p.y, p.z)
    return DualQuatPoly(T - p, QuatPoly(-(v * w - w * v) / 2))

def instance(k):
    rng = random.Random(f"bench:{k}")
    seed = linear_motion(rng) * linear_motion(rng)
    h = (T - Quaternion(*(rat(rng) for _ in range(4)))) * (T - Quaternion(*(rat(rng) for _ in range(4))))
    return exceptional(seed.primal, seed.dual, h)

motions, repeat = int(sys.argv[1]), int(sys.argv[2])
cases = [instance(k) for k in range(motions)]
best = float("inf")
for _ in range(repeat):
    start = time.perf_counter()
    for c in cases:
        predicted_degree(c, oracle_trials=8)
    best = min(best, time.perf_counter() - start)
print(json.dumps({"backend": ratmotion.BACKEND, "seconds": best}))
"""


def run(backend, motions, repeat):
    env = dict(os.environ, RATMOTION_SCALAR=backend)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(motions), str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--motions", type=int, default=20)
    args = parser.parse_args()
    results = [run(b, args.motions, args.repeat) for b in ("gmpy2", "fraction")]
    base = results[-1]["seconds"]
    print(f"{'backend':<10}{'best of ' + str(args.repeat):>14}{'speedup':>10}")
    for r in results:
        print(f"{r['backend']:<10}{r['seconds']:>13.3f}s{base / r['seconds']:>9.2f}x")


if __name__ == "__main__":
    main()
