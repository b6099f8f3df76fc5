"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_kernels.py [--repeat 200] [--trials 2000]

Part one times ``rref_table`` / ``rref_prime`` directly on random matrices of
the sizes the decoder produces. Part two times whole unique-decoding trials
with each backend, running the pure one in a subprocess with
``FSCODE_PURE_PYTHON=1``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from fscode import kernels
from fscode.algebra import ext_field_new

try:
    from fscode import _ckernels
except ImportError:
    _ckernels = None

TRIAL_SNIPPET = """
import time
from fscode.kernels import BACKEND
from fscode.sim import SimConfig, run_trials
cfg = SimConfig(trials={trials}, master_seed=1, mu=2)
t = time.perf_counter()
st = run_trials(cfg)
print(BACKEND, (time.perf_counter() - t) / cfg.trials * 1e6, st.failures)
"""


def bench_rref(repeat):
    cases = [((2, 9), 10, 12), ((2, 9), 20, 24), ((3, 5), 10, 12), ((2, 12), 30, 36)]
    mods = [("python", kernels.pure)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'field':>10} {'shape':>8} " + " ".join(f"{n:>12}" for n, _ in mods) + "   speedup")
    for (q, m), r, c in cases:
        F = ext_field_new(q, m)
        rng = random.Random(0)
        rows = [[F.random(rng) for _ in range(c)] for _ in range(r)]
        times = []
        for _, mod in mods:
            tabs = mod.prepare_tables(F._exp, F._log, F._zech)
            t = timeit.timeit(lambda: mod.rref_table(rows, c, q, *tabs), number=repeat) / repeat
            times.append(t)
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{f'GF({q}^{m})':>10} {f'{r}x{c}':>8} " + " ".join(f"{t * 1e6:10.1f}us" for t in times) + "  " + speed)
    for p, r, c in [(2, 30, 60), (3, 20, 40)]:
        rng = random.Random(1)
        rows = [[rng.randrange(p) for _ in range(c)] for _ in range(r)]
        times = [timeit.timeit(lambda: mod.rref_prime(rows, c, p), number=repeat) / repeat for _, mod in mods]
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{f'GF({p})':>10} {f'{r}x{c}':>8} " + " ".join(f"{t * 1e6:10.1f}us" for t in times) + "  " + speed)


def bench_trials(trials):
    code = TRIAL_SNIPPET.format(trials=trials)
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("FSCODE_PURE_PYTHON", None)
        if pure:
            env["FSCODE_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, us, fails = out.stdout.split()
        print(f"{backend:>8}: {float(us):7.1f} us per decoding trial ({trials} trials, {fails} failures)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--trials", type=int, default=2000)
    args = ap.parse_args()
    print("active backend:", kernels.BACKEND)
    bench_rref(args.repeat)
    bench_trials(args.trials)


if __name__ == "__main__":
    main()
