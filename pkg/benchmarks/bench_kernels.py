"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the skirmish step+observe pair on random unit layouts, a full
environment rollout through each backend, and the simplex grid search of
the proposition brute force.  Results are checked for equality before
timing.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from uasmarl import _pykernels

try:
    from uasmarl import _ckernels
except ImportError:
    _ckernels = None


def _state(rng, na=4, ne=4, size=12):
    n = na + ne
    cells = rng.choice(size * size, size=n, replace=False)
    x, y = (cells % size).astype(np.int64), (cells // size).astype(np.int64)
    max_hp = np.full(n, 40, dtype=np.int64)
    hp = rng.integers(1, 41, size=n).astype(np.int64)
    kind = np.array([0, 0, 0, 1] + [0] * ne, dtype=np.int64)
    act_kind = rng.integers(0, 8, size=na).astype(np.int64)
    act_target = rng.integers(0, na, size=na).astype(np.int64)
    return x, y, hp, max_hp, kind, act_kind, act_target


def step_observe(mod, states, na=4, ne=4, size=12):
    obs = np.zeros((na, 5 + 7 * na + 5 * ne))
    mv, he, at = np.zeros((na, 4), np.int64), np.zeros((na, na), np.int64), np.zeros((na, ne), np.int64)
    for x, y, hp, max_hp, kind, ak, tg in states:
        x, y, hp = x.copy(), y.copy(), hp.copy()
        mod.skirmish_step(x, y, hp, max_hp, kind, na, ak, tg, size, size, 2, 6, 5)
        mod.skirmish_observe(x, y, hp, max_hp, kind, na, size, size, 4, 2, 2, obs, mv, he, at)


def rollout_seconds(pure: bool, episodes: int) -> float:
    """Random-policy episodes through the real env, in a subprocess with the backend forced."""
    code = (
        "import time, numpy as np\n"
        "from uasmarl import kernels\n"
        "from uasmarl.envs import SkirmishEnv\n"
        "env, rng = SkirmishEnv(), np.random.default_rng(0)\n"
        "t0 = time.perf_counter()\n"
        f"for ep in range({episodes}):\n"
        "    _, _, avail = env.reset(seed=ep)\n"
        "    while True:\n"
        "        res = env.step([rng.choice(np.flatnonzero(r)) for r in avail])\n"
        "        avail = res.availability\n"
        "        if res.terminated: break\n"
        "print(kernels.BACKEND, time.perf_counter() - t0)\n"
    )
    env = dict(os.environ, UASMARL_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, secs = out.stdout.split()
    assert backend == ("python" if pure else "cython"), backend
    return float(secs)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--states", type=int, default=2000)
    ap.add_argument("--episodes", type=int, default=50)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1

    rng = np.random.default_rng(0)
    states = [_state(rng) for _ in range(args.states)]
    assert _pykernels.simplex_grid_max(2, 6, 30) == _ckernels.simplex_grid_max(2, 6, 30)

    rows = []
    for label, fn in [("step+observe x%d" % args.states, lambda m: step_observe(m, states)),
                      ("simplex grid n=2 A=6 r=40", lambda m: m.simplex_grid_max(2, 6, 40)),
                      ("simplex grid n=3 A=8 r=20", lambda m: m.simplex_grid_max(3, 8, 20))]:
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        rows.append((label, py, cy))
    py = rollout_seconds(True, args.episodes)
    cy = rollout_seconds(False, args.episodes)
    rows.append((f"env rollout x{args.episodes} episodes", py, cy))

    print(f"{'kernel':34s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for label, py, cy in rows:
        print(f"{label:34s} {py:11.4f} {cy:11.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
