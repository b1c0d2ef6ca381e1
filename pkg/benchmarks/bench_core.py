"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_core.py [--repeat N]
"""

import argparse
import random
import time

from domgame import _purecore
from domgame.cgt import GameStore
from domgame.engine import Player, Position, Solver
from domgame.families import Cycle, Path, Star, Union, build
from domgame.graphs import Color, ColoredGraph

try:
    from domgame import _fastcore
except ImportError:
    _fastcore = None


def kernel_args(g):
    closed = [g.closed_neighborhood(v) for v in range(len(g))]
    return closed, g.color_mask(Color.A, Color.C), g.color_mask(Color.B, Color.C)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return ColoredGraph.from_edges([rng.choice("ABC") for _ in range(n)], edges)


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = [
        ("winner P_18", "wins", build(Path(18, (Color.C,) * 18))),
        ("winner C_20", "wins", build(Cycle(20, (Color.C,) * 20))),
        ("winner random n=20", "wins", random_graph(20, 0.15, 1)),
        ("explore P_16", "explore", build(Path(16, (Color.C,) * 16))),
        ("explore random n=16", "explore", random_graph(16, 0.2, 2)),
        ("value 3-star forest", "value", build(Union(tuple(Star(Color.C, 2, 1, 2) for _ in range(3))))),
    ]
    backends = [("python", _purecore)] + ([("compiled", _fastcore)] if _fastcore else [])
    print(f"{'case':28} " + " ".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, kind, g in cases:
        times = []
        for _, mod in backends:
            a = kernel_args(g)
            if kind == "wins":
                fn = lambda: mod.wins(*a, 0, True)
            elif kind == "explore":
                fn = lambda: mod.explore(*a, 0)
            else:
                def fn(mod=mod):
                    s = Solver(g, GameStore())
                    s._core = mod
                    s.value()
            times.append(timeit(fn, args.repeat))
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:28} " + " ".join(f"{t:11.4f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
