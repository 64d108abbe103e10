"""Compare the compiled and pure-Python subset-sum kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from signed_csf import kernels
from signed_csf.chromatic import _edge_arrays
from signed_csf.corpus import random_sample
from signed_csf.paths import build_path


def cases():
    yield "path (3,2,3,2,3)", build_path((3, 2, 3, 2, 3))
    yield "path (1,)*14", build_path((1,) * 14)
    for k, g in enumerate(random_sample(5, 2, seed=3)):
        yield f"random n=5 #{k}", g
    yield "random n=6", random_sample(6, 1, seed=4)[0]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = kernels.compiled_subset_type_sums
    if compiled is None:
        print("compiled kernel not built; only the Python kernel is timed")
    print(f"{'case':<20} {'|E|':>4} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, g in cases():
        arrays = _edge_arrays(g)
        n = g.n_vertices
        t_py = min(timeit.repeat(lambda: kernels.python_subset_type_sums(n, *arrays), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{name:<20} {g.n_edges:>4} {t_py:>10.4f} {'-':>11} {'-':>8}")
            continue
        assert compiled(n, *arrays) == kernels.python_subset_type_sums(n, *arrays)
        t_c = min(timeit.repeat(lambda: compiled(n, *arrays), number=1, repeat=args.repeat))
        print(f"{name:<20} {g.n_edges:>4} {t_py:>10.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
