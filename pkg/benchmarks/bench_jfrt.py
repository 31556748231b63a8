"""Separable versus explicit-Kronecker evaluation of the joint transform.

Times ``F_G^beta X (F^alpha)^T`` computed with two small matrix products
against the same transform applied as a dense ``NT x NT`` matrix to
``vec(X)``. The separable path scales as ``O(NT(N + T))`` and the dense one as
``O(N^2 T^2)``.

    python benchmarks/bench_jfrt.py --sizes 8 16 32 48 --repeats 5
"""
import argparse
import time

import numpy as np

from jfrt import build_knn_graph, gft_from_laplacian, jfrt_forward, joint_operator
from jfrt.joint import vec


def best_time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 48],
                        help="N = T values to time")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    order = (0.905, 1.005)
    print(f"{'N=T':>5} {'separable [ms]':>15} {'kronecker [ms]':>15} {'ratio':>8} {'max diff':>10}")
    for n in args.sizes:
        op = gft_from_laplacian(build_knn_graph(rng.random((n, 2)), min(5, n - 1)).laplacian)
        X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        dense = joint_operator(op, n, order).matrix(max_dim=max(4096, n * n))
        x = vec(X)
        sep = best_time(lambda: jfrt_forward(X, op, order), args.repeats)
        kr = best_time(lambda: dense @ x, args.repeats)
        diff = np.abs(vec(jfrt_forward(X, op, order)) - dense @ x).max()
        print(f"{n:>5} {1e3 * sep:>15.3f} {1e3 * kr:>15.3f} {kr / sep:>8.1f} {diff:>10.1e}")


if __name__ == "__main__":
    main()
