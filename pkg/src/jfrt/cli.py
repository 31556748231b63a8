"""Command-line front end.

Subcommands: ``transform``, ``denoise-sweep``, ``cluster`` and ``synth``.
Exit status is 0 on success, 2 for parse or validation errors and 3 for
numerical failures.
"""
from __future__ import annotations

import argparse
import itertools
import logging
import sys
from pathlib import Path

import numpy as np

from .denoise import denoise_sweep
from .errors import NumericalError, ValidationError
from .experiments.clustering import run_clustering
from .experiments.data import load_timeseries_csv, synthetic_timevertex
from .experiments.io import (
    read_coords_csv,
    read_edge_csv,
    read_signal_csv,
    write_coords_csv,
    write_edge_csv,
    write_json,
    write_signal_csv,
    write_table_csv,
)
from .experiments.noise import add_gaussian_noise
from .gfrt import gft_from_laplacian
from .graph import build_knn_graph
from .joint import jfrt_forward, jfrt_inverse

log = logging.getLogger("jfrt")

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 2, 3


def parse_grid(text: str) -> list:
    """``"a:b:step"`` (inclusive of ``b``) or a comma-separated list of numbers."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"grid {text!r} must look like start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"grid {text!r} needs step > 0 and stop >= start")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        return [round(start + i * step, 12) for i in range(count)]
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse grid {text!r}") from None


def _graph_from_spec(spec: str, n_vertices: int):
    # "knn:<k>:<coords.csv>" or a path to an edge-list CSV
    if spec.startswith("knn:"):
        try:
            _, k, path = spec.split(":", 2)
            k = int(k)
        except ValueError:
            raise ValidationError(f"graph spec {spec!r} must be knn:<k>:<coords.csv>") from None
        coords, metric = read_coords_csv(path)
        return build_knn_graph(coords, k, metric=metric)
    return read_edge_csv(spec, n_vertices)


def cmd_transform(args) -> int:
    X = read_signal_csv(args.signal, header=args.header)
    g = _graph_from_spec(args.graph, X.shape[0])
    op = gft_from_laplacian(g.laplacian)
    order = (args.alpha, args.beta)
    Y = jfrt_inverse(X, op, order) if args.inverse else jfrt_forward(X, op, order)
    write_signal_csv(args.out, Y.astype(complex))
    return EXIT_OK


def cmd_denoise_sweep(args) -> int:
    ds = load_timeseries_csv(args.signal, args.coords, args.knn, header=args.header,
                             weight_mode=args.weights)
    clean = ds.signal
    noisy = add_gaussian_noise(clean, args.snr_db, args.seed)
    op = gft_from_laplacian(ds.graph.laplacian)
    result = denoise_sweep(noisy, clean, op, args.alpha_grid, args.beta_grid,
                           args.tau_g_grid, args.tau_t_grid, workers=args.workers)
    write_table_csv(args.out, ["alpha", "beta", "tau_g", "tau_t", "mse_percent"], result.rows)
    summary = result.summary()
    if 1.0 in args.alpha_grid and 1.0 in args.beta_grid:
        summary["best_at_order_1_1"] = result.best_at(1.0, 1.0)._asdict()
    summary.update(snr_db=args.snr_db, seed=args.seed, knn=args.knn)
    write_json(Path(args.out).with_suffix(".json"), summary)
    best = result.argmin
    log.info("argmin alpha=%g beta=%g tau_g=%g tau_t=%g mse%%=%.4f (noisy %.4f)",
             best.alpha, best.beta, best.tau_g, best.tau_t, best.mse_percent,
             result.noisy_mse_percent)
    return EXIT_OK


def cmd_cluster(args) -> int:
    signals = [read_signal_csv(p, header=args.header) for p in args.signals]
    labels = read_signal_csv(args.labels).ravel()
    if not np.all(labels == np.round(labels)):
        raise ValidationError("labels must be integers")
    labels = labels.astype(int)
    if labels.size != signals[0].shape[1]:
        raise ValidationError(f"{labels.size} labels for {signals[0].shape[1]} time samples")
    if args.coords:
        coords, metric = read_coords_csv(args.coords)
    else:
        # mean position of every point over time
        coords, metric = np.column_stack([np.real(s).mean(axis=1) for s in signals]), "euclidean"
    g = build_knn_graph(coords, args.knn, metric=metric)
    op = gft_from_laplacian(g.laplacian)
    orders = list(itertools.product(args.alpha_grid, args.beta_grid))
    results = run_clustering(signals, op, labels, orders, window=args.window,
                             overlap=args.overlap, k=args.k, repeats=args.repeats,
                             seed=args.seed, density=args.density, snr_db=args.snr_db,
                             normalize=args.normalize)
    rows = []
    for res in results:
        a = "" if res.alpha is None else res.alpha
        b = "" if res.beta is None else res.beta
        rows.extend((res.label, a, b, r, acc) for r, acc in enumerate(res.accuracies))
    write_table_csv(args.out, ["method", "alpha", "beta", "repeat", "accuracy"], rows)

    def stats(res):
        q = np.quantile(res.accuracies, [0.0, 0.25, 0.5, 0.75, 1.0])
        return {"method": res.label, "alpha": res.alpha, "beta": res.beta,
                "mean": res.accuracy, "quantiles": [float(v) for v in q]}

    jfrt = [r for r in results if r.label == "jfrt"]
    best = max(jfrt, key=lambda r: r.accuracy)
    write_json(Path(args.out).with_suffix(".json"), {
        "best": stats(best),
        "signal": stats(results[-1]),
        "orders": [stats(r) for r in jfrt],
        "repeats": args.repeats,
        "seed": args.seed,
    })
    log.info("best order (%g, %g) mean accuracy %.4f; raw windows %.4f",
             best.alpha, best.beta, best.accuracy, results[-1].accuracy)
    return EXIT_OK


def cmd_synth(args) -> int:
    ds = synthetic_timevertex(args.kind, args.n, args.t, args.seed)
    prefix = str(args.out_prefix)
    Path(prefix).parent.mkdir(parents=True, exist_ok=True)
    if args.kind == "smooth":
        write_signal_csv(prefix + "_signal.csv", ds.signal)
    else:
        for name, s in zip("xyz", ds.signals):
            write_signal_csv(f"{prefix}_{name}.csv", s)
        write_signal_csv(prefix + "_labels.csv", ds.sample_labels[:, None])
    write_coords_csv(prefix + "_coords.csv", ds.graph.coords)
    write_edge_csv(prefix + "_edges.csv", ds.graph)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jfrt", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="forward or inverse JFRT of a signal CSV")
    p.add_argument("--signal", required=True)
    p.add_argument("--graph", required=True, help="edge-list CSV or knn:<k>:<coords.csv>")
    p.add_argument("--alpha", type=float, required=True, help="time-domain order")
    p.add_argument("--beta", type=float, required=True, help="graph-domain order")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--header", action="store_true", help="signal CSV has a header row")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("denoise-sweep", help="Tikhonov denoising over an order/regularizer grid")
    p.add_argument("--signal", required=True, help="clean N x T signal CSV")
    p.add_argument("--coords", required=True)
    p.add_argument("--knn", type=int, default=5)
    p.add_argument("--weights", choices=["gaussian", "binary"], default="gaussian")
    p.add_argument("--alpha-grid", type=parse_grid, default=parse_grid("0.96:1.04:0.02"))
    p.add_argument("--beta-grid", type=parse_grid, default=parse_grid("0.96:1.04:0.02"))
    p.add_argument("--tau-g-grid", type=parse_grid, default=parse_grid("0.4,1.1,3.8"))
    p.add_argument("--tau-t-grid", type=parse_grid, default=parse_grid("0.4,1.1,3.4"))
    p.add_argument("--snr-db", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--header", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_denoise_sweep)

    p = sub.add_parser("cluster", help="windowed k-means on JFRT features")
    p.add_argument("--signals", nargs="+", required=True, help="one N x T CSV per coordinate dimension")
    p.add_argument("--labels", required=True, help="CSV with one class label per time sample")
    p.add_argument("--coords", help="vertex coordinates; defaults to the time-mean of the signals")
    p.add_argument("--knn", type=int, default=5)
    p.add_argument("--window", type=int, default=50)
    p.add_argument("--overlap", type=float, default=0.6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--alpha-grid", type=parse_grid, default=parse_grid("0:1.25:0.25"))
    p.add_argument("--beta-grid", type=parse_grid, default=parse_grid("0:1.25:0.25"))
    p.add_argument("--repeats", type=int, default=20)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--snr-db", type=float, default=-10.0)
    p.add_argument("--normalize", action="store_true", help="standardize features before k-means")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--header", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("synth", help="write a synthetic dataset")
    p.add_argument("--kind", choices=["smooth", "motion3"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"jfrt: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValidationError, ValueError, OSError) as exc:
        print(f"jfrt: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
