"""Datasets: CSV ingestion and synthetic time-vertex generators."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionMismatch
from ..graph import Graph, build_knn_graph, laplacian
from ..gfrt import ring_spectrum
from .io import read_coords_csv, read_signal_csv


@dataclass(frozen=True)
class Dataset:
    """A graph with one or more joint signals on it.

    ``signals`` holds one ``N x T`` array per coordinate dimension (a single
    entry for scalar data). ``sample_labels`` gives a class per time sample when
    ground truth is known.
    """

    graph: Graph
    signals: tuple
    meta: dict = field(default_factory=dict)
    sample_labels: np.ndarray | None = None

    def __post_init__(self):
        for s in self.signals:
            if s.shape[0] != self.graph.n_vertices:
                raise DimensionMismatch(
                    f"signal has {s.shape[0]} rows but the graph has {self.graph.n_vertices} vertices")

    @property
    def signal(self) -> np.ndarray:
        return self.signals[0]


def load_timeseries_csv(signal_path, coords_path, k: int, header: bool = False,
                        weight_mode: str = "gaussian") -> Dataset:
    """Load an ``N x T`` signal and station coordinates, and build a k-NN graph."""
    X = read_signal_csv(signal_path, header=header)
    coords, metric = read_coords_csv(coords_path)
    if coords.shape[0] != X.shape[0]:
        raise DimensionMismatch(
            f"{signal_path} has {X.shape[0]} rows but {coords_path} lists {coords.shape[0]} vertices")
    g = build_knn_graph(coords, k, weight_mode=weight_mode, metric=metric)
    return Dataset(graph=g, signals=(X,),
                   meta={"name": str(signal_path), "source": str(signal_path), "metric": metric})


def _smooth(N, T, rng, k):
    coords = rng.random((N, 2))
    g = build_knn_graph(coords, min(k, N - 1))
    lap = laplacian(g)
    u, lam = lap.basis.vectors, lap.basis.values
    n_graph = max(2, N // 6)
    n_freq = max(1, T // 16)
    omega = ring_spectrum(T)
    t = np.arange(T)
    X = np.zeros((N, T))
    for m in range(n_graph):
        for f in range(n_freq + 1):
            amp = rng.standard_normal() / (1.0 + lam[m] + omega[f])
            phase = rng.uniform(0, 2 * np.pi)
            X += amp * np.outer(u[:, m], np.cos(2 * np.pi * f * t / T + phase))
    return Dataset(graph=g, signals=(X,), meta={"name": "smooth", "n_graph_modes": n_graph,
                                                 "n_time_freqs": n_freq})


# (period in samples, spatial extent) of each motion regime
_REGIMES = ((9.0, 0.35), (17.0, 0.5), (29.0, 0.3))


def _motion3(N, T, rng, k):
    rest = rng.random((N, 3))
    g = build_knn_graph(rest, min(k, N - 1))
    bounds = [0, int(round(T / 3)), int(round(2 * T / 3)), T]
    labels = np.zeros(T, dtype=int)
    t = np.arange(T)
    signals = [np.repeat(rest[:, d:d + 1], T, axis=1) for d in range(3)]
    for r, (period, extent) in enumerate(_REGIMES):
        lo, hi = bounds[r], bounds[r + 1]
        labels[lo:hi] = r
        # each regime moves a different region of the mesh in its own direction
        centre = rest[rng.integers(N)]
        weight = np.exp(-np.sum((rest - centre) ** 2, axis=1) / (2 * extent ** 2))
        direction = rng.standard_normal(3)
        direction /= np.linalg.norm(direction)
        phase = rng.uniform(0, 2 * np.pi)
        wave = np.sin(2 * np.pi * t[lo:hi] / period + phase)
        for d in range(3):
            signals[d][:, lo:hi] += 0.3 * direction[d] * np.outer(weight, wave)
    return Dataset(graph=g, signals=tuple(signals), sample_labels=labels,
                   meta={"name": "motion3", "regime_bounds": bounds})


def synthetic_timevertex(kind: str, N: int, T: int, seed: int, k: int = 5) -> Dataset:
    """Synthetic stand-ins for the weather and mesh-motion data.

    ``"smooth"``: a real signal on a random geometric k-NN graph whose energy
    sits on the lowest graph modes and lowest temporal frequencies.

    ``"motion3"``: 3-D positions of ``N`` points over three consecutive
    regimes; in each regime one region of the point cloud oscillates along a
    fixed direction at a regime-specific period. ``sample_labels`` marks the
    regime of every sample.
    """
    if N < 4 or T < 8:
        raise ValueError("need N >= 4 and T >= 8")
    rng = np.random.default_rng(seed)
    if kind == "smooth":
        ds = _smooth(N, T, rng, k)
    elif kind == "motion3":
        ds = _motion3(N, T, rng, k)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    ds.meta["seed"] = seed
    return ds
