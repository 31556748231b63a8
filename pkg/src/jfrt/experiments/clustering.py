"""Windowing, JFRT features, k-means and label-matched accuracy."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment
from sklearn.cluster import KMeans

from ..errors import GeometryMismatch, TooFewPoints, TooManyLabels, WindowTooLarge
from ..frt import dfrt_matrix
from ..gfrt import GftOperator, gfrt_matrix
from ..joint import as_order
from .noise import add_sparse_noise

MAX_LABELS = 8


@dataclass(frozen=True)
class WindowedSequence:
    windows: list
    window_length: int
    step: int
    clipped_samples: int

    @property
    def offsets(self):
        return [i * self.step for i in range(len(self.windows))]


def window_signal(X: np.ndarray, W: int, overlap_fraction: float) -> WindowedSequence:
    """Cut ``X`` into rectangular windows along time.

    The step is ``round(W * (1 - overlap))``; samples past the last full window
    are dropped and counted in ``clipped_samples``.
    """
    X = np.asarray(X)
    T = X.shape[1]
    if W < 1 or W > T:
        raise WindowTooLarge(f"window length {W} does not fit {T} samples")
    if not (0.0 <= overlap_fraction < 1.0):
        raise ValueError(f"overlap must be in [0, 1), got {overlap_fraction}")
    step = max(1, int(round(W * (1.0 - overlap_fraction))))
    count = (T - W) // step + 1
    windows = [X[:, i * step:i * step + W] for i in range(count)]
    clipped = T - ((count - 1) * step + W)
    return WindowedSequence(windows=windows, window_length=W, step=step, clipped_samples=clipped)


def window_labels(sample_labels, seq: WindowedSequence) -> np.ndarray:
    """Majority label of the samples inside each window (smallest label on ties)."""
    sample_labels = np.asarray(sample_labels)
    out = []
    for start in seq.offsets:
        vals, counts = np.unique(sample_labels[start:start + seq.window_length], return_counts=True)
        out.append(vals[np.argmax(counts)])
    return np.array(out)


def _check_geometry(seqs):
    if not seqs:
        raise GeometryMismatch("need at least one coordinate dimension")
    ref = seqs[0]
    for s in seqs[1:]:
        if (len(s.windows) != len(ref.windows) or s.window_length != ref.window_length
                or s.step != ref.step or s.windows[0].shape != ref.windows[0].shape):
            raise GeometryMismatch("coordinate dimensions have different window geometry")
    return ref


def jfrt_features(seqs, g: GftOperator, order) -> np.ndarray:
    """One row per window: ``|JFRT|`` of every dimension's window, flattened and concatenated."""
    ref = _check_geometry(list(seqs))
    alpha, beta = as_order(order)
    if ref.windows[0].shape[0] != g.size:
        raise GeometryMismatch("window rows do not match the graph size")
    graph_op = gfrt_matrix(g, beta)
    time_op = dfrt_matrix(ref.window_length, alpha).T
    return np.array([
        np.concatenate([np.abs(graph_op @ s.windows[i] @ time_op).ravel() for s in seqs])
        for i in range(len(ref.windows))
    ])


def raw_features(seqs) -> np.ndarray:
    """Untransformed windows, flattened and concatenated across dimensions."""
    ref = _check_geometry(list(seqs))
    return np.array([
        np.concatenate([np.real_if_close(s.windows[i]).ravel() for s in seqs])
        for i in range(len(ref.windows))
    ])


def kmeans(features: np.ndarray, k: int, seed: int, n_init: int = 10,
           normalize: bool = False) -> np.ndarray:
    """Lloyd k-means with k-means++ seeding, best of ``n_init`` restarts."""
    features = np.asarray(features, dtype=float)
    if k > features.shape[0]:
        raise TooFewPoints(f"cannot form {k} clusters from {features.shape[0]} points")
    if normalize:
        scale = features.std(axis=0)
        features = features / np.where(scale > 0, scale, 1.0)
    model = KMeans(n_clusters=k, init="k-means++", n_init=n_init, algorithm="lloyd",
                   random_state=seed)
    return model.fit_predict(features)


def clustering_accuracy(assignments, ground_truth) -> float:
    """Fraction of items matched under the best one-to-one relabelling of clusters."""
    a = np.asarray(assignments)
    t = np.asarray(ground_truth)
    if a.shape != t.shape:
        raise ValueError("assignments and ground truth differ in length")
    la, lt = np.unique(a), np.unique(t)
    if max(len(la), len(lt)) > MAX_LABELS:
        raise TooManyLabels(f"at most {MAX_LABELS} labels are supported")
    table = np.zeros((len(la), len(lt)), dtype=int)
    np.add.at(table, (np.searchsorted(la, a), np.searchsorted(lt, t)), 1)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return float(table[rows, cols].sum()) / a.size


@dataclass
class ClusterResult:
    label: str
    alpha: float | None
    beta: float | None
    accuracies: list = field(default_factory=list)
    assignments: list = field(default_factory=list)

    @property
    def repeats(self) -> int:
        return len(self.accuracies)

    @property
    def accuracy(self) -> float:
        return float(np.mean(self.accuracies))


def run_clustering(signals, g: GftOperator, sample_labels, orders, *, window: int = 50,
                   overlap: float = 0.6, k: int = 3, repeats: int = 20, seed: int = 0,
                   density: float = 0.1, snr_db: float = -10.0, n_init: int = 10,
                   normalize: bool = False) -> list:
    """Cluster noisy windows at every order, plus the raw-window baseline.

    Repeat ``r`` corrupts each coordinate dimension ``d`` with sparse noise
    seeded from ``(seed + r, d)`` and runs k-means with seed ``seed + r``; all
    orders within a repeat see the same noisy data. Returns one
    :class:`ClusterResult` per order followed by the ``"signal"`` baseline.
    """
    signals = [np.asarray(s) for s in signals]
    orders = [as_order(o) for o in orders]
    results = [ClusterResult("jfrt", o.alpha, o.beta) for o in orders]
    baseline = ClusterResult("signal", None, None)
    truth = None
    for r in range(repeats):
        noisy = []
        for d, X in enumerate(signals):
            stream = int(np.random.SeedSequence([seed + r, d]).generate_state(1)[0])
            noisy.append(add_sparse_noise(X, density, snr_db, stream))
        seqs = [window_signal(X, window, overlap) for X in noisy]
        if truth is None:
            truth = window_labels(sample_labels, seqs[0])
        for res, o in zip(results, orders):
            labels = kmeans(jfrt_features(seqs, g, o), k, seed + r, n_init, normalize)
            res.assignments.append(labels)
            res.accuracies.append(clustering_accuracy(labels, truth))
        labels = kmeans(raw_features(seqs), k, seed + r, n_init, normalize)
        baseline.assignments.append(labels)
        baseline.accuracies.append(clustering_accuracy(labels, truth))
    return results + [baseline]
