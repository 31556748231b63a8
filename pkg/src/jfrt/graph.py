"""Graphs, Laplacians and the circular graphs that model the time axis."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.spatial.distance import cdist

from .errors import DegenerateGeometry, NotUndirected, TooSmall
from .linalg import SpectralBasis, hermitian_eig

EARTH_RADIUS_KM = 6371.0088


@dataclass(frozen=True)
class Graph:
    """Weighted graph given by its adjacency matrix.

    In undirected mode the adjacency must be symmetric, nonnegative and have
    a zero diagonal. Directed graphs may carry arbitrary complex weights.
    """

    adjacency: np.ndarray
    directed: bool = False
    coords: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        a = np.asarray(self.adjacency)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got {a.shape}")
        if not self.directed:
            if np.iscomplexobj(a):
                if np.any(a.imag != 0):
                    raise NotUndirected("undirected adjacency must be real")
                a = a.real
            if not np.array_equal(a, a.T):
                raise NotUndirected("undirected adjacency must be symmetric")
            if np.any(np.diag(a) != 0):
                raise ValueError("undirected adjacency must have a zero diagonal")
            if np.any(a < 0):
                raise ValueError("undirected adjacency must be nonnegative")
        a = np.array(a, copy=True)
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    def edges(self):
        """Undirected edges ``(m, n, weight)`` with ``m < n``, row-major order."""
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(m), int(n), float(self.adjacency[m, n])) for m, n in zip(rows, cols)]

    @cached_property
    def laplacian(self) -> "Laplacian":
        return laplacian(self)


@dataclass(frozen=True)
class Laplacian:
    matrix: np.ndarray
    basis: SpectralBasis

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.basis.values


def laplacian(g: Graph) -> Laplacian:
    """Combinatorial Laplacian ``L = D - A`` with its eigenbasis."""
    if g.directed:
        raise NotUndirected("Laplacian is only defined here for undirected graphs")
    a = g.adjacency
    lap = np.diag(a.sum(axis=1)) - a
    basis = hermitian_eig(lap)
    values = basis.values.copy()
    # an exact zero keeps 0**p well defined for the constant mode
    values[np.abs(values) <= 1e-10] = 0.0
    return Laplacian(matrix=lap, basis=SpectralBasis(basis.vectors, values))


def _haversine(latlon):
    rad = np.radians(np.asarray(latlon, dtype=float))
    lat, lon = rad[:, 0:1], rad[:, 1:2]
    dlat = lat - lat.T
    dlon = lon - lon.T
    h = np.sin(dlat / 2) ** 2 + np.cos(lat) * np.cos(lat.T) * np.sin(dlon / 2) ** 2
    return 2 * EARTH_RADIUS_KM * np.arcsin(np.sqrt(np.clip(h, 0.0, 1.0)))


def _dedupe(coords):
    lo, hi = coords.min(axis=0), coords.max(axis=0)
    diag = float(np.linalg.norm(hi - lo))
    if diag == 0.0:
        raise DegenerateGeometry("all points coincide")
    _, first, counts = np.unique(coords, axis=0, return_index=True, return_counts=True)
    if np.all(counts == 1):
        return coords
    coords = coords.copy()
    seen = set(first.tolist())
    d = coords.shape[1]
    for i in range(coords.shape[0]):
        if i in seen:
            continue
        # deterministic direction keyed by the point index
        direction = np.cos(np.arange(1, d + 1) * (i + 1.0))
        coords[i] += 1e-9 * diag * direction / np.linalg.norm(direction)
    return coords


def pairwise_distances(coords, metric: str = "euclidean") -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    if metric == "euclidean":
        return cdist(coords, coords)
    if metric == "haversine":
        if coords.shape[1] != 2:
            raise ValueError("haversine distance needs (lat, lon) pairs")
        return _haversine(coords)
    raise ValueError(f"unknown metric {metric!r}")


def build_knn_graph(coords, k: int, weight_mode: str = "gaussian",
                    metric: str = "euclidean") -> Graph:
    """Symmetric k-nearest-neighbour graph.

    An edge joins ``m`` and ``n`` when either is among the other's ``k``
    nearest points. Gaussian weights are ``exp(-d**2 / sigma**2)`` with
    ``sigma`` the mean distance to the k-th neighbour; binary weights are 1.
    Coincident points are nudged apart by ``1e-9`` of the bounding-box
    diagonal before distances are taken.
    """
    coords = np.asarray(coords, dtype=float)
    if coords.ndim == 1:
        coords = coords[:, None]
    n = coords.shape[0]
    if k < 1:
        raise ValueError("k must be positive")
    if n < k + 1:
        raise ValueError(f"need at least k+1={k + 1} points, got {n}")
    if weight_mode not in ("gaussian", "binary"):
        raise ValueError(f"unknown weight_mode {weight_mode!r}")
    coords = _dedupe(coords)
    dist = pairwise_distances(coords, metric)
    np.fill_diagonal(dist, np.inf)
    nearest = np.argsort(dist, axis=1, kind="stable")[:, :k]
    mask = np.zeros((n, n), dtype=bool)
    mask[np.repeat(np.arange(n), k), nearest.ravel()] = True
    mask |= mask.T
    if weight_mode == "binary":
        adj = mask.astype(float)
    else:
        sigma = float(np.mean(dist[np.arange(n), nearest[:, -1]]))
        np.fill_diagonal(dist, 0.0)
        adj = np.where(mask, np.exp(-(dist / sigma) ** 2), 0.0)
    return Graph(adjacency=adj, coords=coords)


def ring_graph(T: int) -> Graph:
    """Undirected cycle on T vertices."""
    if T < 3:
        raise TooSmall("a ring graph needs at least 3 vertices")
    n = np.arange(T)
    adj = np.zeros((T, T))
    adj[n, (n + 1) % T] = 1.0
    adj[(n + 1) % T, n] = 1.0
    return Graph(adjacency=adj)


def directed_circular_graph(T: int) -> Graph:
    """Directed cycle whose adjacency is the cyclic delay ``(A x)_m = x_{m-1}``."""
    if T < 2:
        raise TooSmall("a directed cycle needs at least 2 vertices")
    n = np.arange(T)
    adj = np.zeros((T, T))
    adj[n, (n - 1) % T] = 1.0
    return Graph(adjacency=adj, directed=True)


def time_gradient(T: int) -> np.ndarray:
    """Cyclic first difference ``(grad x)_m = x_m - x_{m-1}``."""
    if T < 2:
        raise TooSmall("T must be at least 2")
    n = np.arange(T)
    grad = np.zeros((T, T))
    grad[n, n] += 1.0
    grad[n, (n - 1) % T] -= 1.0
    return grad


def graph_gradient(g: Graph) -> np.ndarray:
    """Edge-by-vertex gradient with ``grad^T grad = L`` (one row per edge)."""
    if g.directed:
        raise NotUndirected("gradient requires an undirected graph")
    edges = g.edges()
    grad = np.zeros((len(edges), g.n_vertices))
    for row, (m, n, w) in enumerate(edges):
        grad[row, m] = np.sqrt(w)
        grad[row, n] = -np.sqrt(w)
    return grad
