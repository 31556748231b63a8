"""Tikhonov denoising of joint signals in fractional time-vertex domains.

The estimate minimizes ``||y - x||^2 + x^H (tau_t (L_T)_a (+) tau_g (L_G)_b) x``.
Because the JFRT of order ``(a, b)`` diagonalizes the regularizer, the minimizer
is a pointwise filter ``1 / (1 + tau_g lambda_m^b + tau_t omega_n^a)`` applied
between a forward and an inverse JFRT.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionMismatch, FlavorMismatch
from .frt import dfrt_matrix
from .gfrt import GftOperator, gfrt_matrix, ring_spectrum
from .graph import Laplacian
from .joint import (
    FractionalOrderPair,
    JointFractionalLaplacian,
    as_order,
    joint_fractional_laplacian,
    joint_fractional_variation,
)
from .linalg import psd_fractional_power


class RegularizationParams(NamedTuple):
    tau_g: float
    tau_t: float


def as_params(params) -> RegularizationParams:
    tau_g, tau_t = (float(p) for p in params)
    for name, tau in (("tau_g", tau_g), ("tau_t", tau_t)):
        if not np.isfinite(tau) or tau < 0:
            raise ValueError(f"{name} must be finite and nonnegative, got {tau}")
    return RegularizationParams(tau_g, tau_t)


@dataclass(frozen=True)
class JointFilter:
    order: FractionalOrderPair
    params: RegularizationParams
    coefficients: np.ndarray


def filter_coefficients(graph_spectrum, time_spectrum, order, params) -> np.ndarray:
    """``h[m, n] = 1 / (1 + tau_g lambda_m**beta + tau_t omega_n**alpha)``."""
    order = as_order(order)
    params = as_params(params)
    lam = psd_fractional_power(graph_spectrum, order.beta)
    omega = psd_fractional_power(time_spectrum, order.alpha)
    return 1.0 / (1.0 + params.tau_g * lam[:, None] + params.tau_t * omega[None, :])


def build_filter(L: JointFractionalLaplacian, params) -> JointFilter:
    """Optimal Tikhonov filter on the spectral grid of ``L``'s per-domain spectra."""
    params = as_params(params)
    h = 1.0 / (1.0 + params.tau_g * L.graph_part.spectrum[:, None]
               + params.tau_t * L.time_part.spectrum[None, :])
    return JointFilter(order=L.order, params=params, coefficients=h)


def regularized_joint_fractional_laplacian(l: Laplacian, T: int, order, params,
                                           op: GftOperator | None = None) -> JointFractionalLaplacian:
    """``tau_t (L_T)_alpha (+) tau_g (L_G)_beta``."""
    params = as_params(params)
    base = joint_fractional_laplacian(l, T, order, op)
    return JointFractionalLaplacian(order=base.order, time_part=base.time_part,
                                    graph_part=base.graph_part,
                                    tau_g=params.tau_g, tau_t=params.tau_t)


class _OrderTransforms:
    """Forward and inverse factors of one JFRT order, reused across tau values."""

    def __init__(self, g: GftOperator, T: int, order: FractionalOrderPair,
                 graph_factors=None, time_factors=None):
        self.order = order
        self.graph_fwd, self.graph_inv, self.lam = graph_factors or _graph_factors(g, order.beta)
        self.time_fwd, self.time_inv, self.omega = time_factors or _time_factors(T, order.alpha)

    def forward(self, Y):
        return self.graph_fwd @ Y @ self.time_fwd.T

    def inverse(self, Z):
        return self.graph_inv @ Z @ self.time_inv.T

    def gains(self, params: RegularizationParams):
        return 1.0 / (1.0 + params.tau_g * self.lam[:, None] + params.tau_t * self.omega[None, :])


def _graph_factors(g: GftOperator, beta: float):
    return gfrt_matrix(g, beta), gfrt_matrix(g, -beta), psd_fractional_power(g.source_spectrum, beta)


def _time_factors(T: int, alpha: float):
    return dfrt_matrix(T, alpha), dfrt_matrix(T, -alpha), psd_fractional_power(ring_spectrum(T), alpha)


def _check_laplacian_gft(g: GftOperator):
    if g.flavor != "laplacian" or g.source_spectrum is None:
        raise FlavorMismatch("denoising needs a Laplacian-flavor GFT with its spectrum")


def _check_shape(Y, g):
    Y = np.asarray(Y)
    if Y.ndim != 2 or Y.shape[0] != g.size:
        raise DimensionMismatch(f"signal shape {Y.shape} does not match a graph of {g.size} vertices")
    if Y.shape[1] < 3:
        raise DimensionMismatch("the time Laplacian needs at least 3 samples")
    return Y


def denoise_spectral(Y: np.ndarray, g: GftOperator, order, params) -> np.ndarray:
    """Closed-form Tikhonov estimate: inverse JFRT of ``h * JFRT(Y)``."""
    _check_laplacian_gft(g)
    Y = _check_shape(Y, g)
    tr = _OrderTransforms(g, Y.shape[1], as_order(order))
    return tr.inverse(tr.gains(as_params(params)) * tr.forward(Y))


def tikhonov_objective(x: np.ndarray, y: np.ndarray, L: JointFractionalLaplacian) -> float:
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise DimensionMismatch(f"x has shape {x.shape} but y has {y.shape}")
    residual = float(np.vdot(y - x, y - x).real)
    return residual + joint_fractional_variation(x, L)


def mse_percent(estimate: np.ndarray, clean: np.ndarray) -> float:
    """``100 ||estimate - clean||_F^2 / ||clean||_F^2``."""
    err = np.asarray(estimate) - np.asarray(clean)
    return 100.0 * float(np.vdot(err, err).real) / float(np.vdot(clean, clean).real)


class SweepRow(NamedTuple):
    alpha: float
    beta: float
    tau_g: float
    tau_t: float
    mse_percent: float


@dataclass
class SweepResult:
    rows: list
    grid_shape: tuple
    noisy_mse_percent: float
    extras: dict = field(default_factory=dict)

    @property
    def argmin(self) -> SweepRow:
        # first minimum in grid order, so ties resolve deterministically
        return min(self.rows, key=lambda r: r.mse_percent)

    def best_at(self, alpha: float, beta: float) -> SweepRow:
        """Lowest-MSE row among those with the given orders."""
        sub = [r for r in self.rows if r.alpha == alpha and r.beta == beta]
        if not sub:
            raise KeyError(f"order ({alpha}, {beta}) not in the sweep grid")
        return min(sub, key=lambda r: r.mse_percent)

    def summary(self) -> dict:
        return {"argmin": self.argmin._asdict(), "grid_shape": list(self.grid_shape),
                "noisy_mse_percent": self.noisy_mse_percent, **self.extras}


def denoise_sweep(Y: np.ndarray, clean: np.ndarray, g: GftOperator,
                  alpha_grid: Sequence[float], beta_grid: Sequence[float],
                  tau_g_grid: Sequence[float], tau_t_grid: Sequence[float],
                  workers: int = 1) -> SweepResult:
    """MSE% of the Tikhonov estimate over the full ``alpha x beta x tau_g x tau_t`` grid.

    Rows come out in grid order (alpha slowest, tau_t fastest) no matter how
    many worker threads evaluate the order pairs.
    """
    _check_laplacian_gft(g)
    Y = _check_shape(Y, g)
    clean = np.asarray(clean)
    if clean.shape != Y.shape:
        raise DimensionMismatch(f"clean shape {clean.shape} differs from noisy {Y.shape}")
    grids = [list(map(float, grid)) for grid in (alpha_grid, beta_grid, tau_g_grid, tau_t_grid)]
    if any(len(grid) == 0 for grid in grids):
        raise ValueError("sweep grids must be nonempty")
    alphas, betas, tau_gs, tau_ts = grids
    taus = [as_params(p) for p in itertools.product(tau_gs, tau_ts)]
    T = Y.shape[1]

    # factors depend on one order each, so build them once per grid value
    graph = {b: _graph_factors(g, b) for b in betas}
    times = {a: _time_factors(T, a) for a in alphas}

    def run(order):
        tr = _OrderTransforms(g, T, FractionalOrderPair(*order), graph[order[1]], times[order[0]])
        Z = tr.forward(Y)
        return [SweepRow(order[0], order[1], p.tau_g, p.tau_t,
                         mse_percent(tr.inverse(tr.gains(p) * Z), clean)) for p in taus]

    orders = list(itertools.product(alphas, betas))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, orders))
    else:
        chunks = [run(o) for o in orders]
    rows = [row for chunk in chunks for row in chunk]
    return SweepResult(rows=rows, grid_shape=tuple(len(g_) for g_ in grids),
                       noisy_mse_percent=mse_percent(Y, clean))
