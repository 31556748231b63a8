"""Joint time-vertex fractional Fourier transform and joint fractional Laplacians.

A joint signal is an ``N x T`` array: row ``m`` is the time series on vertex
``m``, column ``t`` is the graph signal at time ``t``. Vectorization is column
major, so ``vec(A X B^T) = (B kron A) vec(X)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, NegativeOrder, NonRealQuadraticForm
from .frt import dfrt_matrix
from .gfrt import (
    FractionalLaplacian,
    GftOperator,
    fractional_laplacian,
    fractional_time_laplacian,
    gfrt_matrix,
    gft_from_laplacian,
)
from .graph import Laplacian
from .linalg import MAX_DENSE_DIM, kron, kron_sum


class FractionalOrderPair(NamedTuple):
    alpha: float  # time-domain order
    beta: float  # graph-domain order


def as_order(order) -> FractionalOrderPair:
    alpha, beta = order
    alpha, beta = float(alpha), float(beta)
    if not (np.isfinite(alpha) and np.isfinite(beta)):
        raise ValueError(f"orders must be finite, got {order}")
    return FractionalOrderPair(alpha, beta)


def vec(X: np.ndarray) -> np.ndarray:
    return np.asarray(X).ravel(order="F")


def unvec(x: np.ndarray, n_vertices: int) -> np.ndarray:
    return np.asarray(x).reshape((n_vertices, -1), order="F")


def _check_signal(X, g: GftOperator):
    X = np.asarray(X)
    if X.ndim != 2:
        raise DimensionMismatch(f"joint signal must be 2-D, got shape {X.shape}")
    if X.shape[0] != g.size:
        raise DimensionMismatch(f"signal has {X.shape[0]} rows but the graph has {g.size} vertices")
    if X.shape[1] < 2:
        raise DimensionMismatch("joint signal needs at least two time samples")
    return X


def jfrt_forward(X: np.ndarray, g: GftOperator, order) -> np.ndarray:
    """Order ``(alpha, beta)`` JFRT: ``F_G^beta X (F^alpha)^T``.

    The graph transform acts on columns and the DFRT on rows; no Kronecker
    matrix is formed.
    """
    X = _check_signal(X, g)
    alpha, beta = as_order(order)
    return gfrt_matrix(g, beta) @ X @ dfrt_matrix(X.shape[1], alpha).T


def jfrt_inverse(Y: np.ndarray, g: GftOperator, order) -> np.ndarray:
    alpha, beta = as_order(order)
    return jfrt_forward(Y, g, (-alpha, -beta))


@dataclass(frozen=True)
class JointOperator:
    order: FractionalOrderPair
    gfrt: np.ndarray
    frt: np.ndarray

    def apply(self, X: np.ndarray) -> np.ndarray:
        return self.gfrt @ X @ self.frt.T

    def matrix(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        """Dense ``F^alpha kron F_G^beta`` acting on ``vec(X)``."""
        return kron(self.frt, self.gfrt, max_dim)


def joint_operator(g: GftOperator, T: int, order) -> JointOperator:
    order = as_order(order)
    return JointOperator(order=order, gfrt=gfrt_matrix(g, order.beta),
                         frt=dfrt_matrix(T, order.alpha))


@dataclass(frozen=True)
class JointFractionalLaplacian:
    """``tau_t (L_T)_alpha (+) tau_g (L_G)_beta``, kept in factored form.

    With unit weights this is the joint fractional Laplacian. ``joint_spectrum``
    holds ``tau_g lambda_m**beta + tau_t omega_n**alpha`` on the ``N x T`` grid
    of the fractional transform domain.
    """

    order: FractionalOrderPair
    time_part: FractionalLaplacian
    graph_part: FractionalLaplacian
    tau_g: float = 1.0
    tau_t: float = 1.0

    @property
    def shape(self):
        return self.graph_part.matrix.shape[0], self.time_part.matrix.shape[0]

    @property
    def joint_spectrum(self) -> np.ndarray:
        return (self.tau_g * self.graph_part.spectrum[:, None]
                + self.tau_t * self.time_part.spectrum[None, :])

    def apply(self, X: np.ndarray) -> np.ndarray:
        """Action on a joint signal, ``tau_g L_G X + tau_t X L_T^T``."""
        return (self.tau_g * (self.graph_part.matrix @ X)
                + self.tau_t * (X @ self.time_part.matrix.T))

    def matrix(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        return kron_sum(self.tau_t * self.time_part.matrix,
                        self.tau_g * self.graph_part.matrix, max_dim)


def joint_fractional_laplacian(l_graph: Laplacian, T: int, order,
                               op: GftOperator | None = None) -> JointFractionalLaplacian:
    """Joint fractional Laplacian ``(L_T)_alpha (+) (L_G)_beta``."""
    order = as_order(order)
    if order.alpha < 0 or order.beta < 0:
        raise NegativeOrder(f"joint fractional Laplacian needs nonnegative orders, got {tuple(order)}")
    if op is None:
        op = gft_from_laplacian(l_graph)
    return JointFractionalLaplacian(
        order=order,
        time_part=fractional_time_laplacian(T, order.alpha),
        graph_part=fractional_laplacian(l_graph, order.beta, op),
    )


def joint_fractional_variation(x: np.ndarray, L: JointFractionalLaplacian) -> float:
    """Quadratic form ``vec(x)^H L vec(x)``, returned as a real number."""
    x = np.asarray(x)
    if x.shape != L.shape:
        raise DimensionMismatch(f"signal shape {x.shape} does not match operator {L.shape}")
    value = np.vdot(x, L.apply(x))
    energy = float(np.vdot(x, x).real)
    if abs(value.imag) > 1e-10 * energy:
        raise NonRealQuadraticForm(f"imaginary part {value.imag:.3g} is not roundoff")
    return float(value.real)
