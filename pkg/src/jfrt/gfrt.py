"""Graph Fourier transforms, their fractional powers, and fractional Laplacians.

A fractional Laplacian of order ``a`` is ``W^H diag(lambda**a) W`` where ``W``
is the order-``a`` fractional transform whose order-1 member diagonalizes the
Laplacian. For a graph, ``W`` is the graph fractional Fourier transform of the
Laplacian GFT ``U^H``; for the time axis (ring graph) it is the DFRT. Both are
fractional powers of ``U^H``, so ``W^H`` is a fractional power of ``U``, and the
same ``W`` matrices appear in the joint transform. That is what makes the
Tikhonov filter exactly diagonal in the fractional domain.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Defective, FlavorMismatch, NegativeOrder, TooSmall
from .frt import dfrt_basis, dfrt_matrix, dft_matrix
from .graph import Graph, Laplacian, laplacian
from .linalg import (
    FractionalBasis,
    diagonalizable_fractional_basis,
    hermitian_eig,
    psd_fractional_power,
    unitary_fractional_basis,
)


@dataclass(frozen=True)
class GftOperator:
    """A graph Fourier transform and a diagonalization of it for fractional powers."""

    forward: np.ndarray
    inverse: np.ndarray
    flavor: str
    basis: FractionalBasis
    source_spectrum: np.ndarray | None = None

    @property
    def size(self) -> int:
        return self.forward.shape[0]

    @property
    def is_unitary(self) -> bool:
        n = self.size
        return bool(np.linalg.norm(self.forward @ self.forward.conj().T - np.eye(n)) <= 1e-9 * n)


@dataclass(frozen=True)
class FractionalLaplacian:
    order: float
    matrix: np.ndarray
    spectrum: np.ndarray
    vectors_power: np.ndarray

    @property
    def transform(self) -> np.ndarray:
        """The fractional transform that diagonalizes this operator."""
        return self.vectors_power.conj().T


def gft_from_laplacian(l: Laplacian) -> GftOperator:
    """Laplacian GFT ``F_G = U^H`` (unitary)."""
    u = l.basis.vectors
    forward = u.conj().T
    return GftOperator(forward=forward, inverse=u, flavor="laplacian",
                       basis=unitary_fractional_basis(forward),
                       source_spectrum=l.basis.values)


def gft_from_adjacency(g: Graph, max_cond: float = 1e8) -> GftOperator:
    """Adjacency GFT ``F_G = V^-1`` from the eigenvectors of the adjacency.

    Raises :class:`Defective` when the eigenvector matrix is too ill
    conditioned to count as a diagonalization.
    """
    a = np.asarray(g.adjacency)
    if np.allclose(a, a.conj().T, rtol=0, atol=1e-12):
        v = hermitian_eig(a).vectors
        forward = v.conj().T
        return GftOperator(forward=forward, inverse=v, flavor="adjacency",
                           basis=unitary_fractional_basis(forward))
    values, v = np.linalg.eig(a)
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > max_cond:
        raise Defective(f"adjacency is not diagonalizable (cond {cond:.3g})")
    forward = np.linalg.inv(v)
    n = a.shape[0]
    if np.linalg.norm(forward @ forward.conj().T - np.eye(n)) <= 1e-9 * n:
        basis = unitary_fractional_basis(forward)
    else:
        basis = diagonalizable_fractional_basis(forward, max_cond)
    return GftOperator(forward=forward, inverse=v, flavor="adjacency", basis=basis)


def circular_gft(g: Graph, tol: float = 1e-8) -> GftOperator:
    """DFT-based GFT of a circulant graph, fractionalized with Hermite-Gaussians.

    Works for the directed cycle (adjacency) and the ring (Laplacian), which
    the DFT diagonalizes. Fractional powers of the result are DFRT matrices.
    """
    n = g.n_vertices
    f = dft_matrix(n)
    shift = g.adjacency if g.directed else laplacian(g).matrix
    d = f @ shift @ f.conj().T
    off = d - np.diag(np.diag(d))
    if np.linalg.norm(off) > tol * max(1.0, np.linalg.norm(shift)):
        raise Defective("the DFT does not diagonalize this graph")
    hb = dfrt_basis(n)
    u = hb.hermite_vectors.astype(complex)
    basis = FractionalBasis(vectors=u, inverse=u.T, log_values=1j * hb.phases)
    return GftOperator(forward=f, inverse=f.conj().T, flavor="adjacency" if g.directed else "laplacian",
                       basis=basis, source_spectrum=None if g.directed else ring_spectrum(n))


def gfrt_matrix(op: GftOperator, beta: float) -> np.ndarray:
    """Graph fractional Fourier transform ``F_G**beta``."""
    return op.basis.power(beta)


def _from_transform(transform, spectrum, order):
    powered = psd_fractional_power(spectrum, order)
    matrix = (transform.conj().T * powered) @ transform
    matrix = 0.5 * (matrix + matrix.conj().T)
    return FractionalLaplacian(order=order, matrix=matrix, spectrum=powered,
                               vectors_power=transform.conj().T)


def fractional_laplacian(l: Laplacian, order: float, op: GftOperator | None = None) -> FractionalLaplacian:
    """Graph fractional Laplacian ``U^a diag(lambda**a) (U^a)^H``.

    ``U^a`` is taken as ``(F_G^a)^H`` with ``F_G = U^H``; pass ``op`` to reuse a
    GFT already built from ``l``.
    """
    if order < 0:
        raise NegativeOrder(f"fractional Laplacian order must be >= 0, got {order}")
    if op is None:
        op = gft_from_laplacian(l)
    elif op.flavor != "laplacian":
        raise FlavorMismatch("fractional Laplacian needs a Laplacian-flavor GFT")
    return _from_transform(gfrt_matrix(op, order), l.basis.values, order)


def ring_spectrum(T: int) -> np.ndarray:
    """Ring Laplacian eigenvalues ``2 - 2 cos(2 pi n / T)`` in DFT frequency order."""
    n = np.arange(T)
    return 2.0 - 2.0 * np.cos(2 * np.pi * n / T)


def fractional_time_laplacian(T: int, order: float) -> FractionalLaplacian:
    """Time fractional Laplacian of the length-T ring, diagonalized by the DFRT.

    The ring Laplacian is ``F^H diag(omega) F`` with ``F`` the unitary DFT; its
    order-``a`` version uses the DFRT ``F^a`` in place of ``F``.
    """
    if T < 3:
        raise TooSmall("time axis needs at least 3 samples")
    if order < 0:
        raise NegativeOrder(f"fractional Laplacian order must be >= 0, got {order}")
    return _from_transform(dfrt_matrix(T, order), ring_spectrum(T), order)
