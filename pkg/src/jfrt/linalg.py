"""Dense complex linear algebra primitives.

Matrices are plain :class:`numpy.ndarray` objects (real or complex). Every
function here is pure; inputs are never modified.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    ConvergenceFailure,
    Defective,
    NegativeEigenvalue,
    NegativeOrder,
    NotHermitian,
    NotUnitary,
    SizeOverflow,
)

#: Largest number of rows (or columns) a materialized Kronecker matrix may have.
MAX_DENSE_DIM = 4096

# Angles this close to +pi are folded onto -pi so that log(-1) = -j*pi.
_BRANCH_SNAP = 1e-9
_ZERO_ENTRY = 1e-12
_CLAMP = 1e-10


@dataclass(frozen=True)
class SpectralBasis:
    """Eigenpairs of a Hermitian matrix.

    ``vectors[:, i]`` is the eigenvector belonging to ``values[i]``; values are
    ascending.
    """

    vectors: np.ndarray
    values: np.ndarray

    @property
    def size(self) -> int:
        return self.values.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


@dataclass(frozen=True)
class FractionalBasis:
    """Diagonalization ``M = P diag(exp(log_values)) P^-1`` used to form ``M**p``.

    Storing logarithms instead of eigenvalues pins the branch once, so all
    fractional powers taken from the same basis are index additive.
    """

    vectors: np.ndarray
    inverse: np.ndarray
    log_values: np.ndarray

    def power(self, p: float) -> np.ndarray:
        return (self.vectors * np.exp(p * self.log_values)) @ self.inverse


def _frobenius(m):
    return float(np.linalg.norm(m))


def _check_square(m, name="matrix"):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")


def normalize_phase(vectors: np.ndarray) -> np.ndarray:
    """Scale each column so its largest-magnitude entry is real and positive.

    Ties for the largest magnitude go to the first index.
    """
    v = np.array(vectors, copy=True)
    if v.size == 0:
        return v
    idx = np.argmax(np.abs(v), axis=0)
    pivots = v[idx, np.arange(v.shape[1])]
    phase = pivots / np.abs(pivots)
    if np.iscomplexobj(v):
        v /= phase
    else:
        v *= np.sign(phase)
    return v


def _tie_key(column):
    col = np.where(np.abs(column) < _ZERO_ENTRY, 0, column)
    nz = np.flatnonzero(col)
    first = int(nz[0]) if nz.size else col.shape[0]
    # larger entries first, compared lexicographically
    rest = tuple(-np.round(np.real(col), 12)) + tuple(-np.round(np.imag(col), 12))
    return (first,) + rest


def hermitian_eig(m: np.ndarray, tol: float = 1e-8) -> SpectralBasis:
    """Eigendecomposition of a Hermitian matrix with deterministic ordering.

    Eigenvalues come out ascending. Each eigenvector has its largest-magnitude
    entry made real positive, and eigenvectors sharing a (numerically) equal
    eigenvalue are ordered by the position of their first nonzero entry, then
    lexicographically by entries, larger first.

    Raises
    ------
    NotHermitian
        If ``||m - m^H||_F > tol * ||m||_F``.
    ConvergenceFailure
        If LAPACK fails to converge.
    """
    m = np.asarray(m)
    _check_square(m)
    scale = _frobenius(m)
    if _frobenius(m - m.conj().T) > tol * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    herm = 0.5 * (m + m.conj().T)
    try:
        values, vectors = np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    vectors = normalize_phase(vectors)

    n = values.shape[0]
    order = np.arange(n)
    gap = 1e-9 * max(1.0, float(np.max(np.abs(values)))) if n else 0.0
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and values[stop] - values[stop - 1] <= gap:
            stop += 1
        if stop - start > 1:
            group = list(range(start, stop))
            group.sort(key=lambda i: _tie_key(vectors[:, i]))
            order[start:stop] = group
        start = stop
    return SpectralBasis(vectors=vectors[:, order], values=values[order])


def principal_log_angle(z: np.ndarray) -> np.ndarray:
    """Argument of ``z`` in ``[-pi, pi)``; -1 maps to -pi."""
    ang = np.angle(z)
    return np.where(ang > np.pi - _BRANCH_SNAP, ang - 2 * np.pi, ang)


def unitary_fractional_basis(u: np.ndarray, tol: float = 1e-8) -> FractionalBasis:
    """Fractional-power basis of a unitary matrix via its complex Schur form.

    For a normal matrix the Schur factor is diagonal, so ``u = Z T Z^H`` is a
    unitary diagonalization even when eigenvalues repeat.
    """
    u = np.asarray(u)
    _check_square(u)
    n = u.shape[0]
    if _frobenius(u @ u.conj().T - np.eye(n)) > tol * n:
        raise NotUnitary("matrix is not unitary within tolerance")
    try:
        t, z = scipy.linalg.schur(u.astype(complex), output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceFailure(str(exc)) from exc
    diag = np.diag(t)
    return FractionalBasis(vectors=z, inverse=z.conj().T,
                           log_values=1j * principal_log_angle(diag))


def unitary_fractional_power(u: np.ndarray, p: float) -> np.ndarray:
    """``u**p`` for unitary ``u`` on the principal branch (arguments in [-pi, pi)).

    >>> np.round(unitary_fractional_power(np.diag([1.0, -1.0]), 0.5), 12)
    array([[1.+0.j, 0.+0.j],
           [0.+0.j, 0.-1.j]])
    """
    return unitary_fractional_basis(u).power(p)


def diagonalizable_fractional_basis(m: np.ndarray, max_cond: float = 1e8) -> FractionalBasis:
    """Fractional-power basis from a general eigendecomposition.

    Raises :class:`Defective` if the eigenvector matrix has condition number
    above ``max_cond`` or an eigenvalue is zero (no logarithm).
    """
    m = np.asarray(m)
    _check_square(m)
    try:
        values, vectors = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    cond = np.linalg.cond(vectors)
    if not np.isfinite(cond) or cond > max_cond:
        raise Defective(f"eigenvector matrix condition number {cond:.3g} exceeds {max_cond:.1g}")
    if np.any(np.abs(values) == 0):
        raise Defective("zero eigenvalue has no logarithm")
    logs = np.log(np.abs(values)) + 1j * principal_log_angle(values)
    return FractionalBasis(vectors=vectors, inverse=np.linalg.inv(vectors), log_values=logs)


def psd_fractional_power(basis, p: float) -> np.ndarray:
    """Elementwise ``values**p`` of a PSD spectrum, with ``0**0 = 1``.

    ``basis`` may be a :class:`SpectralBasis` or a plain vector of eigenvalues.
    Values in ``[-1e-10, 0)`` are treated as roundoff and clamped to zero.
    """
    values = np.asarray(basis.values if isinstance(basis, SpectralBasis) else basis, dtype=float)
    if p < 0:
        raise NegativeOrder(f"negative power {p} is not supported")
    if np.any(values < -_CLAMP):
        raise NegativeEigenvalue(f"eigenvalue {values.min():.3g} below -1e-10")
    values = np.clip(values, 0.0, None)
    if p == 0:
        return np.ones_like(values)
    return values ** p


def kron(a: np.ndarray, b: np.ndarray, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > max_dim:
        raise SizeOverflow(f"Kronecker product of size {rows}x{cols} exceeds cap {max_dim}")
    return np.kron(a, b)


def kron_sum(a: np.ndarray, b: np.ndarray, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
    """Kronecker sum ``a (+) b = a (x) I_b + I_a (x) b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    _check_square(a, "a")
    _check_square(b, "b")
    return (kron(a, np.eye(b.shape[0]), max_dim)
            + kron(np.eye(a.shape[0]), b, max_dim))
