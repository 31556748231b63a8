"""Discrete fractional Fourier transform built on discrete Hermite-Gaussians.

The Hermite-Gaussian vectors are the eigenvectors of the nearly tridiagonal
matrix ``S`` that commutes with the DFT. ``S`` is split into its even and odd
parts, each part is diagonalized separately, and eigenvectors are ranked by
descending eigenvalue inside each parity class. That ranking agrees with the
zero-crossing count of the vectors and gives the Hermite index.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import normalize_phase


@dataclass(frozen=True)
class DfrtBasis:
    size: int
    hermite_vectors: np.ndarray
    index_map: tuple

    @property
    def phases(self) -> np.ndarray:
        """``-pi k / 2`` for every Hermite index ``k`` (the eigenvalue angles of F)."""
        return -0.5 * np.pi * np.asarray(self.index_map, dtype=float)


def dft_matrix(T: int) -> np.ndarray:
    """Unitary DFT matrix with entries ``exp(-2j pi m n / T) / sqrt(T)``."""
    if T < 1:
        raise ValueError("T must be positive")
    n = np.arange(T)
    # reduce m*n mod T before scaling for accurate phases at large T
    return np.exp(-2j * np.pi * (np.outer(n, n) % T) / T) / np.sqrt(T)


def hermite_indices(N: int) -> list:
    """Hermite indices used by the DFRT sum: index N-1 is skipped for even N."""
    if N % 2 == 0:
        return list(range(N - 1)) + [N]
    return list(range(N))


def commuting_matrix(N: int) -> np.ndarray:
    """The symmetric matrix ``S`` that commutes with the DFT of size N."""
    n = np.arange(N)
    s = np.diag(2.0 * np.cos(2 * np.pi * n / N) - 4.0)
    s[n, (n + 1) % N] += 1.0
    s[n, (n - 1) % N] += 1.0
    return s


def _parity_bases(N):
    half = (N - 1) // 2
    even = np.zeros((N, N // 2 + 1))
    odd = np.zeros((N, half))
    even[0, 0] = 1.0
    r = 1.0 / np.sqrt(2.0)
    for j in range(1, half + 1):
        even[j, j] = even[N - j, j] = r
        odd[j, j - 1] = r
        odd[N - j, j - 1] = -r
    if N % 2 == 0:
        even[N // 2, N // 2] = 1.0
    return even, odd


def zero_crossings(v: np.ndarray, odd: bool | None = None) -> int:
    """Zero-crossing count of a periodic vector centred at index 0.

    Sign changes are counted around the circle after skipping near-zero
    entries. A circular count is always even, so an odd-symmetric vector
    picks up one extra change at the antipode; it is subtracted. Exact for
    the Hermite-Gaussian basis up to N = 47; past that the high-order
    vectors have tails below the zero threshold.
    """
    v = np.real(np.asarray(v))
    N = v.shape[0]
    if odd is None:
        odd = np.allclose(v, -v[(-np.arange(N)) % N], atol=1e-10)
    w = v[np.abs(v) >= 1e-12]
    if w.size == 0:
        return 0
    s = np.sign(w)
    changes = int(np.count_nonzero(s != np.roll(s, 1)))
    return changes - 1 if odd else changes


@lru_cache(maxsize=64)
def dfrt_basis(N: int) -> DfrtBasis:
    """Discrete Hermite-Gaussian basis of size N (cached, read-only)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    s = commuting_matrix(N)
    even, odd = _parity_bases(N)
    columns = {}
    idx = hermite_indices(N)
    for sub, ks in ((even, [k for k in idx if k % 2 == 0]),
                    (odd, [k for k in idx if k % 2 == 1])):
        if not ks:
            continue
        vals, vecs = np.linalg.eigh(sub.T @ s @ sub)
        vecs = sub @ vecs[:, ::-1]
        for k, v in zip(ks, vecs.T):
            columns[k] = v
    u = normalize_phase(np.column_stack([columns[k] for k in idx]))
    # S + cI is a nonnegative irreducible matrix, so its top eigenvector is
    # strictly positive; far tails below roundoff would otherwise flip sign
    u[:, 0] = np.abs(u[:, 0])
    u.setflags(write=False)
    return DfrtBasis(size=N, hermite_vectors=u, index_map=tuple(idx))


def dfrt_matrix(N: int, alpha: float) -> np.ndarray:
    """Order-``alpha`` DFRT matrix ``sum_k u_k exp(-j pi k alpha / 2) u_k^T``."""
    basis = dfrt_basis(N)
    u = basis.hermite_vectors
    return (u * np.exp(1j * alpha * basis.phases)) @ u.T


def frt_apply_rows(X: np.ndarray, alpha: float) -> np.ndarray:
    """Transform every row (time series) of ``X``: returns ``X @ (F^alpha)^T``."""
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[1] < 2:
        raise ValueError("X must be 2-D with at least two columns")
    return X @ dfrt_matrix(X.shape[1], alpha).T
