"""Additive noise models with explicit SNR and seeded generators."""
from __future__ import annotations

import math

import numpy as np

from ..errors import BadDensity, ZeroSignal


def noise_std(X: np.ndarray, snr_db: float) -> float:
    """Per-entry noise standard deviation for the requested SNR in dB.

    The noise variance is ``||X||_F^2 / (N T 10**(snr_db / 10))``.
    """
    energy = float(np.vdot(X, X).real)
    if energy == 0.0:
        raise ZeroSignal("cannot set an SNR relative to an all-zero signal")
    return math.sqrt(energy / (X.size * 10.0 ** (snr_db / 10.0)))


def _draw(rng, shape, std, complex_valued):
    if complex_valued:
        # split the variance evenly over the real and imaginary parts
        s = std / math.sqrt(2.0)
        return s * rng.standard_normal(shape) + 1j * s * rng.standard_normal(shape)
    return std * rng.standard_normal(shape)


def add_gaussian_noise(X: np.ndarray, snr_db: float, seed: int) -> np.ndarray:
    """``X`` plus i.i.d. Gaussian noise at ``snr_db``; ``snr_db=inf`` returns a copy."""
    X = np.asarray(X)
    if math.isinf(snr_db) and snr_db > 0:
        return X.copy()
    std = noise_std(X, snr_db)
    rng = np.random.default_rng(seed)
    return X + _draw(rng, X.shape, std, np.iscomplexobj(X))


def add_sparse_noise(X: np.ndarray, density: float, snr_db: float, seed: int) -> np.ndarray:
    """Gaussian noise on a Bernoulli(``density``) subset of entries.

    The noise level per corrupted entry is the same as :func:`add_gaussian_noise`
    would use, and the draws come from the same stream, so ``density=1``
    reproduces it exactly.
    """
    X = np.asarray(X)
    if not (0.0 < density <= 1.0):
        raise BadDensity(f"density must be in (0, 1], got {density}")
    if math.isinf(snr_db) and snr_db > 0:
        return X.copy()
    std = noise_std(X, snr_db)
    rng = np.random.default_rng(seed)
    noise = _draw(rng, X.shape, std, np.iscomplexobj(X))
    mask = rng.random(X.shape) < density
    out = X.astype(np.result_type(X.dtype, noise.dtype), copy=True)
    out[mask] = X[mask] + noise[mask]
    return out
