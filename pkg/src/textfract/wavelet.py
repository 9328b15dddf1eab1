"""Continuous wavelet coefficient maps with a Gaussian third-derivative
mother wavelet, for visualizing cascade structure in a series."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import as_values

__all__ = ["WaveletMap", "mother_wavelet", "wavelet_map", "SUPPORT_HALF_WIDTH"]

# |psi(x)| < 1e-12 beyond this, so the discrete sum is truncated there.
SUPPORT_HALF_WIDTH = 8.0


@dataclass(frozen=True)
class WaveletMap:
    scales: np.ndarray
    positions: np.ndarray
    coefficients: np.ndarray  # shape (len(scales), len(positions))
    boundary: np.ndarray  # bool, True where the wavelet support exits the series


def mother_wavelet(x):
    """Third derivative of the unnormalized Gaussian exp(-x^2/2):
    psi(x) = (3x - x^3) exp(-x^2/2). Odd, with vanishing moments 0..2,
    so the transform is blind to quadratic trends."""
    x = np.asarray(x, dtype=float)
    return (3.0 * x - x**3) * np.exp(-(x**2) / 2.0)


def default_scales(n: int, n_scales: int = 50) -> np.ndarray:
    """Log-spaced scales in [4, n/10]."""
    s_max = max(n / 10.0, 8.0)
    return np.logspace(np.log10(4.0), np.log10(s_max), n_scales)


def wavelet_map(s_series, scales=None, positions=None) -> WaveletMap:
    """T(s, k) = (1/sqrt(s)) * sum_j l(j) psi((j - k)/s) for every
    requested scale and position.

    No padding is applied; coefficients whose truncated support
    (|x| <= 8) crosses a series edge are flagged in ``boundary`` so
    plots can mask the cone of influence.
    """
    x = as_values(s_series)
    n = len(x)
    if scales is None:
        scales = default_scales(n)
    scales = np.asarray(scales, dtype=float)
    if np.any(scales <= 0):
        raise ValueError("scales must be positive")
    if n < 4 * scales.min():
        raise ValueError(f"series length {n} < 4 * min scale {scales.min()}")
    if positions is None:
        positions = np.arange(1, n + 1)
    positions = np.asarray(positions, dtype=int)
    if positions.min() < 1 or positions.max() > n:
        raise ValueError("positions must lie within the series (1-based)")

    j = np.arange(1, n + 1, dtype=float)
    coeffs = np.empty((len(scales), len(positions)))
    boundary = np.empty((len(scales), len(positions)), dtype=bool)
    for i, s in enumerate(scales):
        half = SUPPORT_HALF_WIDTH * s
        # full correlation with the sampled wavelet, then pick positions
        d = np.arange(-int(np.ceil(half)), int(np.ceil(half)) + 1, dtype=float)
        kernel = mother_wavelet(d / s)
        full = np.convolve(x, kernel[::-1], mode="full")
        offset = int(np.ceil(half))
        row = full[offset : offset + n] / np.sqrt(s)
        coeffs[i] = row[positions - 1]
        boundary[i] = (positions - 1 < half) | (positions - 1 > n - 1 - half)
    return WaveletMap(
        scales=scales, positions=positions, coefficients=coeffs, boundary=boundary
    )
