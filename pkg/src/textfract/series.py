"""Numeric series container, surrogates, and synthetic generators.

All randomness goes through ``numpy.random.Generator`` seeded with PCG64,
so every surrogate and generator is a deterministic function of
``(params, seed)`` on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Series",
    "Profile",
    "as_values",
    "profile",
    "shuffle_surrogate",
    "phase_randomized_surrogate",
    "generate_binomial_cascade",
    "generate_fgn",
    "generate_white_noise",
    "cascade_generalized_hurst",
    "cascade_alpha_width",
]


@dataclass(frozen=True)
class Series:
    """An ordered real-valued series with a provenance record.

    ``provenance`` describes where the values came from (e.g.
    ``{"kind": "shuffled", "seed": 7}``); it is carried through
    serialization so every output can be traced back to its inputs.
    """

    values: np.ndarray
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1:
            raise ValueError("series must be one-dimensional")
        if not np.all(np.isfinite(v)):
            raise ValueError("series contains non-finite values")
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class Profile:
    """Cumulative sum of a demeaned series; the input to detrended
    fluctuation analysis."""

    values: np.ndarray
    mean_removed: float


def as_values(s) -> np.ndarray:
    """Accept a Series, array, or sequence and return a float ndarray."""
    if isinstance(s, Series):
        return s.values
    return np.asarray(s, dtype=float)


def profile(s) -> Profile:
    """Cumulative demeaned sum L(j) of the series.

    The terminal value is zero up to accumulated rounding.
    """
    x = as_values(s)
    if len(x) < 2:
        raise ValueError("series too short for a profile (need >= 2 points)")
    mean = float(x.mean())
    return Profile(values=np.cumsum(x - mean), mean_removed=mean)


def shuffle_surrogate(s, seed: int) -> Series:
    """Random permutation of the series: destroys all temporal
    correlations while keeping the value distribution exactly."""
    x = as_values(s)
    rng = np.random.default_rng(seed)
    return Series(rng.permutation(x), provenance={"kind": "shuffled", "seed": int(seed)})


def phase_randomized_surrogate(s, seed: int) -> Series:
    """Fourier-phase randomized surrogate.

    Keeps every spectral amplitude bit-for-bit (so all linear
    correlations survive) and replaces the phases of the positive
    frequencies with uniform draws; DC and, for even length, the Nyquist
    bin stay real so the inverse transform is a real series.
    """
    x = as_values(s)
    n = len(x)
    if n < 4:
        raise ValueError("series too short for phase randomization (need >= 4 points)")
    spec = np.fft.rfft(x)
    rng = np.random.default_rng(seed)
    amplitudes = np.abs(spec)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=len(spec))
    # DC keeps its sign; for even n the last bin is Nyquist and must stay real.
    phases[0] = 0.0 if spec[0].real >= 0 else np.pi
    if n % 2 == 0:
        phases[-1] = 0.0 if spec[-1].real >= 0 else np.pi
    surrogate = np.fft.irfft(amplitudes * np.exp(1j * phases), n=n)
    return Series(surrogate, provenance={"kind": "phase_randomized", "seed": int(seed)})


def generate_binomial_cascade(p: float, levels: int) -> Series:
    """Deterministic binomial multiplicative cascade of length 2**levels.

    Value at index k (1-based) is p**n * (1-p)**(levels-n) with n the
    number of ones in the binary expansion of k-1. The values sum to 1
    exactly, and the generalized Hurst exponent is known in closed form
    (see :func:`cascade_generalized_hurst`), which makes this the main
    correctness oracle for the multifractal estimator.
    """
    if not (0.0 < p <= 0.5):
        raise ValueError(f"p must be in (0, 0.5], got {p}")
    if not (1 <= levels <= 24):
        raise ValueError(f"levels must be in [1, 24], got {levels}")
    k = np.arange(2**levels, dtype=np.uint32)
    ones = np.zeros_like(k)
    for bit in range(levels):
        ones += (k >> bit) & 1
    values = p ** ones.astype(float) * (1.0 - p) ** (levels - ones).astype(float)
    return Series(
        values,
        provenance={"kind": "binomial_cascade", "p": p, "levels": levels},
    )


def cascade_generalized_hurst(q, p: float):
    """Closed-form h(q) of the binomial cascade: 1/q - log2(p^q + (1-p)^q)/q,
    with the analytic q -> 0 limit filled in."""
    q = np.asarray(q, dtype=float)
    out = np.empty_like(q)
    nz = q != 0
    out[nz] = 1.0 / q[nz] - np.log2(p ** q[nz] + (1 - p) ** q[nz]) / q[nz]
    out[~nz] = -0.5 * (np.log2(p) + np.log2(1 - p))
    return out if out.ndim else float(out)


def cascade_alpha_width(p: float) -> float:
    """Full singularity-spectrum width of the binomial cascade,
    alpha_max - alpha_min = log2((1-p)/p)."""
    return float(np.log2((1.0 - p) / p))


def generate_fgn(H: float, n: int, seed: int) -> Series:
    """Fractional Gaussian noise by spectral synthesis.

    Amplitudes are shaped to the target spectral density f**-(2H-1),
    phases are uniform, and the result is standardized to zero mean and
    unit variance. Bias at extreme H is acceptable at the tolerances the
    estimator round-trip tests use.
    """
    if not (0.0 < H < 1.0):
        raise ValueError(f"H must be in (0, 1), got {H}")
    if n < 64:
        raise ValueError(f"n must be >= 64, got {n}")
    rng = np.random.default_rng(seed)
    freqs = np.fft.rfftfreq(n)
    amplitudes = np.zeros(len(freqs))
    amplitudes[1:] = freqs[1:] ** (-(2.0 * H - 1.0) / 2.0)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=len(freqs))
    phases[0] = 0.0
    if n % 2 == 0:
        phases[-1] = 0.0
    x = np.fft.irfft(amplitudes * np.exp(1j * phases), n=n)
    x = (x - x.mean()) / x.std()
    return Series(x, provenance={"kind": "fgn", "H": H, "n": n, "seed": int(seed)})


def generate_white_noise(n: int, seed: int, dist: str = "gaussian",
                         lo: int = 0, hi: int = 1) -> Series:
    """Independent draws: ``dist`` is "gaussian" or "uniform_integer"
    (inclusive integer range [lo, hi], useful as a toy sentence-length
    stand-in)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    if dist == "gaussian":
        x = rng.standard_normal(n)
    elif dist == "uniform_integer":
        x = rng.integers(lo, hi + 1, size=n).astype(float)
    else:
        raise ValueError(f"unknown dist {dist!r}")
    return Series(
        x,
        provenance={"kind": "white_noise", "dist": dist, "n": n, "seed": int(seed)},
    )
