"""Power spectra and 1/f^beta scaling fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import as_values

__all__ = [
    "PowerSpectrum",
    "SpectrumFit",
    "power_spectrum",
    "fit_beta",
    "average_spectrum",
]


@dataclass(frozen=True)
class PowerSpectrum:
    """Periodogram at the positive frequencies f_k = k/N, k = 1..N//2.

    ``dc_power`` holds the k=0 bin, which is computed but never enters a
    scaling fit.
    """

    freqs: np.ndarray
    power: np.ndarray
    n_samples: int
    dc_power: float = 0.0

    def total_power(self) -> float:
        """Sum over all N bins of |X_k|^2, reconstructed from the
        Hermitian symmetry of a real input (for Parseval checks)."""
        n = self.n_samples
        total = self.dc_power + 2.0 * self.power.sum()
        if n % 2 == 0:
            total -= self.power[-1]  # Nyquist bin has no mirror
        return float(total)


@dataclass(frozen=True)
class SpectrumFit:
    beta: float
    sigma_beta: float
    fit_range: tuple[float, float]
    binning: str
    r_squared: float
    intercept: float


def power_spectrum(s) -> PowerSpectrum:
    """Fourier-transform modulus squared of the series at the positive
    frequencies."""
    x = as_values(s)
    n = len(x)
    if n < 8:
        raise ValueError(f"series too short for a spectrum (need >= 8, got {n})")
    spec = np.fft.rfft(x)
    power = np.abs(spec) ** 2
    k = np.arange(1, n // 2 + 1)
    return PowerSpectrum(
        freqs=k / n,
        power=power[1 : n // 2 + 1],
        n_samples=n,
        dc_power=float(power[0]),
    )


def _log_bin(freqs, power, bins_per_decade: int):
    """Geometric-mean binning of (f, S) into logarithmic frequency bins.

    Bins with zero power are dropped (log undefined); returns bin-center
    log-frequency, log-power, and per-bin point counts.
    """
    keep = power > 0
    f, p = freqs[keep], power[keep]
    if len(f) == 0:
        raise ValueError("no positive-power points to bin")
    lf, lp = np.log10(f), np.log10(p)
    lo, hi = lf.min(), lf.max()
    n_bins = max(1, int(np.ceil((hi - lo) * bins_per_decade)))
    edges = np.linspace(lo, hi, n_bins + 1)
    idx = np.clip(np.digitize(lf, edges) - 1, 0, n_bins - 1)
    bl_f, bl_p, bl_n = [], [], []
    for b in range(n_bins):
        m = idx == b
        if m.any():
            bl_f.append(lf[m].mean())
            bl_p.append(lp[m].mean())
            bl_n.append(int(m.sum()))
    return np.array(bl_f), np.array(bl_p), np.array(bl_n, dtype=float)


def fit_beta(ps: PowerSpectrum, fit_range=None, bins_per_decade: int = 20) -> SpectrumFit:
    """Fit S(f) = c / f^beta by OLS of log S on log f after log-binning.

    ``fit_range`` is (f_lo, f_hi); the default keeps the full positive
    support except the top half-decade, where text spectra tend to
    flatten.
    """
    if fit_range is None:
        f_hi = ps.freqs[-1] / 10**0.5
        fit_range = (float(ps.freqs[0]), float(f_hi))
    f_lo, f_hi = fit_range
    if not f_lo < f_hi:
        raise ValueError(f"invalid fit range [{f_lo}, {f_hi}]")
    sel = (ps.freqs >= f_lo) & (ps.freqs <= f_hi)
    if sel.sum() < 8:
        raise ValueError(f"only {int(sel.sum())} spectrum points in fit range; need >= 8")
    lf, lp, counts = _log_bin(ps.freqs[sel], ps.power[sel], bins_per_decade)
    if len(lf) < 3:
        raise ValueError("fewer than 3 log bins; widen the range or reduce binning")
    # Bins are weighted by their point counts: the variance of a bin's
    # geometric mean scales as 1/count, and equal weights would let the
    # sparse low-frequency bins dominate the slope error.
    w = counts / counts.sum()
    x_bar = float((w * lf).sum())
    y_bar = float((w * lp).sum())
    sxx = float((w * (lf - x_bar) ** 2).sum())
    if sxx == 0:
        raise ValueError("degenerate binning: no frequency spread")
    slope = float((w * (lf - x_bar) * (lp - y_bar)).sum()) / sxx
    intercept = y_bar - slope * x_bar
    resid = lp - (slope * lf + intercept)
    dof = max(len(lf) - 2, 1)
    sigma2 = float((w * resid**2).sum()) * len(lf) / dof
    ss_tot = float((w * (lp - y_bar) ** 2).sum())
    r2 = 1.0 - float((w * resid**2).sum()) / ss_tot if ss_tot > 0 else 1.0
    return SpectrumFit(
        beta=-slope,
        sigma_beta=float(np.sqrt(sigma2 / (sxx * len(lf)))),
        fit_range=(float(f_lo), float(f_hi)),
        binning=f"log, {bins_per_decade} bins/decade, geometric mean, count-weighted",
        r_squared=r2,
        intercept=float(intercept),
    )


def average_spectrum(spectra, grid_bins: int = 200) -> PowerSpectrum:
    """Corpus-average spectrum.

    Each spectrum is normalized to unit total power, interpolated
    log-log onto a common logarithmic grid spanning the intersection of
    the frequency supports, and geometrically averaged per grid point.
    """
    spectra = list(spectra)
    if len(spectra) < 2:
        raise ValueError("need at least 2 spectra to average")
    f_lo = max(ps.freqs[0] for ps in spectra)
    f_hi = min(ps.freqs[-1] for ps in spectra)
    if not f_lo < f_hi:
        raise ValueError("frequency supports do not overlap")
    grid = np.logspace(np.log10(f_lo), np.log10(f_hi), grid_bins)
    log_grid = np.log10(grid)
    acc = np.zeros(grid_bins)
    for ps in spectra:
        keep = ps.power > 0
        norm = ps.power[keep] / ps.power[keep].sum()
        acc += np.interp(log_grid, np.log10(ps.freqs[keep]), np.log10(norm))
    mean_log = acc / len(spectra)
    return PowerSpectrum(
        freqs=grid,
        power=10.0**mean_log,
        n_samples=min(ps.n_samples for ps in spectra),
        dc_power=0.0,
    )
