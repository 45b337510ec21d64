"""Nakagami-m fading: distribution of the normalized per-round SNR.

Under Nakagami-m fading the normalized instantaneous SNR follows a gamma
law with shape ``m`` and mean ``gamma_bar``.  Density values are assembled
in log space so that deep-tail probes (tiny or huge ``m*x/gamma_bar``) do
not overflow; tail probabilities go through the regularized incomplete
gamma function, which switches between series and continued-fraction
evaluation internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

__all__ = ["NakagamiChannel"]


@dataclass(frozen=True)
class NakagamiChannel:
    """Normalized-SNR law of a single block-fading round.

    Attributes:
        m: fading shape, >= 0.5 (m = 1 is Rayleigh fading).
        gamma_bar: mean normalized SNR, linear scale, > 0.

    Instances are immutable and safe to share across threads.
    """

    m: float
    gamma_bar: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.m) and self.m >= 0.5):
            raise ValueError(f"fading shape m must be >= 0.5, got {self.m}")
        if not (math.isfinite(self.gamma_bar) and self.gamma_bar > 0.0):
            raise ValueError(
                f"mean SNR gamma_bar must be positive, got {self.gamma_bar}"
            )

    def pdf(self, x: float | np.ndarray) -> float | np.ndarray:
        """Density of the normalized SNR at ``x >= 0``.

        Evaluates m^m x^(m-1) exp(-m x/gamma_bar) / (Gamma(m) gamma_bar^m).
        At the origin the density is 0 for m > 1, 1/gamma_bar for m = 1 and
        diverges for m < 1.
        """
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        if np.any(arr < 0.0):
            raise ValueError("SNR must be nonnegative")
        out = np.empty_like(arr)
        pos = arr > 0.0
        log_norm = self.m * math.log(self.m / self.gamma_bar) - math.lgamma(self.m)
        with np.errstate(under="ignore"):
            out[pos] = np.exp(
                log_norm
                + (self.m - 1.0) * np.log(arr[pos])
                - (self.m / self.gamma_bar) * arr[pos]
            )
        if self.m > 1.0:
            origin = 0.0
        elif self.m == 1.0:
            origin = 1.0 / self.gamma_bar
        else:
            origin = math.inf
        out[~pos] = origin
        return float(out[0]) if scalar else out

    def cdf(self, x: float | np.ndarray) -> float | np.ndarray:
        """P(SNR <= x), i.e. 1 - Gamma(m, m x/gamma_bar)/Gamma(m)."""
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        if np.any(arr < 0.0):
            raise ValueError("SNR must be nonnegative")
        out = special.gammainc(self.m, (self.m / self.gamma_bar) * arr)
        return float(out[0]) if scalar else out

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw ``n`` i.i.d. SNR values; identical generator state gives an
        identical sequence."""
        if n < 1:
            raise ValueError(f"sample count must be >= 1, got {n}")
        return rng.gamma(shape=self.m, scale=self.gamma_bar / self.m, size=n)
