"""Theta-quantization on the covering line and its momentum-space counterpart.

The unit circle is the quotient of the real line by integer translations.
Wave functions on a theta sector obey ``phi(x + N) = exp(i N theta) phi(x)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .abmodel import TWO_PI
from .gauge import lowest_magnitude_eigenvalue
from .operators import LatticeParams


@dataclass(frozen=True)
class ThetaSector:
    raw_theta: float
    theta: float = field(init=False)

    def __post_init__(self) -> None:
        if not math.isfinite(self.raw_theta):
            raise ValueError(f"theta must be finite, got {self.raw_theta!r}")
        t = self.raw_theta % TWO_PI
        if t >= TWO_PI:
            t = 0.0
        object.__setattr__(self, "theta", t)

    @property
    def centered(self) -> float:
        """Representative in (-pi, pi]."""
        return self.theta - TWO_PI if self.theta > math.pi else self.theta

    @property
    def holonomy(self) -> complex:
        return cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class SampledWaveFunction:
    """Samples at ``x_j = j / M`` on the fundamental domain [0, 1)."""

    samples: np.ndarray

    def __post_init__(self) -> None:
        s = np.asarray(self.samples, dtype=complex).ravel()
        if s.size < 2:
            raise ValueError("need at least 2 samples")
        if not np.all(np.isfinite(s)):
            raise ValueError("samples must be finite")
        s.flags.writeable = False
        object.__setattr__(self, "samples", s)

    @property
    def grid(self) -> np.ndarray:
        return np.arange(self.samples.size) / self.samples.size


def covering_projection(x: float) -> complex:
    """``exp(2 pi i x)`` with x reduced mod 1 first, so deck translates agree exactly."""
    frac = x - math.floor(x)
    return cmath.exp(1j * TWO_PI * frac)


def deck_factor(sector: ThetaSector, winding: int) -> complex:
    return cmath.exp(1j * (winding * sector.theta))


def extend(phi: SampledWaveFunction, sector: ThetaSector, winding: int) -> np.ndarray:
    """Samples of the quasi-periodic extension on ``[winding, winding + 1)``."""
    return deck_factor(sector, winding) * phi.samples


def quasi_periodicity_residual(phi: SampledWaveFunction, sector: ThetaSector, winding: int,
                               candidate=None) -> float:
    """Max deviation of ``candidate`` (default: our own extension) from the theta rule."""
    expected = extend(phi, sector, winding)
    if candidate is None:
        candidate = extend(phi, sector, winding)
    candidate = np.asarray(candidate, dtype=complex).ravel()
    if candidate.shape != expected.shape:
        raise ValueError("candidate extension has the wrong number of samples")
    return float(np.max(np.abs(candidate - expected)))


def twisted_fd_matrix(M: int, sector: ThetaSector) -> np.ndarray:
    """``-d^2/dx^2`` by central differences on M points, ``psi(j + M) = exp(i theta) psi(j)``."""
    if M < 4:
        raise ValueError(f"M must be >= 4, got {M}")
    h2 = float(M * M)
    out = np.zeros((M, M), dtype=complex)
    i = np.arange(M)
    out[i, i] = 2.0 * h2
    out[i[:-1], i[:-1] + 1] = -h2
    out[i[:-1] + 1, i[:-1]] = -h2
    out[M - 1, 0] += -h2 * sector.holonomy
    out[0, M - 1] += -h2 * sector.holonomy.conjugate()
    return out


def twisted_fd_spectrum(M: int, sector: ThetaSector) -> np.ndarray:
    """Closed-form spectrum ``2 M^2 (1 - cos((2 pi k + theta) / M))``, sorted."""
    if M < 4:
        raise ValueError(f"M must be >= 4, got {M}")
    k = np.arange(M)
    return np.sort(2.0 * M * M * (1.0 - np.cos((TWO_PI * k + sector.theta) / M)))


def lattice_continuum_convergence(theta: float, sizes) -> list[tuple[int, float]]:
    """``|lowest-magnitude eigenvalue of D + rho - theta|`` per lattice size.

    Uses the default lattice (cyclic, ``m = i``, ``eps = sqrt 2 / N``) whose low
    spectrum is ``N sin((2 pi k + theta) / N)``, so the error falls off as N^-2.
    """
    target = ThetaSector(theta).centered
    out = []
    for n in sizes:
        ev = lowest_magnitude_eigenvalue(LatticeParams(int(n)), theta, target)
        out.append((int(n), abs(ev - target)))
    return out


def momentum_to_circle(p: float, p0: float) -> tuple[float, ThetaSector]:
    """Map momentum to a covering-line coordinate ``x = p / p0`` and sector ``theta = p0``."""
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0!r}")
    return p / p0, ThetaSector(p0)


def circle_to_momentum(x: float, p0: float) -> float:
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0!r}")
    return x * p0


def representation_phase(p1_over_p0: float, n: int, p0: float) -> complex:
    """Multiplier ``exp(i n p0)`` carried by the point ``p1/p0 + n``.

    ``p1_over_p0`` is the fundamental-domain coordinate the multiplier acts on;
    the phase itself depends only on the winding.
    """
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0!r}")
    if not 0.0 <= p1_over_p0 < 1.0:
        raise ValueError(f"p1/p0 must lie in [0, 1), got {p1_over_p0!r}")
    return cmath.exp(1j * (n * p0))
