"""Lattice operators over the diagonal algebra C^N.

The Dirac operator hops between neighbouring sites with amplitude
``m* / (eps sqrt 2)`` on the superdiagonal and ``m / (eps sqrt 2)`` below it.
Sites are 0-based: index ``j`` is the site usually labelled ``j + 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .spectral import as_matrix

CYCLIC = "cyclic"
OPEN = "open"
BOUNDARIES = (CYCLIC, OPEN)
UNIT_TOL = 1e-14


@dataclass(frozen=True)
class LatticeParams:
    """Chain of ``n_sites`` sites with spacing ``eps`` and unit hopping phase ``m``.

    ``eps`` defaults to ``sqrt(2)/n_sites``: together with ``m = i`` the low
    eigenvalues of the gauged Dirac operator then approach the continuum
    momenta ``2 pi k + theta`` of a unit-circumference circle.
    """

    n_sites: int
    eps: float | None = None
    m: complex = 1j
    boundary: str = CYCLIC
    hop: complex = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if int(self.n_sites) != self.n_sites or self.n_sites < 2:
            raise ValueError(f"n_sites must be an integer >= 2, got {self.n_sites!r}")
        object.__setattr__(self, "n_sites", int(self.n_sites))
        if self.eps is None:
            object.__setattr__(self, "eps", math.sqrt(2.0) / self.n_sites)
        if not (math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"eps must be positive, got {self.eps!r}")
        m = complex(self.m)
        if abs(abs(m) - 1.0) > UNIT_TOL:
            raise ValueError(f"|m| must be 1, got |m| = {abs(m)!r}")
        object.__setattr__(self, "m", m)
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")
        object.__setattr__(self, "hop", m.conjugate() / (self.eps * math.sqrt(2.0)))

    @property
    def cyclic(self) -> bool:
        return self.boundary == CYCLIC

    @property
    def scale(self) -> float:
        """``1 / (eps sqrt 2)``, the magnitude of every hopping entry."""
        return 1.0 / (self.eps * math.sqrt(2.0))


@dataclass(frozen=True)
class AlgebraElement:
    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=complex).ravel()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        if len(other) != len(self):
            raise ValueError("algebra elements of different length")
        return AlgebraElement(self.values * other.values)


@dataclass(frozen=True)
class GaugeElement:
    """Diagonal ``lambda_j = exp(i theta j / N) * base`` for j = 0..N-1."""

    n_sites: int
    theta: float
    base: complex = 1.0

    def __post_init__(self) -> None:
        if complex(self.base) == 0:
            raise ValueError("gauge element base must be nonzero")
        object.__setattr__(self, "base", complex(self.base))

    @property
    def diagonal(self) -> np.ndarray:
        j = np.arange(self.n_sites)
        return np.exp(1j * self.theta * j / self.n_sites) * self.base

    def element(self) -> AlgebraElement:
        return AlgebraElement(self.diagonal)


def hopping_matrix(p: LatticeParams, upper) -> np.ndarray:
    """Hermitian nearest-neighbour matrix with ``upper`` above the diagonal.

    In cyclic mode the wrap entry ``[N-1, 0]`` also receives ``upper`` (site N
    hops to site N+1, identified with site 1). Coinciding entries add.
    """
    n = p.n_sites
    u = complex(upper)
    out = np.zeros((n, n), dtype=complex)
    i = np.arange(n - 1)
    out[i, i + 1] += u
    out[i + 1, i] += u.conjugate()
    if p.cyclic:
        out[n - 1, 0] += u
        out[0, n - 1] += u.conjugate()
    return out


def build_dirac(p: LatticeParams) -> np.ndarray:
    return hopping_matrix(p, p.hop)


def shift_part(D, boundary: str = CYCLIC) -> np.ndarray:
    """Superdiagonal (plus cyclic wrap) half ``D1`` of ``D = D1 + D1^H``."""
    a = as_matrix(D)
    n = a.shape[0]
    if boundary not in BOUNDARIES:
        raise ValueError(f"unknown boundary {boundary!r}")
    if boundary == CYCLIC and n == 2:
        raise ValueError("cyclic N=2: superdiagonal and wrap entries coincide, D1 is not recoverable")
    d1 = np.zeros_like(a)
    i = np.arange(n - 1)
    d1[i, i + 1] = a[i, i + 1]
    if boundary == CYCLIC:
        d1[n - 1, 0] = a[n - 1, 0]
    return d1


def represent(a: AlgebraElement | np.ndarray, n_sites: int | None = None) -> np.ndarray:
    values = a.values if isinstance(a, AlgebraElement) else np.asarray(a, dtype=complex).ravel()
    if n_sites is not None and values.size != n_sites:
        raise ValueError(f"algebra element has length {values.size}, lattice has {n_sites} sites")
    return np.diag(values)


def build_gauge_element(p: LatticeParams, theta: float, base: complex = 1.0) -> GaugeElement:
    return GaugeElement(p.n_sites, theta, base)


def exterior_derivative(p: LatticeParams, a: AlgebraElement) -> np.ndarray:
    """``da = [D, a]`` with ``a`` acting diagonally."""
    D = build_dirac(p)
    A = represent(a, p.n_sites)
    return D @ A - A @ D

