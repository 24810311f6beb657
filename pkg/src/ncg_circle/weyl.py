"""Weyl-form commutation between the gauge element and the hopping half of D."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .operators import LatticeParams, build_dirac, build_gauge_element, represent, shift_part


@dataclass(frozen=True)
class WeylReport:
    n_sites: int
    theta: float
    boundary: str
    residual: float
    wrap_defect: float


def weyl_commutator(p: LatticeParams, theta: float, base: complex = 1.0) -> np.ndarray:
    """``c D1 - exp(-i theta / N) D1 c`` as a matrix."""
    c = represent(build_gauge_element(p, theta, base).diagonal)
    d1 = shift_part(build_dirac(p), p.boundary)
    return c @ d1 - cmath.exp(-1j * theta / p.n_sites) * (d1 @ c)


def weyl_residual(p: LatticeParams, theta: float, base: complex = 1.0) -> WeylReport:
    diff = weyl_commutator(p, theta, base)
    residual = float(np.max(np.abs(diff)))
    # open chain has no wrap entry; the difference there is identically zero
    wrap = float(np.abs(diff[p.n_sites - 1, 0])) if p.cyclic else 0.0
    return WeylReport(p.n_sites, float(theta), p.boundary, residual, wrap)


def expected_wrap_defect(p: LatticeParams, theta: float, base: complex = 1.0) -> float:
    """``|base| / (eps sqrt 2) * 2 |sin(theta / 2)|`` on the ring, 0 on the open chain."""
    if not p.cyclic:
        return 0.0
    return abs(base) * p.scale * 2.0 * abs(np.sin(theta / 2.0))


def weyl_sweep(p: LatticeParams, thetas, base: complex = 1.0) -> list[WeylReport]:
    thetas = list(thetas)
    if not thetas:
        raise ValueError("weyl_sweep needs at least one theta")
    return [weyl_residual(p, t, base) for t in thetas]
