"""Aharonov-Bohm grating kinematics and modular-momentum arithmetic.

Natural units throughout: ``h = 1`` and ``hbar = 1/(2 pi)`` unless overridden.
The solenoid enters only through the dimensionless phase ``alpha = e Phi / (hbar c)``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

TWO_PI = 2.0 * math.pi
PLANCK = 1.0
HBAR = PLANCK / TWO_PI


class Evanescent(enum.Enum):
    """Marker for a diffraction order whose sine leaves [-1, 1]."""

    EVANESCENT = "evanescent"

    def __repr__(self) -> str:
        return "EVANESCENT"


EVANESCENT = Evanescent.EVANESCENT


@dataclass(frozen=True)
class GratingConfig:
    wavelength: float
    slit_spacing: float
    planck: float = PLANCK
    momentum: float = field(init=False)

    def __post_init__(self) -> None:
        for name in ("wavelength", "slit_spacing", "planck"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        object.__setattr__(self, "momentum", self.planck / self.wavelength)

    @property
    def momentum_quantum(self) -> float:
        """Transverse momentum exchanged per order, ``h / ell``."""
        return self.planck / self.slit_spacing


@dataclass(frozen=True)
class SolenoidConfig:
    ab_phase: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.ab_phase):
            raise ValueError(f"ab_phase must be finite, got {self.ab_phase!r}")

    @property
    def shift_fraction(self) -> float:
        return self.ab_phase / TWO_PI


@dataclass(frozen=True)
class ModularMomentum:
    p0: float
    p1: float
    n: int

    def __post_init__(self) -> None:
        if not self.p0 > 0:
            raise ValueError(f"p0 must be positive, got {self.p0!r}")
        if not 0.0 <= self.p1 < self.p0:
            raise ValueError(f"p1={self.p1!r} outside [0, {self.p0!r})")

    def reconstruct(self) -> float:
        return self.p1 + self.n * self.p0


def _order_angle(order: float, g: GratingConfig) -> float | Evanescent:
    s = (order * g.wavelength) / g.slit_spacing
    if abs(s) > 1.0:
        return EVANESCENT
    return math.asin(s)


def diffraction_angle(n: int, g: GratingConfig) -> float | Evanescent:
    """Angle of the n-th constructive order, ``asin(n lambda / ell)``."""
    return _order_angle(float(n), g)


def transverse_momentum(n: int, g: GratingConfig) -> float:
    return (n * g.planck) / g.slit_spacing


def ab_diffraction_angle(n: int, g: GratingConfig, s: SolenoidConfig) -> float | Evanescent:
    """Order angle with the solenoid present: ``asin((n + alpha/2pi) lambda / ell)``.

    Whole turns of ``alpha`` are folded into the integer order first, so a phase
    of ``2 pi k`` lands on exactly the same float as the plain order ``n + k``.
    """
    f = s.shift_fraction
    whole = math.floor(f)
    return _order_angle((n + whole) + (f - whole), g)


def ab_transverse_momentum(n: int, g: GratingConfig, s: SolenoidConfig) -> float:
    return ((n + s.shift_fraction) * g.planck) / g.slit_spacing


def modular_decompose(p: float, p0: float) -> ModularMomentum:
    """Split ``p = p1 + n p0`` with ``0 <= p1 < p0`` (floor convention, any sign of p)."""
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0!r}")
    if not math.isfinite(p):
        raise ValueError(f"p must be finite, got {p!r}")
    # math.fmod is exact; the sign fix-up can round up to p0 for tiny negative remainders
    p1 = math.fmod(p, p0)
    if p1 < 0:
        p1 += p0
    if p1 >= p0:
        p1 = 0.0
    n = round((p - p1) / p0)
    return ModularMomentum(p0=p0, p1=p1, n=int(n))


def modular_phase(p: float, ell: float, hbar: float = HBAR) -> complex:
    """Translation-operator eigenphase ``exp(i p ell / hbar)``.

    The argument is reduced to a fraction of a turn, ``p ell / h mod 1``, before
    exponentiating. Shifts by whole quanta ``h/ell`` therefore leave the result
    unchanged bit for bit whenever the shifted momentum is itself exact in
    floating point (always the case in natural units with dyadic momenta).
    """
    if not (hbar > 0 and ell > 0):
        raise ValueError("hbar and ell must be positive")
    turns = (p * ell) / (TWO_PI * hbar)
    frac = math.fmod(turns, 1.0)
    if frac < 0:
        frac += 1.0
    if frac >= 1.0:
        frac = 0.0
    return cmath.exp(1j * (TWO_PI * frac))


def circle_angle(m: ModularMomentum) -> float:
    """Position of the modular momentum on its circle, ``2 pi p1 / p0`` in [0, 2 pi)."""
    return min(TWO_PI * (m.p1 / m.p0), math.nextafter(TWO_PI, 0.0))


def two_path_intensity(alpha: float) -> float:
    """``|1 + exp(i alpha)|^2`` for two unit-amplitude partial waves."""
    return max(0.0, 2.0 + 2.0 * math.cos(alpha))
