"""Physical parameters, phase-space points and the canonical/complex coordinate maps.

A spinless charge moving in a plane, in a uniform perpendicular magnetic field
(symmetric gauge).  Every quantity in this package is parametrized by hbar, the
mass and the cyclotron frequency; the magnetic length gamma = sqrt(2*hbar/(m*omega))
sets the Gaussian width of all densities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PhysParams:
    """Physical constants of the system.  Defaults are the dimensionless regime."""

    hbar: float = 1.0
    mass: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0 or self.mass <= 0 or self.omega <= 0:
            raise ValueError("hbar, mass and omega must all be positive")

    @property
    def gamma(self) -> float:
        """Magnetic length sqrt(2*hbar/(mass*omega))."""
        return math.sqrt(2.0 * self.hbar / (self.mass * self.omega))

    @property
    def planck_h(self) -> float:
        return 2.0 * math.pi * self.hbar

    @property
    def momentum_scale(self) -> float:
        """Natural Gaussian width of momentum densities, hbar/gamma."""
        return self.hbar / self.gamma


@dataclass(frozen=True)
class PhasePoint:
    """A point (q1, q2, p1, p2) of the four-dimensional phase space."""

    q1: float
    q2: float
    p1: float
    p2: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.q1, self.q2, self.p1, self.p2))):
            raise ValueError("phase-space coordinates must be finite")

    def z(self, params: PhysParams) -> complex:
        """Dimensionless position-plane coordinate (q1 + i q2)/gamma."""
        return complex(self.q1, self.q2) / params.gamma

    def rho2(self, params: PhysParams) -> float:
        return abs(self.z(params)) ** 2

    def tau_plus(self, params: PhysParams) -> float:
        return self.q1 / params.gamma + params.gamma * self.p2 / params.hbar

    def tau_minus(self, params: PhysParams) -> float:
        return self.q1 / params.gamma - params.gamma * self.p2 / params.hbar

    def zeta2(self, params: PhysParams) -> float:
        """Dimensionless momentum-plane radius; accessor only, no consumer here."""
        g = params.gamma
        return g * g * (self.p1 ** 2 + self.p2 ** 2) / (4.0 * params.hbar ** 2)


@dataclass(frozen=True)
class ModeCoords:
    """Complex coordinates of the two commuting oscillator modes."""

    a: complex
    b: complex

    @property
    def abar(self) -> complex:
        return self.a.conjugate()

    @property
    def bbar(self) -> complex:
        return self.b.conjugate()


def mode_coords_arrays(q1, q2, p1, p2, params: PhysParams):
    """Vectorized canonical -> mode map; returns the complex pair (a, b).

    a = (p1 + i p2)/(m gamma omega) - i (q1 + i q2)/(2 gamma)
    b = -(p1 - i p2)/(m gamma omega) + i (q1 - i q2)/(2 gamma)
    """
    g = params.gamma
    kin = 1.0 / (params.mass * g * params.omega)
    pos = 1.0 / (2.0 * g)
    q1, q2, p1, p2 = (np.asarray(x, dtype=float) for x in (q1, q2, p1, p2))
    a = kin * (p1 + 1j * p2) - 1j * pos * (q1 + 1j * q2)
    b = -kin * (p1 - 1j * p2) + 1j * pos * (q1 - 1j * q2)
    return a, b


def to_mode_coords(pt: PhasePoint, params: PhysParams) -> ModeCoords:
    a, b = mode_coords_arrays(pt.q1, pt.q2, pt.p1, pt.p2, params)
    return ModeCoords(complex(a), complex(b))


def from_mode_coords(mc: ModeCoords, params: PhysParams) -> PhasePoint:
    """Inverse of to_mode_coords (the map is a linear bijection)."""
    g = params.gamma
    mgw = params.mass * g * params.omega
    d = mc.a - mc.b
    dbar = mc.abar - mc.bbar
    s = mc.a + mc.b
    sbar = mc.abar + mc.bbar
    q1 = (1j * g / 2.0 * (d - dbar)).real
    p1 = (mgw / 4.0 * (d + dbar)).real
    q2 = (g / 2.0 * (s + sbar)).real
    p2 = (-1j * mgw / 4.0 * (s - sbar)).real
    return PhasePoint(q1, q2, p1, p2)


def velocities(pt: PhasePoint, params: PhysParams):
    """Kinematic velocity components in the symmetric gauge."""
    m, w = params.mass, params.omega
    v1 = (pt.p1 + m * w * pt.q2 / 2.0) / m
    v2 = (pt.p2 - m * w * pt.q1 / 2.0) / m
    return v1, v2


def classical_hamiltonian(pt: PhasePoint, params: PhysParams) -> float:
    """Kinetic energy m(v1^2 + v2^2)/2; equals hbar*omega*|a|^2 pointwise."""
    v1, v2 = velocities(pt, params)
    return 0.5 * params.mass * (v1 * v1 + v2 * v2)


def classical_angular_momentum(pt: PhasePoint, params: PhysParams) -> float:
    """Canonical angular momentum q1 p2 - q2 p1; equals hbar(|b|^2 - |a|^2)."""
    return pt.q1 * pt.p2 - pt.q2 * pt.p1
