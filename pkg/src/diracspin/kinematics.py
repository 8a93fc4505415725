"""On-shell four-momenta and proper orthochronous Lorentz boosts.

Natural units (c = hbar = 1) throughout.  Spatial components are stored
with upper indices; the lower-index convention p_i = -p^i is applied at
the point of contraction by the spinor modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import METRIC


@dataclass(frozen=True, eq=False)
class FourMomentum:
    """On-shell energy-momentum of a massive particle.

    The rest mass is carried explicitly and is exact under boosts;
    the on-shell relation E = sqrt(m^2 + |p|^2) is validated at 1e-12
    relative to the energy.
    """

    mass: float
    energy: float
    p3: np.ndarray

    def __post_init__(self):
        p3 = np.asarray(self.p3, dtype=float)
        p3.setflags(write=False)
        object.__setattr__(self, "p3", p3)
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if p3.shape != (3,) or not np.all(np.isfinite(p3)) or not np.isfinite(self.energy):
            raise ValueError("momentum components must be three finite reals")
        expected = float(np.hypot(self.mass, np.linalg.norm(p3)))
        if abs(self.energy - expected) > 1e-12 * expected:
            raise ValueError(
                f"off-shell momentum: E={self.energy}, sqrt(m^2+p^2)={expected}"
            )

    @classmethod
    def from_p3(cls, mass: float, p3) -> "FourMomentum":
        p3 = np.asarray(p3, dtype=float)
        return cls(mass, float(np.hypot(mass, np.linalg.norm(p3))), p3)

    @classmethod
    def at_rest(cls, mass: float) -> "FourMomentum":
        return cls.from_p3(mass, np.zeros(3))

    @property
    def vec4(self) -> np.ndarray:
        """Contravariant components (E, p^1, p^2, p^3)."""
        return np.array([self.energy, *self.p3])

    @property
    def magnitude(self) -> float:
        return float(np.linalg.norm(self.p3))

    @property
    def rapidity(self) -> float:
        return float(np.arccosh(max(self.energy / self.mass, 1.0)))


@dataclass(frozen=True)
class SphericalMomentum:
    """Momentum magnitude plus polar/azimuthal direction angles (radians)."""

    p: float
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("momentum magnitude must be nonnegative")
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError(f"polar angle must lie in [0, pi], got {self.theta}")


@dataclass(frozen=True, eq=False)
class LorentzMatrix:
    """Proper orthochronous Lorentz transformation.

    Validation tolerances scale with the squared matrix norm: at rapidity
    xi the entries grow like cosh(xi) and double precision cannot hold
    L^T eta L = eta to an absolute 1e-12 beyond xi ~ 6.
    """

    entries: np.ndarray

    def __post_init__(self):
        L = np.asarray(self.entries, dtype=float)
        L.setflags(write=False)
        object.__setattr__(self, "entries", L)
        if L.shape != (4, 4) or not np.all(np.isfinite(L)):
            raise ValueError("Lorentz matrix must be a finite 4x4 real matrix")
        scale = max(1.0, float(np.abs(L).max()) ** 2)
        if np.abs(L.T @ METRIC @ L - METRIC).max() > 1e-12 * scale:
            raise ValueError("matrix does not preserve the metric")
        if abs(np.linalg.det(L) - 1.0) > 1e-12 * scale:
            raise ValueError("matrix is not proper (det != +1)")
        if L[0, 0] < 1.0 - 1e-12:
            raise ValueError("matrix is not orthochronous")

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        return LorentzMatrix(self.entries @ other.entries)

    @property
    def inverse(self) -> "LorentzMatrix":
        return LorentzMatrix(METRIC @ self.entries.T @ METRIC)


def make_momentum(mass: float, sph: SphericalMomentum) -> FourMomentum:
    """On-shell four-momentum with spatial direction (theta, phi)."""
    st, ct = np.sin(sph.theta), np.cos(sph.theta)
    sp, cp = np.sin(sph.phi), np.cos(sph.phi)
    return FourMomentum.from_p3(mass, sph.p * np.array([st * cp, st * sp, ct]))


def perp_momentum(mass: float, sph: SphericalMomentum) -> FourMomentum:
    """Same-magnitude momentum rotated to theta + pi/2; orthogonal to make_momentum."""
    st, ct = np.sin(sph.theta), np.cos(sph.theta)
    sp, cp = np.sin(sph.phi), np.cos(sph.phi)
    return FourMomentum.from_p3(mass, sph.p * np.array([ct * cp, ct * sp, -st]))


def standard_boost(p: FourMomentum) -> LorentzMatrix:
    """Pure boost taking the rest momentum (m, 0, 0, 0) to p."""
    m = p.mass
    w = p.p3 / m
    g = p.energy / m
    L = np.eye(4)
    L[0, 0] = g
    L[0, 1:] = w
    L[1:, 0] = w
    L[1:, 1:] += np.outer(w, w) / (1.0 + g)
    return LorentzMatrix(L)


def boost_z(xi: float) -> LorentzMatrix:
    """Boost of rapidity xi along +z; velocity tanh(xi)."""
    c, s = np.cosh(xi), np.sinh(xi)
    L = np.eye(4)
    L[0, 0] = L[3, 3] = c
    L[0, 3] = L[3, 0] = s
    return LorentzMatrix(L)


def boost_along(xi: float, direction) -> LorentzMatrix:
    """Pure boost of rapidity xi along an arbitrary spatial direction."""
    n = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(n)
    if norm == 0:
        raise ValueError("boost direction must be a nonzero vector")
    n = n / norm
    c, s = np.cosh(xi), np.sinh(xi)
    L = np.eye(4)
    L[0, 0] = c
    L[0, 1:] = s * n
    L[1:, 0] = s * n
    L[1:, 1:] += (c - 1.0) * np.outer(n, n)
    return LorentzMatrix(L)


def apply_lorentz(L: LorentzMatrix, p: FourMomentum) -> FourMomentum:
    """Transform p by L.  The invariant mass is carried through exactly.

    The spatial part is the exact matrix image; the energy is re-projected
    onto the mass shell, which differs from the raw 0-component only by
    the cancellation noise of the matrix product (relevant at extreme
    rapidity) and keeps the on-shell invariant strict.
    """
    v = L.entries @ p.vec4
    return FourMomentum.from_p3(p.mass, v[1:])
