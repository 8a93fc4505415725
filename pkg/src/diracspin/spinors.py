"""Dirac spinors, the spinor-representation boost, energy projectors and
the unitary that diagonalizes the free Dirac Hamiltonian.

Rest basis spinors are the unit coordinate vectors e1..e4 (phase +1), so
the covariant and the diagonalized ("FW") bases coincide at p = 0.  In the
FW representation the basis spinors are momentum independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import ALPHA, GAMMA0, GAMMAS, IDENTITY4
from .kinematics import FourMomentum

REP_COVARIANT = "covariant"
REP_FW = "fw"


@dataclass(frozen=True, eq=False)
class DiracSpinor:
    """4-component complex spinor tagged with representation and energy sign.

    spin_label is set for basis spinors only; for those the normalization
    is validated at construction (covariant: psibar psi = +1 / -1 for the
    positive / negative energy branch; FW: unit norm).  Unlabeled spinors
    are free-form superpositions and carry no normalization contract.
    """

    components: np.ndarray
    rep: str
    energy_sign: int
    spin_label: int | None = None

    def __post_init__(self):
        c = np.asarray(self.components, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "components", c)
        if c.shape != (4,) or not np.all(np.isfinite(c)):
            raise ValueError("spinor must have four finite complex components")
        if self.rep not in (REP_COVARIANT, REP_FW):
            raise ValueError(f"unknown representation {self.rep!r}")
        if self.energy_sign not in (+1, -1):
            raise ValueError("energy_sign must be +1 or -1")
        if self.spin_label is not None:
            if self.spin_label not in (+1, -1):
                raise ValueError("spin_label must be +1, -1 or None")
            if self.rep == REP_COVARIANT:
                norm = (c.conj() @ GAMMA0 @ c).real
                if abs(norm - self.energy_sign) > 1e-10:
                    raise ValueError(f"covariant normalization violated: {norm}")
            else:
                norm = float(np.vdot(c, c).real)
                if abs(norm - 1.0) > 1e-10:
                    raise ValueError(f"FW spinor not unit-normalized: {norm}")


@dataclass(frozen=True, eq=False)
class EnergyProjector:
    """Idempotent projector onto the positive or negative energy subspace."""

    matrix: np.ndarray
    sign: int
    momentum: FourMomentum

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=complex)
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        # idempotency in double precision degrades like (E/m)^2
        tol = 1e-12 * max(1.0, (self.momentum.energy / self.momentum.mass) ** 2)
        if np.abs(M @ M - M).max() > tol:
            raise ValueError("projector is not idempotent")


def _alpha_dot(p3: np.ndarray) -> np.ndarray:
    return p3[0] * ALPHA[0] + p3[1] * ALPHA[1] + p3[2] * ALPHA[2]


def _gamma_dot(q3: np.ndarray) -> np.ndarray:
    return q3[0] * GAMMAS[1] + q3[1] * GAMMAS[2] + q3[2] * GAMMAS[3]


def momentum_slash(p: FourMomentum) -> np.ndarray:
    """gamma^mu p_mu with the lower-index convention p_i = -p^i."""
    return p.energy * GAMMAS[0] - _gamma_dot(p.p3)


def spinor_boost(p: FourMomentum) -> np.ndarray:
    """Standard boost in the spinor representation.

    Hermitian but not unitary for p != 0; its inverse is the boost of the
    opposite momentum.  Block form: cosh(xi/2) on the diagonal and
    (sigma.phat) sinh(xi/2) off the diagonal.
    """
    E, m = p.energy, p.mass
    return ((E + m) * IDENTITY4 + _alpha_dot(p.p3)) / np.sqrt(2.0 * m * (E + m))


def spinor_boost_inverse(p: FourMomentum) -> np.ndarray:
    E, m = p.energy, p.mass
    return ((E + m) * IDENTITY4 - _alpha_dot(p.p3)) / np.sqrt(2.0 * m * (E + m))


def spinor_boost_z(xi: float) -> np.ndarray:
    """Spinor representation of a z-boost with rapidity xi."""
    return np.cosh(xi / 2.0) * IDENTITY4 + np.sinh(xi / 2.0) * ALPHA[2]


_BASIS_INDEX = {(+1, +1): 0, (+1, -1): 1, (-1, +1): 2, (-1, -1): 3}


def rest_spinor(spin: int, sign: int) -> np.ndarray:
    """Unit coordinate vector for the (energy sign, spin) rest basis spinor."""
    e = np.zeros(4, dtype=complex)
    e[_BASIS_INDEX[(sign, spin)]] = 1.0
    return e


def basis_spinor(p: FourMomentum, spin: int, sign: int, rep: str = REP_COVARIANT) -> DiracSpinor:
    """Basis spinor at momentum p.

    Covariant representation: the boosted rest spinor.  FW representation:
    the momentum-independent unit coordinate vector.
    """
    e = rest_spinor(spin, sign)
    if rep == REP_FW:
        return DiracSpinor(e, REP_FW, sign, spin)
    return DiracSpinor(spinor_boost(p) @ e, REP_COVARIANT, sign, spin)


def dirac_adjoint(psi: DiracSpinor) -> np.ndarray:
    """Row vector psi^dagger gamma^0.  Defined for covariant spinors only."""
    if psi.rep != REP_COVARIANT:
        raise ValueError("adjoint row is a covariant-representation construct; FW uses plain dagger")
    return psi.components.conj() @ GAMMA0


def energy_projector(p: FourMomentum, sign: int) -> EnergyProjector:
    """(m +- gamma^mu p_mu) / 2m projecting onto one energy branch."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    M = (p.mass * IDENTITY4 + sign * momentum_slash(p)) / (2.0 * p.mass)
    return EnergyProjector(M, sign, p)


def fw_unitary(q3, mass: float) -> np.ndarray:
    """Unitary of the canonical transformation that diagonalizes the free
    Dirac Hamiltonian at momentum eigenvalue q3."""
    q3 = np.asarray(q3, dtype=float)
    E = float(np.hypot(mass, np.linalg.norm(q3)))
    return ((E + mass) * IDENTITY4 + _gamma_dot(q3)) / np.sqrt(2.0 * E * (E + mass))


def to_fw(psi: DiracSpinor, p: FourMomentum) -> DiracSpinor:
    """Map a pure-energy-sign covariant spinor to the FW representation.

    Uses the momentum eigenvalue +p for the positive branch and -p for the
    negative one, with the sqrt(m/E) factor that converts the covariant
    normalization to unit norm.  Raises if psi has support on the opposite
    energy branch (project first).
    """
    if psi.rep != REP_COVARIANT:
        raise ValueError("input spinor is already in the FW representation")
    opposite = energy_projector(p, -psi.energy_sign).matrix
    leak = np.linalg.norm(opposite @ psi.components)
    size = np.linalg.norm(psi.components)
    if leak > 1e-8 * max(size, 1.0):
        raise ValueError("spinor mixes energy signs; momentum eigenvalue undefined")
    U = fw_unitary(psi.energy_sign * p.p3, p.mass)
    out = np.sqrt(p.mass / p.energy) * (U @ psi.components)
    return DiracSpinor(out, REP_FW, psi.energy_sign, psi.spin_label)
