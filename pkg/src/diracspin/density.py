"""Discrete momentum superpositions, reduced spin density matrices and
their von Neumann entropy.

States live in the FW representation, where spin labels are momentum
independent and the partial trace over momentum is an unambiguous sum of
outer products over the (orthogonal) momentum terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log

import numpy as np

from .kinematics import (
    FourMomentum,
    LorentzMatrix,
    SphericalMomentum,
    apply_lorentz,
    boost_z,
    make_momentum,
    perp_momentum,
)
from .transport import ab_params, transport_fw

LN2 = log(2.0)

# amplitudes below this (relative) threshold count as exactly absent when
# deciding whether a density lives in the positive-energy 2x2 block
_NEGLIGIBLE = 1e-12


@dataclass(frozen=True, eq=False)
class MomentumTerm:
    """One momentum eigenstate with its four FW label amplitudes
    (a+, a-, b+, b-) = (positive-energy up/down, negative-energy up/down)."""

    momentum: FourMomentum
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)
        if a.shape != (4,) or not np.all(np.isfinite(a)):
            raise ValueError("amplitudes must be four finite complex numbers")


@dataclass(frozen=True, eq=False)
class MomentumSuperposition:
    """Normalized finite superposition over pairwise distinct momenta (FW rep)."""

    terms: tuple[MomentumTerm, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("state needs at least one momentum term")
        total = sum(float(np.vdot(t.amplitudes, t.amplitudes).real) for t in terms)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"state norm^2 is {total}, expected 1")
        scale = max(max(t.momentum.energy for t in terms), 1.0)
        for i, t in enumerate(terms):
            for u in terms[i + 1 :]:
                if np.abs(t.momentum.p3 - u.momentum.p3).max() <= 1e-9 * scale:
                    raise ValueError("momentum terms must be pairwise distinct")

    @property
    def norm_squared(self) -> float:
        return sum(float(np.vdot(t.amplitudes, t.amplitudes).real) for t in self.terms)


@dataclass(frozen=True, eq=False)
class ReducedSpinDensity:
    """Hermitian, unit-trace, positive semidefinite matrix over spin labels.

    2x2 on the positive-energy subspace when no negative-energy amplitude
    is present, 4x4 over all labels otherwise.
    """

    matrix: np.ndarray
    subspace: str  # "positive_energy" | "full"

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=complex)
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        n = M.shape[0]
        if M.shape != (n, n) or n not in (2, 4):
            raise ValueError("density must be 2x2 or 4x4")
        if self.subspace not in ("positive_energy", "full"):
            raise ValueError(f"unknown subspace {self.subspace!r}")
        if np.abs(M - M.conj().T).max() > 1e-12:
            raise ValueError("density is not Hermitian")
        if abs(np.trace(M).real - 1.0) > 1e-12:
            raise ValueError("density trace must be 1")
        for lam in _eigenvalues(M):
            if lam < -1e-12 or lam > 1.0 + 1e-12:
                raise ValueError(f"density eigenvalue out of range: {lam}")

    @property
    def entropy(self) -> float:
        return von_neumann_entropy(self)


def _eigenvalues(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian density candidate.

    2x2 uses the closed form 1/2 +- r with r the Bloch-vector half-length
    (valid for unit trace); larger matrices fall back to the iterative
    Hermitian solver.
    """
    if M.shape == (2, 2):
        r = np.sqrt(0.25 * (M[0, 0].real - M[1, 1].real) ** 2 + abs(M[0, 1]) ** 2)
        return np.array([0.5 + r, 0.5 - r])
    return np.linalg.eigvalsh(M)


def reduce_density(state: MomentumSuperposition) -> ReducedSpinDensity:
    """Partial trace over momentum: sum of per-term outer products.

    Distinct momentum eigenstates are orthogonal, so no cross-momentum
    terms appear.  Reported on the 2x2 positive-energy block when every
    negative-energy amplitude vanishes.
    """
    rho = np.zeros((4, 4), dtype=complex)
    for t in state.terms:
        rho += np.outer(t.amplitudes, t.amplitudes.conj())
    neg = max(float(np.abs(t.amplitudes[2:]).max()) for t in state.terms)
    if neg <= _NEGLIGIBLE:
        block = rho[:2, :2].copy()
        block = 0.5 * (block + block.conj().T)
        return ReducedSpinDensity(block, "positive_energy")
    rho = 0.5 * (rho + rho.conj().T)
    return ReducedSpinDensity(rho, "full")


def make_state(variant: str, mass: float, sph: SphericalMomentum) -> MomentumSuperposition:
    """Two-term equal-weight positive-energy states on a momentum and its
    perpendicular partner.

    psi1 puts spin-up on both terms (pure reduced spin); psi2 puts spin-up
    on the first and spin-down on the second (maximally mixed reduced spin).
    """
    if variant not in ("psi1", "psi2"):
        raise ValueError(f"unknown state variant {variant!r}")
    p = make_momentum(mass, sph)
    q = perp_momentum(mass, sph)
    w = 1.0 / np.sqrt(2.0)
    first = MomentumTerm(p, np.array([w, 0, 0, 0], dtype=complex))
    if variant == "psi1":
        second = MomentumTerm(q, np.array([w, 0, 0, 0], dtype=complex))
    else:
        second = MomentumTerm(q, np.array([0, w, 0, 0], dtype=complex))
    return MomentumSuperposition((first, second))


def boost_state(state: MomentumSuperposition, L: LorentzMatrix) -> MomentumSuperposition:
    """Observer transformation: each term's momentum maps through L and its
    amplitude 4-vector through the label transport at that momentum."""
    out = []
    for t in state.terms:
        T = transport_fw(L, t.momentum)
        out.append(MomentumTerm(apply_lorentz(L, t.momentum), T.entries @ t.amplitudes))
    return MomentumSuperposition(tuple(out))


def closed_form_density(
    variant: str, mass: float, sph: SphericalMomentum, xi: float
) -> ReducedSpinDensity:
    """Reduced spin density of the boosted two-term states, evaluated from
    the closed-form transport parameters instead of matrix products."""
    ab = ab_params(mass, sph, xi)
    a1, b1, a2, b2 = ab.a1, ab.b1, ab.a2, ab.b2
    phase = np.exp(-1j * sph.phi)
    if variant == "psi1":
        off = -(a1 * b1 + a2 * b2) * phase
        rho = 0.5 * np.array(
            [[a1 * a1 + a2 * a2, off], [np.conj(off), b1 * b1 + b2 * b2]]
        )
    elif variant == "psi2":
        off = (a2 * b2 - a1 * b1) * phase
        rho = 0.5 * np.array(
            [[a1 * a1 + b2 * b2, off], [np.conj(off), b1 * b1 + a2 * a2]]
        )
    else:
        raise ValueError(f"unknown state variant {variant!r}")
    return ReducedSpinDensity(rho, "positive_energy")


def von_neumann_entropy(rho: ReducedSpinDensity) -> float:
    """-sum lambda ln lambda over the eigenvalues, with 0 ln 0 := 0.

    Eigenvalues within 1e-12 of the [0, 1] interval are clamped onto it
    (keeps near-pure states at exactly zero entropy); anything below
    -1e-10 means the input is not a density matrix and raises.
    """
    total = 0.0
    for lam in _eigenvalues(rho.matrix):
        lam = float(lam)
        if lam < -1e-10:
            raise ValueError(f"negative eigenvalue {lam}: not a density matrix")
        lam = min(max(lam, 0.0), 1.0)
        if lam > 0.0:
            total -= lam * log(lam)
    return total


def sweep(
    mass: float,
    p_magnitude: float,
    phi: float,
    axis: str,
    lo: float,
    hi: float,
    steps: int,
    theta: float = 0.0,
    xi: float = 0.0,
) -> np.ndarray:
    """Entropy sweep for both two-term states along rapidity or polar angle.

    axis="rapidity" varies xi over [lo, hi] at fixed theta; axis="polar"
    varies theta at fixed xi.  Returns an array of rows (x, S1, S2); grid
    points are independent, output is ordered by grid index.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not lo < hi:
        raise ValueError("need lo < hi")
    if axis not in ("rapidity", "polar"):
        raise ValueError(f"unknown sweep axis {axis!r}")
    xs = np.linspace(lo, hi, steps)
    rows = np.empty((steps, 3))
    for i, x in enumerate(xs):
        if axis == "rapidity":
            sph = SphericalMomentum(p_magnitude, theta, phi)
            cur_xi = float(x)
        else:
            sph = SphericalMomentum(p_magnitude, float(x), phi)
            cur_xi = xi
        s1 = von_neumann_entropy(closed_form_density("psi1", mass, sph, cur_xi))
        s2 = von_neumann_entropy(closed_form_density("psi2", mass, sph, cur_xi))
        rows[i] = (x, s1, s2)
    return rows


def boosted_density_via_transport(
    variant: str, mass: float, sph: SphericalMomentum, xi: float
) -> ReducedSpinDensity:
    """Dual-route evaluation of closed_form_density through boost_state and
    reduce_density; used as the cross-path oracle."""
    state = boost_state(make_state(variant, mass, sph), boost_z(xi))
    return reduce_density(state)
