"""Spin operator constructions for a massive Dirac particle.

Four routes to the same physical observable are implemented: conjugation
of the rest-frame spin with the spinor boost (authoritative, rest-frame
eigenvalues +-1), a direct closed form, the Pauli-Lubanski commutator
construction, and the classical covariant spin (which misses the
chirality-proportional quantum term).  The FW mean spin is the pullback
of the block-diagonal Pauli spin through the diagonalizing unitary and
commutes with the free Dirac Hamiltonian.

Scale convention: printed closed forms of this operator family carry
rest-frame eigenvalues +-1/2; every triple returned here is normalized to
the conjugation scale (rest-frame eigenvalues +-1).  The measured global
factor between the two scales is CLOSED_FORM_FACTOR.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import (
    ALPHA,
    GAMMA0,
    GAMMA5,
    IDENTITY4,
    SIGMA,
    levi_civita3,
    levi_civita4,
    spin_tensor_rest,
)
from .kinematics import FourMomentum, standard_boost
from .spinors import spinor_boost, spinor_boost_inverse

# conjugation construction = CLOSED_FORM_FACTOR * printed closed form
CLOSED_FORM_FACTOR = 2.0

# chirality assignment that reproduces the conjugation construction; the
# same-chirality combination projects out half the operator and fails
# already in the rest frame
RYDER_MATCHING_VARIANT = "opposite"


@dataclass(frozen=True, eq=False)
class SpinOperatorTriple:
    """Cartesian components of a spin operator on 4-spinor space."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    construction: str

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.x, self.y, self.z)

    def __getitem__(self, i: int) -> np.ndarray:
        return self.components[i]


@dataclass(frozen=True, eq=False)
class PauliLubanskiSet:
    """Lower-index Pauli-Lubanski components on the plane-wave spin sector.

    The orbital part drops on plane waves (the antisymmetric symbol kills
    the double momentum contraction), leaving pure 4x4 matrix functions of
    the momentum.
    """

    w0: np.ndarray
    w1: np.ndarray
    w2: np.ndarray
    w3: np.ndarray
    momentum: FourMomentum

    @property
    def lower(self) -> tuple[np.ndarray, ...]:
        return (self.w0, self.w1, self.w2, self.w3)

    def upper(self, mu: int) -> np.ndarray:
        return self.lower[mu] if mu == 0 else -self.lower[mu]

    def casimir(self) -> np.ndarray:
        """W^mu W_mu; equals -(3/4) m^2 times the identity for spin 1/2."""
        return sum(self.upper(mu) @ self.lower[mu] for mu in range(4))

    def transversality(self) -> np.ndarray:
        """W^mu p_mu; vanishes identically."""
        p_low = np.array([self.momentum.energy, *(-self.momentum.p3)])
        return sum(self.upper(mu) * p_low[mu] for mu in range(4))


def _sigma_cross(v: np.ndarray) -> list[np.ndarray]:
    """(Sigma x v)_i as three matrices."""
    return [
        SIGMA[1] * v[2] - SIGMA[2] * v[1],
        SIGMA[2] * v[0] - SIGMA[0] * v[2],
        SIGMA[0] * v[1] - SIGMA[1] * v[0],
    ]


def dirac_hamiltonian(q3, mass: float) -> np.ndarray:
    """Free Dirac Hamiltonian at momentum eigenvalue q3; eigenvalues +-E, each twice."""
    q3 = np.asarray(q3, dtype=float)
    return mass * GAMMA0 + q3[0] * ALPHA[0] + q3[1] * ALPHA[1] + q3[2] * ALPHA[2]


def covariant_spin(p: FourMomentum) -> SpinOperatorTriple:
    """Rest-frame Pauli spin conjugated with the spinor boost.

    Pseudo-Hermitian under the indefinite adjoint pairing rather than the
    plain inner product; its z component has the boosted basis spinors as
    eigenvectors with the rest-frame eigenvalues +-1.
    """
    S = spinor_boost(p)
    Sinv = spinor_boost_inverse(p)
    comps = [S @ SIGMA[i] @ Sinv for i in range(3)]
    return SpinOperatorTriple(*comps, construction="conjugation")


def covariant_spin_closed(p: FourMomentum) -> SpinOperatorTriple:
    """Direct closed form of the covariant spin at the +-1/2 eigenvalue scale.

    Equals covariant_spin / CLOSED_FORM_FACTOR; kept as an independent
    route for cross-validation.
    """
    E, m, q = p.energy, p.mass, p.p3
    sxq = _sigma_cross(q)
    comps = []
    for i in range(3):
        t2 = sum(
            levi_civita3(i, j, k) * q[j] * sxq[k]
            for j in range(3)
            for k in range(3)
            if levi_civita3(i, j, k)
        )
        comps.append(0.5 * SIGMA[i] + t2 / (2.0 * m * (E + m)) + 0.5j * GAMMA5 @ sxq[i] / m)
    return SpinOperatorTriple(*comps, construction="closed_form")


def fw_mean_spin(q3, mass: float) -> SpinOperatorTriple:
    """Mean spin operator that commutes with the free Dirac Hamiltonian.

    Defined by pulling the block-diagonal Pauli spin back through the
    diagonalizing unitary; returned at the rest-eigenvalue +-1 scale so the
    q -> 0 limit is the 4x4 Pauli spin.  The middle term carries
    gamma^0 gamma_5 (equivalently the velocity matrices): Hermiticity and
    the commutation with the Hamiltonian single out this form.
    """
    q3 = np.asarray(q3, dtype=float)
    E = float(np.hypot(mass, np.linalg.norm(q3)))
    sxq = _sigma_cross(q3)
    g0g5 = GAMMA0 @ GAMMA5
    comps = []
    for i in range(3):
        qxsxq = sum(
            levi_civita3(i, j, k) * q3[j] * sxq[k]
            for j in range(3)
            for k in range(3)
            if levi_civita3(i, j, k)
        )
        comps.append(SIGMA[i] - 1j * g0g5 @ sxq[i] / E - qxsxq / (E * (E + mass)))
    return SpinOperatorTriple(*comps, construction="fw_mean")


def pauli_lubanski(p: FourMomentum) -> PauliLubanskiSet:
    """Pauli-Lubanski components built from the halved rest spin tensor.

    Normalization is fixed by the spin-1/2 Casimir W^mu W_mu = -(3/4) m^2.
    With eps^{0123} = +1 and metric lowering, the rest frame gives
    W_i = -(m/2) Sigma_i: the sign matches -W_i proportional to +Sigma_i,
    while the magnitude is half of Sigma_i/2 relative to readings that use
    the unhalved generator.
    """
    p_up = p.vec4
    comps = []
    for mu in range(4):
        acc = np.zeros((4, 4), dtype=complex)
        for nu in range(4):
            for lam in range(4):
                for de in range(4):
                    e = levi_civita4(mu, nu, lam, de, upper=False)
                    if e:
                        acc = acc + e * p_up[de] * spin_tensor_rest(nu, lam)
        comps.append(-0.25 * acc)
    return PauliLubanskiSet(*comps, momentum=p)


def ryder_tensors(p: FourMomentum) -> tuple[list, list]:
    """Self-dual and anti-self-dual generator tensors built from the
    Pauli-Lubanski commutators at p.

    Returns (X, Y) as nested 4x4 lists of matrices.  The spatial triples of
    either tensor close under the spin-1/2 angular momentum algebra.
    """
    m = p.mass
    W = pauli_lubanski(p)
    Wup = [W.upper(mu) for mu in range(4)]
    comm = [[(Wup[a] @ Wup[b] - Wup[b] @ Wup[a]) / m**2 for b in range(4)] for a in range(4)]
    sgn = (1.0, -1.0, -1.0, -1.0)
    comm_low = [[sgn[a] * sgn[b] * comm[a][b] for b in range(4)] for a in range(4)]
    dual = [
        [
            0.5
            * sum(
                levi_civita4(a, b, r, d) * comm_low[r][d]
                for r in range(4)
                for d in range(4)
                if levi_civita4(a, b, r, d)
            )
            for b in range(4)
        ]
        for a in range(4)
    ]
    X = [[-1j * (comm[a][b] + 1j * dual[a][b]) for b in range(4)] for a in range(4)]
    Y = [[-1j * (comm[a][b] - 1j * dual[a][b]) for b in range(4)] for a in range(4)]
    return X, Y


def ryder_spin(p: FourMomentum, variant: str = RYDER_MATCHING_VARIANT) -> SpinOperatorTriple:
    """Spin triple from commutators of the Pauli-Lubanski components.

    The commutator tensor and its dual are combined with chiral projectors
    ((1 -+ gamma_5)/2) into a parity-complete object.  variant selects the
    chirality assignment: "opposite" puts opposite projectors on the
    self-dual and anti-self-dual parts and reproduces covariant_spin;
    "printed" uses the same projector twice, which chirally projects the
    operator and does not (kept for the recorded comparison).

    The commutator tensor carries laboratory-frame tensor indices; they are
    pulled back through the inverse standard boost before the spatial
    components are extracted.  The result is scaled by CLOSED_FORM_FACTOR
    to the rest-eigenvalue +-1 convention.
    """
    if variant not in ("opposite", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    X, Y = ryder_tensors(p)
    proj_m = 0.5 * (IDENTITY4 - GAMMA5)
    proj_p = 0.5 * (IDENTITY4 + GAMMA5) if variant == "opposite" else proj_m
    M = [[proj_m @ X[a][b] + proj_p @ Y[a][b] for b in range(4)] for a in range(4)]
    Linv = standard_boost(p).inverse.entries
    comps = []
    for i in range(3):
        acc = np.zeros((4, 4), dtype=complex)
        for j in range(3):
            for k in range(3):
                e = levi_civita3(i, j, k)
                if e:
                    pulled = sum(
                        Linv[j + 1, r] * Linv[k + 1, d] * M[r][d]
                        for r in range(4)
                        for d in range(4)
                    )
                    acc = acc + 0.5 * e * pulled
        comps.append(CLOSED_FORM_FACTOR * acc)
    return SpinOperatorTriple(*comps, construction=f"ryder_{variant}")


def classical_spin(p: FourMomentum) -> SpinOperatorTriple:
    """Classical covariant spin embedded on 4-spinor space.

    Momentum-dependent combination of the Pauli spin without the
    chirality-proportional term; returned at the rest-eigenvalue +-1 scale
    (twice the printed 2x2 dipole form), so that covariant_spin minus this
    triple is exactly the purely quantum, block-off-diagonal remainder.
    """
    E, m, q = p.energy, p.mass, p.p3
    qdots = q[0] * SIGMA[0] + q[1] * SIGMA[1] + q[2] * SIGMA[2]
    comps = [(E / m) * SIGMA[i] - q[i] * qdots / (m * (E + m)) for i in range(3)]
    return SpinOperatorTriple(*comps, construction="classical")
