"""Spinor-label transport under an observer Lorentz transformation.

An observer boost rotates the spin labels of a momentum eigenstate by a
momentum-dependent 2x2 unitary (the little-group rotation).  Both the
covariant route (sandwich of spinor boosts between rest spinors) and the
FW route (conjugation of the observer boost with the diagonalizing
unitaries) are implemented; they produce identical blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import ALPHA, IDENTITY4, SIGMA
from .kinematics import FourMomentum, LorentzMatrix, SphericalMomentum, apply_lorentz
from .spinors import fw_unitary, spinor_boost, spinor_boost_inverse

REP_FW = "fw"
REP_COVARIANT = "covariant"


def _rotation_spinor(R3: np.ndarray) -> np.ndarray:
    """Spinor representation of a 3x3 rotation.

    Quaternion extraction: first-order accurate near the identity, where
    the arccos route would amplify matrix noise like its square root.
    """
    tr = float(np.trace(R3))
    if 1.0 + tr > 0.5:
        q0 = 0.5 * np.sqrt(1.0 + tr)
        v = np.array(
            [R3[2, 1] - R3[1, 2], R3[0, 2] - R3[2, 0], R3[1, 0] - R3[0, 1]]
        ) / (4.0 * q0)
    else:
        # angle near pi: take the dominant diagonal component instead
        k = int(np.argmax(np.diag(R3)))
        i, j = (k + 1) % 3, (k + 2) % 3
        qk = 0.5 * np.sqrt(1.0 + R3[k, k] - R3[i, i] - R3[j, j])
        v = np.empty(3)
        v[k] = qk
        q0 = (R3[j, i] - R3[i, j]) / (4.0 * qk)
        v[i] = (R3[i, k] + R3[k, i]) / (4.0 * qk)
        v[j] = (R3[j, k] + R3[k, j]) / (4.0 * qk)
    vs = v[0] * SIGMA[0] + v[1] * SIGMA[1] + v[2] * SIGMA[2]
    return q0 * IDENTITY4 - 1j * vs


def _alpha_dot(v: np.ndarray) -> np.ndarray:
    return v[0] * ALPHA[0] + v[1] * ALPHA[1] + v[2] * ALPHA[2]


def spinor_rep(L: LorentzMatrix) -> np.ndarray:
    """Spinor representation of a proper orthochronous transformation.

    Factored as pure boost times rotation, each with a closed form; the
    boost part is read off the image of the rest momentum.  Pure boosts
    (symmetric matrices) skip the rotation factor, which keeps them exact
    at large rapidity.  Conjugation with the result maps gamma^mu p_mu to
    gamma^mu (Lp)_mu.
    """
    M = L.entries
    g = M[0, 0]
    w = M[1:, 0]
    SB = ((1.0 + g) * IDENTITY4 + _alpha_dot(w)) / np.sqrt(2.0 * (1.0 + g))
    if np.abs(M - M.T).max() <= 1e-14 * max(1.0, float(np.abs(M).max())):
        return SB
    # rotation block of B^-1 L without forming the large product: metric
    # orthogonality gives w^T L3 = g v^T, collapsing it to a rank-1 update
    v = M[0, 1:]
    R3 = M[1:, 1:] - np.outer(w, v) / (1.0 + g)
    return SB @ _rotation_spinor(R3)


@dataclass(frozen=True, eq=False)
class TransportMatrix:
    """4x4 spin-label transport for one (transformation, momentum) pair.

    Unitary and block-diagonal: observer transformations preserve the
    energy sign, so the u and v label sectors never mix (residual leakage
    is floating-point noise, bounded at construction).
    """

    entries: np.ndarray
    lorentz: LorentzMatrix
    momentum: FourMomentum
    rep: str = REP_FW

    def __post_init__(self):
        T = np.asarray(self.entries, dtype=complex)
        T.setflags(write=False)
        object.__setattr__(self, "entries", T)
        if np.abs(T @ T.conj().T - np.eye(4)).max() > 1e-10:
            raise ValueError("transport matrix is not unitary")
        leak = max(np.abs(T[:2, 2:]).max(), np.abs(T[2:, :2]).max())
        if leak > 1e-10:
            raise ValueError(f"transport mixes energy sectors: leakage {leak}")

    @property
    def positive_block(self) -> np.ndarray:
        return self.entries[:2, :2]

    @property
    def negative_block(self) -> np.ndarray:
        return self.entries[2:, 2:]


@dataclass(frozen=True)
class WignerBlock:
    """Irreducible 2x2 little-group block ((A, B), (-B*, A))."""

    A: complex
    B: complex

    def __post_init__(self):
        if abs(abs(self.A) ** 2 + abs(self.B) ** 2 - 1.0) > 1e-10:
            raise ValueError("block is not normalized")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.A, self.B], [-np.conj(self.B), self.A]])


@dataclass(frozen=True)
class ABParams:
    """Closed-form transport parameters for a z-boost acting on a momentum
    pair (direction theta and its perpendicular partner)."""

    a1: float
    b1: float
    a2: float
    b2: float


def transport_covariant(L: LorentzMatrix, p: FourMomentum, sign: int = +1) -> np.ndarray:
    """2x2 label transport in the covariant representation.

    Matrix elements of S^-1(L_{Lp}) S(L) S(L_p) between the rest basis
    spinors of one energy sector; the little-group sandwich is block
    diagonal, so the sector blocks are the whole story.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    pout = apply_lorentz(L, p)
    Wg = spinor_boost_inverse(pout) @ spinor_rep(L) @ spinor_boost(p)
    return Wg[:2, :2] if sign > 0 else Wg[2:, 2:]


def transport_fw(L: LorentzMatrix, p: FourMomentum) -> TransportMatrix:
    """Full 4x4 label transport in the FW representation.

    Built sector-wise: the positive sector conjugates the observer boost
    with the diagonalizing unitaries at the momentum eigenvalues before and
    after, the negative sector uses the negated eigenvalues; the
    sqrt(E/E') factor converts between the normalizations at the two
    momenta.
    """
    pout = apply_lorentz(L, p)
    E, En = p.energy, pout.energy
    SL = spinor_rep(L)
    scale = np.sqrt(E / En)
    Tpos = scale * fw_unitary(pout.p3, p.mass) @ SL @ fw_unitary(p.p3, p.mass).conj().T
    Tneg = scale * fw_unitary(-pout.p3, p.mass) @ SL @ fw_unitary(-p.p3, p.mass).conj().T
    T = np.empty((4, 4), dtype=complex)
    T[:, :2] = Tpos[:, :2]
    T[:, 2:] = Tneg[:, 2:]
    return TransportMatrix(T, L, p)


def wigner_block(T: TransportMatrix, tol: float = 1e-9) -> WignerBlock:
    """Extract (A, B) from the transport and validate the block shape.

    The ((A, B), (-B*, A)) shape with equal u and v blocks holds for the
    boost family used here (the little-group rotation axis has no z
    component, making A real); a violation signals either a transport bug
    or a transformation outside that family.
    """
    U = T.positive_block
    A, B = complex(U[0, 0]), complex(U[0, 1])
    residual = max(
        abs(U[1, 0] + np.conj(B)),
        abs(U[1, 1] - A),
        float(np.abs(U - T.negative_block).max()),
    )
    if residual > tol:
        raise ValueError(f"transport block violates the ((A,B),(-B*,A)) shape: residual {residual}")
    return WignerBlock(A, B)


def ab_params(mass: float, sph: SphericalMomentum, xi: float) -> ABParams:
    """Closed-form transport parameters for a z-boost of rapidity xi.

    (a1, b1) parameterize the block at the momentum (p, theta); (a2, b2)
    the block at its perpendicular partner (theta -> theta + pi/2).  Each
    pair is normalized: a^2 + b^2 = 1.
    """
    if mass <= 0:
        raise ValueError("mass must be positive")
    p, th = sph.p, sph.theta
    E = float(np.hypot(mass, p))
    ch, sh = np.cosh(xi / 2.0), np.sinh(xi / 2.0)
    Ep = E * np.cosh(xi) + p * np.cos(th) * np.sinh(xi)
    Epp = E * np.cosh(xi) - p * np.sin(th) * np.sinh(xi)
    a1 = np.sqrt((mass + E) / (mass + Ep)) * (ch + p * np.cos(th) / (mass + E) * sh)
    b1 = p * np.sin(th) / np.sqrt((mass + E) * (mass + Ep)) * sh
    a2 = np.sqrt((mass + E) / (mass + Epp)) * (ch - p * np.sin(th) / (mass + E) * sh)
    b2 = p * np.cos(th) / np.sqrt((mass + E) * (mass + Epp)) * sh
    # + 0.0 normalizes IEEE negative zeros out of the printed parameters
    return ABParams(float(a1) + 0.0, float(b1) + 0.0, float(a2) + 0.0, float(b2) + 0.0)
