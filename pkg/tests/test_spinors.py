import numpy as np
import pytest

from diracspin.clifford import ALPHA, GAMMA0, IDENTITY4, PAULI
from diracspin.kinematics import FourMomentum, SphericalMomentum, make_momentum
from diracspin.spinors import (
    REP_COVARIANT,
    REP_FW,
    DiracSpinor,
    basis_spinor,
    dirac_adjoint,
    energy_projector,
    fw_unitary,
    momentum_slash,
    rest_spinor,
    spinor_boost,
    spinor_boost_inverse,
    spinor_boost_z,
    to_fw,
)
from diracspin.spin_ops import dirac_hamiltonian


def test_spinor_boost_rest_is_identity():
    S = spinor_boost(FourMomentum.at_rest(1.0))
    assert np.abs(S - IDENTITY4).max() == 0.0


def test_spinor_boost_block_form(momenta):
    for p in momenta:
        if p.magnitude == 0.0:
            continue
        S = spinor_boost(p)
        xi = p.rapidity
        phat = p.p3 / p.magnitude
        sp = sum(PAULI[i] * phat[i] for i in range(3))
        expect = np.block(
            [
                [np.cosh(xi / 2) * np.eye(2), np.sinh(xi / 2) * sp],
                [np.sinh(xi / 2) * sp, np.cosh(xi / 2) * np.eye(2)],
            ]
        )
        scale = max(1.0, np.abs(S).max())
        assert np.abs(S - expect).max() < 1e-12 * scale


def test_spinor_boost_inverse_is_opposite_momentum(momenta):
    for p in momenta:
        S = spinor_boost(p)
        Sm = spinor_boost(FourMomentum.from_p3(p.mass, -p.p3))
        scale = max(1.0, p.energy / p.mass)
        assert np.abs(S @ Sm - IDENTITY4).max() < 1e-10 * scale
        assert np.abs(Sm - spinor_boost_inverse(p)).max() == 0.0


def test_spinor_boost_hermitian_not_unitary():
    p = FourMomentum.from_p3(1.0, [0.4, -0.2, 1.1])
    S = spinor_boost(p)
    assert np.abs(S - S.conj().T).max() < 1e-15
    assert np.abs(S @ S.conj().T - IDENTITY4).max() > 1e-3


def test_spinor_boost_z_basics():
    assert np.abs(spinor_boost_z(0.0) - IDENTITY4).max() == 0.0
    a = spinor_boost_z(0.7) @ spinor_boost_z(1.1)
    assert np.abs(a - spinor_boost_z(1.8)).max() < 1e-13
    m, xi = 1.4, -0.9
    p = FourMomentum.from_p3(m, [0, 0, m * np.sinh(xi)])
    assert np.abs(spinor_boost_z(xi) - spinor_boost(p)).max() < 1e-14


def test_slash_intertwining(momenta):
    # the boost conjugates gamma.p into gamma.(Lp): here for z boosts
    from diracspin.kinematics import apply_lorentz, boost_z

    xi = 1.3
    S = spinor_boost_z(xi)
    Sinv = spinor_boost_z(-xi)
    for p in momenta[:10]:
        lhs = S @ momentum_slash(p) @ Sinv
        rhs = momentum_slash(apply_lorentz(boost_z(xi), p))
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, p.energy)


def test_rest_basis_spinors():
    k = FourMomentum.at_rest(1.0)
    u = basis_spinor(k, +1, +1)
    assert np.abs(u.components - np.array([1, 0, 0, 0])).max() == 0.0
    v = basis_spinor(k, -1, -1)
    assert np.abs(v.components - np.array([0, 0, 0, 1])).max() == 0.0


def test_fw_basis_spinors_momentum_independent(momenta):
    for p in momenta[:8]:
        s = basis_spinor(p, -1, -1, rep=REP_FW)
        assert np.abs(s.components - np.array([0, 0, 0, 1])).max() == 0.0


def test_invariant_normalizations(momenta):
    for p in momenta:
        us = [basis_spinor(p, s, +1) for s in (+1, -1)]
        vs = [basis_spinor(p, s, -1) for s in (+1, -1)]
        for a in range(2):
            for b in range(2):
                d = 1.0 if a == b else 0.0
                assert abs(dirac_adjoint(us[a]) @ us[b].components - d) < 1e-9
                assert abs(dirac_adjoint(vs[a]) @ vs[b].components + d) < 1e-9
                assert abs(dirac_adjoint(us[a]) @ vs[b].components) < 1e-9


def test_dirac_adjoint_values():
    k = FourMomentum.at_rest(1.0)
    assert np.abs(dirac_adjoint(basis_spinor(k, +1, +1)) - np.array([1, 0, 0, 0])).max() == 0.0
    v = basis_spinor(k, +1, -1)
    assert abs(dirac_adjoint(v) @ v.components + 1.0) < 1e-14


def test_dirac_adjoint_rejects_fw():
    k = FourMomentum.at_rest(1.0)
    with pytest.raises(ValueError):
        dirac_adjoint(basis_spinor(k, +1, +1, rep=REP_FW))


def test_projector_rest_frame():
    k = FourMomentum.at_rest(1.0)
    assert np.abs(energy_projector(k, +1).matrix - np.diag([1, 1, 0, 0])).max() == 0.0


def test_projector_completeness_and_annihilation(momenta):
    for p in momenta:
        Pp = energy_projector(p, +1).matrix
        Pm = energy_projector(p, -1).matrix
        scale = max(1.0, p.energy / p.mass)
        assert np.abs(Pp + Pm - IDENTITY4).max() < 1e-14 * scale
        for s in (+1, -1):
            v = basis_spinor(p, s, -1).components
            u = basis_spinor(p, s, +1).components
            assert np.abs(Pp @ v).max() < 1e-10 * scale
            assert np.abs(Pp @ u - u).max() < 1e-10 * scale


def test_projector_sign_validation():
    with pytest.raises(ValueError):
        energy_projector(FourMomentum.at_rest(1.0), 0)


def test_fw_unitary_identity_and_unitarity(momenta):
    assert np.abs(fw_unitary([0, 0, 0], 1.0) - IDENTITY4).max() == 0.0
    for p in momenta:
        U = fw_unitary(p.p3, p.mass)
        assert np.abs(U @ U.conj().T - IDENTITY4).max() < 1e-12


def test_fw_unitary_diagonalizes_hamiltonian(momenta):
    for p in momenta:
        U = fw_unitary(p.p3, p.mass)
        H = dirac_hamiltonian(p.p3, p.mass)
        got = U @ H @ U.conj().T
        assert np.abs(got - p.energy * GAMMA0).max() < 1e-10 * p.energy


def test_boost_unitary_intertwining(momenta):
    """The diagonalizing unitary equals sqrt(E/m) times the inverse spinor
    boost on each energy branch (and the adjoint counterparts); residuals
    are measured relative to the matrix scale, which grows ~ (E/m)^1.5."""
    for p in momenta:
        E, m = p.energy, p.mass
        root = np.sqrt(E / m)
        S = spinor_boost(p)
        Sinv = spinor_boost_inverse(p)
        Pp = energy_projector(p, +1).matrix
        Pm = energy_projector(p, -1).matrix
        Up = fw_unitary(p.p3, m)
        Um = fw_unitary(-p.p3, m)
        scale = max(1.0, root * E / m)
        assert np.abs(Up @ Pp - root * Sinv @ Pp).max() < 1e-10 * scale
        assert np.abs(Um @ Pm - root * Sinv @ Pm).max() < 1e-10 * scale
        assert np.abs(Pp.conj().T @ Up.conj().T - root * Pp.conj().T @ GAMMA0 @ S).max() < 1e-10 * scale
        assert np.abs(Pm.conj().T @ Um.conj().T + root * Pm.conj().T @ GAMMA0 @ S).max() < 1e-10 * scale


def test_completeness_sums(momenta):
    for p in momenta:
        pos = sum(
            np.outer(basis_spinor(p, s, +1).components, dirac_adjoint(basis_spinor(p, s, +1)))
            for s in (+1, -1)
        )
        neg = -sum(
            np.outer(basis_spinor(p, s, -1).components, dirac_adjoint(basis_spinor(p, s, -1)))
            for s in (+1, -1)
        )
        scale = max(1.0, p.energy / p.mass)
        assert np.abs(pos - energy_projector(p, +1).matrix).max() < 1e-10 * scale
        assert np.abs(neg - energy_projector(p, -1).matrix).max() < 1e-10 * scale


def test_to_fw_maps_basis_to_unit_vectors(momenta):
    k = FourMomentum.at_rest(1.0)
    out = to_fw(basis_spinor(k, +1, +1), k)
    assert np.abs(out.components - np.array([1, 0, 0, 0])).max() == 0.0
    for p in momenta[:12]:
        for s, sign, idx in ((+1, +1, 0), (-1, +1, 1), (+1, -1, 2), (-1, -1, 3)):
            got = to_fw(basis_spinor(p, s, sign), p)
            e = np.zeros(4)
            e[idx] = 1.0
            assert got.rep == REP_FW
            assert np.abs(got.components - e).max() < 1e-10


def test_to_fw_rejects_mixed_energy():
    p = make_momentum(1.0, SphericalMomentum(2.0, 1.0, 0.5))
    mixed = basis_spinor(p, +1, +1).components + basis_spinor(p, +1, -1).components
    psi = DiracSpinor(mixed, REP_COVARIANT, +1)
    with pytest.raises(ValueError):
        to_fw(psi, p)


def test_to_fw_rejects_fw_input():
    k = FourMomentum.at_rest(1.0)
    with pytest.raises(ValueError):
        to_fw(basis_spinor(k, +1, +1, rep=REP_FW), k)


def test_spinor_validation():
    with pytest.raises(ValueError):
        DiracSpinor(np.array([1.0, 0, 0, 0]), REP_COVARIANT, -1, spin_label=+1)
    with pytest.raises(ValueError):
        DiracSpinor(np.array([2.0, 0, 0, 0]), REP_FW, +1, spin_label=+1)
    with pytest.raises(ValueError):
        DiracSpinor(np.array([1.0, 0, 0, 0]), "weird", +1)
