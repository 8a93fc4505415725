"""Gamma-matrix basis in the standard (Dirac) representation.

Metric signature is fixed to (+,-,-,-).  All matrices are immutable 4x4
complex arrays built from exact 0/+-1/+-i entries, so algebraic identities
among them hold to machine epsilon.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

METRIC_SIGNATURE = (1, -1, -1, -1)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


METRIC = _frozen(np.diag(np.array(METRIC_SIGNATURE, dtype=float)))

PAULI = tuple(
    _frozen(np.array(m, dtype=complex))
    for m in (
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    )
)

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

GAMMA0 = _frozen(np.block([[_I2, _Z2], [_Z2, -_I2]]))
GAMMA1, GAMMA2, GAMMA3 = (
    _frozen(np.block([[_Z2, PAULI[i]], [-PAULI[i], _Z2]])) for i in range(3)
)
GAMMAS = (GAMMA0, GAMMA1, GAMMA2, GAMMA3)
GAMMA5 = _frozen(1j * GAMMA0 @ GAMMA1 @ GAMMA2 @ GAMMA3)

# 4x4 Pauli spin vector, block-diag(sigma_i, sigma_i)
SIGMA = tuple(_frozen(np.block([[PAULI[i], _Z2], [_Z2, PAULI[i]]])) for i in range(3))

# alpha_i = gamma^0 gamma^i, the velocity matrices of the Dirac Hamiltonian
ALPHA = tuple(_frozen(GAMMA0 @ GAMMAS[i + 1]) for i in range(3))

IDENTITY4 = _frozen(np.eye(4, dtype=complex))


class GammaBasis(NamedTuple):
    g0: np.ndarray
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray
    g5: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray
    sigma3: np.ndarray
    identity: np.ndarray


def gamma_basis() -> GammaBasis:
    """Return the full standard-representation basis as a named tuple."""
    return GammaBasis(GAMMA0, GAMMA1, GAMMA2, GAMMA3, GAMMA5, *SIGMA, IDENTITY4)


def _check_index(i: int) -> None:
    if not 0 <= i <= 3:
        raise IndexError(f"spacetime index out of range: {i}")


def spin_tensor_rest(mu: int, nu: int) -> np.ndarray:
    """Rest-frame spin tensor (i/2)[gamma^mu, gamma^nu], antisymmetric in (mu, nu)."""
    _check_index(mu)
    _check_index(nu)
    gm, gn = GAMMAS[mu], GAMMAS[nu]
    return 0.5j * (gm @ gn - gn @ gm)


def levi_civita4(mu: int, nu: int, lam: int, delta: int, *, upper: bool = True) -> int:
    """Totally antisymmetric symbol on four spacetime indices.

    Convention: eps^{0123} = +1 for upper indices.  Lowering all four
    indices with the metric multiplies by det(eta) = -1, so eps_{0123} = -1.
    The upper/lower distinction is an explicit keyword to keep sign errors
    out of contractions.
    """
    for i in (mu, nu, lam, delta):
        _check_index(i)
    idx = (mu, nu, lam, delta)
    if len(set(idx)) < 4:
        return 0
    sign = 1
    lst = list(idx)
    for i in range(3):
        for j in range(3 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
    return sign if upper else -sign


def levi_civita3(i: int, j: int, k: int) -> int:
    """Three-index antisymmetric symbol with eps_{123} = +1 (indices 0..2)."""
    if (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        return 1
    if (i, j, k) in ((2, 1, 0), (1, 0, 2), (0, 2, 1)):
        return -1
    return 0


def mat_close(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Entrywise matrix equality at an explicit absolute tolerance."""
    return bool(np.abs(np.asarray(a) - np.asarray(b)).max() <= tol)
