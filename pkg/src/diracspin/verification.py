"""Seeded randomized verification suite over all library invariants.

Each check reports its worst residual against an explicit tolerance; the
suite is deterministic for a fixed seed.  Checks marked "lower" invert the
comparison (the measured value must exceed the threshold), which is how
intentional non-identities are asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import clifford, density, kinematics, spin_ops, spinors, transport
from .clifford import GammaBasis, METRIC, gamma_basis, levi_civita3
from .kinematics import FourMomentum, SphericalMomentum, boost_along, boost_z

LN2 = float(np.log(2.0))


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    kind: str = "upper"  # "upper": pass iff value <= tol; "lower": value >= tol

    @property
    def passed(self) -> bool:
        return self.value <= self.tolerance if self.kind == "upper" else self.value >= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    samples: int
    results: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            rel = "<=" if r.kind == "upper" else ">="
            status = "PASS" if r.passed else "FAIL"
            out.append(f"{status}  {r.name:40s} {r.value:.3e} {rel} {r.tolerance:.1e}")
        return out


def _random_momenta(rng: np.random.Generator, n: int, max_ratio: float = 1e3) -> list[FourMomentum]:
    """Seeded momenta with |p|/m log-uniform up to max_ratio, plus one at rest."""
    out = [FourMomentum.at_rest(1.0)]
    for _ in range(max(n - 1, 0)):
        m = float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
        ratio = 10.0 ** rng.uniform(-3.0, np.log10(max_ratio))
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        out.append(FourMomentum.from_p3(m, m * ratio * direction))
    return out


def _random_boosts(rng: np.random.Generator, n: int) -> list[kinematics.LorentzMatrix]:
    out = []
    for k in range(n):
        xi = float(rng.uniform(-3.0, 3.0))
        if k % 2 == 0:
            out.append(boost_z(xi))
        else:
            direction = rng.normal(size=3)
            out.append(boost_along(xi, direction))
    return out


def _cross(a: np.ndarray, triple, i: int) -> np.ndarray:
    return sum(
        levi_civita3(i, j, k) * a[j] * triple[k]
        for j in range(3)
        for k in range(3)
        if levi_civita3(i, j, k)
    )


def run_verify(seed: int, samples: int, gamma_override: GammaBasis | None = None) -> VerificationReport:
    """Run every invariant check over `samples` seeded random momenta.

    gamma_override substitutes an alternative gamma basis into the algebra
    checks; it exists so the failure path of the suite itself is testable.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    basis = gamma_override if gamma_override is not None else gamma_basis()
    gam = (basis.g0, basis.g1, basis.g2, basis.g3)
    sigmas = (basis.sigma1, basis.sigma2, basis.sigma3)
    eye = basis.identity
    results: list[CheckResult] = []

    def add(name, value, tol, kind="upper"):
        results.append(CheckResult(name, float(value), tol, kind))

    # --- algebra of the matrix basis ---
    r = max(
        np.abs(gam[mu] @ gam[nu] + gam[nu] @ gam[mu] - 2.0 * METRIC[mu, nu] * eye).max()
        for mu in range(4)
        for nu in range(4)
    )
    add("gamma_anticommutators", r, 1e-14)

    r = np.abs(gam[0] - gam[0].conj().T).max()
    r = max(r, max(np.abs(gam[i] + gam[i].conj().T).max() for i in (1, 2, 3)))
    r = max(r, np.abs(basis.g5 - basis.g5.conj().T).max())
    r = max(r, max(np.abs(basis.g5 @ g + g @ basis.g5).max() for g in gam))
    r = max(r, np.abs(1j * gam[0] @ gam[1] @ gam[2] @ gam[3] - basis.g5).max())
    add("gamma_hermiticity_and_chirality", r, 1e-14)

    r = max(
        np.abs(
            sigmas[i] @ sigmas[j]
            - (eye if i == j else 0.0 * eye)
            - 1j * sum(levi_civita3(i, j, k) * sigmas[k] for k in range(3))
        ).max()
        for i in range(3)
        for j in range(3)
    )
    add("pauli_spin_algebra", r, 1e-14)

    r = max(
        np.abs(
            clifford.spin_tensor_rest(i + 1, j + 1)
            - sum(levi_civita3(i, j, k) * clifford.SIGMA[k] for k in range(3))
        ).max()
        for i in range(3)
        for j in range(3)
    )
    add("spin_tensor_vs_pauli_spin", r, 1e-14)

    momenta = _random_momenta(rng, samples)
    boosts = _random_boosts(rng, samples)

    # --- kinematics ---
    r = 0.0
    for p in momenta:
        k = np.array([p.mass, 0.0, 0.0, 0.0])
        r = max(r, np.abs(kinematics.standard_boost(p).entries @ k - p.vec4).max() / p.energy)
    add("standard_boost_maps_rest_momentum", r, 1e-12)

    r = 0.0
    for p, L1, L2 in zip(momenta, boosts, reversed(boosts)):
        a = kinematics.apply_lorentz(L1, kinematics.apply_lorentz(L2, p))
        b = kinematics.apply_lorentz(L1 @ L2, p)
        r = max(r, np.abs(a.vec4 - b.vec4).max() / a.energy)
    add("lorentz_composition", r, 1e-10)

    r = 0.0
    for p in momenta:
        L = kinematics.standard_boost(p)
        back = kinematics.apply_lorentz(L.inverse, p)
        r = max(r, np.abs(back.vec4 - np.array([p.mass, 0, 0, 0])).max() / p.energy)
    add("standard_boost_roundtrip", r, 1e-12)

    # --- spinors ---
    r = 0.0
    for p in momenta:
        S = spinors.spinor_boost(p)
        us = [S @ spinors.rest_spinor(s, +1) for s in (+1, -1)]
        vs = [S @ spinors.rest_spinor(s, -1) for s in (+1, -1)]
        for a in range(2):
            for b in range(2):
                d = 1.0 if a == b else 0.0
                r = max(r, abs(us[a].conj() @ clifford.GAMMA0 @ us[b] - d))
                r = max(r, abs(vs[a].conj() @ clifford.GAMMA0 @ vs[b] + d))
                r = max(r, abs(us[a].conj() @ clifford.GAMMA0 @ vs[b]))
    add("spinor_normalizations", r, 1e-9)

    r = 0.0
    for p in momenta:
        S = spinors.spinor_boost(p)
        pos = sum(
            np.outer(S @ spinors.rest_spinor(s, +1), (S @ spinors.rest_spinor(s, +1)).conj() @ clifford.GAMMA0)
            for s in (+1, -1)
        )
        neg = -sum(
            np.outer(S @ spinors.rest_spinor(s, -1), (S @ spinors.rest_spinor(s, -1)).conj() @ clifford.GAMMA0)
            for s in (+1, -1)
        )
        r = max(r, np.abs(pos - spinors.energy_projector(p, +1).matrix).max() / (p.energy / p.mass))
        r = max(r, np.abs(neg - spinors.energy_projector(p, -1).matrix).max() / (p.energy / p.mass))
    add("spinor_completeness", r, 1e-10)

    r = 0.0
    for p in momenta:
        Pp = spinors.energy_projector(p, +1).matrix
        Pm = spinors.energy_projector(p, -1).matrix
        scale = max(1.0, (p.energy / p.mass) ** 2)
        r = max(r, np.abs(Pp @ Pp - Pp).max() / scale)
        r = max(r, np.abs(Pp @ Pm).max() / scale)
        r = max(r, np.abs(Pp + Pm - np.eye(4)).max())
    add("projector_algebra", r, 1e-12)

    r_diag, r_unit = 0.0, 0.0
    for p in momenta:
        U = spinors.fw_unitary(p.p3, p.mass)
        r_unit = max(r_unit, np.abs(U @ U.conj().T - np.eye(4)).max())
        H = spin_ops.dirac_hamiltonian(p.p3, p.mass)
        r_diag = max(
            r_diag, np.abs(U @ H @ U.conj().T - p.energy * clifford.GAMMA0).max() / p.energy
        )
    add("fw_unitarity", r_unit, 1e-12)
    add("fw_diagonalizes_hamiltonian", r_diag, 1e-10)

    r = 0.0
    for p in momenta:
        E, m = p.energy, p.mass
        root = np.sqrt(E / m)
        S = spinors.spinor_boost(p)
        Sinv = spinors.spinor_boost_inverse(p)
        Pp = spinors.energy_projector(p, +1).matrix
        Pm = spinors.energy_projector(p, -1).matrix
        Up = spinors.fw_unitary(p.p3, m)
        Um = spinors.fw_unitary(-p.p3, m)
        scale = max(1.0, E / m)
        r = max(r, np.abs(Up @ Pp - root * Sinv @ Pp).max() / scale)
        r = max(r, np.abs(Um @ Pm - root * Sinv @ Pm).max() / scale)
        r = max(r, np.abs(Pp.conj().T @ Up.conj().T - root * Pp.conj().T @ clifford.GAMMA0 @ S).max() / scale)
        r = max(r, np.abs(Pm.conj().T @ Um.conj().T + root * Pm.conj().T @ clifford.GAMMA0 @ S).max() / scale)
    add("fw_boost_intertwining", r, 1e-10)

    # --- spin operators ---
    r = 0.0
    for p in momenta:
        H = spin_ops.dirac_hamiltonian(p.p3, p.mass)
        fw = spin_ops.fw_mean_spin(p.p3, p.mass)
        hn = np.linalg.norm(H)
        for c in fw.components:
            r = max(r, np.linalg.norm(c @ H - H @ c) / (np.linalg.norm(c) * hn))
    add("fw_spin_commutes_with_hamiltonian", r, 1e-10)

    v = np.inf
    for p in momenta:
        if p.magnitude / p.mass < 1e-2:
            continue
        H = spin_ops.dirac_hamiltonian(p.p3, p.mass)
        cov = spin_ops.covariant_spin(p)
        hn = np.linalg.norm(H)
        v = min(
            v,
            max(
                np.linalg.norm(c @ H - H @ c) / (np.linalg.norm(c) * hn)
                for c in cov.components
            ),
        )
    if not np.isfinite(v):
        v = 0.0  # only rest-frame samples: nothing to certify
    add("covariant_spin_not_conserved", v, 1e-3, kind="lower")

    r = 0.0
    for p in momenta:
        S = spinors.spinor_boost(p)
        cov = spin_ops.covariant_spin(p)
        for s in (+1, -1):
            u = S @ spinors.rest_spinor(s, +1)
            vv = S @ spinors.rest_spinor(s, -1)
            scale = max(1.0, p.energy / p.mass)
            r = max(r, np.abs(cov.z @ u - s * u).max() / scale)
            r = max(r, np.abs(cov.z @ vv - s * vv).max() / scale)
    add("spin_eigenvalue_equations", r, 1e-10)

    # expectation equivalence across representations; |p|/m capped at 1e2
    # because the covariant sandwich loses ~ (E/m)^2 digits in double precision
    equiv_momenta = _random_momenta(rng, samples, max_ratio=1e2)
    r = 0.0
    for p in equiv_momenta:
        E, m = p.energy, p.mass
        S = spinors.spinor_boost(p)
        cov = spin_ops.covariant_spin(p)
        fw_p = spin_ops.fw_mean_spin(p.p3, m)
        fw_m = spin_ops.fw_mean_spin(-p.p3, m)
        c = rng.normal(size=4) + 1j * rng.normal(size=4)
        c /= np.linalg.norm(c)
        psi_p = S @ np.array([c[0], c[1], 0, 0])
        psi_m = S @ np.array([0, 0, c[2], c[3]])
        psi = psi_p + psi_m
        for i in range(3):
            lhs = (m / E) * (
                psi_p.conj() @ fw_p[i] @ psi_p - psi_m.conj() @ fw_m[i] @ psi_m
            )
            rhs = psi.conj() @ clifford.GAMMA0 @ cov[i] @ psi
            r = max(r, abs(lhs - rhs))
    add("operator_equivalence", r, 1e-10)

    r = 0.0
    for p in momenta:
        cov = spin_ops.covariant_spin(p)
        closed = spin_ops.covariant_spin_closed(p)
        scale = max(1.0, p.energy / p.mass)
        r = max(
            r,
            max(
                np.abs(cov[i] - spin_ops.CLOSED_FORM_FACTOR * closed[i]).max()
                for i in range(3)
            )
            / scale,
        )
    add("closed_form_scale_factor", r, 1e-12)

    # quadruple products of Pauli-Lubanski components lose ~(E/m)^4 digits,
    # so this identity is certified on moderately relativistic momenta
    r = 0.0
    for p in _random_momenta(rng, min(samples, 25), max_ratio=10.0):
        cov = spin_ops.covariant_spin(p)
        ry = spin_ops.ryder_spin(p)
        r = max(r, max(np.abs(ry[i] - cov[i]).max() for i in range(3)))
    add("ryder_matches_conjugation", r, 1e-10)

    r_cas, r_tv = 0.0, 0.0
    for p in momenta:
        W = spin_ops.pauli_lubanski(p)
        m2 = p.mass**2
        scale = max(1.0, (p.energy / p.mass) ** 2)
        r_cas = max(
            r_cas, np.abs(W.casimir() + 0.75 * m2 * np.eye(4)).max() / (m2 * scale)
        )
        r_tv = max(r_tv, np.abs(W.transversality()).max() / (p.energy**2 / p.mass))
    add("pauli_lubanski_casimir", r_cas, 1e-10)
    add("pauli_lubanski_transversality", r_tv, 1e-10)

    Wrest = spin_ops.pauli_lubanski(FourMomentum.at_rest(1.0))
    r = np.abs(Wrest.w0).max()
    for i in range(3):
        r = max(r, np.abs(Wrest.lower[i + 1] + 0.5 * clifford.SIGMA[i]).max())
    add("pauli_lubanski_rest_calibration", r, 1e-14)

    r = 0.0
    for p in momenta:
        cov = spin_ops.covariant_spin(p)
        cl = spin_ops.classical_spin(p)
        scale = max(1.0, p.energy / p.mass)
        for i in range(3):
            d = cov[i] - cl[i]
            r = max(r, np.abs(d[:2, :2]).max() / scale, np.abs(d[2:, 2:]).max() / scale)
    add("classical_decomposition_chirality", r, 1e-10)

    r = 0.0
    for p in momenta[: min(len(momenta), 25)]:
        cov = spin_ops.covariant_spin(p)
        scale = max(1.0, (p.energy / p.mass) ** 2)
        for i in range(3):
            for j in range(3):
                comm = cov[i] @ cov[j] - cov[j] @ cov[i]
                expect = 2j * sum(levi_civita3(i, j, k) * cov[k] for k in range(3))
                r = max(r, np.abs(comm - expect).max() / scale)
    add("angular_momentum_closure", r, 1e-10)

    # --- transport ---
    r_struct, r_equiv = 0.0, 0.0
    for p, L in zip(momenta, boosts):
        T = transport.transport_fw(L, p)
        M = T.entries
        r_struct = max(r_struct, np.abs(M @ M.conj().T - np.eye(4)).max())
        r_struct = max(r_struct, np.abs(M[:2, 2:]).max(), np.abs(M[2:, :2]).max())
        r_struct = max(r_struct, np.abs(T.positive_block - T.negative_block).max())
        r_equiv = max(
            r_equiv,
            np.abs(transport.transport_covariant(L, p, +1) - T.positive_block).max(),
            np.abs(transport.transport_covariant(L, p, -1) - T.negative_block).max(),
        )
    add("transport_structure", r_struct, 1e-10)
    add("transport_representation_equivalence", r_equiv, 1e-10)

    r = 0.0
    for p, L1, L2 in zip(momenta[:25], boosts, reversed(boosts)):
        T1 = transport.transport_fw(L1, p)
        T2 = transport.transport_fw(L2, kinematics.apply_lorentz(L1, p))
        Tc = transport.transport_fw(L2 @ L1, p)
        r = max(r, np.abs(T2.entries @ T1.entries - Tc.entries).max())
    add("transport_cocycle", r, 1e-9)

    r = 0.0
    for _ in range(samples):
        sph = SphericalMomentum(
            float(rng.uniform(0, 20)), float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi))
        )
        xi = float(rng.uniform(0, 12))
        ab = transport.ab_params(1.0, sph, xi)
        r = max(r, abs(ab.a1**2 + ab.b1**2 - 1.0), abs(ab.a2**2 + ab.b2**2 - 1.0))
    add("ab_normalization", r, 1e-12)

    # --- density / entropy ---
    r = 0.0
    for _ in range(min(samples, 30)):
        sph = SphericalMomentum(10.0, float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi)))
        xi = float(rng.uniform(0, 12))
        for variant in ("psi1", "psi2"):
            closed = density.closed_form_density(variant, 1.0, sph, xi)
            transported = density.boosted_density_via_transport(variant, 1.0, sph, xi)
            r = max(r, np.abs(closed.matrix - transported.matrix).max())
    add("dual_path_density", r, 1e-10)

    sph0 = SphericalMomentum(10.0, 0.54 * np.pi, 0.0)
    s1 = density.closed_form_density("psi1", 1.0, sph0, 0.0).entropy
    s2 = density.closed_form_density("psi2", 1.0, sph0, 0.0).entropy
    add("entropy_endpoints", max(abs(s1), abs(s2 - LN2)), 1e-12)

    r = 0.0
    for _ in range(min(samples, 20)):
        theta = float(rng.uniform(0, np.pi))
        xi = float(rng.uniform(0, 12))
        base = [
            density.closed_form_density(v, 1.0, SphericalMomentum(10.0, theta, 0.0), xi).entropy
            for v in ("psi1", "psi2")
        ]
        phi = float(rng.uniform(0, 2 * np.pi))
        other = [
            density.closed_form_density(v, 1.0, SphericalMomentum(10.0, theta, phi), xi).entropy
            for v in ("psi1", "psi2")
        ]
        r = max(r, abs(base[0] - other[0]), abs(base[1] - other[1]))
    add("entropy_azimuth_invariance", r, 1e-12)

    return VerificationReport(seed=seed, samples=samples, results=tuple(results))
