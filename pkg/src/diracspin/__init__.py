"""Numerical toolkit for the spin of a massive Dirac particle: covariant
and mean spin operators, their equivalence on the full spinor space, and
the behaviour of reduced spin density matrices under observer boosts."""

from .clifford import (
    GAMMA0,
    GAMMA5,
    GAMMAS,
    IDENTITY4,
    METRIC,
    METRIC_SIGNATURE,
    SIGMA,
    GammaBasis,
    gamma_basis,
    levi_civita4,
    spin_tensor_rest,
)
from .density import (
    LN2,
    MomentumSuperposition,
    MomentumTerm,
    ReducedSpinDensity,
    boost_state,
    boosted_density_via_transport,
    closed_form_density,
    make_state,
    reduce_density,
    sweep,
    von_neumann_entropy,
)
from .kinematics import (
    FourMomentum,
    LorentzMatrix,
    SphericalMomentum,
    apply_lorentz,
    boost_along,
    boost_z,
    make_momentum,
    perp_momentum,
    standard_boost,
)
from .spin_ops import (
    CLOSED_FORM_FACTOR,
    RYDER_MATCHING_VARIANT,
    PauliLubanskiSet,
    SpinOperatorTriple,
    classical_spin,
    covariant_spin,
    covariant_spin_closed,
    dirac_hamiltonian,
    fw_mean_spin,
    pauli_lubanski,
    ryder_spin,
    ryder_tensors,
)
from .spinors import (
    REP_COVARIANT,
    REP_FW,
    DiracSpinor,
    EnergyProjector,
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
from .transport import (
    ABParams,
    TransportMatrix,
    WignerBlock,
    ab_params,
    spinor_rep,
    transport_covariant,
    transport_fw,
    wigner_block,
)
from .verification import CheckResult, VerificationReport, run_verify

__version__ = "0.1.0"
