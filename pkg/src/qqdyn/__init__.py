"""Open-system dynamics of a two-parameter qubit-qutrit state family.

The package simulates the family under five Kraus noise channels acting on
the qubit, the qutrit, or both, computes entanglement (negativity) and
off-diagonal coherence over noise strength, locates entanglement sudden
death thresholds, and cross-validates the Kraus numerics against closed-form
expressions for every evolved state and negativity that admits one.
"""

from .channels import (
    ChannelKind,
    KrausChannel,
    NoiseStrength,
    OPERATOR_COUNTS,
    Side,
    bit_flip,
    bit_phase_flip,
    dephasing,
    depolarizing,
    make_channel,
    phase_flip,
)
from .evolution import (
    ChannelScenario,
    Mode,
    RAW_FORM_MISMATCHES,
    analytic_evolved,
    apply_channel,
    coherence_l1,
    evolve,
)
from .linalg import (
    dagger,
    hermitian_eigenvalues,
    kron,
    matmul,
    partial_transpose_qutrit,
    trace_norm,
)
from .negativity import (
    CANONICAL_POINTS,
    EsdReport,
    NegativityResult,
    NoClosedFormError,
    REFERENCE_ESD_TABLE,
    analytic_esd_gamma,
    classify_table1,
    esd_gamma,
    esd_report,
    negativity_analytic,
    negativity_numeric,
)
from .states import (
    DensityMatrix,
    StateParams,
    bell_state,
    initial_negativity,
    initial_state,
)
from .sweep import SweepResult, SweepRow, run_sweep
from .validate import run_validation

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_POINTS",
    "ChannelKind",
    "ChannelScenario",
    "DensityMatrix",
    "EsdReport",
    "KrausChannel",
    "Mode",
    "NegativityResult",
    "NoClosedFormError",
    "NoiseStrength",
    "OPERATOR_COUNTS",
    "RAW_FORM_MISMATCHES",
    "REFERENCE_ESD_TABLE",
    "Side",
    "StateParams",
    "SweepResult",
    "SweepRow",
    "analytic_esd_gamma",
    "analytic_evolved",
    "apply_channel",
    "bell_state",
    "bit_flip",
    "bit_phase_flip",
    "classify_table1",
    "coherence_l1",
    "dagger",
    "dephasing",
    "depolarizing",
    "esd_gamma",
    "esd_report",
    "evolve",
    "hermitian_eigenvalues",
    "initial_negativity",
    "initial_state",
    "kron",
    "make_channel",
    "matmul",
    "negativity_analytic",
    "negativity_numeric",
    "partial_transpose_qutrit",
    "phase_flip",
    "run_sweep",
    "run_validation",
    "trace_norm",
]
