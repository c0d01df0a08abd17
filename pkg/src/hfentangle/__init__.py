"""Ground-state and thermal electron-nuclear entanglement in a spin-1 / spin-1/2 hyperfine system."""

from .errors import (
    DimensionMismatch,
    HFEntangleError,
    InvalidRange,
    NoConvergence,
    NoSignChange,
    NotHermitian,
    NotNormalized,
)
from .ground import (
    GroundStateResult,
    SweepSeries,
    concurrence_closed_form,
    degenerate_mixture,
    ground_energy_closed_form,
    ground_state,
    ground_sweep,
    ground_vector_closed_form,
    limit_pure_states,
    zero_field_ground_states,
)
from .linalg import (
    BipartiteDims,
    HermitianEigenDecomposition,
    hermitian_eig,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import DensityMatrix, PureState, concurrence_pure, negativity, schmidt_negativity_oracle
from .spin import HYPERFINE_DIMS, FieldParams, build_hamiltonian, physical_to_reduced, spin_operators
from .thermal import (
    CriticalTemperatureResult,
    ThermalParams,
    curvature_at_zero,
    find_critical_temperature,
    gibbs_state,
    thermal_negativity,
    thermal_sweep,
)

__version__ = "0.1.0"
