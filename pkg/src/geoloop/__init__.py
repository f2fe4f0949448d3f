"""Single-loop nonadiabatic geometric quantum gate toolkit.

Builds piecewise-constant pulse schedules whose closed Bloch-sphere loops
cancel the dynamical phase internally, propagates qubit states exactly,
decomposes accumulated phases into dynamical and geometric parts, and
certifies the resulting one- and two-qubit gate matrices.
"""

from .core import (
    BlochVector,
    ControlSegment,
    QubitState,
    Schedule,
    bloch_vector,
    propagate,
    schedule_unitary,
    segment_unitary,
    state_from_angles,
)
from .gates import (
    GateReport,
    commutator_norm,
    compare_gates,
    single_loop_schedule,
    u_chi,
    u_gate,
)
from .noise import NoiseSpec, SweepResult, fidelity_sweep, perturb_schedule
from .phases import (
    BlochPath,
    NonCyclicError,
    OpenPathError,
    PhaseDecomposition,
    dynamical_phase,
    geometric_phase,
    is_cyclic,
    sample_path,
    solid_angle,
    total_phase,
)
from .schedule_io import (
    ScheduleParseError,
    load_schedule,
    parse_schedule,
    save_schedule,
    serialize_schedule,
)
from .twoqubit import (
    ConditionalSchedule,
    CouplingStep,
    NmrParams,
    controlled_u,
    effective_field_a,
    nmr_hamiltonian,
    two_qubit_schedule,
    two_qubit_unitary,
)

__version__ = "0.1.0"
