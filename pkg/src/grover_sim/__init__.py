"""Classical simulation of Grover search: state vectors, oracles, the
diffusion operator, closed-form predictions and the four-item circuit."""

from .analytic import classical_comparison, success_curve, theta_of
from .baseline import expected_queries_sequential, monte_carlo_queries, success_probability_after
from .engine import (
    GroverPlan,
    RunResult,
    Trajectory,
    amplitude_growth_report,
    diffusion_apply,
    diffusion_matrix,
    grover_iterate,
    plan,
    run,
)
from .errors import GroverError
from .four_item import OracleStyle, build_circuit, oracle_equivalence_check, run_circuit
from .oracle import MarkedSet, bit_oracle_apply, kickback_equivalence_check, oracle_matrix, phase_oracle_apply
from .statevector import (
    StateVector,
    apply_gate,
    inner_product,
    probability_of,
    sample_measurement,
    uniform_state,
)

__version__ = "0.1.0"
