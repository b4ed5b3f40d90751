"""The Grover iterate ``G = V U`` and full search runs.

``U`` is the phase oracle and ``V = 2|Psi><Psi| - I`` is the diffusion
(inversion about the average) for the uniform state ``|Psi>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import analytic
from .errors import DimensionMismatch, MultipleSolutionsUnsupported, NoSolutions, SimulationError
from .gates import conditional_phase_zero, hadamard_transform
from .oracle import MarkedSet, QueryCounter, phase_oracle_apply
from .statevector import StateVector, uniform_state


def diffusion_apply(state: StateVector) -> StateVector:
    """Reflect every amplitude about the mean: ``a_i -> 2A - a_i``."""
    amps = state.amplitudes
    return StateVector._wrap(2.0 * amps.mean() - amps, state.qubit_count)


def diffusion_matrix(n: int) -> np.ndarray:
    """Explicit D with ``2/N - 1`` on the diagonal and ``2/N`` elsewhere (n <= 6)."""
    hadamard_transform(n)  # enforces the explicit-matrix cap
    N = 2**n
    return (np.full((N, N), 2.0 / N) - np.eye(N)).astype(np.complex128)


def diffusion_decomposition(n: int) -> np.ndarray:
    """``H^{⊗n} diag(1,-1,...,-1) H^{⊗n}``, which should equal ``diffusion_matrix(n)``."""
    h = hadamard_transform(n)
    return h @ conditional_phase_zero(n) @ h


def grover_iterate(
    state: StateVector, marked: MarkedSet, counter: QueryCounter | None = None
) -> StateVector:
    """One oracle query followed by one diffusion."""
    if marked.M == 0:
        raise NoSolutions("cannot iterate with an empty marked set")
    return diffusion_apply(phase_oracle_apply(state, marked, counter))


@dataclass(frozen=True)
class GroverPlan:
    N: int
    M: int
    theta: float
    k_opt: int
    predicted_success: float

    @property
    def theta_degrees(self) -> float:
        return math.degrees(self.theta)

    @property
    def rotation_degrees(self) -> float:
        """Angle turned by one iteration, ``2 theta``."""
        return math.degrees(2.0 * self.theta)

    @property
    def approx_iterations(self) -> float:
        return math.pi / 4.0 * math.sqrt(self.N / self.M)


def plan(N: int, M: int) -> GroverPlan:
    theta = analytic.theta_of(N, M)
    k = analytic.optimal_iterations_for(N, M)
    return GroverPlan(
        N=N,
        M=M,
        theta=theta,
        k_opt=k,
        predicted_success=analytic.RotationState(theta, k).success_probability,
    )


@dataclass(frozen=True)
class TrajectoryRecord:
    k: int
    success_probability: float
    alpha_coefficient: float
    beta_coefficient: float
    marked_amplitude: float
    unmarked_amplitude: float


@dataclass(frozen=True)
class Trajectory:
    N: int
    M: int
    records: tuple[TrajectoryRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TrajectoryRecord]:
        return iter(self.records)

    def __getitem__(self, k: int) -> TrajectoryRecord:
        return self.records[k]

    def probabilities(self) -> np.ndarray:
        return np.array([r.success_probability for r in self.records])


def _real(z: complex, what: str) -> float:
    if abs(z.imag) >= 1e-12:
        raise SimulationError(f"{what} has imaginary part {z.imag!r}; dynamics left the real plane")
    return float(z.real)


def _record(k: int, state: StateVector, mask: np.ndarray, M: int) -> TrajectoryRecord:
    amps = state.amplitudes
    N = amps.shape[0]
    marked = amps[mask]
    unmarked = amps[~mask]
    beta = _real(complex(marked.sum()), "beta") / math.sqrt(M)
    alpha = _real(complex(unmarked.sum()), "alpha") / math.sqrt(N - M) if M < N else 0.0
    prob = float(np.sum(marked.real**2 + marked.imag**2))
    return TrajectoryRecord(
        k=k,
        success_probability=prob,
        alpha_coefficient=alpha,
        beta_coefficient=beta,
        marked_amplitude=_real(complex(marked[0]), "marked amplitude"),
        unmarked_amplitude=_real(complex(unmarked[0]), "unmarked amplitude") if M < N else 0.0,
    )


@dataclass(frozen=True)
class RunResult:
    state: StateVector
    trajectory: Trajectory
    queries: int
    plan: GroverPlan

    @property
    def success_probability(self) -> float:
        return self.trajectory[-1].success_probability


def run(n: int, marked: MarkedSet, iterations: int | None = None) -> RunResult:
    """Prepare the uniform state and apply ``iterations`` Grover iterates.

    ``iterations`` defaults to the plan's optimal count. The trajectory has
    one record for each k in ``0..iterations``.
    """
    if marked.qubit_count != n:
        raise DimensionMismatch(f"marked set is over {marked.qubit_count} qubits, run asked for {n}")
    if marked.M == 0:
        raise NoSolutions("cannot search with an empty marked set")
    p = plan(2**n, marked.M)
    k_total = p.k_opt if iterations is None else int(iterations)
    if k_total < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")

    mask = marked.mask()
    counter = QueryCounter()
    state = uniform_state(n)
    records = [_record(0, state, mask, marked.M)]
    for k in range(1, k_total + 1):
        state = grover_iterate(state, marked, counter)
        records.append(_record(k, state, mask, marked.M))
    return RunResult(
        state=state,
        trajectory=Trajectory(N=2**n, M=marked.M, records=tuple(records)),
        queries=counter.count,
        plan=p,
    )


class GrowthRow(NamedTuple):
    step: int
    marked_amplitude: float
    unmarked_amplitude: float
    # mean amplitude that the diffusion reflected about at this step
    average: float


def amplitude_growth_report(n: int, marked: MarkedSet, steps: int) -> list[GrowthRow]:
    """Marked/unmarked amplitudes step by step for a single marked item.

    Row 0 is the uniform state (its average is ``1/sqrt(N)``); row s >= 1
    reports the mean after the s-th oracle query and the amplitudes after
    the s-th diffusion.
    """
    if marked.M == 0:
        raise NoSolutions("growth report needs a marked item")
    if marked.M > 1:
        raise MultipleSolutionsUnsupported("growth report covers a single marked item")
    if marked.qubit_count != n:
        raise DimensionMismatch(f"marked set is over {marked.qubit_count} qubits, report asked for {n}")
    (w,) = marked.indices
    other = 1 if w == 0 else 0
    state = uniform_state(n)
    rows = [GrowthRow(0, state.amplitudes[w].real, state.amplitudes[other].real, state.amplitudes.mean().real)]
    for step in range(1, steps + 1):
        flipped = phase_oracle_apply(state, marked)
        average = flipped.amplitudes.mean().real
        state = diffusion_apply(flipped)
        rows.append(GrowthRow(step, state.amplitudes[w].real, state.amplitudes[other].real, average))
    return rows
