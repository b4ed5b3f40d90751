"""Gate-level circuit descriptions and their text form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import SimulationError, TargetOutOfRange
from .statevector import StateVector, apply_gate, check_qubit_count

ORACLE_BLOCK = "oracle"


@dataclass(frozen=True, eq=False)
class GateOp:
    name: str
    matrix: np.ndarray = field(repr=False)
    targets: tuple[int, ...]
    block: str = ""

    def text(self) -> str:
        line = f"{self.name} {' '.join(map(str, self.targets))}"
        return f"{line}  # {self.block}" if self.block else line


@dataclass(frozen=True)
class Discard:
    """Measure ``qubit`` (which must be the last one) and drop it.

    ``expected`` is the outcome the circuit guarantees; the simulator
    asserts it has probability 1 rather than assuming it.
    """

    qubit: int
    expected: int

    def text(self) -> str:
        return f"DISCARD {self.qubit} expect {self.expected}"


Step = Union[GateOp, Discard]


@dataclass(frozen=True)
class CircuitSpec:
    qubit_count: int
    steps: tuple[Step, ...]
    # per output (data) bit: apply a classical NOT after measurement
    classical_not: tuple[bool, ...]
    initial_bits: str = ""

    def __post_init__(self):
        check_qubit_count(self.qubit_count)
        width = self.qubit_count
        for step in self.steps:
            targets = step.targets if isinstance(step, GateOp) else (step.qubit,)
            for t in targets:
                if not 0 <= t < width:
                    raise TargetOutOfRange(f"{step.text()!r} targets qubit outside [0, {width})")
            if isinstance(step, Discard):
                if step.qubit != width - 1:
                    raise TargetOutOfRange("only the last qubit can be discarded")
                width -= 1
        if len(self.classical_not) != width:
            raise ValueError(f"{len(self.classical_not)} classical NOT flags for {width} output bits")
        if self.initial_bits and len(self.initial_bits) != self.qubit_count:
            raise ValueError("initial_bits length must equal qubit_count")

    @property
    def output_width(self) -> int:
        return len(self.classical_not)

    def oracle_calls(self) -> int:
        """Number of contiguous oracle blocks in the step list."""
        calls, inside = 0, False
        for step in self.steps:
            now = isinstance(step, GateOp) and step.block == ORACLE_BLOCK
            if now and not inside:
                calls += 1
            inside = now
        return calls

    def initial_state(self) -> StateVector:
        return StateVector.from_bits(self.initial_bits or "0" * self.qubit_count)

    def to_text(self) -> str:
        lines = [f"QUBITS {self.qubit_count}", f"INIT |{self.initial_bits or '0' * self.qubit_count}>"]
        lines += [step.text() for step in self.steps]
        lines.append("MEASURE " + " ".join(str(q) for q in range(self.output_width)))
        for bit, flip in enumerate(self.classical_not):
            if flip:
                lines.append(f"NOT c{bit}")
        return "\n".join(lines)


def discard_qubit(state: StateVector, expected: int, atol: float = 1e-12) -> tuple[StateVector, float]:
    """Project the last qubit onto ``expected`` and remove it."""
    if state.qubit_count < 2:
        raise SimulationError("cannot discard the only qubit")
    amps = state.amplitudes.reshape(-1, 2)[:, expected]
    prob = float(np.vdot(amps, amps).real)
    if abs(prob - 1.0) > atol:
        raise SimulationError(f"discarded qubit gave {expected} with probability {prob}, expected 1")
    return StateVector(amps / np.sqrt(prob)), prob


def run_steps(state: StateVector, steps: Sequence[Step]) -> Iterator[tuple[Step, StateVector]]:
    """Yield ``(step, state after step)`` for each step in order."""
    for step in steps:
        if isinstance(step, GateOp):
            state = apply_gate(state, step.matrix, step.targets)
        else:
            state, _ = discard_qubit(state, step.expected)
        yield step, state


def apply_circuit(state: StateVector, steps: Sequence[Step]) -> StateVector:
    for _, state in run_steps(state, steps):
        pass
    return state
