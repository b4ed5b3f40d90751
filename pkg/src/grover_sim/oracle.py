"""Black-box query models for a marked set of basis states.

Two forms are provided: the bit-flip oracle ``|i>|j> -> |i>|j xor f(i)>``
on n+1 qubits (the oracle qubit is last), and the phase oracle
``a_i -> (-1)^f(i) a_i`` on n qubits, i.e. ``I - 2 sum |w><w|``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, InvalidQubitCount, QubitCapExceeded
from .gates import EXPLICIT_MAX_QUBITS, hadamard
from .statevector import SeedLike, StateVector, random_state


class OracleForm(enum.Enum):
    BIT_FLIP = "bit-flip"
    PHASE = "phase"


@dataclass(frozen=True)
class MarkedSet:
    """The solution set ``f^{-1}(1)`` as explicit basis indices."""

    qubit_count: int
    indices: frozenset[int]

    def __init__(self, qubit_count: int, indices: Iterable[int]):
        if qubit_count < 1:
            raise InvalidQubitCount(f"qubit count must be >= 1, got {qubit_count}")
        idx = frozenset(int(i) for i in indices)
        size = 2**qubit_count
        bad = sorted(i for i in idx if not 0 <= i < size)
        if bad:
            raise IndexOutOfRange(f"marked indices {bad} outside [0, {size})")
        object.__setattr__(self, "qubit_count", qubit_count)
        object.__setattr__(self, "indices", idx)

    @property
    def N(self) -> int:
        return 2**self.qubit_count

    @property
    def M(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def __iter__(self):
        return iter(sorted(self.indices))

    def mask(self) -> np.ndarray:
        m = np.zeros(self.N, dtype=bool)
        m[list(self.indices)] = True
        return m

    def f(self, x: int) -> int:
        return int(x in self.indices)

    def label(self) -> str:
        return "{" + ",".join(format(i, f"0{self.qubit_count}b") for i in self) + "}"


@dataclass
class QueryCounter:
    """Tally of oracle applications. Callers pass one in to audit a run."""

    count: int = 0

    def tick(self) -> None:
        self.count += 1


def _tick(counter: QueryCounter | None) -> None:
    if counter is not None:
        counter.tick()


def phase_oracle_apply(
    state: StateVector, marked: MarkedSet, counter: QueryCounter | None = None
) -> StateVector:
    if state.qubit_count != marked.qubit_count:
        raise DimensionMismatch(f"phase oracle needs {marked.qubit_count} qubits, state has {state.qubit_count}")
    _tick(counter)
    amps = state.amplitudes.copy()
    if marked.M:
        amps[list(marked.indices)] *= -1
    return StateVector._wrap(amps, state.qubit_count)


def bit_oracle_apply(
    state: StateVector, marked: MarkedSet, counter: QueryCounter | None = None
) -> StateVector:
    """Flip the trailing oracle qubit wherever the data register is marked."""
    if state.qubit_count != marked.qubit_count + 1:
        raise DimensionMismatch(
            f"bit oracle needs {marked.qubit_count + 1} qubits (data + oracle), state has {state.qubit_count}"
        )
    _tick(counter)
    pairs = state.amplitudes.reshape(marked.N, 2).copy()
    if marked.M:
        rows = list(marked.indices)
        pairs[rows] = pairs[rows][:, ::-1]
    return StateVector._wrap(pairs.reshape(-1), state.qubit_count)


def oracle_matrix(marked: MarkedSet) -> np.ndarray:
    """Explicit ``I - 2 sum_w |w><w|`` (n <= 6)."""
    if marked.qubit_count > EXPLICIT_MAX_QUBITS:
        raise QubitCapExceeded(f"explicit oracle limited to {EXPLICIT_MAX_QUBITS} qubits")
    diag = np.where(marked.mask(), -1.0, 1.0)
    return np.diag(diag).astype(np.complex128)


def ancilla_minus() -> StateVector:
    """``H|1> = (|0> - |1>)/sqrt(2)``, the kickback preparation."""
    return StateVector(hadamard() @ np.array([0, 1], dtype=np.complex128))


def kickback_equivalence_check(
    n: int, marked: MarkedSet, trials: int = 100, seed: SeedLike = 0
) -> tuple[bool, float]:
    """Compare bit-oracle-with-|-> ancilla against phase-oracle ⊗ |->.

    Returns whether every trial agrees within 1e-12 and the worst
    elementwise deviation seen.
    """
    if marked.qubit_count != n:
        raise DimensionMismatch(f"marked set is over {marked.qubit_count} qubits, not {n}")
    if n > EXPLICIT_MAX_QUBITS:
        raise QubitCapExceeded(f"kickback check limited to {EXPLICIT_MAX_QUBITS} qubits")
    rng = np.random.default_rng(seed)
    minus = ancilla_minus()
    worst = 0.0
    for _ in range(trials):
        phi = random_state(n, rng)
        lhs = bit_oracle_apply(phi.tensor(minus), marked)
        rhs = phase_oracle_apply(phi, marked).tensor(minus)
        worst = max(worst, lhs.max_deviation(rhs))
    return worst < 1e-12, worst
