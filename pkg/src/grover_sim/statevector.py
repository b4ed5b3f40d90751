"""Dense state-vector representation of an n-qubit register.

Qubit 0 is the leftmost symbol of a ket and the most significant bit of
the basis index, so ``|101>`` is index 5.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateTarget,
    IndexOutOfRange,
    InvalidQubitCount,
    InvalidState,
    NonUnitaryGate,
    QubitCapExceeded,
    TargetOutOfRange,
)

DEFAULT_MAX_QUBITS = 24
NORM_ATOL = 1e-12
UNITARY_ATOL = 1e-12
STATE_ATOL = 1e-10

SeedLike = int | np.random.Generator | None


def max_qubits() -> int:
    """Qubit cap; ``GROVER_MAX_QUBITS`` overrides the default of 24."""
    raw = os.environ.get("GROVER_MAX_QUBITS")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_QUBITS
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidQubitCount(f"GROVER_MAX_QUBITS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidQubitCount(f"GROVER_MAX_QUBITS must be >= 1, got {cap}")
    return cap


def check_qubit_count(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise InvalidQubitCount(f"qubit count must be an integer >= 1, got {n!r}")
    cap = max_qubits()
    if n > cap:
        raise QubitCapExceeded(f"{n} qubits exceeds the cap of {cap} (set GROVER_MAX_QUBITS)")


class StateVector:
    """Normalized complex amplitudes over the 2**n computational basis states.

    Instances are immutable: the amplitude array is copied on construction
    and flagged read-only, and every operation returns a new state.
    """

    __slots__ = ("_amps", "_n")

    def __init__(self, amplitudes: Iterable[complex] | np.ndarray, *, atol: float = NORM_ATOL):
        amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        dim = amps.shape[0]
        if dim < 2 or dim & (dim - 1):
            raise InvalidState(f"amplitude count must be a power of two >= 2, got {dim}")
        n = dim.bit_length() - 1
        check_qubit_count(n)
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > atol:
            raise InvalidState(f"state is not normalized: sum |a|^2 = {norm!r}")
        amps.setflags(write=False)
        self._amps = amps
        self._n = n

    @classmethod
    def _wrap(cls, amps: np.ndarray, n: int) -> StateVector:
        # Trusted internal constructor: caller guarantees shape and norm.
        obj = cls.__new__(cls)
        if amps.flags.writeable:
            amps.setflags(write=False)
        obj._amps = amps
        obj._n = n
        return obj

    @classmethod
    def basis(cls, n: int, index: int) -> StateVector:
        check_qubit_count(n)
        _check_index(index, 2**n)
        amps = np.zeros(2**n, dtype=np.complex128)
        amps[index] = 1.0
        return cls._wrap(amps, n)

    @classmethod
    def from_bits(cls, bits: str) -> StateVector:
        """Basis state from a ket label such as ``"101"``."""
        if not bits or set(bits) - {"0", "1"}:
            raise InvalidState(f"not a bit string: {bits!r}")
        return cls.basis(len(bits), int(bits, 2))

    @property
    def qubit_count(self) -> int:
        return self._n

    @property
    def dimension(self) -> int:
        return self._amps.shape[0]

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    def probabilities(self) -> np.ndarray:
        return self._amps.real**2 + self._amps.imag**2

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self._amps, self._amps).real))

    def tensor(self, other: StateVector) -> StateVector:
        """``self ⊗ other``; ``other``'s qubits are appended after ours."""
        check_qubit_count(self._n + other._n)
        return StateVector._wrap(np.kron(self._amps, other._amps), self._n + other._n)

    def max_deviation(self, other: StateVector) -> float:
        if self._n != other._n:
            raise DimensionMismatch(f"{self._n} vs {other._n} qubits")
        return float(np.max(np.abs(self._amps - other._amps)))

    def allclose(self, other: StateVector, atol: float = STATE_ATOL) -> bool:
        """Elementwise comparison, not up to global phase."""
        return self.max_deviation(other) < atol

    def ket_string(self, precision: int = 6, atol: float = 1e-12) -> str:
        terms = []
        for i, a in enumerate(self._amps):
            if abs(a) <= atol:
                continue
            label = format(i, f"0{self._n}b")
            if abs(a.imag) <= atol:
                coeff = f"{a.real:+.{precision}f}"
            else:
                coeff = f"+({a.real:.{precision}f}{a.imag:+.{precision}f}j)"
            terms.append(f"{coeff}|{label}>")
        return " ".join(terms) if terms else "0"

    def __len__(self) -> int:
        return self.dimension

    def __repr__(self) -> str:
        return f"StateVector(qubit_count={self._n}, amplitudes={np.array2string(self._amps, precision=6)})"


@dataclass(frozen=True)
class MeasurementOutcome:
    basis: int
    probability: float


def _check_index(index: int, dim: int) -> None:
    if not isinstance(index, (int, np.integer)) or isinstance(index, bool) or not 0 <= index < dim:
        raise IndexOutOfRange(f"basis index {index!r} outside [0, {dim})")


def uniform_state(n: int) -> StateVector:
    """Equal superposition, every amplitude exactly ``1/sqrt(2**n)``."""
    check_qubit_count(n)
    dim = 2**n
    amps = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    return StateVector._wrap(amps, n)


def random_state(n: int, rng: SeedLike = None) -> StateVector:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    check_qubit_count(n)
    rng = np.random.default_rng(rng)
    amps = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    amps /= np.linalg.norm(amps)
    return StateVector._wrap(amps, n)


def is_unitary(matrix: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))) < atol)


def apply_gate(state: StateVector, gate: np.ndarray, targets: Sequence[int]) -> StateVector:
    """Apply a ``2**k x 2**k`` unitary to ``k`` target qubits.

    The first target is the most significant qubit of the gate's own basis,
    so ``apply_gate(s, cnot(), [c, t])`` uses ``c`` as control. The state is
    viewed as a rank-n tensor and only the target axes are contracted; the
    full ``2**n x 2**n`` operator is never formed.
    """
    n = state.qubit_count
    targets = [int(t) for t in targets]
    k = len(targets)
    gate = np.asarray(gate, dtype=np.complex128)
    if k == 0 or gate.shape != (2**k, 2**k):
        raise DimensionMismatch(f"gate of shape {gate.shape} does not act on {k} target(s)")
    for t in targets:
        if not 0 <= t < n:
            raise TargetOutOfRange(f"target {t} outside [0, {n})")
    if len(set(targets)) != k:
        raise DuplicateTarget(f"repeated target in {targets}")
    if not is_unitary(gate):
        raise NonUnitaryGate("gate matrix is not unitary within 1e-12")

    psi = state.amplitudes.reshape((2,) * n)
    g = gate.reshape((2,) * (2 * k))
    out = np.tensordot(g, psi, axes=(list(range(k, 2 * k)), targets))
    # tensordot leaves the gate's output axes in front
    out = np.moveaxis(out, list(range(k)), targets)
    return StateVector._wrap(np.ascontiguousarray(out).reshape(-1), n)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    if a.qubit_count != b.qubit_count:
        raise DimensionMismatch(f"{a.qubit_count} vs {b.qubit_count} qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def probability_of(state: StateVector, indices: Iterable[int]) -> float:
    """Total Born probability of a set of basis indices."""
    idx = sorted(set(indices))
    for i in idx:
        _check_index(i, state.dimension)
    if not idx:
        return 0.0
    amps = state.amplitudes[idx]
    return float(min(1.0, np.sum(amps.real**2 + amps.imag**2)))


def sample_measurements(state: StateVector, shots: int, seed: SeedLike = None) -> np.ndarray:
    """Draw ``shots`` basis indices from the Born distribution."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(shots), side="right")
    # guard against the r == cdf[-1] edge and zero-probability tail entries
    return np.minimum(draws, state.dimension - 1)


def sample_measurement(state: StateVector, seed: SeedLike = None) -> MeasurementOutcome:
    """Measure every qubit once; reproducible for a fixed integer seed."""
    index = int(sample_measurements(state, 1, seed)[0])
    return MeasurementOutcome(basis=index, probability=float(state.probabilities()[index]))
