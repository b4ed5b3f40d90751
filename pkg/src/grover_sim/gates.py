"""The fixed gate set used by the search circuits.

Matrices are row-major in basis order ``0...0`` to ``1...1``, with the
first listed qubit as the most significant bit (so for ``cnot()`` the
first target is the control).
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .circuit import GateOp
from .errors import InvalidQubitCount, QubitCapExceeded

# Explicit 2**n x 2**n matrices are only built up to this size.
EXPLICIT_MAX_QUBITS = 6

_SQRT1_2 = 1.0 / np.sqrt(2.0)


def _frozen(m) -> np.ndarray:
    arr = np.array(m, dtype=np.complex128)
    arr.setflags(write=False)
    return arr


_H = _frozen([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]])
_X = _frozen([[0, 1], [1, 0]])
_Z = _frozen([[1, 0], [0, -1]])
_CNOT = _frozen([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
_CZ = _frozen(np.diag([1, 1, 1, -1]))
_TOFFOLI = _frozen(np.block([[np.eye(4), np.zeros((4, 4))], [np.zeros((4, 4)), _CNOT]]))


def identity(arity: int = 1) -> np.ndarray:
    return _frozen(np.eye(2**arity))


def hadamard() -> np.ndarray:
    return _H


def pauli_x() -> np.ndarray:
    return _X


def pauli_z() -> np.ndarray:
    return _Z


def cnot() -> np.ndarray:
    return _CNOT


def cz() -> np.ndarray:
    return _CZ


def toffoli() -> np.ndarray:
    """Controlled-controlled-NOT: ``I4`` block then a ``CNOT`` block."""
    return _TOFFOLI


def _check_explicit(n: int) -> None:
    if n < 1:
        raise InvalidQubitCount(f"qubit count must be >= 1, got {n}")
    if n > EXPLICIT_MAX_QUBITS:
        raise QubitCapExceeded(f"explicit matrices are limited to {EXPLICIT_MAX_QUBITS} qubits, got {n}")


def hadamard_layer(n: int) -> list[GateOp]:
    """One H per qubit, i.e. ``H^{⊗n}`` as a circuit fragment."""
    if n < 1:
        raise InvalidQubitCount(f"qubit count must be >= 1, got {n}")
    return [GateOp("H", _H, (q,)) for q in range(n)]


def hadamard_transform(n: int) -> np.ndarray:
    """Explicit ``H^{⊗n}`` (n <= 6)."""
    _check_explicit(n)
    return _frozen(reduce(np.kron, [_H] * n))


def conditional_phase_zero(n: int) -> np.ndarray:
    """``diag(1, -1, ..., -1) = 2|0><0| - I`` on n qubits (n <= 6)."""
    _check_explicit(n)
    diag = -np.ones(2**n)
    diag[0] = 1.0
    return _frozen(np.diag(diag))
