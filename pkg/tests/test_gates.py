import math

import numpy as np
import pytest

from grover_sim.circuit import apply_circuit
from grover_sim.engine import diffusion_matrix
from grover_sim.errors import QubitCapExceeded
from grover_sim.gates import (
    cnot,
    conditional_phase_zero,
    cz,
    hadamard,
    hadamard_layer,
    hadamard_transform,
    identity,
    pauli_x,
    pauli_z,
    toffoli,
)
from grover_sim.statevector import StateVector, apply_gate, is_unitary, random_state, uniform_state

LIBRARY = {"H": hadamard, "X": pauli_x, "Z": pauli_z, "CNOT": cnot, "CZ": cz, "TOFFOLI": toffoli}


def test_hadamard_matrix():
    h = hadamard()
    assert np.all(np.abs(np.abs(h) - 1 / math.sqrt(2)) < 1e-15)
    assert np.max(np.abs(h @ h - np.eye(2))) < 1e-15
    out = h @ np.array([0, 1])
    assert np.allclose(out, [1 / math.sqrt(2), -1 / math.sqrt(2)], atol=1e-15)


def test_pauli_actions():
    assert np.array_equal(pauli_x() @ [1, 0], [0, 1])
    assert np.array_equal(pauli_z() @ [0, 1], [0, -1])
    assert np.array_equal(pauli_z() @ [1, 0], [1, 0])


def test_cnot_and_cz_actions():
    out = apply_gate(StateVector.from_bits("10"), cnot(), [0, 1])
    assert out.amplitudes[0b11] == 1
    out = apply_gate(StateVector.from_bits("11"), cz(), [0, 1])
    assert out.amplitudes[0b11] == -1


def test_toffoli_exhaustive():
    # reference: flip the last bit iff the first two are both 1
    for b in range(8):
        expected = b ^ 1 if (b >> 1) == 0b11 else b
        out = apply_gate(StateVector.basis(3, b), toffoli(), [0, 1, 2])
        assert out.amplitudes[expected] == 1
    t = toffoli()
    assert np.array_equal(t[:4, :4], np.eye(4))
    assert np.array_equal(t[4:, 4:], cnot())
    assert not np.any(t[:4, 4:]) and not np.any(t[4:, :4])


@pytest.mark.parametrize("name", LIBRARY)
def test_library_gates_are_unitary_involutions(name):
    g = LIBRARY[name]()
    assert is_unitary(g)
    assert np.max(np.abs(g @ g - np.eye(g.shape[0]))) < 1e-12


def test_library_gates_are_read_only():
    with pytest.raises(ValueError):
        hadamard()[0, 0] = 0


def test_cz_symmetric_under_swap():
    swap = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert np.array_equal(swap @ cz() @ swap, cz())


def test_hadamard_layer_builds_uniform_state():
    layer = hadamard_layer(2)
    assert [op.targets for op in layer] == [(0,), (1,)]
    assert apply_circuit(StateVector.basis(2, 0), layer).allclose(uniform_state(2), 1e-15)
    assert apply_circuit(StateVector.basis(3, 0), hadamard_layer(3)).allclose(uniform_state(3), 1e-15)


def test_hadamard_layer_twice_is_identity():
    s = random_state(4, 5)
    layer = hadamard_layer(4)
    assert apply_circuit(s, layer + layer).max_deviation(s) < 1e-12


def test_conditional_phase_zero():
    assert np.array_equal(conditional_phase_zero(1), pauli_z())
    assert np.array_equal(np.diag(conditional_phase_zero(2)), [1, -1, -1, -1])
    with pytest.raises(QubitCapExceeded):
        conditional_phase_zero(7)


def test_conditional_phase_zero_conjugated_gives_n4_diffusion():
    h = hadamard_transform(2)
    d = h @ conditional_phase_zero(2) @ h
    expected = np.full((4, 4), 0.5) - np.eye(4)
    assert np.max(np.abs(d - expected)) < 1e-12
    assert np.max(np.abs(d - diffusion_matrix(2))) < 1e-12


def test_identity_gate():
    assert np.array_equal(identity(2), np.eye(4))
