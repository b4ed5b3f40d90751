import numpy as np
import pytest

from grover_sim import engine
from grover_sim.circuit import ORACLE_BLOCK, Discard, GateOp, apply_circuit
from grover_sim.errors import InvalidMarkedString
from grover_sim.four_item import OracleStyle, build_circuit, oracle_block, oracle_equivalence_check, run_circuit
from grover_sim.oracle import MarkedSet
from grover_sim.statevector import StateVector

MARKED = ["00", "01", "10", "11"]
H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
Z = np.diag([1, -1])
I2 = np.eye(2)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def reference_final_state(bits):
    """Whole two-qubit circuit as explicit 4x4 matrices built with np.kron."""
    oracle = np.eye(4)
    oracle[int(bits, 2), int(bits, 2)] = -1
    u = np.kron(H, I2) @ CNOT @ np.kron(H, I2) @ np.kron(Z, I2) @ oracle @ np.kron(H, H)
    return u @ np.array([1, 0, 0, 0])


@pytest.mark.parametrize("bits", MARKED)
@pytest.mark.parametrize("style", list(OracleStyle))
def test_every_marked_item_is_found_with_certainty(bits, style):
    out = run_circuit(build_circuit(bits, style))
    assert out.output_string == bits
    assert (out.a, out.b) == (int(bits[0]), int(bits[1]))
    assert out.probability == pytest.approx(1.0, abs=1e-12)
    assert out.oracle_bit == 1


@pytest.mark.parametrize("bits", MARKED)
def test_simulator_matches_explicit_matrices(bits):
    spec = build_circuit(bits, OracleStyle.SIMPLIFIED_CZ)
    final = apply_circuit(spec.initial_state(), spec.steps)
    expected = reference_final_state(bits)
    assert np.allclose(final.amplitudes, expected, atol=1e-12)
    # before the classical NOT the register reads (not a, b)
    flipped = format(int(bits, 2) ^ 0b10, "02b")
    assert abs(final.amplitudes[int(flipped, 2)]) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("style", list(OracleStyle))
def test_one_oracle_call(style):
    for bits in MARKED:
        assert build_circuit(bits, style).oracle_calls() == 1


def test_x_conjugation_placement():
    def xs(bits):
        return sorted(op.targets[0] for op in oracle_block(bits, OracleStyle.SIMPLIFIED_CZ) if op.name == "X")

    assert xs("11") == []
    assert xs("00") == [0, 0, 1, 1]
    assert xs("01") == [0, 0]
    assert xs("10") == [1, 1]
    assert all(op.block == ORACLE_BLOCK for op in oracle_block("00", OracleStyle.TOFFOLI))


def test_toffoli_flips_sign_of_marked_component():
    minus = np.array([1, -1]) / np.sqrt(2)
    data = np.full(4, 0.5)
    state = StateVector(np.kron(data, minus))
    after = apply_circuit(state, oracle_block("11", OracleStyle.TOFFOLI))
    expected = np.kron(np.array([0.5, 0.5, 0.5, -0.5]), minus)
    assert np.allclose(after.amplitudes, expected, atol=1e-12)


def test_intermediate_state_after_z_and_h():
    spec = build_circuit("11", OracleStyle.SIMPLIFIED_CZ)
    out = run_circuit(spec)
    labels = [label for label, _ in out.stages]
    # stages: init, H 0, H 1, CZ, Z 0, H 0, ...
    idx = labels.index("H 0", labels.index("Z 0"))
    expected = np.array([0, 1, 1, 0]) / np.sqrt(2)
    assert np.allclose(out.stages[idx][1].amplitudes, expected, atol=1e-12)


def test_toffoli_circuit_discards_oracle_qubit():
    spec = build_circuit("10", OracleStyle.TOFFOLI)
    assert spec.qubit_count == 3 and spec.initial_bits == "001"
    discards = [s for s in spec.steps if isinstance(s, Discard)]
    assert len(discards) == 1 and discards[0].expected == 1
    assert spec.output_width == 2
    assert run_circuit(spec).stages[-1][1].qubit_count == 2


@pytest.mark.parametrize("bits", MARKED)
def test_toffoli_and_cz_oracles_agree(bits):
    ok, worst = oracle_equivalence_check(bits, trials=50, seed=1)
    assert ok and worst < 1e-12


def test_oracles_agree_on_basis_state_11():
    minus = np.array([1, -1]) / np.sqrt(2)
    data = StateVector.from_bits("11")
    for bits in MARKED:
        tof = apply_circuit(data.tensor(StateVector(minus)), oracle_block(bits, OracleStyle.TOFFOLI))
        cz = apply_circuit(data, oracle_block(bits, OracleStyle.SIMPLIFIED_CZ)).tensor(StateVector(minus))
        assert tof.allclose(cz, atol=1e-12)
        sign = -1 if bits == "11" else 1
        assert np.allclose(cz.amplitudes, sign * np.kron([0, 0, 0, 1], minus))


@pytest.mark.parametrize("bits", MARKED)
def test_circuit_agrees_with_engine(bits):
    marked = MarkedSet(2, [int(bits, 2)])
    probs = engine.run(2, marked, 1).state.probabilities()
    dist = run_circuit(build_circuit(bits)).distribution
    for index, p in enumerate(probs):
        assert dist[format(index, "02b")] == pytest.approx(p, abs=1e-12)


def test_circuit_text_form():
    text = build_circuit("00", OracleStyle.SIMPLIFIED_CZ).to_text().splitlines()
    assert text[0] == "QUBITS 2" and text[1] == "INIT |00>"
    assert "CZ 0 1  # oracle" in text
    assert text[-2:] == ["MEASURE 0 1", "NOT c0"]


@pytest.mark.parametrize("bad", ["", "2", "012", "1x", "b3", "ab"])
def test_invalid_marked_string(bad):
    with pytest.raises(InvalidMarkedString):
        build_circuit(bad)


def test_b_prefix_accepted():
    assert run_circuit(build_circuit("b10")).output_string == "10"


def test_gate_op_text():
    assert GateOp("H", H, (0,)).text() == "H 0"
