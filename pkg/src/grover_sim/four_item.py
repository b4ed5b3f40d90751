"""Gate-level four-element search circuit with a single oracle call.

Wire order: qubit 0 is the top data wire (x1, the output bit ``a``),
qubit 1 is x2 (bit ``b``), and qubit 2, when present, is the oracle
qubit. After the oracle, the data register goes through
``Z(0) H(0) CNOT(0,1) H(0)``, which leaves it in ``|not x1, x2>``; a
classical NOT on ``a`` then yields the marked string.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .circuit import ORACLE_BLOCK, CircuitSpec, Discard, GateOp, Step, apply_circuit, run_steps
from .errors import InvalidMarkedString
from .gates import cnot, cz, hadamard, hadamard_layer, pauli_x, pauli_z, toffoli
from .oracle import ancilla_minus
from .statevector import SeedLike, StateVector, random_state


class OracleStyle(enum.Enum):
    TOFFOLI = "toffoli"
    SIMPLIFIED_CZ = "simplified"


def parse_marked(marked: str) -> str:
    text = marked.strip()
    if text.startswith("b"):
        text = text[1:]
    if len(text) != 2 or set(text) - {"0", "1"}:
        raise InvalidMarkedString(f"marked item must be one of 00, 01, 10, 11; got {marked!r}")
    return text


def _flip_zeros(bits: str) -> list[GateOp]:
    # X^{x xor 1}: conjugate each control that must match a 0
    return [GateOp("X", pauli_x(), (q,), ORACLE_BLOCK) for q, bit in enumerate(bits) if bit == "0"]


def oracle_block(bits: str, style: OracleStyle) -> list[GateOp]:
    bits = parse_marked(bits)
    if style is OracleStyle.TOFFOLI:
        core = GateOp("TOFFOLI", toffoli(), (0, 1, 2), ORACLE_BLOCK)
    else:
        core = GateOp("CZ", cz(), (0, 1), ORACLE_BLOCK)
    return [*_flip_zeros(bits), core, *_flip_zeros(bits)]


def _readout() -> list[GateOp]:
    return [
        GateOp("Z", pauli_z(), (0,)),
        GateOp("H", hadamard(), (0,)),
        GateOp("CNOT", cnot(), (0, 1)),
        GateOp("H", hadamard(), (0,)),
    ]


def build_circuit(marked: str, oracle_style: OracleStyle = OracleStyle.SIMPLIFIED_CZ) -> CircuitSpec:
    bits = parse_marked(marked)
    steps: list[Step] = list(hadamard_layer(2))
    if oracle_style is OracleStyle.TOFFOLI:
        # oracle qubit starts in |1>; H before the oracle gives (|0>-|1>)/sqrt2
        # and H after it returns |1>, so its measurement is always 1
        steps.append(GateOp("H", hadamard(), (2,)))
        steps += oracle_block(bits, oracle_style)
        steps.append(GateOp("H", hadamard(), (2,)))
        steps.append(Discard(qubit=2, expected=1))
        initial = "001"
    else:
        steps += oracle_block(bits, oracle_style)
        initial = "00"
    steps += _readout()
    return CircuitSpec(
        qubit_count=len(initial),
        steps=tuple(steps),
        classical_not=(True, False),
        initial_bits=initial,
    )


@dataclass(frozen=True)
class CircuitOutcome:
    a: int
    b: int
    oracle_bit: int
    output_string: str
    # pre-measurement probability of the reported outcome
    probability: float
    distribution: dict[str, float] = field(repr=False)
    stages: tuple[tuple[str, StateVector], ...] = field(repr=False, default=())


def run_circuit(spec: CircuitSpec) -> CircuitOutcome:
    """Simulate the circuit and read out the most likely output string.

    The circuit is deterministic for every marked item, so ``probability``
    should be 1; it is reported rather than assumed.
    """
    state = spec.initial_state()
    stages = [("init", state)]
    oracle_bit = 1
    for step, state in run_steps(state, spec.steps):
        stages.append((step.text(), state))
        if isinstance(step, Discard):
            oracle_bit = step.expected
    probs = state.probabilities()
    width = spec.output_width
    distribution: dict[str, float] = {}
    for index, p in enumerate(probs):
        raw = format(index, f"0{width}b")
        out = "".join(str(int(c) ^ flip) for c, flip in zip(raw, spec.classical_not))
        distribution[out] = distribution.get(out, 0.0) + float(p)
    best = max(distribution, key=distribution.get)
    return CircuitOutcome(
        a=int(best[0]),
        b=int(best[1]),
        oracle_bit=oracle_bit,
        output_string=best,
        probability=distribution[best],
        distribution=distribution,
        stages=tuple(stages),
    )


def oracle_equivalence_check(marked: str, trials: int = 50, seed: SeedLike = 0) -> tuple[bool, float]:
    """Toffoli oracle on ``data ⊗ |->`` versus the C-Z oracle on data, then ``⊗ |->``."""
    bits = parse_marked(marked)
    toffoli_ops = oracle_block(bits, OracleStyle.TOFFOLI)
    cz_ops = oracle_block(bits, OracleStyle.SIMPLIFIED_CZ)
    minus = ancilla_minus()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        data = random_state(2, rng)
        lhs = apply_circuit(data.tensor(minus), toffoli_ops)
        rhs = apply_circuit(data, cz_ops).tensor(minus)
        worst = max(worst, lhs.max_deviation(rhs))
    return worst < 1e-12, worst
