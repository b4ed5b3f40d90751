import itertools

import numpy as np
import pytest
from scipy.stats import unitary_group


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_unitary(dim, rng):
    return unitary_group.rvs(dim, random_state=rng)


def full_operator(gate, targets, n):
    """Brute-force 2**n x 2**n operator for ``gate`` on ``targets`` (MSB-first).

    Built entry by entry from basis bit strings, independent of the
    tensor-contraction path used by the simulator.
    """
    k = len(targets)
    N = 2**n
    op = np.zeros((N, N), dtype=complex)
    for col in range(N):
        bits = [(col >> (n - 1 - q)) & 1 for q in range(n)]
        sub_in = int("".join(str(bits[t]) for t in targets), 2)
        for sub_out in range(2**k):
            out_bits = list(bits)
            for j, t in enumerate(targets):
                out_bits[t] = (sub_out >> (k - 1 - j)) & 1
            row = int("".join(map(str, out_bits)), 2)
            op[row, col] += gate[sub_out, sub_in]
    return op


def target_tuples(n, k):
    return list(itertools.permutations(range(n), k))
