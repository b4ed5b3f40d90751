"""Classical query-model baselines for unstructured search with one marked item."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSize
from .statevector import SeedLike


class Strategy(enum.Enum):
    # probe distinct items in turn; the last item is deduced without a query
    SEQUENTIAL_DEDUCE = "sequential-deduce"
    # probe distinct items in random order until the marked one is hit
    RANDOM_DISTINCT = "random-distinct"


def _check_n(N: int) -> None:
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise InvalidSize(f"N must be an integer >= 2, got {N!r}")


def expected_queries_sequential(N: int) -> float:
    """Mean queries when the final candidate needs no query: (N-1)(N+2)/(2N)."""
    _check_n(N)
    return (N - 1) * (N + 2) / (2 * N)


def variance_queries_sequential(N: int) -> float:
    _check_n(N)
    # query count is p for marked position p < N, and N-1 for p = N
    second = ((N - 1) * N * (2 * N - 1) // 6 + (N - 1) ** 2) / N
    return second - expected_queries_sequential(N) ** 2


def expected_queries_random_distinct(N: int) -> float:
    _check_n(N)
    return (N + 1) / 2


def success_probability_after(N: int, q: int) -> float:
    """Chance that q distinct probes include the single marked item."""
    _check_n(N)
    if not 0 <= q <= N:
        raise InvalidSize(f"query count must lie in [0, {N}], got {q}")
    return q / N


@dataclass(frozen=True)
class BaselineResult:
    N: int
    strategy: Strategy
    expected_queries: float

    def success_prob_at(self, q: int) -> float:
        if self.strategy is Strategy.SEQUENTIAL_DEDUCE and q >= self.N - 1:
            return 1.0
        return success_probability_after(self.N, q)


def baseline(N: int, strategy: Strategy = Strategy.SEQUENTIAL_DEDUCE) -> BaselineResult:
    if strategy is Strategy.SEQUENTIAL_DEDUCE:
        expected = expected_queries_sequential(N)
    else:
        expected = expected_queries_random_distinct(N)
    return BaselineResult(N=N, strategy=strategy, expected_queries=expected)


def monte_carlo_queries(N: int, trials: int, seed: SeedLike = None) -> float:
    """Empirical mean query count of the sequential-deduce strategy."""
    _check_n(N)
    if trials < 1:
        raise InvalidSize(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    # 1-based position of the marked item in the probe order
    position = rng.integers(1, N + 1, size=trials)
    return float(np.minimum(position, N - 1).mean())


def monte_carlo_tolerance(N: int, trials: int, sigmas: float = 4.0) -> float:
    return sigmas * math.sqrt(variance_queries_sequential(N) / trials)
