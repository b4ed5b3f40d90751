"""Closed-form predictions of the search dynamics, with no state vector.

With ``sin(theta) = sqrt(M/N)`` the uniform state is
``cos(theta)|alpha> + sin(theta)|beta>`` and k iterations leave it at
``cos((2k+1)theta)|alpha> + sin((2k+1)theta)|beta>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .baseline import expected_queries_sequential
from .errors import InvalidSize, MultipleSolutionsUnsupported, NoSolutions


def check_size(N: int, M: int) -> None:
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 2 or N & (N - 1):
        raise InvalidSize(f"N must be a power of two >= 2, got {N!r}")
    if M == 0:
        raise NoSolutions("M = 0: no marked items, rotation angle is zero")
    if not 0 < M <= N:
        raise InvalidSize(f"M must satisfy 1 <= M <= N = {N}, got {M}")


def theta_of(N: int, M: int) -> float:
    """Half the per-iteration rotation angle, ``arcsin(sqrt(M/N))``."""
    check_size(N, M)
    return math.asin(math.sqrt(M / N))


def optimal_iterations(theta: float) -> int:
    """``round(pi/(4 theta) - 1/2)``, ties rounded up."""
    x = math.pi / (4.0 * theta) - 0.5
    return math.floor(x + 0.5)


def optimal_iterations_for(N: int, M: int) -> int:
    """Optimal iteration count for integer N, M with exact tie handling.

    The rounding argument is a half-integer only when M/N = 1/2 (theta =
    pi/4); floating point lands just below 0.5 there, so that case is
    resolved in integer arithmetic.
    """
    check_size(N, M)
    if 2 * M == N:
        return 1
    return optimal_iterations(theta_of(N, M))


def approximate_iterations(N: int, M: int = 1) -> float:
    """Small-angle estimate ``(pi/4) sqrt(N/M)``; for reports only."""
    check_size(N, M)
    return math.pi / 4.0 * math.sqrt(N / M)


def uniform_decomposition(N: int, M: int) -> tuple[float, float]:
    """Coefficients of the uniform state on ``|alpha>`` and ``|beta>``."""
    check_size(N, M)
    return math.sqrt((N - M) / N), math.sqrt(M / N)


@dataclass(frozen=True)
class RotationState:
    theta: float
    k: int

    @property
    def angle(self) -> float:
        return (2 * self.k + 1) * self.theta

    @property
    def alpha_coeff(self) -> float:
        return math.cos(self.angle)

    @property
    def beta_coeff(self) -> float:
        return math.sin(self.angle)

    @property
    def success_probability(self) -> float:
        return math.sin(self.angle) ** 2


def success_probability(N: int, M: int, k: int) -> float:
    return RotationState(theta_of(N, M), k).success_probability


def success_curve(N: int, M: int, k_max: int) -> list[tuple[int, float]]:
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    theta = theta_of(N, M)
    return [(k, RotationState(theta, k).success_probability) for k in range(k_max + 1)]


@dataclass(frozen=True)
class ClassicalComparison:
    N: int
    quantum_queries: int
    classical_expected: float
    classical_for_half: int

    @property
    def speedup(self) -> float:
        return self.classical_for_half / self.quantum_queries


def classical_comparison(N: int, M: int = 1) -> ClassicalComparison:
    check_size(N, M)
    if M != 1:
        raise MultipleSolutionsUnsupported("classical baseline is defined for a single marked item")
    return ClassicalComparison(
        N=N,
        quantum_queries=optimal_iterations_for(N, 1),
        classical_expected=expected_queries_sequential(N),
        classical_for_half=N // 2,
    )
