"""Large-n behavior: the borderless ring model, the flat central region,
the optimal-alpha curve, and the uniform-backoff circle experiment.

On a circle every pair sees the same environment, so the chain system
collapses to the scalar equation x = alpha (1 - x)^2. At alpha = 3/4 the
solution is exactly 1/3, which is also the win probability of a pair whose
backoff beats both neighbors, hence the 1/3 plateau of long chains.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fairness import maximize_J
from .model import ChainParams
from .solver import SolveOptions, newton_solve


@dataclass(frozen=True)
class RingSolution:
    """Common emission probability of every pair on a circle."""

    x: float


def ring_fixed_point(alpha: float) -> RingSolution:
    """Root of x = alpha (1 - x)^2 in [0, 1).

    The quadratic has two roots; the minus branch is the physical one, the
    plus branch exceeds 1.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    a = float(alpha)
    x = (2.0 * a + 1.0 - np.sqrt(4.0 * a + 1.0)) / (2.0 * a)
    return RingSolution(x=float(x))


def alpha_for_ring_prob(x: float) -> float:
    """Inverse of ring_fixed_point: alpha = x / (1 - x)^2."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x!r}")
    return float(x / (1.0 - x) ** 2)


def flat_value(n: int) -> tuple[float, float]:
    """Optimal alpha and the central emission probability at that alpha.

    Central means the 1-based index ceil(n/2); for n >= 100 the middle half
    of the chain is flat to within about 1e-3, so the exact index choice is
    immaterial.
    """
    if n < 3:
        raise DomainError(f"flat_value needs n >= 3, got {n!r}")
    alpha_hat = maximize_J(n).alpha_hat
    x = newton_solve(ChainParams(n, alpha_hat), SolveOptions())
    central = float(x[(n + 1) // 2 - 1])
    return alpha_hat, central


def optimal_alpha_curve(ns) -> list[tuple[int, float]]:
    """Rows of (n, optimal alpha), one per requested chain length."""
    rows = []
    for n in ns:
        n = int(n)
        if n < 2:
            raise DomainError(f"optimal_alpha_curve needs n >= 2, got {n!r}")
        rows.append((n, maximize_J(n).alpha_hat))
    return rows


_MC_CHUNK = 100_000


def circle_backoff_mc(n_pairs: int, trials: int, seed: int) -> np.ndarray:
    """Per-pair win frequency of the uniform-backoff game on a circle.

    Each trial draws independent uniforms u_i; pair i wins when u_i is
    strictly below both cyclic neighbors. Ties count as non-wins (they have
    probability zero anyway). Deterministic given the seed; the generator is
    numpy's PCG64.
    """
    if n_pairs < 3:
        raise DomainError(f"n_pairs must be >= 3, got {n_pairs!r}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials!r}")
    rng = np.random.default_rng(seed)
    wins = np.zeros(n_pairs, dtype=np.int64)
    left = trials
    while left > 0:
        m = min(_MC_CHUNK, left)
        u = rng.random((m, n_pairs))
        lo = np.roll(u, 1, axis=1)
        hi = np.roll(u, -1, axis=1)
        wins += ((u < lo) & (u < hi)).sum(axis=0)
        left -= m
    return wins / trials
