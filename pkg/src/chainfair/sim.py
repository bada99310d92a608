"""Slot-level simulation of the emission process and an exact small-chain oracle.

The stationary model treats each pair's emission as a Bernoulli variable
gated by its neighbors, y_i = z_i (1 - y_{i-1})(1 - y_{i+1}). That relation
fixes no dynamics, so the simulator resamples one uniformly chosen site per
slot (with a synchronous random-order sweep available as a sensitivity
check). States are independent sets on the path: no two adjacent emitters.

For n <= 12 the single-site chain is small enough to solve exactly, which
quantifies the correlation error of the mean-field system.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError
from .model import ChainParams
from .solver import SolveOptions, newton_solve

_POLICIES = ("random-single-site", "synchronous-random-order")
_BATCHES = 32


@dataclass(frozen=True)
class SimConfig:
    """Length, coefficient, horizon, and update discipline of one run."""

    n: int
    alpha: float
    steps: int
    burn_in: int | None = None
    seed: int = 0
    policy: str = "random-single-site"

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n!r}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha!r}")
        if self.steps < 1:
            raise DomainError(f"steps must be >= 1, got {self.steps!r}")
        if self.policy not in _POLICIES:
            raise DomainError(f"policy must be one of {_POLICIES}, got {self.policy!r}")
        bi = self.effective_burn_in
        if not 0 <= bi < self.steps:
            raise DomainError(f"burn_in must lie in [0, steps), got {bi!r}")

    @property
    def effective_burn_in(self) -> int:
        return self.steps // 10 if self.burn_in is None else self.burn_in


@dataclass(frozen=True)
class SlotState:
    """Occupancy bit vector of one slot; 1 means the pair is emitting."""

    y: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int8))

    def validate(self):
        y = np.asarray(self.y)
        if np.any((y != 0) & (y != 1)):
            raise DomainError("slot state must be a 0/1 vector")
        if len(y) > 1 and np.any(y[:-1] & y[1:]):
            raise DomainError("adjacent pairs may not emit simultaneously")


@dataclass(frozen=True)
class MarginalEstimate:
    """Time-averaged emission frequency per pair with batch-means errors."""

    x_hat: np.ndarray
    stderr: np.ndarray


def sim_step(state: SlotState, config: SimConfig, rng) -> SlotState:
    """Advance one slot, preserving the independent-set property.

    random-single-site: resample one uniformly chosen site i with a fresh
    coin z ~ Bernoulli(alpha) as y_i = z (1 - y_{i-1})(1 - y_{i+1}).
    synchronous-random-order: do that at every site, visiting them in a
    fresh random permutation within the slot.
    """
    state.validate()
    y = np.asarray(state.y, dtype=np.int8).copy()
    n = config.n
    if len(y) != n:
        raise DomainError(f"state length {len(y)} does not match n={n}")
    if config.policy == "random-single-site":
        sites = [int(rng.integers(0, n))]
        coins = rng.random(1) < config.alpha
    else:
        sites = [int(i) for i in rng.permutation(n)]
        coins = rng.random(n) < config.alpha
    for i, z in zip(sites, coins):
        left = y[i - 1] if i > 0 else 0
        right = y[i + 1] if i < n - 1 else 0
        y[i] = 1 if (z and not left and not right) else 0
    return SlotState(y=y)


def _flush(bsum, i, val, t0, t1, start, blen):
    # add site i's constant occupancy over slots [t0, t1) into batch sums
    if not val or t1 <= t0:
        return
    b0 = (t0 - start) // blen
    b1 = (t1 - 1 - start) // blen
    for b in range(b0, b1 + 1):
        lo = max(t0, start + b * blen)
        hi = min(t1, start + (b + 1) * blen)
        bsum[b, i] += hi - lo


def _batch_layout(config):
    # equal-length batches aligned to the end of the run; short runs get
    # fewer than 32 batches rather than batches shorter than one slot
    span = config.steps - config.effective_burn_in
    nbat = min(_BATCHES, span)
    blen = span // nbat
    start = config.steps - blen * nbat
    return nbat, blen, start


def _simulate_single_site(config):
    n, steps = config.n, config.steps
    rng = np.random.default_rng(config.seed)
    sites = rng.integers(0, n, size=steps).tolist()
    coins = (rng.random(steps) < config.alpha).tolist()
    nbat, blen, start = _batch_layout(config)
    bsum = np.zeros((nbat, n))
    y = [0] * n
    # a site's occupancy only changes when that site is updated, so track
    # constant stretches instead of summing the whole state every slot
    last_t = [start] * n
    for t in range(steps):
        i = sites[t]
        left = y[i - 1] if i > 0 else 0
        right = y[i + 1] if i < n - 1 else 0
        nv = 1 if (coins[t] and not left and not right) else 0
        if t >= start and nv != y[i]:
            _flush(bsum, i, y[i], last_t[i], t, start, blen)
            last_t[i] = t
        y[i] = nv
    for i in range(n):
        _flush(bsum, i, y[i], max(last_t[i], start), steps, start, blen)
    return bsum, blen


def _simulate_sweeps(config):
    n, steps = config.n, config.steps
    rng = np.random.default_rng(config.seed)
    nbat, blen, start = _batch_layout(config)
    bsum = np.zeros((nbat, n))
    y = np.zeros(n, dtype=np.int8)
    for t in range(steps):
        perm = rng.permutation(n)
        coins = rng.random(n) < config.alpha
        for k, i in enumerate(perm):
            left = y[i - 1] if i > 0 else 0
            right = y[i + 1] if i < n - 1 else 0
            y[i] = 1 if (coins[k] and not left and not right) else 0
        if t >= start:
            bsum[(t - start) // blen] += y
    return bsum, blen


def simulate(config: SimConfig) -> MarginalEstimate:
    """Run the slot process and time-average the occupancy after burn-in.

    Deterministic given the seed (numpy PCG64 with a pregenerated draw
    stream). The standard error comes from 32 batch means; the averaging
    window is the last 32*floor((steps - burn_in)/32) slots so batches have
    equal length.
    """
    if config.policy == "random-single-site":
        bsum, blen = _simulate_single_site(config)
    else:
        bsum, blen = _simulate_sweeps(config)
    means = bsum / blen
    nbat = means.shape[0]
    x_hat = means.mean(axis=0)
    if nbat >= 2:
        stderr = means.std(axis=0, ddof=1) / np.sqrt(nbat)
    else:
        stderr = np.full(config.n, np.nan)
    return MarginalEstimate(x_hat=x_hat, stderr=stderr)


_MAX_EXACT_N = 12


def independent_sets(n: int) -> list[int]:
    """Bitmasks of the independent sets of a path with n sites."""
    return [m for m in range(1 << n) if not (m & (m << 1))]


def exact_stationary(n: int, alpha: float) -> np.ndarray:
    """Exact per-site emission marginals of the single-site update chain.

    Builds the transition kernel over independent sets (their number grows
    like a Fibonacci sequence, 377 states at n = 12) and runs power
    iteration until successive distributions differ by at most 1e-13.
    """
    if n > _MAX_EXACT_N:
        raise DomainError(f"exact_stationary supports n <= {_MAX_EXACT_N}, got {n}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    states = independent_sets(n)
    index = {s: k for k, s in enumerate(states)}
    size = len(states)
    P = np.zeros((size, size))
    for k, s in enumerate(states):
        for i in range(n):
            blocked = (i > 0 and (s >> (i - 1)) & 1) or (
                i < n - 1 and (s >> (i + 1)) & 1
            )
            off = s & ~(1 << i)
            if blocked:
                P[k, index[off]] += 1.0 / n
            else:
                P[k, index[off]] += (1.0 - alpha) / n
                P[k, index[off | (1 << i)]] += alpha / n
    pi = np.full(size, 1.0 / size)
    for _ in range(2 * 10 ** 6):
        nxt = pi @ P
        done = np.max(np.abs(nxt - pi)) <= 1e-13
        pi = nxt
        if done:
            break
    else:
        raise ConvergenceError("power iteration did not reach 1e-13", last=pi)
    marginals = np.zeros(n)
    for k, s in enumerate(states):
        for i in range(n):
            if (s >> i) & 1:
                marginals[i] += pi[k]
    return marginals


def meanfield_gap(n: int, alpha: float) -> float:
    """Sup-norm distance between the exact marginals and the solved chain.

    This is the price of neglecting neighbor correlations; it is reported,
    not bounded, since no ground truth for it exists beyond the oracle.
    """
    exact = exact_stationary(n, alpha)
    x = newton_solve(ChainParams(n, alpha), SolveOptions())
    return float(np.max(np.abs(exact - x)))
