"""Seeded Monte Carlo replication of the race game.

Randomness contract: draws come from Python's Mersenne Twister
(:class:`random.Random`, period 2**19937 - 1).  Each worker owns a private
generator seeded with a splitmix64 mix of the 64-bit run seed and the worker
index, so a run is bit-for-bit reproducible for a fixed (seed, workers) pair
and different seeds give statistically independent runs.  Worker counts
partition the trials; changing the worker count changes the stream layout,
which preserves correctness but not bit-identity.  A toss is a head iff the
next uniform draw in [0, 1) is strictly below p, so p = 0 never tosses heads
and p = 1 always does.

A game returns the signed turn count: +k when the first player reaches the
target on their k-th turn, -k when the second player wins on theirs.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import sqrt
from typing import Mapping

from .game import GameParams, ParameterError, normalize
from .minimize import asymptotic_optimum

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SimConfig:
    params: GameParams
    p: float
    trials: int
    seed: int
    workers: int = 1


@dataclass(frozen=True)
class SimResult:
    trials: int
    wins: int  # first-player wins
    frequency: float
    stderr: float
    seed: int
    turn_histogram: Mapping[int, float] = field(hash=False)  # signed turn -> share of trials


def simulate(config: SimConfig) -> SimResult:
    """Play ``config.trials`` independent games and tally first-player wins."""
    _validate(config)
    nparams = normalize(config.params)
    shares = _split_trials(config.trials, config.workers)
    jobs = [
        (nparams.n, nparams.alpha, nparams.beta, config.p, share, _stream_seed(config.seed, w))
        for w, share in enumerate(shares)
        if share
    ]
    outcomes = _run_jobs(jobs, config.workers)
    wins = 0
    histogram: Counter[int] = Counter()
    for stream_wins, stream_hist in outcomes:
        wins += stream_wins
        histogram.update(stream_hist)
    frequency = wins / config.trials
    return SimResult(
        trials=config.trials,
        wins=wins,
        frequency=frequency,
        stderr=sqrt(frequency * (1 - frequency) / config.trials),
        seed=config.seed,
        turn_histogram={k: v / config.trials for k, v in sorted(histogram.items())},
    )


def simulate_at_pstar(
    params: GameParams, trials: int, seed: int, workers: int = 1
) -> SimResult:
    """Simulate with the coin bias set to the limiting optimal value."""
    bias = asymptotic_optimum(params.alpha, params.beta).bias
    return simulate(SimConfig(params=params, p=bias, trials=trials, seed=seed, workers=workers))


def _validate(config: SimConfig) -> None:
    if config.trials < 1:
        raise ParameterError("trials must be >= 1")
    if not 0 <= config.p <= 1:
        raise ParameterError("p must be in [0, 1]")
    if config.workers < 1:
        raise ParameterError("workers must be >= 1")
    if not 0 <= config.seed <= _MASK64:
        raise ParameterError("seed must be an unsigned 64-bit integer")


def _split_trials(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _stream_seed(seed: int, worker: int) -> int:
    # splitmix64 finalizer over seed advanced by the worker index
    x = (seed + (worker + 1) * 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _run_jobs(jobs: list[tuple], workers: int) -> list[tuple[int, Counter]]:
    if workers > 1 and len(jobs) > 1:
        try:
            with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
                return list(pool.map(_run_stream, jobs))
        except (OSError, NotImplementedError):
            pass  # no process support here; fall through to in-process execution
    return [_run_stream(job) for job in jobs]


def _run_stream(job: tuple) -> tuple[int, Counter]:
    n, alpha, beta, p, trials, stream_seed = job
    rng = random.Random(stream_seed).random
    wins = 0
    histogram: Counter[int] = Counter()
    for _ in range(trials):
        outcome = _play(rng, n, alpha, beta, p)
        if outcome > 0:
            wins += 1
        histogram[outcome] += 1
    return wins, histogram


def _play(rng, n: int, alpha: int, beta: int, p: float) -> int:
    first = second = 0
    turns = 0
    while True:
        turns += 1
        first += alpha
        if rng() < p:
            first += beta
        if first >= n:
            return turns
        second += alpha
        if rng() < p:
            second += beta
        if second >= n:
            return -turns
