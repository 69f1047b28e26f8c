"""Game parameters, validation, normalization and turn-count thresholds.

A game instance is the triple (n, alpha, beta): players alternate tossing a
coin with heads probability p, a turn scores alpha for tails and alpha + beta
for heads, and the first player to accumulate n points wins (the player who
moves first wins ties).  Parameters are restricted to positive rationals so
that every ceiling below is computed exactly; irrational parameters are out
of scope.

All threshold arithmetic depends on the parameters only through their ratios,
so every triple is normalized to coprime positive integers before analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd, lcm
from typing import Union

RationalLike = Union[int, str, Fraction]


class ParameterError(ValueError):
    """A user-supplied parameter is outside its allowed domain."""


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"a"``, ``"a/b"`` or a finite decimal string such as ``"2.5"``."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"not a valid rational: {text!r}") from exc


@dataclass(frozen=True)
class GameParams:
    """Points needed to win, points per tail, bonus points per head."""

    n: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", parse_rational(self.n))
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        object.__setattr__(self, "beta", parse_rational(self.beta))


@dataclass(frozen=True)
class NormalizedParams:
    """Integer game parameters with gcd(n, alpha, beta) = 1."""

    n: int
    alpha: int
    beta: int


@dataclass(frozen=True)
class TurnBounds:
    """Support of the win-turn count: l = ceil(n/(alpha+beta)), m = ceil(n/alpha)."""

    l: int
    m: int


def validate(params: GameParams) -> GameParams:
    """Return ``params`` unchanged if all three values are strictly positive."""
    for name in ("n", "alpha", "beta"):
        if getattr(params, name) <= 0:
            raise ParameterError(f"{name} must be > 0")
    return params


def normalize(params: GameParams) -> NormalizedParams:
    """Scale a valid triple to coprime positive integers.

    Multiplying (n, alpha, beta) by any positive rational leaves the game
    unchanged, so clear denominators and divide out the common factor.
    """
    validate(params)
    scale = lcm(params.n.denominator, params.alpha.denominator, params.beta.denominator)
    n, a, b = (int(v * scale) for v in (params.n, params.alpha, params.beta))
    g = gcd(n, gcd(a, b))
    return NormalizedParams(n // g, a // g, b // g)


def turn_bounds(params: NormalizedParams) -> TurnBounds:
    """Minimum and maximum turn counts on which the target can be reached.

    Fewer than l = ceil(n/(alpha+beta)) turns cannot score n points even with
    all heads; after m = ceil(n/alpha) turns the target is reached even with
    all tails.
    """
    l = ceil(Fraction(params.n, params.alpha + params.beta))
    m = ceil(Fraction(params.n, params.alpha))
    return TurnBounds(l, m)


def head_thresholds(k: int, params: NormalizedParams) -> tuple[int, int]:
    """Head-count thresholds for winning exactly on turn k.

    Returns (i_k, i_k_star) where i_k = ceil((n - k*alpha)/beta - 1) is the
    head count that wins on turn k only if the k-th toss is a head, and
    i_k_star = ceil((n - (k-1)*alpha)/beta - 1) is the largest head count
    among the first k-1 tosses that has not yet won.  Values may fall outside
    [0, k-1]; clamping is the caller's responsibility.
    """
    bounds = turn_bounds(params)
    if not bounds.l <= k <= bounds.m:
        raise ParameterError(f"k={k} outside the valid turn range [{bounds.l}, {bounds.m}]")
    n, a, b = params.n, params.alpha, params.beta
    i_k = ceil(Fraction(n - k * a, b) - 1)
    i_k_star = ceil(Fraction(n - (k - 1) * a, b) - 1)
    return i_k, i_k_star
