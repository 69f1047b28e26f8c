"""First player's winning probability as an exact polynomial in the coin bias.

Both players' winning turns are independent with the same distribution, and
the first mover wins ties in hit-time, so the first player wins with
probability (1 + sum_k P(win turn = k)^2) / 2.  The squared-pmf sum is the
tie probability; halving (1 + tie) gives the advantage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import GameParams, NormalizedParams, ParameterError, TurnBounds, normalize, turn_bounds
from .polynomial import ONE, Poly
from .stopping import ConsistencyError, hit_time_distribution


@dataclass(frozen=True)
class AdvantageResult:
    params: NormalizedParams
    bounds: TurnBounds
    poly: Poly
    degenerate: bool  # True iff the advantage is identically 1 (l == m)


def tie_probability(params: GameParams) -> Poly:
    """Probability both players need the same number of turns, as a polynomial."""
    dist = hit_time_distribution(normalize(params))
    return sum((f * f for f in dist.pmf.values()), Poly())


def advantage_polynomial(params: GameParams) -> AdvantageResult:
    """Assemble the advantage polynomial and enforce its structural laws.

    The degenerate case is detected twice on purpose: structurally (l == m,
    every game ties in hit-time) and from the assembled polynomial.  Any
    disagreement, a wrong degree, or a non-integer coefficient indicates a
    construction bug and aborts.
    """
    nparams = normalize(params)
    bounds = turn_bounds(nparams)
    degenerate = bounds.l == bounds.m
    dist = hit_time_distribution(nparams)
    poly = Fraction(1, 2) * (sum((f * f for f in dist.pmf.values()), Poly()) + 1)
    if degenerate:
        if poly != ONE:
            raise ConsistencyError(
                f"single-turn game (l=m={bounds.l}) must have advantage 1, got {poly}"
            )
    else:
        expected = 2 * bounds.m - 2
        if poly.degree != expected:
            raise ConsistencyError(
                f"advantage degree {poly.degree} != 2m-2 = {expected} for {nparams}"
            )
        if not poly.is_integral():
            raise ConsistencyError(f"advantage has a non-integer coefficient: {poly!r}")
    return AdvantageResult(nparams, bounds, poly, degenerate)


def advantage_at(params: GameParams, p: int | Fraction) -> Fraction:
    """Exact winning probability of the first player at coin bias p."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ParameterError("p must be in [0, 1]")
    return advantage_polynomial(params).poly(p)
