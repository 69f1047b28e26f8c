"""Brute-force ground truth by exhaustive toss-sequence enumeration.

Deliberately simple and slow: classify every toss sequence by the first
prefix length at which the accumulated score reaches the target, with no
threshold formulas anywhere.  This module depends only on the polynomial
substrate and the parameter type so it stays an independent check on the
analytic construction.
"""

from __future__ import annotations

from fractions import Fraction

from .game import NormalizedParams, ParameterError
from .polynomial import ONE, X, Poly

MAX_TURNS = 20  # enumeration is 2^turns; beyond this it is pointless


def brute_force_hit_pmf(params: NormalizedParams) -> dict[int, Poly]:
    """Win-turn pmf rebuilt by enumerating all toss prefixes.

    A sequence is classified at its first winning prefix; the suffix tosses
    carry total probability 1, so stopping early changes nothing.  Each
    winning prefix of length k with h heads contributes p^h (1-p)^(k-h).
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    max_turns = -(-n // alpha)  # all tails reach the target by this turn
    if max_turns > MAX_TURNS:
        raise ParameterError(
            f"enumeration needs {max_turns} turns; oversized (cap {MAX_TURNS})"
        )
    counts: dict[tuple[int, int], int] = {}

    def walk(points: int, turns: int, heads: int) -> None:
        if points >= n:
            key = (turns, heads)
            counts[key] = counts.get(key, 0) + 1
            return
        walk(points + alpha + beta, turns + 1, heads + 1)
        walk(points + alpha, turns + 1, heads)

    walk(0, 0, 0)
    q = ONE - X
    pmf: dict[int, Poly] = {}
    for (k, h), count in sorted(counts.items()):
        term = count * X**h * q ** (k - h)
        pmf[k] = pmf.get(k, Poly()) + term
    return pmf


def brute_force_advantage(params: NormalizedParams, p: int | Fraction) -> Fraction:
    """First player's win probability at bias p, from the enumerated pmf.

    Both players' win turns are independent and identically distributed and
    the first mover wins ties, so the win probability is
    (1 + sum_k pmf(k)(p)^2) / 2.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ParameterError("p must be in [0, 1]")
    pmf = brute_force_hit_pmf(params)
    tie = sum(f(p) ** 2 for f in pmf.values())
    return (1 + tie) / 2
