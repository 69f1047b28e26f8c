"""Advantage polynomial assembly and its structural laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coinrace.advantage import advantage_at, advantage_polynomial, tie_probability
from coinrace.game import GameParams, ParameterError
from coinrace.polynomial import ONE, Poly

params_rationals = st.fractions(min_value=Fraction(1, 2), max_value=6, max_denominator=4)
scales = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)


def test_golden_row_3_1_1():
    result = advantage_polynomial(GameParams(3, 1, 1))
    assert result.poly == Poly((1, -2, 5, -4, 1))
    assert not result.degenerate


def test_golden_row_10_2_3():
    result = advantage_polynomial(GameParams(10, 2, 3))
    assert result.poly == Poly((1, -4, 22, -64, 102, -90, 43, -10, 1))


@pytest.mark.parametrize("params", [(2, 2, 1), (4, 2, 1), (3, 3, 2), (6, 3, 2)])
def test_degenerate_games(params):
    result = advantage_polynomial(GameParams(*params))
    assert result.degenerate
    assert result.poly == ONE
    assert result.bounds.l == result.bounds.m


def test_advantage_at_endpoints_and_half():
    g = GameParams(3, 1, 1)
    assert advantage_at(g, 0) == 1
    assert advantage_at(g, 1) == 1
    # 1 - 2/2 + 5/4 - 4/8 + 1/16, independently confirmed by the enumeration oracle
    assert advantage_at(g, Fraction(1, 2)) == Fraction(13, 16)


def test_advantage_at_rejects_bias_outside_unit_interval():
    for p in (Fraction(-1, 10), Fraction(11, 10)):
        with pytest.raises(ParameterError):
            advantage_at(GameParams(3, 1, 1), p)


def test_tie_probability_known_values():
    # (2p - p^2)^2 + (1 - 2p + p^2)^2, i.e. twice the advantage minus one
    assert tie_probability(GameParams(3, 1, 1)) == Poly((1, -4, 10, -8, 2))
    assert tie_probability(GameParams(2, 2, 1)) == ONE


def test_tie_probability_at_zero_bias():
    for params in [(3, 1, 1), (5, 1, 2), (7, 2, 3)]:
        assert tie_probability(GameParams(*params))(0) == 1


def small_games(max_n=10, max_alpha=3, max_beta=3):
    for n in range(1, max_n + 1):
        for alpha in range(1, max_alpha + 1):
            for beta in range(1, max_beta + 1):
                yield GameParams(n, alpha, beta)


def test_reconstruction_from_tie_probability():
    for g in small_games(max_n=6):
        adv = advantage_polynomial(g).poly
        assert adv == Fraction(1, 2) * (tie_probability(g) + 1)


def test_first_mover_bound_on_grid():
    grid = [Fraction(i, 32) for i in range(33)]
    for g in small_games(max_n=6):
        poly = advantage_polynomial(g).poly
        for p in grid:
            assert Fraction(1, 2) <= poly(p) <= 1


def test_endpoint_certainty_and_constant_term():
    for g in small_games(max_n=8):
        poly = advantage_polynomial(g).poly
        assert poly.constant_term() == 1
        assert poly(1) == 1


def test_degree_law_exhaustive():
    for n in range(1, 13):
        for alpha in range(1, 5):
            for beta in range(1, 5):
                result = advantage_polynomial(GameParams(n, alpha, beta))
                if result.degenerate:
                    assert result.poly == ONE
                else:
                    assert result.poly.degree == 2 * result.bounds.m - 2


def test_coefficients_are_integers():
    for g in small_games(max_n=8):
        assert advantage_polynomial(g).poly.is_integral()


@settings(deadline=None, max_examples=40)
@given(params_rationals, params_rationals, params_rationals, scales)
def test_scaling_invariance(n, alpha, beta, c):
    base = advantage_polynomial(GameParams(n, alpha, beta))
    scaled = advantage_polynomial(GameParams(c * n, c * alpha, c * beta))
    assert base.poly == scaled.poly
