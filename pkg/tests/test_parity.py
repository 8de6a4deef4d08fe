from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from kleintc.parity import epsilon, t, t_mod2

ints = st.integers(-10**6, 10**6)


@pytest.mark.parametrize("l, expected", [(0, 0), (1, 1), (-3, 1), (-4, 0), (7, 1)])
def test_epsilon(l, expected):
    assert epsilon(l) == expected


@pytest.mark.parametrize("l", range(-9, 10))
def test_epsilon_matches_closed_form(l):
    assert epsilon(l) == (1 - Fraction(-1) ** l) / 2


@pytest.mark.parametrize("m, expected", [(0, 0), (5, 2), (-5, -3), (-1, -1), (4, 2)])
def test_t(m, expected):
    assert t(m) == expected


@pytest.mark.parametrize("m", range(-20, 21))
def test_t_is_floor(m):
    assert t(m) == math.floor(m / 2)


@pytest.mark.parametrize("m, expected", [(2, 1), (-1, 1), (4, 0), (0, 0), (-5, 1)])
def test_t_mod2(m, expected):
    assert t_mod2(m) == expected


@given(ints)
def test_t_of_negative(m):
    assert t_mod2(-m) == (t_mod2(m) + m) % 2


@given(ints, ints, ints)
def test_t_of_sum(m, n, l):
    assert t_mod2(m + n + 2 * l) == (t_mod2(m) + t_mod2(n) + m * n + l) % 2


@given(ints)
def test_periodicity(m):
    assert t_mod2(m) == t_mod2(m + 4)
    assert epsilon(m) == epsilon(m + 2)
