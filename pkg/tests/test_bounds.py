import pytest
from hypothesis import given
from hypothesis import strategies as st

from hogames.bounds import (
    DIGIT_CAP_ENV,
    SymbolicTower,
    digit_cap,
    hyperexp,
    interaction_bound,
    tower_height,
    within,
)
from hogames.core import INFINITE
from oracles import hyper


@pytest.mark.parametrize(
    "a, n, m, want",
    [(2, 0, 5, 5), (2, 2, 3, 256), (3, 1, 2, 9), (10, 1, 3, 1000), (1, 5, 7, 1), (0, 1, 3, 0), (0, 2, 3, 1)],
)
def test_small_towers(a, n, m, want):
    assert hyperexp(a, n, m) == want


def test_bound_values():
    assert interaction_bound(5, 1, 4) == 256
    assert interaction_bound(5, 0, 4) == 4
    # depth 3 caps the height at 1 and doubles the base: 6 ** 6
    assert interaction_bound(5, 4, 3, d=3) == 46656
    assert interaction_bound(2, 2, 3, d=INFINITE) == interaction_bound(2, 2, 3)


@given(st.integers(0, 50), st.integers(0, 50), st.integers(3, 3))
def test_depth_three_forces_height_one(n, m, d):
    assert tower_height(n, m, d) <= 1


def test_refined_height_rejects_shallow_depth():
    with pytest.raises(ValueError):
        tower_height(1, 1, 1)
    with pytest.raises(ValueError):
        interaction_bound(1, 1, 0)
    with pytest.raises(ValueError):
        hyperexp(-1, 0, 0)


@given(st.integers(2, 5), st.integers(0, 2), st.integers(1, 4))
def test_exact_values_match_repeated_powers(a, n, m):
    assert hyperexp(a, n, m) == hyper(a, n, m)


def test_huge_tower_is_symbolic_and_compares_above_integers():
    t = hyperexp(8, 3, 8)
    assert isinstance(t, SymbolicTower)
    assert t > 10**100 and t >= 10**100 and not t < 10**100 and not t <= 10**100
    assert within(10**6, t)
    assert "height=3" in str(t)


def test_symbolic_comparison_against_enormous_integers():
    t = hyperexp(2, 2, 5, cap=2)  # 2 ** 32 written symbolically
    assert isinstance(t, SymbolicTower)
    assert t > 2**32 - 1 and not t > 2**32 and t >= 2**32 and t <= 2**32


def test_digit_cap_can_be_set_from_the_environment(monkeypatch):
    monkeypatch.setenv(DIGIT_CAP_ENV, "3")
    assert digit_cap() == 3
    assert isinstance(hyperexp(2, 2, 4), SymbolicTower)  # 65536 has five digits
    monkeypatch.setenv(DIGIT_CAP_ENV, "lots")
    with pytest.raises(ValueError):
        digit_cap()
    monkeypatch.delenv(DIGIT_CAP_ENV)
    assert hyperexp(2, 2, 4) == 65536


def test_within_measures_the_last_index():
    assert within(9, 8)
    assert not within(10, 8)
