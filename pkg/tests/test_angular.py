from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import racah_3j_sq
from shellconf.angular import selection_final_ells, triangle_ok, wigner3j_zero_sq


@given(st.integers(0, 8), st.integers(0, 6), st.integers(0, 8))
def test_zero_projection_3j_matches_racah(lp, k, ell):
    assert wigner3j_zero_sq(lp, k, ell) == racah_3j_sq(lp, k, ell)


@given(st.integers(0, 8), st.integers(0, 6), st.integers(0, 8))
def test_permutation_symmetry(a, b, c):
    v = wigner3j_zero_sq(a, b, c)
    assert v == wigner3j_zero_sq(b, c, a) == wigner3j_zero_sq(c, a, b) == wigner3j_zero_sq(b, a, c)


@given(st.integers(0, 6), st.integers(0, 6))
def test_orthogonality_sum(k, ell):
    # sum over l' of (2l'+1) (l' k l; 0 0 0)^2 equals 1 when some parity-even
    # combination exists, which is always the case for m = 0 sums over all l'
    total = sum((2 * lp + 1) * wigner3j_zero_sq(lp, k, ell) for lp in range(0, k + ell + 1))
    assert total == 1


def test_known_values():
    assert wigner3j_zero_sq(1, 1, 0) == Fraction(1, 3)
    assert wigner3j_zero_sq(2, 1, 1) == Fraction(2, 15)
    assert wigner3j_zero_sq(1, 1, 1) == 0          # odd sum
    assert wigner3j_zero_sq(4, 1, 1) == 0          # triangle fails


@pytest.mark.parametrize("k, ell, finals", [
    (1, 0, [1]), (1, 1, [0, 2]), (1, 2, [1, 3]), (2, 0, [2]), (2, 1, [1, 3]),
    (2, 2, [0, 2, 4]), (3, 0, [3]), (4, 0, [4]), (3, 3, [0, 2, 4, 6]),
])
def test_selection_rule(k, ell, finals):
    assert selection_final_ells(k, ell) == finals
    for lp in finals:
        assert triangle_ok(lp, k, ell) and (lp + k + ell) % 2 == 0
