"""Angular factors for multipole transitions: zero-projection 3j symbols."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

__all__ = ["wigner3j_zero_sq", "selection_final_ells", "triangle_ok"]


def triangle_ok(a, b, c):
    return abs(a - b) <= c <= a + b


def wigner3j_zero_sq(ell_p, k, ell) -> Fraction:
    """Square of the 3j symbol ``(ell_p k ell; 0 0 0)`` as an exact fraction.

    With ``J = ell_p + k + ell = 2g`` even,

        (3j)^2 = (J-2a)! (J-2b)! (J-2c)! / (J+1)! * [g! / ((g-a)! (g-b)! (g-c)!)]^2

    and the symbol vanishes for odd ``J`` or when the triangle rule fails.
    """
    if min(ell_p, k, ell) < 0:
        raise ValueError("angular momenta must be non-negative")
    big_j = ell_p + k + ell
    if big_j % 2 or not triangle_ok(ell_p, k, ell):
        return Fraction(0)
    g = big_j // 2
    num = factorial(big_j - 2 * ell_p) * factorial(big_j - 2 * k) * factorial(big_j - 2 * ell)
    ratio = Fraction(
        factorial(g), factorial(g - ell_p) * factorial(g - k) * factorial(g - ell)
    )
    return Fraction(num, factorial(big_j + 1)) * ratio**2


def selection_final_ells(k, ell):
    """Final orbital quantum numbers reachable by a ``2^k``-pole transition."""
    if k < 1 or ell < 0:
        raise ValueError(f"need k >= 1 and ell >= 0, got k={k}, ell={ell}")
    return [lp for lp in range(abs(ell - k), ell + k + 1) if (ell + lp + k) % 2 == 0]
