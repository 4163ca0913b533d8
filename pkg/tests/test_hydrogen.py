from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import hydrogen_f, hydrogen_nodes_numpy, hydrogen_radial, hydrogen_radial_integral
from shellconf.hydrogen import (
    CHANNELS,
    HydrogenState,
    analytic_alpha_bound,
    analytic_f,
    analytic_f_exact,
    channel,
    energy,
    exact_alpha_term,
    exact_oscillator_strength,
    expectation_r_power,
    radial_integral_sq,
    radial_nodes,
    radial_wavefunction,
)

states = st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1)))


def test_state_validation():
    with pytest.raises(ValueError):
        HydrogenState(2, 2)
    with pytest.raises(ValueError):
        HydrogenState(0, 0)
    assert HydrogenState.from_label("3d") == HydrogenState(3, 2)
    assert HydrogenState(4, 1).label == "4p" and HydrogenState(4, 1).n_nodes == 2


@given(states, st.sampled_from([1.0, 2.0, 3.0]))
def test_energy(nl, z):
    n, ell = nl
    assert energy(HydrogenState(n, ell, z)) == pytest.approx(-z * z / (2 * n * n))


@given(states)
def test_wavefunction_matches_scipy_laguerre(nl):
    n, ell = nl
    r = np.linspace(0.01, 40, 200)
    np.testing.assert_allclose(radial_wavefunction(HydrogenState(n, ell), r),
                               hydrogen_radial(n, ell, r), atol=1e-12)


@given(states)
def test_nodes_match_polynomial_roots(nl):
    n, ell = nl
    np.testing.assert_allclose(radial_nodes(HydrogenState(n, ell)), hydrogen_nodes_numpy(n, ell),
                               rtol=1e-9)


def test_known_nodes():
    r = radial_nodes(HydrogenState(3, 0))
    assert r == pytest.approx([(9 - 3 * 3**0.5) / 2, (9 + 3 * 3**0.5) / 2], abs=1e-12)
    assert radial_nodes(HydrogenState(2, 0)) == pytest.approx([2.0], abs=1e-12)
    assert radial_nodes(HydrogenState(4, 2)) == pytest.approx([12.0], abs=1e-12)
    assert radial_nodes(HydrogenState(3, 2)) == []


@pytest.mark.parametrize("n, ell, power, value", [
    (1, 0, 1, Fraction(3, 2)), (1, 0, 2, Fraction(3)), (2, 1, 2, Fraction(30)),
    (2, 0, 1, Fraction(6)), (3, 2, -1, Fraction(1, 9)),
])
def test_expectation_values(n, ell, power, value):
    assert expectation_r_power(HydrogenState(n, ell), power) == pytest.approx(float(value), rel=1e-14)


@given(states, states, st.integers(1, 4))
def test_radial_integral_against_quadrature(a, b, k):
    exact = float(radial_integral_sq(HydrogenState(*a), HydrogenState(*b), k))
    assert exact == pytest.approx(hydrogen_radial_integral(*a, *b, k) ** 2, rel=1e-8, abs=1e-14)


@pytest.mark.parametrize("k, a, b", [(1, (1, 0), (2, 1)), (1, (2, 1), (3, 2)), (2, (1, 0), (3, 2)),
                                     (3, (2, 1), (5, 2)), (4, (1, 0), (6, 4))])
def test_exact_f_against_quadrature(k, a, b):
    assert float(exact_oscillator_strength(k, HydrogenState(*a), HydrogenState(*b))) == pytest.approx(
        hydrogen_f(k, *a, *b), rel=1e-9)


def test_lyman_alpha_value():
    assert float(exact_oscillator_strength(1, HydrogenState(1, 0), HydrogenState(2, 1))) == pytest.approx(
        0.41619672, abs=1e-8)


def test_exact_alpha_1s():
    # the dipole polarizability of 1s is 9/2; the bound part alone reaches 3.66
    bound = sum(exact_alpha_term(1, HydrogenState(1, 0), HydrogenState(n, 1)) for n in range(2, 60))
    assert 3.6 < float(bound) < 4.5


def test_channel_lookup():
    assert channel(1, "1s").name == "f1:1s->np"
    assert channel(1, "2p", 0).final_ell == 0
    with pytest.raises(KeyError):
        channel(5, "1s")
    assert len(CHANNELS) == 14


@pytest.mark.parametrize("name", ["f1:1s->np", "f1:2p->ns", "f2:1s->nd", "f3:1s->nf", "f4:1s->ng"])
def test_correct_printed_channels_equal_exact_rationals(name):
    ch = CHANNELS[name]
    for n in range(ch.final_ell + 1, 14):
        if n == ch.excluded:
            continue
        assert analytic_f_exact(ch, n) == exact_oscillator_strength(ch.k, ch.initial_state,
                                                                    HydrogenState(n, ch.final_ell))


def test_excluded_final_level_raises():
    with pytest.raises(ValueError):
        analytic_f_exact(CHANNELS["f1:2p->ns"], 2)


def test_charge_dependence_follows_printed_power():
    ch = CHANNELS["f1:1s->np"]
    assert analytic_f(ch, 2, z=2.0) == pytest.approx(analytic_f(ch, 2) * 2.0**-7)


def test_alpha_bound_partial_sum_is_increasing():
    ch = CHANNELS["f1:1s->np"]
    sums = [analytic_alpha_bound(ch, n) for n in range(2, 12)]
    assert all(b > a for a, b in zip(sums, sums[1:]))


def test_alpha_bound_first_term():
    # the leading term is f / dE**2 for 1s -> 2p, independent of the printed series
    ch = CHANNELS["f1:1s->np"]
    f = float(analytic_f_exact(ch, 2))
    assert analytic_alpha_bound(ch, 2) == pytest.approx(f / 0.375**2, rel=1e-12)
    assert analytic_alpha_bound(ch, 2) == pytest.approx(2.9596, abs=1e-4)
