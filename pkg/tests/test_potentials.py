import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shellconf.potentials import (
    UNBOUNDED,
    ConfinementGeometry,
    PotentialKind,
    PotentialModel,
    Regime,
    classify,
    coulomb,
    debye,
    evaluate,
    exp_cosine,
)

radius = st.floats(min_value=0.0, max_value=50.0, allow_nan=False)


def test_default_geometry_is_free_atom():
    g = ConfinementGeometry()
    assert g.r_inner == 0.0 and g.r_outer is UNBOUNDED
    assert classify(g) is Regime.FHA
    assert str(g) == "(0, inf)"


@pytest.mark.parametrize("ra, rb, regime", [
    (0, 1, Regime.CHA),
    (1, 5, Regime.SCHA),
    (1, math.inf, Regime.LCHA),
    (0, math.inf, Regime.FHA),
])
def test_classification(ra, rb, regime):
    assert classify(ConfinementGeometry(ra, rb)) is regime


def test_infinite_float_outer_radius_means_unbounded():
    assert ConfinementGeometry(2.0, float("inf")).r_outer is UNBOUNDED


@pytest.mark.parametrize("ra, rb", [(-1, 2), (2, 2), (3, 1), (float("nan"), 1), (0, float("nan"))])
def test_rejects_invalid_shells(ra, rb):
    with pytest.raises(ValueError):
        ConfinementGeometry(ra, rb)


@given(radius, st.floats(min_value=1e-3, max_value=50.0))
def test_volume_param_and_width(ra, gap):
    g = ConfinementGeometry(ra, ra + gap)
    assert g.width == pytest.approx(gap, rel=1e-9, abs=1e-12)
    assert g.volume_param == pytest.approx((ra + gap) ** 3 - ra**3, rel=1e-12)
    assert g.volume_param > 0


def test_unbounded_volume_is_undefined():
    with pytest.raises(ValueError):
        ConfinementGeometry(1.0).volume_param
    assert ConfinementGeometry(1.0).width == math.inf


@pytest.mark.parametrize("z, lam", [(0, 0.1), (-1, 0.1), (1, -0.1)])
def test_model_rejects_bad_parameters(z, lam):
    with pytest.raises(ValueError):
        PotentialModel(PotentialKind.DEBYE, z, lam)


@given(st.floats(min_value=1e-3, max_value=100.0), st.floats(min_value=0.1, max_value=5.0))
def test_forms(r, z):
    lam = 0.05
    assert evaluate(coulomb(z), r) == pytest.approx(-z / r)
    assert debye(lam, z)(r) == pytest.approx(-z * math.exp(-lam * r) / r)
    assert exp_cosine(lam, z)(r) == pytest.approx(-z * math.exp(-lam * r) * math.cos(lam * r) / r)


def test_zero_screening_reduces_to_coulomb():
    r = np.linspace(0.1, 20, 50)
    for model in (debye(0.0), exp_cosine(0.0)):
        assert model.is_coulomb
        np.testing.assert_allclose(model(r), coulomb()(r))


def test_kind_from_string():
    assert PotentialModel("expcos", 1.0, 0.1).kind is PotentialKind.EXP_COSINE
