"""Herzfeld metallization criterion for a shell-confined atom.

A state counts as metallic once its dipole polarizability reaches the shell
volume parameter ``V = r_outer**3 - r_inner**3``.  At fixed ``r_outer`` the
threshold inner radius ``R_m`` is the root of

    g(r_inner) = alpha1(r_inner, r_outer) - V(r_inner, r_outer).
"""
from __future__ import annotations

from dataclasses import dataclass

from scipy.optimize import bisect

from .gps import GridSpec, state_label
from .potentials import ConfinementGeometry, coulomb
from .response import polarizability, resolve_state

__all__ = ["MetallicityPoint", "ThresholdResult", "herzfeld_check", "herzfeld_gap", "find_rm"]

EDGE_GAP = 1e-3


@dataclass(frozen=True)
class MetallicityPoint:
    geometry: ConfinementGeometry
    state: str
    volume_param: float
    alpha1: float

    @property
    def metallic(self) -> bool:
        return self.volume_param <= self.alpha1


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a threshold search at one outer radius.

    ``status`` is ``"root"`` when ``r_m`` holds the threshold, otherwise
    ``"always metallic"`` or ``"never metallic"`` and ``r_m`` is None.
    """

    r_outer: float
    state: str
    status: str
    r_m: float | None = None
    n_evaluations: int = 0

    @property
    def metallic_zone(self):
        return None if self.r_m is None else self.r_outer - self.r_m


def herzfeld_check(geometry, state="1s", model=None, spec=None) -> MetallicityPoint:
    """Compare ``alpha1`` with the volume parameter for one shell.

    Raises
    ------
    ValueError
        For an unbounded shell, where ``V`` is undefined.
    """
    if not geometry.bounded:
        raise ValueError(f"Herzfeld criterion needs a finite shell, got {geometry}")
    index, ell = resolve_state(state)
    alpha = polarizability(1, (index, ell), geometry, model, spec).total
    return MetallicityPoint(geometry, state_label(index, ell), geometry.volume_param, alpha)


def herzfeld_gap(r_inner, r_outer, state="1s", model=None, spec=None):
    """``alpha1 - V`` for the shell ``(r_inner, r_outer)``."""
    point = herzfeld_check(ConfinementGeometry(r_inner, r_outer), state, model, spec)
    return point.alpha1 - point.volume_param


def find_rm(r_outer, state="1s", model=None, spec=None, xtol=1e-8) -> ThresholdResult:
    """Inner radius at which ``state`` turns metallic for a given ``r_outer``.

    Bisection on ``(0, r_outer - 1e-3)``; every probe is a full re-solve.
    For excited s states the label names the confined state with the same
    number of nodes inside the shell.
    """
    model = coulomb() if model is None else model
    spec = GridSpec() if spec is None else spec
    index, ell = resolve_state(state)
    label = state_label(index, ell)
    calls = [0]

    def g(r_inner):
        calls[0] += 1
        return herzfeld_gap(r_inner, r_outer, (index, ell), model, spec)

    lo, hi = 0.0, r_outer - EDGE_GAP
    g_lo, g_hi = g(lo), g(hi)
    if g_lo * g_hi > 0.0:
        status = "always metallic" if g_lo > 0.0 else "never metallic"
        return ThresholdResult(r_outer, label, status, None, calls[0])
    root = bisect(g, lo, hi, xtol=xtol, maxiter=200)
    return ThresholdResult(r_outer, label, "root", float(root), calls[0])
