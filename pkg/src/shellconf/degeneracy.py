"""Incidental degeneracy: confined states that share a free-atom energy.

Putting impenetrable walls exactly at radial nodes of a free ``(n, l)``
state leaves the piece of the free wavefunction between them as an exact
confined eigenfunction.  Every pair of points drawn from
``{0, node_1, ..., node_m, infinity}`` therefore gives a confined state with
the free energy.  Across ``l = 0 .. n-1`` this yields ``n(n+1)(n+2)/6``
degenerate states.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .gps import GridSpec, solve_radial, state_label
from .hydrogen import HydrogenState, radial_nodes
from .hydrogen import energy as free_energy
from .information import shannon_entropy
from .potentials import UNBOUNDED, ConfinementGeometry, Regime, classify, coulomb
from .response import polarizability

__all__ = [
    "ENERGY_MATCH",
    "AtlasError",
    "UnboundStateError",
    "AtlasRow",
    "count_total",
    "count_by_category",
    "node_geometries",
    "find_nodes_numeric",
    "free_state_energy",
    "enumerate_atlas",
]

ENERGY_MATCH = 1e-6
ATLAS_TRUNCATION = 200.0


class AtlasError(RuntimeError):
    """A node-anchored state missed the free energy."""

    def __init__(self, message, geometry=None):
        super().__init__(message)
        self.geometry = geometry


class UnboundStateError(ValueError):
    """The requested free state is not bound for this screening."""


def count_total(n):
    """Number of degenerate GCHA states attached to level ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n + 1) * (n + 2) // 6


def count_by_category(n):
    """Degenerate-state counts split by confinement regime."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return {
        Regime.FHA: n,
        Regime.CHA: n * (n - 1) // 2,
        Regime.SCHA: n * (n - 1) * (n - 2) // 6,
        Regime.LCHA: n * (n - 1) // 2,
    }


def node_geometries(parent):
    """All shells with both edges on ``{0, nodes..., infinity}``.

    Parameters
    ----------
    parent : HydrogenState or sequence of float
        A free hydrogenic state (nodes from the exact polynomial), or the
        node radii directly.

    Returns
    -------
    list of (ConfinementGeometry, int)
        Each shell with the number of parent nodes strictly inside it.
    """
    nodes = radial_nodes(parent) if isinstance(parent, HydrogenState) else sorted(parent)
    points = [0.0, *nodes, UNBOUNDED]
    out = []
    for i, j in itertools.combinations(range(len(points)), 2):
        out.append((ConfinementGeometry(points[i], points[j]), j - i - 1))
    return out


def free_state_energy(model, n, ell, spec=None):
    """Energy of the free ``(n, l)`` state under ``model``."""
    if model.is_coulomb:
        return free_energy(HydrogenState(n, ell, model.z))
    spec = GridSpec() if spec is None else spec
    solution = _free_solution(model, n, ell, spec)
    return solution.energy


def _free_solution(model, n, ell, spec):
    index = n - ell - 1
    if index < 0:
        raise ValueError(f"no state n={n}, l={ell}")
    spectrum = solve_radial(ConfinementGeometry(), model, ell, index + 1, spec)
    if len(spectrum) <= index or spectrum.energies[index] >= 0.0:
        raise UnboundStateError(
            f"state {state_label(index, ell)} is not bound for {model}"
        )
    return spectrum[index]


def find_nodes_numeric(model, n, ell=0, spec=None, xtol=1e-10):
    """Radial nodes of a free state by root finding on the solved ``u(r)``.

    Sign changes of ``u`` on the grid bracket each node; each bracket is
    refined with Brent's method on the spectral interpolant.
    """
    spec = GridSpec() if spec is None else spec
    solution = _free_solution(model, n, ell, spec)
    u = solution.u_values
    r = solution.radii
    floor = 1e-7 * np.abs(u).max()
    # stop before the exponential tail, where u is numerically zero
    alive = np.nonzero(np.abs(u) > floor)[0]
    u, r = u[: alive[-1] + 1], r[: alive[-1] + 1]
    f = solution.interpolant()
    nodes = []
    for i in np.nonzero(u[1:] * u[:-1] < 0.0)[0]:
        nodes.append(float(brentq(f, r[i], r[i + 1], xtol=xtol, rtol=1e-14)))
    if len(nodes) != n - ell - 1:
        raise AtlasError(f"found {len(nodes)} nodes for {state_label(n - ell - 1, ell)}")
    return nodes


@dataclass(frozen=True)
class AtlasRow:
    """One node-anchored confined state.

    ``confined_label`` is ``(state_index, ell)`` inside the shell;
    ``parent_free_state`` is the free ``(n, ell)`` whose nodes fix the walls.
    """

    confined_label: tuple
    geometry: ConfinementGeometry
    energy: float
    parent_free_state: tuple
    regime: Regime
    free_energy: float
    serial: str = ""
    alpha1: float | None = None
    s_r: float | None = None

    @property
    def label(self):
        return state_label(*self.confined_label)

    @property
    def parent_label(self):
        n, ell = self.parent_free_state
        return state_label(n - ell - 1, ell)

    @property
    def n_nodes(self):
        return self.confined_label[0]


def enumerate_atlas(n, model=None, spec=None, ells=None, with_alpha=False,
                    with_entropy=False, tolerance=ENERGY_MATCH):
    """Every confined state degenerate with free level ``n``.

    Parameters
    ----------
    n : int
        Principal quantum number of the free level.
    model : PotentialModel, optional
        Coulomb by default.  Screened models take their nodes from
        :func:`find_nodes_numeric`.
    spec : GridSpec, optional
        Grid for all solves; unbounded outer edges sit at its truncation
        radius (200 bohr by default).
    ells : iterable of int, optional
        Orbital channels to include.  Defaults to ``0..n-1`` for Coulomb and
        ``(0,)`` for screened models, whose free levels are not
        ``l``-degenerate.
    with_alpha, with_entropy : bool
        Also fill the dipole polarizability and position-space Shannon
        entropy columns.

    Raises
    ------
    AtlasError
        When a confined energy differs from the free energy by more than
        ``tolerance``.
    """
    model = coulomb() if model is None else model
    spec = GridSpec(r_max_truncation=ATLAS_TRUNCATION) if spec is None else spec
    if ells is None:
        ells = range(n) if model.is_coulomb else (0,)
    rows = []
    for ell in ells:
        if not 0 <= ell < n:
            raise ValueError(f"ell={ell} outside 0..{n - 1}")
        target = free_state_energy(model, n, ell, spec)
        if model.is_coulomb:
            nodes = radial_nodes(HydrogenState(n, ell, model.z))
        else:
            nodes = find_nodes_numeric(model, n, ell, spec)
        for geometry, inside in node_geometries(nodes):
            solution = solve_radial(geometry, model, ell, inside + 1, spec)[inside]
            if abs(solution.energy - target) > tolerance:
                raise AtlasError(
                    f"{state_label(inside, ell)} in {geometry} has E={solution.energy:.10f},"
                    f" expected {target:.10f}",
                    geometry,
                )
            row = AtlasRow((inside, ell), geometry, solution.energy, (n, ell),
                           classify(geometry), target)
            if with_alpha:
                row = replace(row, alpha1=polarizability(1, (inside, ell), geometry, model, spec).total)
            if with_entropy:
                row = replace(row, s_r=shannon_entropy(solution)[2])
            rows.append(row)
    rows.sort(key=lambda r: (r.confined_label[1], r.n_nodes, r.geometry.r_inner))
    letters = string.ascii_lowercase
    for i, row in enumerate(rows):
        prefix = "" if model.is_coulomb else str(n)
        rows[i] = replace(row, serial=prefix + (letters[i] if i < 26 else f"z{i}"))
    return rows

