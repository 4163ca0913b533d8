"""Static multipole polarizabilities by sum over the discrete pseudospectrum.

    alpha^(k) = sum_{l'} sum_n f^(k)_{n <- i} / (E_n - E_i)^2

All eigenpairs of the box-discretized Hamiltonian enter, so for unbounded
shells the positive-energy pseudostates stand in for the continuum.  Pairs
with ``|dE|`` below ``degeneracy_floor`` (including the initial state itself)
are dropped and counted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .angular import selection_final_ells
from .gps import SPECTROSCOPIC, GridSpec, parse_state_label, solve_radial, state_label
from .potentials import ConfinementGeometry, coulomb
from .transitions import strengths_to_spectrum

__all__ = [
    "DEGENERACY_FLOOR",
    "MultipoleResponse",
    "ChannelTerm",
    "channel_decomposition",
    "polarizability",
    "ScanRow",
    "negative_polarizability_scan",
    "resolve_state",
]

DEGENERACY_FLOOR = 1e-9


def resolve_state(state):
    """Accept ``'2p'``, ``(state_index, ell)`` or a RadialSolution-like object."""
    if isinstance(state, str):
        return parse_state_label(state)
    if hasattr(state, "state_index"):
        return state.state_index, state.ell
    index, ell = state
    return int(index), int(ell)


@dataclass(frozen=True)
class MultipoleResponse:
    """Polarizability of one state with its per-channel split.

    ``per_channel`` maps each final ``l'`` to its contribution; ``total`` is
    their sum.  ``n_excluded`` counts the pairs dropped by the degeneracy
    floor; the initial state itself is one of them whenever ``l'`` can
    equal ``l``.
    """

    k: int
    state: tuple
    geometry: ConfinementGeometry
    per_channel: dict = field(default_factory=dict)
    total: float = 0.0
    n_pseudostates_used: int = 0
    n_excluded: int = 0
    truncation_radius: float | None = None
    energy: float = float("nan")

    @property
    def label(self):
        return state_label(*self.state)

    @property
    def negative(self):
        return self.total < 0.0


class ChannelTerm(NamedTuple):
    final_ell: int
    letter: str
    notation: str


def channel_decomposition(k, ell):
    """Final-``l'`` channels of ``alpha^(k)`` for an initial ``l``.

    Each term is labelled the way the channel sums are usually written,
    e.g. ``alpha^(1)_{nl}(l-1)`` for the ``l' = l - 1`` branch.
    """
    terms = []
    for lp in selection_final_ells(k, ell):
        shift = lp - ell
        rel = "l" if shift == 0 else f"l{shift:+d}"
        terms.append(ChannelTerm(lp, SPECTROSCOPIC[lp], f"alpha^({k})_{{nl}}({rel})"))
    return terms


def polarizability(k, initial, geometry, model=None, spec=None,
                   degeneracy_floor=DEGENERACY_FLOOR) -> MultipoleResponse:
    """Multipole polarizability ``alpha^(k)`` of ``initial`` in ``geometry``.

    Parameters
    ----------
    k : int
        Multipole order (1 dipole, 2 quadrupole, ...).
    initial : str or tuple
        State label such as ``'2s'`` or ``(state_index, ell)``.
    geometry : ConfinementGeometry
    model : PotentialModel, optional
        Defaults to hydrogen (``Z = 1``).
    spec : GridSpec, optional

    Raises
    ------
    ValueError
        If the state index is beyond the computed spectrum.
    """
    model = coulomb() if model is None else model
    spec = GridSpec() if spec is None else spec
    index, ell = resolve_state(initial)
    base = solve_radial(geometry, model, ell, None, spec)
    if index >= len(base):
        raise ValueError(f"state {state_label(index, ell)} not found in a spectrum of {len(base)}")
    start = base[index]
    per_channel = {}
    used = excluded = 0
    for lp in selection_final_ells(k, ell):
        spectrum = base if lp == ell else solve_radial(geometry, model, lp, None, spec)
        delta, f = strengths_to_spectrum(k, start, spectrum)
        keep = np.abs(delta) >= degeneracy_floor
        excluded += int(np.count_nonzero(~keep))
        used += int(np.count_nonzero(keep))
        per_channel[lp] = float(np.sum(f[keep] / delta[keep] ** 2))
    return MultipoleResponse(
        k=int(k),
        state=(index, ell),
        geometry=geometry,
        per_channel=per_channel,
        total=float(sum(per_channel.values())),
        n_pseudostates_used=used,
        n_excluded=excluded,
        truncation_radius=None if geometry.bounded else spec.r_max_truncation,
        energy=start.energy,
    )


@dataclass(frozen=True)
class ScanRow:
    geometry: ConfinementGeometry
    state: str
    alpha: float
    sign: str


def negative_polarizability_scan(states, geometries, model=None, spec=None, k=1):
    """Tabulate ``alpha^(k)`` over geometries and flag its sign.

    Rows are ordered by geometry ``(r_inner, r_outer)`` and then by the
    given state order, independent of input ordering of the geometries.
    """
    def order(g):
        return (g.r_inner, g.r_outer if g.bounded else float("inf"))

    rows = []
    for geo in sorted(geometries, key=order):
        for st in states:
            resp = polarizability(k, st, geo, model, spec)
            sign = "negative" if resp.total < 0 else "positive"
            rows.append(ScanRow(geo, resp.label, resp.total, sign))
    return rows
