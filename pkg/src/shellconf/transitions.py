"""Multipole oscillator strengths between solved radial states.

For a ``2^k``-pole transition from ``(n, l)`` to ``(n', l')`` the m-summed
strength is

    f = 2 (2l'+1)/(2k+1) * dE * <r^k>^2 * (l' k l; 0 0 0)^2,

with ``dE = E' - E`` and ``<r^k> = int u u' r^k dr``.  Absorption
(``dE > 0``) gives ``f > 0`` and emission gives ``f < 0``.  No magnetic
quantum number appears anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angular import selection_final_ells, triangle_ok, wigner3j_zero_sq
from .gps import RadialSolution, Spectrum, solve_radial

__all__ = [
    "GridMismatchError",
    "TransitionRecord",
    "selection_final_ells",
    "wigner3j_zero_sq",
    "radial_matrix_element",
    "oscillator_strength",
    "strengths_to_spectrum",
    "sum_rule",
    "final_spectra",
]


class GridMismatchError(ValueError):
    """Two states were not solved on the same grid."""


@dataclass(frozen=True)
class TransitionRecord:
    """One computed multipole transition.

    ``initial`` and ``final`` are ``(state_index, ell)`` pairs.  ``allowed``
    is False when the selection rule forbids the transition, in which case
    ``f_value`` is exactly zero.
    """

    k: int
    initial: tuple
    final: tuple
    delta_e: float
    radial_element: float
    angular_factor: float
    f_value: float
    allowed: bool = True
    geometry: object = None
    model: object = None

    @property
    def status(self):
        return "allowed" if self.allowed else "forbidden"


def _check_same_grid(a, b):
    if a.model != b.model or (a.grid is not b.grid and a.grid.key != b.grid.key):
        raise GridMismatchError(
            f"states live on different grids/models: {a.grid.key} vs {b.grid.key}"
        )


def radial_matrix_element(a: RadialSolution, b: RadialSolution, k) -> float:
    """``int R_a r^k R_b r^2 dr`` by Lobatto quadrature on the shared grid."""
    _check_same_grid(a, b)
    return float(np.sum(a.weights * a.u_values * b.u_values * a.radii**k))


def oscillator_strength(k, initial: RadialSolution, final: RadialSolution) -> TransitionRecord:
    """Multipole oscillator strength ``f^(k)`` for ``initial -> final``."""
    if int(k) != k or k < 1:
        raise ValueError(f"multipole order must be a positive integer, got {k!r}")
    _check_same_grid(initial, final)
    delta = final.energy - initial.energy
    common = dict(
        k=int(k),
        initial=(initial.state_index, initial.ell),
        final=(final.state_index, final.ell),
        delta_e=delta,
        geometry=initial.geometry,
        model=initial.model,
    )
    angular = wigner3j_zero_sq(final.ell, k, initial.ell)
    if angular == 0:
        return TransitionRecord(radial_element=0.0, angular_factor=0.0, f_value=0.0,
                                allowed=False, **common)
    radial = radial_matrix_element(initial, final, k)
    f = 2.0 * (2 * final.ell + 1) / (2 * k + 1) * delta * radial**2 * float(angular)
    return TransitionRecord(radial_element=radial, angular_factor=float(angular),
                            f_value=f, **common)


def strengths_to_spectrum(k, initial: RadialSolution, spectrum: Spectrum):
    """Vectorized ``(dE, f)`` from ``initial`` to every state of ``spectrum``."""
    if spectrum.grid.key != initial.grid.key or spectrum.model != initial.model:
        raise GridMismatchError("spectrum and initial state use different grids/models")
    delta = spectrum.energies - initial.energy
    angular = float(wigner3j_zero_sq(spectrum.ell, k, initial.ell))
    radial = (initial.weights * initial.u_values * initial.radii**k) @ spectrum.u
    f = 2.0 * (2 * spectrum.ell + 1) / (2 * k + 1) * delta * radial**2 * angular
    return delta, f


def final_spectra(k, initial: RadialSolution):
    """Full pseudospectra for every ``l'`` reachable from ``initial``.

    The same geometry, model and grid as ``initial`` are reused, so all
    matrix elements share one quadrature.
    """
    spec = initial.grid.spec
    out = {}
    for lp in selection_final_ells(k, initial.ell):
        out[lp] = solve_radial(initial.geometry, initial.model, lp, None, spec)
    return out


def sum_rule(k, initial: RadialSolution, spectra=None):
    """Both sides of the multipole sum rule ``sum_n f_n = k <r^(2k-2)>``.

    ``spectra`` maps each allowed ``l'`` to a complete pseudospectrum on the
    initial state's grid; it is computed when omitted.  The right-hand side
    uses the same quadrature as the left.
    """
    if spectra is None:
        spectra = final_spectra(k, initial)
    missing = set(selection_final_ells(k, initial.ell)) - set(spectra)
    if missing:
        raise ValueError(f"spectra missing final channels l'={sorted(missing)}")
    lhs = 0.0
    for lp, spectrum in spectra.items():
        if not triangle_ok(lp, k, initial.ell):
            continue
        lhs += float(np.sum(strengths_to_spectrum(k, initial, spectrum)[1]))
    rhs = k * radial_matrix_element(initial, initial, 2 * k - 2)
    return lhs, rhs

