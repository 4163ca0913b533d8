"""Audit of the printed free-hydrogen oscillator-strength formulas.

Every printed channel in :data:`shellconf.hydrogen.CHANNELS` is evaluated as
printed and compared with the numerical solver on free-atom spectra.  A
channel whose printed value misses the numerical one by more than
``ERRATA_THRESHOLD`` (relative) for any final ``n`` is listed in the
known-errata report.  The exact rational result from
:func:`shellconf.hydrogen.exact_oscillator_strength` is carried alongside so
that each erratum can be characterized (for instance a constant or an
``n**2`` misprinted factor).

Two further audits are provided: the printed bound-polarizability partial
sums against exact sums over the same final states, and the printed powers
of ``Z`` against the scaling measured with the solver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .gps import GridSpec, solve_radial
from .hydrogen import (
    CHANNELS,
    AnalyticChannel,
    HydrogenState,
    analytic_alpha_bound,
    analytic_f_exact,
    exact_alpha_term,
    exact_oscillator_strength,
)
from .potentials import ConfinementGeometry, coulomb
from .transitions import oscillator_strength

__all__ = [
    "AUDIT_SPEC",
    "ERRATA_THRESHOLD",
    "FormulaCheck",
    "ChannelAudit",
    "audit_channel",
    "audit_f_formulas",
    "known_errata",
    "AlphaSeriesAudit",
    "audit_alpha_series",
    "ZScalingAudit",
    "audit_z_scaling",
    "five_g_sign_check",
    "errata_report",
]

# Reaching 1e-6 relative accuracy for final n up to 12 needs an outer edge far
# beyond the n = 12 density (<r> = 216 bohr) and a map that spreads the
# nodes over that range.
AUDIT_SPEC = GridSpec(n_points=400, map_scale=40.0, r_max_truncation=1200.0)
ERRATA_THRESHOLD = 1e-4
N_FINAL_MAX = 12


@dataclass(frozen=True)
class FormulaCheck:
    n_final: int
    printed: float
    numeric: float
    exact: Fraction

    @property
    def rel_error(self):
        """``|printed - numeric| / |numeric|``."""
        if self.numeric == 0.0:
            return 0.0 if self.printed == 0.0 else math.inf
        return abs(self.printed - self.numeric) / abs(self.numeric)

    @property
    def numeric_error(self):
        """Solver error against the exact rational value."""
        exact = float(self.exact)
        return 0.0 if exact == 0.0 else abs(self.numeric - exact) / abs(exact)

    @property
    def printed_over_exact(self):
        return None if self.exact == 0 else Fraction(self.printed) / self.exact


@dataclass(frozen=True)
class ChannelAudit:
    channel: AnalyticChannel
    checks: tuple
    threshold: float = ERRATA_THRESHOLD

    @property
    def name(self):
        return self.channel.name

    @property
    def max_rel_error(self):
        return max(c.rel_error for c in self.checks)

    @property
    def flagged(self):
        return self.max_rel_error > self.threshold

    @property
    def failing(self):
        return [c.n_final for c in self.checks if c.rel_error > self.threshold]

    def pattern(self):
        """Describe ``printed / exact`` across the failing final states."""
        ratios = []
        for c in self.checks:
            if c.rel_error > self.threshold and c.exact != 0:
                ratios.append((c.n_final, Fraction(analytic_f_exact(self.channel, c.n_final)) / c.exact))
        if not ratios:
            return "agrees"
        values = {r for _, r in ratios}
        if len(values) == 1:
            return f"constant factor {values.pop()}"
        if all(r == n * n for n, r in ratios):
            return "extra factor n**2"
        if all(r == Fraction(1, n * n) for n, r in ratios):
            return "missing factor n**2"
        return "irregular ratio " + ", ".join(f"n={n}: {float(r):.6g}" for n, r in ratios[:4])


def _final_ns(ch: AnalyticChannel, n_max):
    return [n for n in range(max(2, ch.final_ell + 1), n_max + 1) if n != ch.excluded]


def audit_channel(ch: AnalyticChannel, spec=AUDIT_SPEC, n_max=N_FINAL_MAX, spectra=None):
    """Compare one printed channel with the solver for ``2 <= n_final <= n_max``."""
    spectra = {} if spectra is None else spectra
    model = coulomb()
    geometry = ConfinementGeometry()

    def spectrum(ell):
        if ell not in spectra:
            spectra[ell] = solve_radial(geometry, model, ell, None, spec)
        return spectra[ell]

    initial = ch.initial_state
    start = spectrum(initial.ell)[initial.n_nodes]
    checks = []
    for n in _final_ns(ch, n_max):
        final = HydrogenState(n, ch.final_ell)
        numeric = oscillator_strength(ch.k, start, spectrum(ch.final_ell)[final.n_nodes]).f_value
        printed = float(analytic_f_exact(ch, n))
        checks.append(FormulaCheck(n, printed, numeric, exact_oscillator_strength(ch.k, initial, final)))
    return ChannelAudit(ch, tuple(checks))


def audit_f_formulas(spec=AUDIT_SPEC, n_max=N_FINAL_MAX):
    """Audit every printed channel; spectra are shared between channels."""
    spectra = {}
    return [audit_channel(ch, spec, n_max, spectra) for ch in CHANNELS.values()]


def known_errata(audits=None):
    """The flagged channels only."""
    audits = audit_f_formulas() if audits is None else audits
    return [a for a in audits if a.flagged]


@dataclass(frozen=True)
class AlphaSeriesAudit:
    """Printed bound-polarizability partial sum against the exact one.

    ``exact`` sums ``f / dE**2`` over every physical final state with
    ``n <= n_max`` (``n > l'``, ``n`` not the initial level), whatever the
    printed lower limit says.
    """

    channel: AnalyticChannel
    n_max: int
    printed: float
    exact: float
    term_mismatches: tuple = field(default_factory=tuple)

    @property
    def rel_error(self):
        return abs(self.printed - self.exact) / abs(self.exact)

    @property
    def flagged(self):
        return self.rel_error > ERRATA_THRESHOLD


def audit_alpha_series(n_max=N_FINAL_MAX):
    out = []
    for ch in CHANNELS.values():
        initial = ch.initial_state
        exact = Fraction(0)
        mismatched = []
        for n in range(ch.final_ell + 1, n_max + 1):
            if n == initial.n:
                continue
            term = exact_alpha_term(ch.k, initial, HydrogenState(n, ch.final_ell))
            exact += term
            in_range = n >= ch.alpha_start
            printed_term = Fraction(0)
            if in_range:
                try:
                    printed_term = ch.alpha_prefactor * ch.alpha_body(n)
                except ZeroDivisionError:
                    printed_term = None
            if printed_term != term:
                mismatched.append(n)
        out.append(AlphaSeriesAudit(ch, n_max, analytic_alpha_bound(ch, n_max), float(exact),
                                    tuple(mismatched)))
    return out


@dataclass(frozen=True)
class ZScalingAudit:
    """Printed ``Z`` exponent of ``f`` against the solver's measured one."""

    channel: AnalyticChannel
    printed_exponent: int
    measured_exponent: float

    @property
    def expected_exponent(self):
        # dE scales as Z**2 and <r^k> as Z**-k
        return 2 - 2 * self.channel.k

    @property
    def consistent(self):
        return abs(self.printed_exponent - self.measured_exponent) < 1e-3


def audit_z_scaling(z=2.0, spec=GridSpec(), n_final=None):
    """Measure the ``Z`` exponent of each channel from two solver runs.

    The grid scales with ``1/z`` so that both runs see the same reduced
    problem.
    """
    out = []
    for ch in CHANNELS.values():
        initial = ch.initial_state
        n = n_final or next(n for n in _final_ns(ch, N_FINAL_MAX) if n > initial.n)
        values = []
        for charge in (1.0, z):
            scaled = GridSpec(spec.n_points, spec.map_scale / charge, spec.r_max_truncation / charge)
            model = coulomb(charge)
            a = solve_radial(ConfinementGeometry(), model, initial.ell, None, scaled)[initial.n_nodes]
            b = solve_radial(ConfinementGeometry(), model, ch.final_ell, None, scaled)[n - ch.final_ell - 1]
            values.append(oscillator_strength(ch.k, a, b).f_value)
        measured = math.log(values[1] / values[0]) / math.log(z)
        out.append(ZScalingAudit(ch, -ch.f_zpow, measured))
    return out


def five_g_sign_check(n_max=N_FINAL_MAX):
    """Test both printed signs of the constant in the 5g -> ns polynomial.

    Returns a mapping ``sign -> list of printed/exact ratios`` built from the
    f-formula body with the polynomial constant taken as ``+1743750`` (as in
    the f line) or ``-1743750`` (as in the polarizability line).
    """
    ch = CHANNELS["f4:5g->ns"]
    initial = ch.initial_state
    result = {}
    for sign in (+1, -1):
        ratios = []
        for n in range(1, n_max + 1):
            if n == initial.n:
                continue
            poly = 187 * n**6 - 9350 * n**4 + 204625 * n**2 + sign * 1743750
            printed = ch.f_prefactor * n**19 * poly**2 * Fraction(n - 5) ** (2 * n - 17) / Fraction(n + 5) ** (2 * n + 17)
            exact = exact_oscillator_strength(4, initial, HydrogenState(n, 0))
            ratios.append(printed / exact)
        result["+" if sign > 0 else "-"] = ratios
    return result


def errata_report(audits=None, alpha_audits=None, z_audits=None):
    """Plain-text known-errata report."""
    audits = audit_f_formulas() if audits is None else audits
    lines = ["# Known errata in the printed free-hydrogen formulas", ""]
    lines.append(f"oscillator strengths (threshold {ERRATA_THRESHOLD:g} relative, n_final <= {N_FINAL_MAX}):")
    for a in audits:
        state = "ERRATUM" if a.flagged else "ok"
        lines.append(
            f"  {a.name:<12} {a.channel.f_equation:<24} {state:<8} max rel. error {a.max_rel_error:.3e}"
            + (f"; {a.pattern()}" if a.flagged else "")
        )
    if alpha_audits is not None:
        lines += ["", f"bound polarizability partial sums (n_max = {N_FINAL_MAX}):"]
        for s in alpha_audits:
            state = "ERRATUM" if s.flagged else "ok"
            lines.append(
                f"  {s.channel.name:<12} printed {s.printed:.10g} exact {s.exact:.10g} {state}"
                + (f"; terms differ at n={list(s.term_mismatches)}" if s.term_mismatches else "")
            )
    if z_audits is not None:
        lines += ["", "charge scaling of f (exponent of Z):"]
        for z in z_audits:
            lines.append(
                f"  {z.channel.name:<12} printed {z.printed_exponent:+d} measured {z.measured_exponent:+.4f}"
                f" expected {z.expected_exponent:+d}"
            )
    return "\n".join(lines)
