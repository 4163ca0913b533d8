"""Free hydrogenic atom: exact reference values.

Two independent routes live here:

* exact rational arithmetic on the Laguerre-polynomial form of ``R_nl``
  (energies, nodes, ``<r^p>``, radial integrals, oscillator strengths);
* the closed-form oscillator-strength and bound-polarizability series printed
  for the ``1s, 2p, 3d, 4f, 5g`` initial states (``CHANNELS``), transcribed
  as printed, including their explicit powers of ``Z``.

The printed formulas are audited against the numerical solver in
:mod:`shellconf.errata`; several carry misprints and are kept verbatim on
purpose so the audit can report them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np
from scipy.optimize import bisect

from .angular import selection_final_ells, wigner3j_zero_sq
from .gps import SPECTROSCOPIC, parse_state_label, state_label

__all__ = [
    "HydrogenState",
    "energy",
    "radial_nodes",
    "radial_wavefunction",
    "expectation_r_power",
    "radial_integral_sq",
    "exact_oscillator_strength",
    "exact_alpha_term",
    "AnalyticChannel",
    "CHANNELS",
    "channel",
    "analytic_f",
    "analytic_f_exact",
    "analytic_alpha_bound",
    "analytic_alpha_term",
]


@dataclass(frozen=True)
class HydrogenState:
    n: int
    ell: int = 0
    z: float = 1.0

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.ell <= self.n - 1:
            raise ValueError(f"invalid hydrogenic state n={self.n}, l={self.ell}")
        if not self.z > 0:
            raise ValueError("nuclear charge must be positive")

    @classmethod
    def from_label(cls, label, z=1.0):
        index, ell = parse_state_label(label)
        return cls(index + ell + 1, ell, z)

    @property
    def label(self):
        return state_label(self.n - self.ell - 1, self.ell)

    @property
    def n_nodes(self):
        return self.n - self.ell - 1


def _zfrac(z):
    return Fraction(z) if not isinstance(z, Fraction) else z


def energy(state: HydrogenState) -> float:
    return -state.z**2 / (2.0 * state.n**2)


def _laguerre_coeffs(state):
    """Coefficients ``c_i`` of ``L_{n-l-1}^{(2l+1)}(x) = sum c_i x^i``."""
    m, a = state.n - state.ell - 1, 2 * state.ell + 1
    return [Fraction((-1) ** i * comb(m + a, m - i), factorial(i)) for i in range(m + 1)]


def _norm_sq(state, z):
    n, ell = state.n, state.ell
    return (2 * z / n) ** 3 * Fraction(factorial(n - ell - 1), 2 * n * factorial(n + ell))


def radial_nodes(state: HydrogenState, xtol=1e-12):
    """Positive zeros of ``R_nl``, by bisection on the Laguerre factor."""
    coeffs = [float(c) for c in _laguerre_coeffs(state)]
    if len(coeffs) == 1:
        return []
    poly = np.polynomial.Polynomial(coeffs)
    m = len(coeffs) - 1
    # all zeros of L_m^a lie below 2m + a + 2 + sqrt(...) < 4m + 2a + 4
    upper = 4.0 * m + 2.0 * (2 * state.ell + 1) + 4.0
    xs = np.linspace(0.0, upper, 4000 * m + 1)
    vals = poly(xs)
    roots = list(xs[1:][vals[1:] == 0.0])
    for i in np.nonzero(vals[1:] * vals[:-1] < 0.0)[0]:
        roots.append(bisect(poly, xs[i], xs[i + 1], xtol=xtol, rtol=1e-15, maxiter=200))
    roots.sort()
    if len(roots) != m:
        raise RuntimeError(f"found {len(roots)} of {m} nodes for {state}")
    scale = state.n / (2.0 * state.z)
    return [float(scale * x) for x in roots]


def radial_wavefunction(state: HydrogenState, r):
    """Normalized ``R_nl(r)`` (``int R^2 r^2 dr = 1``)."""
    r = np.asarray(r, dtype=float)
    rho = 2.0 * state.z * r / state.n
    poly = np.polynomial.Polynomial([float(c) for c in _laguerre_coeffs(state)])
    norm = math.sqrt(float(_norm_sq(state, _zfrac(state.z))))
    return norm * rho**state.ell * np.exp(-rho / 2.0) * poly(rho)


def _radial_moment(a, b, power, z):
    """Exact ``N_a N_b``-free sum for ``int R_a R_b r^(power+2) dr``."""
    ca, cb = _laguerre_coeffs(a), _laguerre_coeffs(b)
    sa, sb = 2 * z / a.n, 2 * z / b.n
    decay = (sa + sb) / 2
    total = Fraction(0)
    for i, ci in enumerate(ca):
        for j, cj in enumerate(cb):
            q = a.ell + b.ell + i + j + power + 2
            if q < 0:
                raise ValueError("divergent radial moment")
            total += ci * cj * sa ** (i + a.ell) * sb ** (j + b.ell) * factorial(q) / decay ** (q + 1)
    return total


def expectation_r_power(state: HydrogenState, power: int) -> float:
    """Exact ``<r^power>`` for ``power >= -2``."""
    if power < -2 or int(power) != power:
        raise ValueError("power must be an integer >= -2")
    z = _zfrac(state.z)
    return float(_norm_sq(state, z) * _radial_moment(state, state, int(power), z))


def radial_integral_sq(a: HydrogenState, b: HydrogenState, k: int) -> Fraction:
    """Exact ``|<R_a| r^k |R_b>|^2`` (the integral itself carries square roots)."""
    if a.z != b.z:
        raise ValueError("states must share the nuclear charge")
    z = _zfrac(a.z)
    return _norm_sq(a, z) * _norm_sq(b, z) * _radial_moment(a, b, k, z) ** 2


def exact_oscillator_strength(k, initial: HydrogenState, final: HydrogenState) -> Fraction:
    """Exact ``f^(k)`` between free hydrogenic states."""
    z = _zfrac(initial.z)
    delta = z**2 * (Fraction(1, 2 * initial.n**2) - Fraction(1, 2 * final.n**2))
    angular = wigner3j_zero_sq(final.ell, k, initial.ell)
    return 2 * Fraction(2 * final.ell + 1, 2 * k + 1) * delta * radial_integral_sq(initial, final, k) * angular


def exact_alpha_term(k, initial: HydrogenState, final: HydrogenState) -> Fraction:
    """Exact ``f / dE^2`` contribution of one final state."""
    z = _zfrac(initial.z)
    delta = z**2 * (Fraction(1, 2 * initial.n**2) - Fraction(1, 2 * final.n**2))
    if delta == 0:
        raise ZeroDivisionError("degenerate final state")
    return exact_oscillator_strength(k, initial, final) / delta**2


def _pw(base, exponent):
    if base == 0 and exponent < 0:
        raise ZeroDivisionError
    return Fraction(base) ** exponent


@dataclass(frozen=True)
class AnalyticChannel:
    """A printed closed form for ``f^(k)`` (initial -> n final_ell) and its
    bound-polarizability series.

    ``f_body(n)`` / ``alpha_body(j)`` are the printed expressions at ``Z = 1``
    without the prefactor; the printed ``Z`` dependence is ``Z**-f_zpow`` and
    ``Z**-alpha_zpow``.  ``alpha_start`` is the printed lower summation limit.
    """

    k: int
    initial: str
    final_ell: int
    f_equation: str
    f_prefactor: Fraction
    f_zpow: int
    f_body: object
    alpha_equation: str
    alpha_prefactor: Fraction
    alpha_zpow: int
    alpha_body: object
    alpha_start: int

    def __post_init__(self):
        _, ell = parse_state_label(self.initial)
        if self.final_ell not in selection_final_ells(self.k, ell):
            raise ValueError(f"channel {self.name} violates the selection rule")

    @property
    def initial_state(self):
        return HydrogenState.from_label(self.initial)

    @property
    def name(self):
        return f"f{self.k}:{self.initial}->n{SPECTROSCOPIC[self.final_ell]}"

    @property
    def excluded(self):
        """Final ``n`` equal to the initial one (zero transition energy)."""
        return self.initial_state.n


def _ch(k, initial, final_ell, f_eq, f_pre, f_zpow, f_body, a_eq, a_pre, a_zpow, a_body, a_start):
    return AnalyticChannel(k, initial, final_ell, f_eq, Fraction(f_pre), f_zpow, f_body,
                           a_eq, Fraction(a_pre), a_zpow, a_body, a_start)


F = Fraction
CHANNELS = {
    c.name: c
    for c in [
        # dipole
        _ch(1, "1s", 1, "dipole f, line 1", F(2**8, 3), 7,
            lambda n: n**5 * _pw(n - 1, 2 * n - 4) / _pw(n + 1, 2 * n + 4),
            "dipole alpha, line 1", F(2**10, 3), 9,
            lambda j: j**9 * _pw(j - 1, 2 * j - 6) / _pw(j + 1, 2 * j + 6), 2),
        _ch(1, "2p", 0, "dipole f, line 2", F(2**13, 27), 7,
            lambda n: n**7 * _pw(n - 2, 2 * n - 5) / _pw(n + 2, 2 * n + 5),
            "dipole alpha, line 2", F(2**19, 27), 9,
            lambda j: j**11 * _pw(j - 2, 2 * j - 7) / _pw(j + 2, 2 * j + 7), 1),
        # quadrupole
        _ch(2, "1s", 2, "quadrupole f, line 1", F(2**12, 5), 9,
            lambda n: n**7 * (n**2 - 4) * _pw(n - 1, 2 * n - 6) / _pw(n + 1, 2 * n + 6),
            "quadrupole alpha, line 1", F(2**12, 5), 11,
            lambda j: j**11 * (j**2 - 4) * _pw(j - 1, 2 * j - 8) / _pw(j + 1, 2 * j + 8), 3),
        _ch(2, "2p", 1, "quadrupole f, line 2", F(2**22, 75), 9,
            lambda n: n**9 * (n**2 - 1) * _pw(n - 2, 2 * n - 7) / _pw(n + 2, 2 * n + 7),
            "quadrupole alpha, line 2", F(2**28, 75), 11,
            lambda j: j**13 * (j**2 - 1) * _pw(j - 2, 2 * j - 8) / _pw(j + 2, 2 * j + 8), 3),
        _ch(2, "3d", 0, "quadrupole f, line 3", F(2**17 * 3**7, 125), 9,
            lambda n: n**13 * (n**2 - 6) ** 2 * _pw(n - 3, 2 * n - 9) / _pw(n + 3, 2 * n + 9),
            "quadrupole alpha, line 3", F(2**19 * 3**11, 5**3), 11,
            lambda j: j**17 * (j**2 - 6) ** 2 * _pw(j - 3, 2 * j - 11) / _pw(j + 3, 2 * j + 11), 1),
        # octupole
        _ch(3, "1s", 3, "octupole f, line 1", F(9 * 2**12, 7), 11,
            lambda n: n**9 * (n**2 - 4) * (n**2 - 9) * _pw(n - 1, 2 * n - 8) / _pw(n + 1, 2 * n + 8),
            "octupole alpha, line 1", F(9 * 2**14, 7), 13,
            lambda j: j**13 * (j**2 - 4) * (j**2 - 9) * _pw(j - 1, 2 * j - 10) / _pw(j + 1, 2 * j + 10), 4),
        _ch(3, "2p", 2, "octupole f, line 2", F(2**27, 49), 11,
            lambda n: n**13 * (n**2 - 1) * (n**2 - 16) ** 2 * _pw(n - 2, 2 * n - 10) / _pw(n + 2, 2 * n + 10),
            "octupole alpha, line 2", F(2**33, 49), 13,
            lambda j: j**17 * (j**2 - 1) * (j**2 - 16) ** 2 * _pw(j - 2, 2 * j - 12) / _pw(j + 2, 2 * j + 12), 3),
        _ch(3, "3d", 1, "octupole f, line 3", F(2**18 * 3**13, 5**2 * 7**2), 11,
            lambda n: n**13 * (n**2 - 1) * (4 * n**2 - 9) ** 2 * _pw(n - 3, 2 * n - 12) / _pw(n + 3, 2 * n + 12),
            "octupole alpha, line 3", F(2**20 * 3**17, 5**2 * 7**2), 13,
            lambda j: j**17 * (j**2 - 1) * (4 * j**2 - 9) ** 2 * _pw(j - 3, 2 * j - 14) / _pw(j + 3, 2 * j + 14), 1),
        _ch(3, "4f", 0, "octupole f, line 4", F(2**34, 245), 11,
            lambda n: n**15 * (141 * n**4 - 3008 * n**2 + 18176) ** 2 * _pw(n - 4, 2 * n - 13) / _pw(n + 4, 2 * n + 13),
            "octupole alpha, line 4", F(2**44, 245), 13,
            lambda j: j**19 * (141 * j**4 - 3008 * j**2 + 18176) ** 2 * _pw(j - 4, 2 * j - 15) / _pw(j + 4, 2 * j + 15), 2),
        # hexadecapole
        _ch(4, "1s", 4, "hexadecapole f, line 1", F(2**18, 9), 13,
            lambda n: n**11 * (n**2 - 16) * (n**2 - 9) * (n**2 - 4) * _pw(n - 1, 2 * n - 10) / _pw(n + 1, 2 * n + 10),
            "hexadecapole alpha, line 1", F(2**20, 9), 15,
            lambda j: j**15 * (j**2 - 16) * (j**2 - 9) * (j**2 - 4) * _pw(j - 1, 2 * j - 12) / _pw(j + 1, 2 * j + 12), 5),
        _ch(4, "2p", 3, "hexadecapole f, line 2", F(2**33, 3**5), 13,
            lambda n: n**13 * (n**2 - 1) * (n**2 - 9) * (7 * n**2 + 68) ** 2 * _pw(n - 2, 2 * n - 12) / _pw(n + 2, 2 * n + 12),
            "hexadecapole alpha, line 2", F(2**39, 3**5), 15,
            lambda j: j**17 * (j**2 - 1) * (j**2 - 9) * (7 * j**2 + 68) ** 2 * _pw(j - 2, 2 * j - 14) / _pw(j + 2, 2 * j + 14), 4),
        _ch(4, "3d", 2, "hexadecapole f, line 3", F(2**20 * 3**15, 35), 13,
            lambda n: n**17 * (n**2 - 1) * (n**2 - 4) * (n**2 - 21) ** 2 * _pw(n - 3, 2 * n - 13) / _pw(n + 3, 2 * n + 13),
            "hexadecapole alpha, line 3", F(2**22 * 3**19, 35), 15,
            lambda j: j**21 * (j**2 - 1) * (j**2 - 4) * (j**2 - 21) ** 2 * _pw(j - 3, 2 * j - 13) / _pw(j + 3, 2 * j + 13), 3),
        _ch(4, "4f", 1, "hexadecapole f, line 4", F(2**43, 8505), 13,
            lambda n: n**17 * (n**2 - 1) * (31 * n**4 - 4768 * n**2 + 43776) ** 2 * _pw(n - 4, 2 * n - 15) / _pw(n + 4, 2 * n + 15),
            "hexadecapole alpha, line 4", F(2**53, 8505), 15,
            lambda j: j**13 * (31 * j**4 - 4768 * j**2 + 43776) ** 2 * _pw(j - 4, 2 * j - 13) / _pw(j + 4, 2 * j + 13), 2),
        _ch(4, "5g", 0, "hexadecapole f, line 5", F(2**21 * 5**11, 7 * 3**6), 13,
            lambda n: n**19 * (187 * n**6 - 9350 * n**4 + 204625 * n**2 + 1743750) ** 2 * _pw(n - 5, 2 * n - 17) / _pw(n + 5, 2 * n + 17),
            "hexadecapole alpha, line 5", F(2**27 * 5**19, 7 * 3**6), 15,
            lambda j: j**23 * (187 * j**6 - 9350 * j**4 + 204625 * j**2 - 1743750) ** 2 * _pw(j - 5, 2 * j - 19) / _pw(j + 5, 2 * j + 19), 1),
    ]
}
del F


def channel(k, initial, final_ell=None):
    """Look up a printed channel by multipole order and initial label."""
    matches = [
        c for c in CHANNELS.values()
        if c.k == k and c.initial == initial and (final_ell is None or c.final_ell == final_ell)
    ]
    if len(matches) != 1:
        raise KeyError(f"no unique printed channel for k={k}, initial={initial}, final_ell={final_ell}")
    return matches[0]


def analytic_f_exact(ch: AnalyticChannel, n_final: int, z=1) -> Fraction:
    """Printed closed form for ``f^(k)``, exact for rational ``z``."""
    if n_final < 1 or n_final == ch.excluded:
        raise ValueError(f"n_final={n_final} is excluded for {ch.name}")
    try:
        body = ch.f_body(n_final)
    except ZeroDivisionError:
        raise ValueError(f"{ch.name} is singular at n_final={n_final}") from None
    return ch.f_prefactor * body / _zfrac(z) ** ch.f_zpow


def analytic_f(ch: AnalyticChannel, n_final: int, z=1.0) -> float:
    return float(analytic_f_exact(ch, n_final, z))


def analytic_alpha_term(ch: AnalyticChannel, j: int, z=1) -> Fraction:
    """Term ``j`` of the printed bound-polarizability series."""
    if j == ch.excluded:
        raise ValueError(f"term j={j} is excluded for {ch.name}")
    return ch.alpha_prefactor * ch.alpha_body(j) / _zfrac(z) ** ch.alpha_zpow


def analytic_alpha_bound(ch: AnalyticChannel, n_max: int, z=1.0) -> float:
    """Partial sum of the printed series for ``alpha_start <= j <= n_max``.

    Singular terms (``j`` equal to the initial ``n``) are skipped.  The value
    is the bound-state contribution only, truncated at ``n_max``.
    """
    total = Fraction(0)
    for j in range(ch.alpha_start, n_max + 1):
        if j == ch.excluded:
            continue
        try:
            total += analytic_alpha_term(ch, j, z)
        except ZeroDivisionError:
            continue
    return float(total)
