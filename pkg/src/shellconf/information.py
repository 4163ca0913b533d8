"""Shannon entropy and Onicescu information energy in position and momentum space.

The momentum-space radial function is the order-``l`` spherical Bessel
transform of the position-space one,

    psi(p) = sqrt(2/pi) * int u(r) r j_l(p r) dr,

normalized so that ``int psi^2 p^2 dp = 1``.  Full three-dimensional measures
are split into a radial part and an angular part from ``|Y_lm|^2``:

* Shannon: ``S = S_radial + S_angular`` (for ``l = 0`` the angular part is
  ``ln 4 pi``);
* Onicescu: ``E = E_radial * E_angular`` (for ``l = 0`` the angular part is
  ``1 / 4 pi``).

The angular parts are the same in both spaces.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln, lpmv, roots_legendre, spherical_jn

from .gps import GridSpec, RadialSolution, parse_state_label, solve_radial
from .potentials import coulomb

__all__ = [
    "BBM_BOUND",
    "MomentumGridSpec",
    "MomentumWavefunction",
    "MomentumNormError",
    "momentum_transform",
    "bessel_transform",
    "angular_entropy",
    "angular_onicescu",
    "shannon_entropy",
    "onicescu_energy",
    "EntropyReport",
    "entropy_report",
]

BBM_BOUND = 3.0 * (1.0 + math.log(math.pi))
NORM_TOLERANCE = 1e-5
TAIL_NORM = 1e-24
_KERNEL_BLOCK = 4_000_000   # kernel entries evaluated at once
_PANEL_ORDER = 16
# a 16-point panel integrates j_l(p r) u(r) r to roundoff across three
# wavelengths of the largest momentum
_PANEL_WAVELENGTHS = 3.0


class MomentumNormError(RuntimeError):
    """The momentum grid missed more than the allowed share of the norm."""


@dataclass(frozen=True)
class MomentumGridSpec:
    """Momentum quadrature settings.

    ``p_max=None`` picks the cutoff from the large-``p`` tail of the
    transform, never below ``p_max_floor``.  ``n_points=None`` picks enough
    Gauss-Legendre points to resolve the oscillation set by the spatial
    extent of the state, never below ``n_points_floor``.
    """

    p_max: float | None = None
    n_points: int | None = None
    p_max_floor: float = 30.0
    n_points_floor: int = 400
    tail_tolerance: float = 1e-7

    def __post_init__(self):
        if self.p_max is not None and not self.p_max > 0:
            raise ValueError("p_max must be positive")
        if self.n_points is not None and self.n_points < 8:
            raise ValueError("n_points must be at least 8")


@dataclass(frozen=True, eq=False)
class MomentumWavefunction:
    """Radial momentum function on a Gauss-Legendre grid in ``[0, p_max]``."""

    ell: int
    momenta: np.ndarray
    values: np.ndarray
    weights: np.ndarray
    p_max: float

    @property
    def norm(self):
        return float(np.sum(self.weights * self.values**2 * self.momenta**2))

    @property
    def radial_density(self):
        return self.values**2


class _RadialSampler:
    """``u(r)`` resampled onto composite Gauss-Legendre panels in ``r``."""

    def __init__(self, solution: RadialSolution, panel_width):
        grid = solution.grid
        u_full = solution.u_full
        r_lo = grid.r_min
        if solution.geometry.bounded:
            r_hi = grid.r_max
        else:
            # drop the far tail once the norm left beyond a node is negligible;
            # the eigenvector noise floor out there would otherwise set the extent
            tail = np.cumsum((solution.weights * solution.u_values**2)[::-1])[::-1]
            alive = np.nonzero(tail > TAIL_NORM)[0]
            last = alive[-1] + 2 if alive.size else u_full.size - 1
            r_hi = float(grid.radii_full[min(last, u_full.size - 1)])
        n_panels = max(1, int(math.ceil((r_hi - r_lo) / panel_width)))
        edges = np.linspace(r_lo, r_hi, n_panels + 1)
        gx, gw = roots_legendre(_PANEL_ORDER)
        half = 0.5 * (edges[1:] - edges[:-1])[:, None]
        mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
        self.r = (mid + half * gx).ravel()
        self.w = (half * gw).ravel()
        self.u = solution.interpolant()(self.r)
        self.r_hi = r_hi


def _auto_p_max(solution, mspec):
    if mspec.p_max is not None:
        return float(mspec.p_max)
    # psi(p) ~ sqrt(2/pi) u'(wall) cos(...) / p^2 at large p, so the missed
    # norm beyond P is about (2/pi) * sum u'(wall)^2 / (6 P^3) with the
    # oscillation averaged to 1/2.
    left, right = solution.wall_slopes()
    slope_sq = right**2 + (left**2 if solution.geometry.r_inner > 0 else 0.0)
    tail = (2.0 / math.pi) * slope_sq / 6.0
    return max(mspec.p_max_floor, (tail / mspec.tail_tolerance) ** (1.0 / 3.0))


def bessel_transform(solution: RadialSolution, p, panel_width=0.2):
    """``psi(p)`` at arbitrary momenta by direct quadrature."""
    p = np.atleast_1d(np.asarray(p, dtype=float))
    sampler = _RadialSampler(solution, panel_width)
    return _transform(solution.ell, sampler, p)


def _transform(ell, sampler, p):
    weighted = sampler.w * sampler.u * sampler.r
    out = np.empty(p.size)
    step = max(1, _KERNEL_BLOCK // max(1, sampler.r.size))
    for start in range(0, p.size, step):
        block = p[start:start + step]
        out[start:start + step] = spherical_jn(ell, np.outer(block, sampler.r)) @ weighted
    return math.sqrt(2.0 / math.pi) * out


def momentum_transform(solution: RadialSolution, mspec: MomentumGridSpec | None = None,
                       check_norm=True) -> MomentumWavefunction:
    """Spherical Bessel transform of a solved state onto a momentum grid.

    Raises
    ------
    MomentumNormError
        If ``check_norm`` and the grid captures less than ``1 - 1e-5`` of
        the norm; a larger ``p_max`` is needed.
    """
    mspec = MomentumGridSpec() if mspec is None else mspec
    p_max = _auto_p_max(solution, mspec)
    sampler = _RadialSampler(solution, min(_PANEL_WAVELENGTHS * 2.0 * math.pi / p_max, 1.5))
    if mspec.n_points is not None:
        npp = int(mspec.n_points)
    else:
        npp = int(max(mspec.n_points_floor, p_max * sampler.r_hi / (2.0 * math.pi) * 12))
    gx, gw = roots_legendre(npp)
    p = 0.5 * p_max * (gx + 1.0)
    w = 0.5 * p_max * gw
    wf = MomentumWavefunction(solution.ell, p, _transform(solution.ell, sampler, p), w, p_max)
    if check_norm and wf.norm < 1.0 - NORM_TOLERANCE:
        raise MomentumNormError(
            f"momentum grid up to p_max={p_max:.4g} holds only {wf.norm:.8f} of the norm;"
            " increase p_max"
        )
    return wf


def _ylm_sq(ell, m):
    """``|Y_lm|^2`` as a function of ``mu = cos(theta)`` (phi already integrated)."""
    m = abs(m)
    if m > ell:
        raise ValueError(f"|m| must not exceed ell, got ell={ell}, m={m}")
    log_c = math.log((2 * ell + 1) / (4.0 * math.pi)) + gammaln(ell - m + 1) - gammaln(ell + m + 1)
    c = math.exp(log_c)
    return lambda mu: c * lpmv(m, ell, mu) ** 2


@functools.lru_cache(maxsize=128)
def angular_entropy(ell, m=0) -> float:
    """``-int |Y_lm|^2 ln |Y_lm|^2 dOmega``."""
    if ell == 0:
        return math.log(4.0 * math.pi)
    y = _ylm_sq(ell, m)

    def integrand(mu):
        v = y(mu)
        return -v * math.log(v) if v > 0.0 else 0.0

    # split at the zeros of P_l^m so each piece is smooth inside
    nodes = sorted(set(np.round(np.polynomial.legendre.legroots([0] * ell + [1]), 15)))
    breaks = [-1.0] + [float(b) for b in nodes] + [1.0] if m == 0 else [-1.0, 1.0]
    total = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        val, _ = quad(integrand, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)
        total += val
    return 2.0 * math.pi * total


@functools.lru_cache(maxsize=128)
def angular_onicescu(ell, m=0) -> float:
    """``int |Y_lm|^4 dOmega``."""
    if ell == 0:
        return 1.0 / (4.0 * math.pi)
    y = _ylm_sq(ell, m)
    gx, gw = roots_legendre(2 * ell + 4)
    return float(2.0 * math.pi * np.sum(gw * y(gx) ** 2))


def _radial_density(obj):
    if isinstance(obj, MomentumWavefunction):
        return obj.values**2, obj.weights * obj.momenta**2, obj.ell
    if isinstance(obj, RadialSolution):
        return (obj.u_values / obj.radii) ** 2, obj.weights * obj.radii**2, obj.ell
    raise TypeError(f"expected RadialSolution or MomentumWavefunction, got {type(obj).__name__}")


def shannon_entropy(obj, ell=None, m=0):
    """Shannon entropy of a position or momentum density.

    Returns
    -------
    (radial, angular, full) : tuple of float
        ``radial = -int rho ln(rho) x^2 dx`` with ``rho = |R|^2`` and
        ``full = radial + angular``.
    """
    rho, w, own_ell = _radial_density(obj)
    ell = own_ell if ell is None else ell
    safe = np.where(rho > 0.0, rho, 1.0)
    radial = float(-np.sum(w * rho * np.log(safe)))
    angular = angular_entropy(ell, m)
    return radial, angular, radial + angular


def onicescu_energy(obj, ell=None, m=0):
    """Onicescu information energy ``int rho^2``.

    Returns ``(radial, angular, full)`` with ``full = radial * angular``.
    """
    rho, w, own_ell = _radial_density(obj)
    ell = own_ell if ell is None else ell
    radial = float(np.sum(w * rho**2))
    angular = angular_onicescu(ell, m)
    return radial, angular, radial * angular


@dataclass(frozen=True)
class EntropyReport:
    """Full-space entropic measures of one state in both spaces."""

    label: str
    geometry: object
    s_r_radial: float
    s_p_radial: float
    s_r_full: float
    s_p_full: float
    s_total: float
    e_r_radial: float
    e_p_radial: float
    e_r_full: float
    e_p_full: float
    e_total: float
    angular_s: float
    angular_e: float
    energy: float
    p_max: float
    momentum_norm: float

    @property
    def satisfies_bbm(self):
        return self.s_total >= BBM_BOUND - 1e-9


def entropy_report(geometry, model=None, state="1s", spec=None, mspec=None, m=0) -> EntropyReport:
    """Shannon and Onicescu measures of ``state`` in both spaces."""
    model = coulomb() if model is None else model
    spec = GridSpec() if spec is None else spec
    index, ell = parse_state_label(state) if isinstance(state, str) else state
    solution = solve_radial(geometry, model, ell, index + 1, spec)[index]
    momentum = momentum_transform(solution, mspec)
    sr, ang_s, sr_full = shannon_entropy(solution, m=m)
    sp, _, sp_full = shannon_entropy(momentum, m=m)
    er, ang_e, er_full = onicescu_energy(solution, m=m)
    ep, _, ep_full = onicescu_energy(momentum, m=m)
    return EntropyReport(
        label=solution.label,
        geometry=geometry,
        s_r_radial=sr,
        s_p_radial=sp,
        s_r_full=sr_full,
        s_p_full=sp_full,
        s_total=sr_full + sp_full,
        e_r_radial=er,
        e_p_radial=ep,
        e_r_full=er_full,
        e_p_full=ep_full,
        e_total=er_full * ep_full,
        angular_s=ang_s,
        angular_e=ang_e,
        energy=solution.energy,
        p_max=momentum.p_max,
        momentum_norm=momentum.norm,
    )
