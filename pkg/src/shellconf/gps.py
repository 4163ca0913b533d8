"""Generalized pseudospectral solver for the confined radial equation.

The reduced radial function ``u(r) = r R(r)`` obeys

    -1/2 u'' + [l(l+1)/(2 r^2) + v(r)] u = E u,   u(r_inner) = u(r_outer) = 0.

The domain is mapped from ``x in [-1, 1]`` (linearly for a finite shell,
algebraically for an unbounded one) and ``u`` is expanded in the Lagrange
polynomials of the Gauss-Lobatto nodes.  Dropping the two endpoint nodes
imposes the Dirichlet walls.  The kinetic term is assembled in weak form with
Lobatto quadrature,

    K_ij = 1/2 sum_k w_k D_ki D_kj / r'(x_k),

and scaled by the diagonal mass ``m_i = w_i r'(x_i)``, which gives a real
symmetric matrix.  For the linear map this coincides with point collocation
of the second-derivative matrix.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import BarycentricInterpolator
from scipy.special import eval_legendre, roots_jacobi

from .potentials import ConfinementGeometry, PotentialModel, coulomb, evaluate

__all__ = [
    "GridSpec",
    "Grid",
    "RadialSolution",
    "Spectrum",
    "EigensolverError",
    "lobatto",
    "build_grid",
    "assemble_hamiltonian",
    "solve_radial",
    "quadrature_integral",
    "truncation_shift",
    "SPECTROSCOPIC",
    "state_label",
    "parse_state_label",
]

SPECTROSCOPIC = "spdfghiklmnoqrtuv"
MIN_WIDTH = 1e-8
SPURIOUS_FACTOR = 10.0


class EigensolverError(RuntimeError):
    """Raised when the dense eigensolver fails or returns a poor residual."""

    def __init__(self, message, residual=math.nan):
        super().__init__(f"{message} (residual norm {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class GridSpec:
    """Discretization parameters.

    ``map_scale`` and ``r_max_truncation`` only matter for unbounded shells:
    half of the nodes fall within ``map_scale`` of the inner edge and the
    outer edge is placed at ``r_max_truncation``.
    """

    n_points: int = 200
    map_scale: float = 1.0
    r_max_truncation: float = 200.0

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 16:
            raise ValueError(f"n_points must be an integer >= 16, got {self.n_points!r}")
        if not self.map_scale > 0:
            raise ValueError(f"map_scale must be positive, got {self.map_scale!r}")
        if not self.r_max_truncation > 0:
            raise ValueError(
                f"r_max_truncation must be positive, got {self.r_max_truncation!r}"
            )
        object.__setattr__(self, "n_points", int(self.n_points))


@functools.lru_cache(maxsize=32)
def lobatto(n_interior):
    """Gauss-Lobatto nodes, weights and differentiation matrix on [-1, 1].

    Returns ``n_interior + 2`` nodes including both endpoints.
    """
    order = n_interior + 1
    interior, _ = roots_jacobi(n_interior, 1.0, 1.0)
    x = np.concatenate(([-1.0], np.sort(interior), [1.0]))
    p = eval_legendre(order, x)
    w = 2.0 / (order * (order + 1) * p**2)
    diff = p[:, None] / p[None, :] / (x[:, None] - x[None, :] + np.eye(x.size))
    np.fill_diagonal(diff, 0.0)
    diff[0, 0] = -order * (order + 1) / 4.0
    diff[-1, -1] = order * (order + 1) / 4.0
    for arr in (x, w, diff):
        arr.setflags(write=False)
    return x, w, diff


@dataclass(frozen=True, eq=False)
class Grid:
    """Mapped Lobatto grid for one geometry.

    ``radii`` and ``weights`` refer to the interior (collocation) nodes;
    ``radii_full`` also carries the two wall positions.  ``diff`` is the
    differentiation matrix in the reference variable ``x`` and ``jacobian``
    is ``dr/dx`` at every node.
    """

    geometry: ConfinementGeometry
    spec: GridSpec
    x: np.ndarray
    radii_full: np.ndarray
    jacobian: np.ndarray
    lobatto_weights: np.ndarray
    diff: np.ndarray
    radii: np.ndarray = field(init=False)
    weights: np.ndarray = field(init=False)

    def __post_init__(self):
        radii = self.radii_full[1:-1]
        weights = (self.lobatto_weights * self.jacobian)[1:-1]
        weights.setflags(write=False)
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "weights", weights)

    @property
    def key(self):
        return (self.geometry, self.spec)

    @property
    def r_min(self):
        return float(self.radii_full[0])

    @property
    def r_max(self):
        return float(self.radii_full[-1])

    def to_reference(self, r):
        """Inverse map ``r -> x``."""
        r = np.asarray(r, dtype=float)
        geo = self.geometry
        if geo.bounded:
            return 2.0 * (r - geo.r_inner) / (geo.r_outer - geo.r_inner) - 1.0
        scale = self.spec.map_scale
        beta = _map_beta(geo, self.spec)
        s = r - geo.r_inner
        return (s * (1.0 + beta) - scale) / (s + scale)


def _map_beta(geometry, spec):
    return 2.0 * spec.map_scale / (spec.r_max_truncation - geometry.r_inner)


@functools.lru_cache(maxsize=256)
def build_grid(geometry: ConfinementGeometry, spec: GridSpec = GridSpec()) -> Grid:
    """Map the Lobatto nodes onto the shell."""
    if geometry.bounded:
        width = geometry.r_outer - geometry.r_inner
    else:
        width = spec.r_max_truncation - geometry.r_inner
    if width < MIN_WIDTH:
        raise ValueError(f"degenerate radial domain {geometry} (width {width:.3e})")
    x, w, diff = lobatto(spec.n_points)
    if geometry.bounded:
        r = geometry.r_inner + 0.5 * width * (1.0 + x)
        jac = np.full_like(x, 0.5 * width)
    else:
        scale = spec.map_scale
        beta = _map_beta(geometry, spec)
        r = geometry.r_inner + scale * (1.0 + x) / (1.0 - x + beta)
        r[-1] = spec.r_max_truncation
        jac = scale * (2.0 + beta) / (1.0 - x + beta) ** 2
    r[0] = geometry.r_inner
    for arr in (r, jac):
        arr.setflags(write=False)
    return Grid(geometry, spec, x, r, jac, w, diff)


def assemble_hamiltonian(geometry, model, ell, grid=None):
    """Symmetric discrete Hamiltonian on the interior nodes of ``grid``."""
    if grid is None:
        grid = build_grid(geometry)
    if grid.geometry != geometry:
        raise ValueError("grid was built for a different geometry")
    if int(ell) != ell or ell < 0:
        raise ValueError(f"ell must be a non-negative integer, got {ell!r}")
    d = grid.diff[:, 1:-1]
    kinetic = 0.5 * (d.T * (grid.lobatto_weights / grid.jacobian)) @ d
    mass = np.sqrt(grid.weights)
    h = kinetic / np.outer(mass, mass)
    r = grid.radii
    h[np.diag_indices_from(h)] += evaluate(model, r) + ell * (ell + 1) / (2.0 * r**2)
    return 0.5 * (h + h.T)


def state_label(state_index, ell):
    """Spectroscopic label, e.g. ``(1, 0) -> '2s'``."""
    return f"{state_index + ell + 1}{SPECTROSCOPIC[ell]}"


def parse_state_label(label):
    """Inverse of :func:`state_label`: ``'3d' -> (0, 2)``."""
    label = label.strip().lower()
    try:
        n, ell = int(label[:-1]), SPECTROSCOPIC.index(label[-1])
    except (ValueError, IndexError):
        raise ValueError(f"not a state label: {label!r}") from None
    if n <= ell:
        raise ValueError(f"state {label!r} needs n > l")
    return n - ell - 1, ell


@dataclass(frozen=True, eq=False)
class RadialSolution:
    """One normalized eigenpair of the confined radial problem.

    ``u_values`` holds ``u = r R`` at the interior ``radii``; it vanishes at
    both walls by construction.  ``sum(weights * u_values**2) == 1``.
    """

    state_index: int
    ell: int
    energy: float
    radii: np.ndarray
    u_values: np.ndarray
    weights: np.ndarray
    geometry: ConfinementGeometry
    model: PotentialModel
    grid: Grid

    @property
    def label(self):
        return state_label(self.state_index, self.ell)

    @property
    def r_values(self):
        """The radial function ``R = u / r`` at the interior radii."""
        return self.u_values / self.radii

    @property
    def u_full(self):
        return np.concatenate(([0.0], self.u_values, [0.0]))

    @property
    def radii_full(self):
        return self.grid.radii_full

    def sign_changes(self, rel_floor=1e-7):
        """Count sign changes of ``u``, ignoring values below ``rel_floor * max|u|``."""
        u = self.u_values
        keep = np.abs(u) > rel_floor * np.abs(u).max()
        s = np.sign(u[keep])
        return int(np.count_nonzero(s[1:] != s[:-1]))

    def interpolant(self):
        """Callable ``u(r)`` through the full Lobatto expansion."""
        poly = BarycentricInterpolator(self.grid.x, self.u_full)
        to_x = self.grid.to_reference
        return lambda r: poly(to_x(r))

    def wall_slopes(self):
        """``(u'(r_inner), u'(r_outer))`` from the spectral derivative."""
        du = self.grid.diff @ self.u_full / self.grid.jacobian
        return float(du[0]), float(du[-1])


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Lowest eigenpairs for one ``(geometry, model, ell, grid)``.

    ``energies`` is increasing and column ``j`` of ``u`` is the reduced
    function of state ``j`` on ``grid.radii``.
    """

    geometry: ConfinementGeometry
    model: PotentialModel
    ell: int
    grid: Grid
    energies: np.ndarray
    u: np.ndarray

    def __len__(self):
        return self.energies.size

    def __getitem__(self, index):
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError(f"state index {index} outside spectrum of {len(self)}")
        return RadialSolution(
            state_index=index,
            ell=self.ell,
            energy=float(self.energies[index]),
            radii=self.grid.radii,
            u_values=self.u[:, index],
            weights=self.grid.weights,
            geometry=self.geometry,
            model=self.model,
            grid=self.grid,
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @property
    def solutions(self):
        return list(self)


def _fix_signs(u):
    # first appreciable lobe positive
    amp = np.abs(u)
    first = np.argmax(amp > 1e-6 * amp.max(axis=0), axis=0)
    signs = np.sign(u[first, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    return u * signs


def solve_radial(geometry, model=None, ell=0, n_states=None, spec=None) -> Spectrum:
    """Lowest ``n_states`` eigenpairs (all of them when ``None``)."""
    model = coulomb() if model is None else model
    spec = GridSpec() if spec is None else spec
    grid = build_grid(geometry, spec)
    n = spec.n_points
    if n_states is None:
        n_states = n
    if not 1 <= n_states <= n:
        raise ValueError(f"n_states must lie in [1, {n}], got {n_states}")
    h = assemble_hamiltonian(geometry, model, ell, grid)
    try:
        energies, vecs = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigh failed: {exc}") from exc
    residual = np.linalg.norm(h @ vecs - vecs * energies, axis=0).max()
    scale = max(1.0, np.abs(energies).max())
    if not residual <= 1e-9 * scale:
        raise EigensolverError("eigenpairs did not converge", residual)
    keep = energies >= -SPURIOUS_FACTOR * model.z**2
    energies, vecs = energies[keep][:n_states], vecs[:, keep][:, :n_states]
    u = _fix_signs(vecs / np.sqrt(grid.weights)[:, None])
    energies.setflags(write=False)
    u.setflags(write=False)
    return Spectrum(geometry, model, int(ell), grid, energies, u)


def quadrature_integral(f, weights):
    """``sum(weights * f)`` for values sampled on the grid."""
    f = np.asarray(f, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if f.shape[-1] != weights.shape[-1]:
        raise ValueError(f"length mismatch: {f.shape[-1]} values vs {weights.shape[-1]} weights")
    return f @ weights


def truncation_shift(geometry, model=None, ell=0, n_states=4, spec=None, factor=1.5):
    """Largest eigenvalue change when the truncation radius grows by ``factor``.

    Zero for bounded shells, which have no truncation.
    """
    spec = GridSpec() if spec is None else spec
    if geometry.bounded:
        return 0.0
    base = solve_radial(geometry, model, ell, n_states, spec)
    wider = GridSpec(
        n_points=spec.n_points,
        map_scale=spec.map_scale,
        r_max_truncation=factor * spec.r_max_truncation,
    )
    other = solve_radial(geometry, model, ell, n_states, wider)
    return float(np.abs(base.energies - other.energies).max())

