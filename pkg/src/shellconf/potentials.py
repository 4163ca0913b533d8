"""Confinement geometries and central potentials.

A geometry is a spherical shell ``r_inner <= r <= r_outer`` with impenetrable
walls; ``r_inner = 0`` means no inner wall and ``r_outer = UNBOUNDED`` means no
outer wall.  The four combinations are the regimes of the generalized
confined hydrogen atom (GCHA):

    ========  =========  ==========
    regime    r_inner    r_outer
    ========  =========  ==========
    FHA       0          unbounded
    CHA       0          finite
    SCHA      > 0        finite
    LCHA      > 0        unbounded
    ========  =========  ==========
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "UNBOUNDED",
    "Unbounded",
    "Regime",
    "PotentialKind",
    "ConfinementGeometry",
    "PotentialModel",
    "coulomb",
    "debye",
    "exp_cosine",
    "evaluate",
    "classify",
]


class Unbounded(enum.Enum):
    """Marker for an outer radius at infinity."""

    UNBOUNDED = "unbounded"

    def __repr__(self):
        return "UNBOUNDED"

    def __str__(self):
        return "inf"


UNBOUNDED = Unbounded.UNBOUNDED


class Regime(str, enum.Enum):
    FHA = "FHA"
    CHA = "CHA"
    SCHA = "SCHA"
    LCHA = "LCHA"


class PotentialKind(str, enum.Enum):
    COULOMB = "coulomb"
    DEBYE = "debye"
    EXP_COSINE = "expcos"


@dataclass(frozen=True)
class ConfinementGeometry:
    """Radial domain ``[r_inner, r_outer]`` in bohr.

    Parameters
    ----------
    r_inner : float
        Inner wall radius, ``>= 0``.  Zero means no inner wall.
    r_outer : float or UNBOUNDED
        Outer wall radius, or ``UNBOUNDED`` for a free outer edge.
    """

    r_inner: float = 0.0
    r_outer: float | Unbounded = UNBOUNDED

    def __post_init__(self):
        r_inner = float(self.r_inner)
        if not math.isfinite(r_inner) or r_inner < 0.0:
            raise ValueError(f"r_inner must be finite and >= 0, got {self.r_inner!r}")
        object.__setattr__(self, "r_inner", r_inner)
        if self.r_outer is UNBOUNDED:
            return
        r_outer = float(self.r_outer)
        if math.isinf(r_outer) and r_outer > 0:
            object.__setattr__(self, "r_outer", UNBOUNDED)
            return
        if not math.isfinite(r_outer) or r_outer <= r_inner:
            raise ValueError(
                f"r_outer must exceed r_inner ({r_inner}), got {self.r_outer!r}"
            )
        object.__setattr__(self, "r_outer", r_outer)

    @property
    def bounded(self) -> bool:
        return self.r_outer is not UNBOUNDED

    @property
    def width(self) -> float:
        """``r_outer - r_inner``; infinite for unbounded shells."""
        if not self.bounded:
            return math.inf
        return self.r_outer - self.r_inner

    @property
    def volume_param(self) -> float:
        """``r_outer**3 - r_inner**3`` (the Herzfeld volume parameter)."""
        if not self.bounded:
            raise ValueError("volume parameter is undefined for an unbounded shell")
        return self.r_outer**3 - self.r_inner**3

    @property
    def regime(self) -> Regime:
        return classify(self)

    def __str__(self):
        return f"({self.r_inner:g}, {self.r_outer if self.bounded else 'inf'})"


@dataclass(frozen=True)
class PotentialModel:
    """Attractive central potential of a nucleus of charge ``z``.

    ``lam`` is the screening parameter in inverse bohr; the Debye model uses
    it as ``exp(-lam*r)`` and the exponential-cosine model as
    ``exp(-lam*r)*cos(lam*r)``.  It is ignored for the bare Coulomb model.
    """

    kind: PotentialKind = PotentialKind.COULOMB
    z: float = 1.0
    lam: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        if not self.z > 0:
            raise ValueError(f"nuclear charge must be positive, got {self.z!r}")
        if not self.lam >= 0:
            raise ValueError(f"screening parameter must be >= 0, got {self.lam!r}")
        object.__setattr__(self, "z", float(self.z))
        object.__setattr__(self, "lam", float(self.lam))

    @property
    def is_coulomb(self) -> bool:
        """True when the model evaluates identically to ``-z/r``."""
        return self.kind is PotentialKind.COULOMB or self.lam == 0.0

    def __call__(self, r):
        return evaluate(self, r)


def coulomb(z=1.0):
    return PotentialModel(PotentialKind.COULOMB, z)


def debye(lam, z=1.0):
    return PotentialModel(PotentialKind.DEBYE, z, lam)


def exp_cosine(lam, z=1.0):
    return PotentialModel(PotentialKind.EXP_COSINE, z, lam)


def evaluate(model: PotentialModel, r):
    """Potential energy in hartree at radius ``r`` (scalar or array, ``r > 0``)."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0) or np.any(~np.isfinite(r_arr)):
        raise ValueError("potential is only defined for finite r > 0")
    v = -model.z / r_arr
    if model.kind is PotentialKind.DEBYE:
        v = v * np.exp(-model.lam * r_arr)
    elif model.kind is PotentialKind.EXP_COSINE:
        v = v * np.exp(-model.lam * r_arr) * np.cos(model.lam * r_arr)
    return v if v.ndim else float(v)


def classify(geometry: ConfinementGeometry) -> Regime:
    inner_wall = geometry.r_inner > 0.0
    if geometry.bounded:
        return Regime.SCHA if inner_wall else Regime.CHA
    return Regime.LCHA if inner_wall else Regime.FHA
