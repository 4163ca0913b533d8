"""Hydrogen-like atoms inside impenetrable spherical shells.

The radial equation is solved by Lobatto pseudospectral collocation for any
shell ``(r_inner, r_outer)``, from the free atom to cavities, thin shells and
atoms with only an inner wall.  On top of the solver sit multipole
oscillator strengths, sum-over-states polarizabilities, position and
momentum information measures, the incidental-degeneracy atlas, the
Herzfeld metallization threshold and an audit of the closed-form free-atom
formulas.
"""

__version__ = "0.1.0"

from .potentials import (  # noqa: E402
    UNBOUNDED,
    ConfinementGeometry,
    PotentialKind,
    PotentialModel,
    Regime,
    classify,
    coulomb,
    debye,
    exp_cosine,
)
from .gps import GridSpec, solve_radial  # noqa: E402
from .transitions import oscillator_strength, sum_rule  # noqa: E402
from .response import polarizability  # noqa: E402
from .information import entropy_report  # noqa: E402
from .degeneracy import enumerate_atlas  # noqa: E402
from .metallicity import find_rm, herzfeld_check  # noqa: E402

__all__ = [
    "__version__",
    "UNBOUNDED",
    "ConfinementGeometry",
    "PotentialKind",
    "PotentialModel",
    "Regime",
    "classify",
    "coulomb",
    "debye",
    "exp_cosine",
    "GridSpec",
    "solve_radial",
    "oscillator_strength",
    "sum_rule",
    "polarizability",
    "entropy_report",
    "enumerate_atlas",
    "find_rm",
    "herzfeld_check",
]
