"""Flat ``key=value`` run configuration for the command-line front end.

A config file holds one ``key=value`` pair per line; ``#`` starts a comment.
Command-line ``--key=value`` flags override file values.  Every key, its
default and its meaning is listed in :data:`KEYS` (also shown by
``shellconf --help``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .gps import GridSpec, parse_state_label
from .information import MomentumGridSpec
from .potentials import UNBOUNDED, ConfinementGeometry, PotentialKind, PotentialModel

__all__ = [
    "COMMANDS",
    "KEYS",
    "ConfigError",
    "SweepSpec",
    "RunConfig",
    "parse_text",
    "parse_config",
    "help_text",
]

COMMANDS = ("solve", "atlas", "transitions", "polarizability", "herzfeld", "entropy", "sweep")
SWEEP_VARIABLES = ("r_inner", "r_outer", "both-fixed-gap")
SWEEP_QUANTITIES = ("energy", "alpha", "f", "entropy")

# key -> (default, help)
KEYS = {
    "potential.kind": ("coulomb", "coulomb, debye or expcos; a comma list runs each (atlas only)"),
    "potential.z": ("1", "nuclear charge"),
    "potential.lam": ("0", "screening parameter (1/bohr)"),
    "geometry.r_inner": ("0", "inner wall radius (bohr)"),
    "geometry.r_outer": ("inf", "outer wall radius (bohr); inf or unbounded for none"),
    "geometry.pairs": ("", "list of shells 'ra:rb, ra:rb, ...'; overrides r_inner/r_outer"),
    "quantum.ell": ("0", "orbital quantum number"),
    "quantum.state_index": ("0", "0 for the lowest state of quantum.ell, 1 for the next, ..."),
    "quantum.state": ("", "state label such as 2p; overrides ell/state_index"),
    "quantum.states": ("", "comma list of state labels; overrides quantum.state"),
    "quantum.n_states": ("1", "solve: number of lowest states of quantum.ell"),
    "quantum.n": ("4", "atlas: free principal quantum number(s), comma list allowed"),
    "quantum.k": ("1", "multipole order(s), comma list allowed"),
    "quantum.transitions": ("", "transitions: list 'initial>final, ...' such as 1s>2p"),
    "quantum.n_final": ("2", "transitions: final states per allowed l' when no list is given"),
    "numerics.n_points": ("200", "interior collocation points"),
    "numerics.map_scale": ("1", "unbounded map: half the points lie within this distance"),
    "numerics.truncation": ("200", "outer edge used for unbounded shells (bohr)"),
    "numerics.p_max": ("auto", "momentum cutoff (1/bohr); auto picks it from the tail, at least 30"),
    "numerics.n_momentum": ("auto", "momentum quadrature points; auto uses at least 400"),
    "sweep.variable": ("r_inner", "r_inner, r_outer or both-fixed-gap"),
    "sweep.start": ("", "first axis value"),
    "sweep.stop": ("", "last axis value (inclusive when on the step grid)"),
    "sweep.step": ("", "axis increment"),
    "sweep.fixed_gap": ("1", "both-fixed-gap: r_outer - r_inner"),
    "sweep.quantity": ("energy", "energy, alpha, f or entropy"),
    "atlas.alpha": ("false", "atlas: add the dipole polarizability column"),
    "atlas.entropy": ("false", "atlas: add the position Shannon entropy column"),
    "herzfeld.r_outer": ("", "herzfeld: outer radii for threshold search; empty checks the shells"),
    "output.path": ("-", "CSV destination; - for standard output"),
    "output.format": ("csv", "only csv is supported"),
}


class ConfigError(ValueError):
    """Invalid configuration: unknown key, bad value or violated invariant."""


def _split(value):
    return [v.strip() for v in value.split(",") if v.strip()]


def _float(key, value):
    text = value.strip().lower()
    try:
        x = float(text)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {value!r}") from None
    if math.isnan(x):
        raise ConfigError(f"{key}: NaN is not allowed")
    return x


def _int(key, value):
    try:
        return int(value.strip())
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def _bool(key, value):
    text = value.strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off", ""):
        return False
    raise ConfigError(f"{key}: expected true/false, got {value!r}")


def _radius(key, value):
    if value.strip().lower() in ("inf", "infinity", "unbounded", "+inf"):
        return UNBOUNDED
    return _float(key, value)


def _geometry(key, r_inner, r_outer):
    try:
        return ConfinementGeometry(r_inner, r_outer)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _label(key, value):
    try:
        return parse_state_label(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    step: float
    fixed_gap: float
    quantity: str

    def values(self):
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + i * self.step for i in range(count)]

    def geometries(self, base: ConfinementGeometry):
        out = []
        for x in self.values():
            if self.variable == "r_inner":
                out.append((x, _geometry("sweep", x, base.r_outer)))
            elif self.variable == "r_outer":
                out.append((x, _geometry("sweep", base.r_inner, x)))
            else:
                out.append((x, _geometry("sweep", x, x + self.fixed_gap)))
        return out


@dataclass(frozen=True)
class RunConfig:
    """Validated run description."""

    command: str
    models: tuple
    geometries: tuple
    states: tuple
    n_states: int
    n_values: tuple
    k_values: tuple
    transitions: tuple
    n_final: int
    grid: GridSpec
    momentum: MomentumGridSpec
    sweep: SweepSpec | None
    atlas_alpha: bool
    atlas_entropy: bool
    herzfeld_r_outer: tuple
    output_path: str
    raw: dict = field(default_factory=dict)

    @property
    def model(self):
        return self.models[0]

    @property
    def geometry(self):
        return self.geometries[0]

    def echo(self):
        """``key=value`` lines for every explicitly set key, sorted."""
        return [f"{k}={v}" for k, v in sorted(self.raw.items())]


def parse_text(text, source="<config>"):
    """Parse ``key=value`` lines into a dict, rejecting unknown keys."""
    values = {}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{number}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        _check_key(key)
        values[key] = value
    return values


def _check_key(key):
    if key not in KEYS:
        raise ConfigError(f"unknown key {key!r}; valid keys: {', '.join(KEYS)}")


def parse_config(command, path=None, overrides=None) -> RunConfig:
    """Build a :class:`RunConfig` from an optional file plus overrides."""
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}")
    raw = {}
    if path is not None:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        raw.update(parse_text(text, str(path)))
    for key, value in (overrides or {}).items():
        _check_key(key)
        raw[key] = value
    get = lambda key: raw.get(key, KEYS[key][0])  # noqa: E731

    # potential
    kinds = _split(get("potential.kind")) or ["coulomb"]
    z = _float("potential.z", get("potential.z"))
    lam = _float("potential.lam", get("potential.lam"))
    models = []
    for kind in kinds:
        try:
            models.append(PotentialModel(PotentialKind(kind.lower()), z, lam))
        except ValueError as exc:
            raise ConfigError(f"potential: {exc}") from None
    if len(models) > 1 and command != "atlas":
        raise ConfigError("potential.kind: several potentials are only supported by atlas")

    # geometry
    if get("geometry.pairs"):
        geometries = []
        for item in _split(get("geometry.pairs")):
            if ":" not in item:
                raise ConfigError(f"geometry.pairs: expected ra:rb, got {item!r}")
            a, b = item.split(":", 1)
            geometries.append(_geometry("geometry.pairs", _float("geometry.pairs", a), _radius("geometry.pairs", b)))
    else:
        geometries = [_geometry(
            "geometry",
            _float("geometry.r_inner", get("geometry.r_inner")),
            _radius("geometry.r_outer", get("geometry.r_outer")),
        )]

    # states
    if get("quantum.states"):
        states = [_label("quantum.states", s) for s in _split(get("quantum.states"))]
    elif get("quantum.state"):
        states = [_label("quantum.state", get("quantum.state"))]
    else:
        ell = _int("quantum.ell", get("quantum.ell"))
        index = _int("quantum.state_index", get("quantum.state_index"))
        if ell < 0 or index < 0:
            raise ConfigError("quantum.ell and quantum.state_index must be >= 0")
        states = [(index, ell)]
    n_states = _int("quantum.n_states", get("quantum.n_states"))
    if n_states < 1:
        raise ConfigError("quantum.n_states must be >= 1")
    n_values = tuple(_int("quantum.n", v) for v in _split(get("quantum.n")))
    if any(n < 1 for n in n_values):
        raise ConfigError("quantum.n must be >= 1")
    k_values = tuple(_int("quantum.k", v) for v in _split(get("quantum.k")))
    if not k_values or any(k < 1 for k in k_values):
        raise ConfigError("quantum.k must be >= 1")
    transitions = []
    for item in _split(get("quantum.transitions")):
        if ">" not in item:
            raise ConfigError(f"quantum.transitions: expected initial>final, got {item!r}")
        a, b = item.split(">", 1)
        transitions.append((_label("quantum.transitions", a), _label("quantum.transitions", b)))
    n_final = _int("quantum.n_final", get("quantum.n_final"))

    # numerics
    try:
        grid = GridSpec(
            n_points=_int("numerics.n_points", get("numerics.n_points")),
            map_scale=_float("numerics.map_scale", get("numerics.map_scale")),
            r_max_truncation=_float("numerics.truncation", get("numerics.truncation")),
        )
        p_max = get("numerics.p_max")
        n_mom = get("numerics.n_momentum")
        momentum = MomentumGridSpec(
            p_max=None if p_max == "auto" else _float("numerics.p_max", p_max),
            n_points=None if n_mom == "auto" else _int("numerics.n_momentum", n_mom),
        )
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"numerics: {exc}") from None
    for geo in geometries:
        if not geo.bounded and geo.r_inner >= grid.r_max_truncation:
            raise ConfigError(f"numerics.truncation must exceed r_inner of {geo}")

    # sweep
    sweep = None
    if command == "sweep":
        sweep = _parse_sweep(get, geometries[0])

    herz = tuple(_float("herzfeld.r_outer", v) for v in _split(get("herzfeld.r_outer")))
    if any(r <= 0 for r in herz):
        raise ConfigError("herzfeld.r_outer values must be positive")
    if get("output.format").lower() != "csv":
        raise ConfigError("output.format: only csv is supported")

    return RunConfig(
        command=command,
        models=tuple(models),
        geometries=tuple(geometries),
        states=tuple(states),
        n_states=n_states,
        n_values=n_values,
        k_values=k_values,
        transitions=tuple(transitions),
        n_final=n_final,
        grid=grid,
        momentum=momentum,
        sweep=sweep,
        atlas_alpha=_bool("atlas.alpha", get("atlas.alpha")),
        atlas_entropy=_bool("atlas.entropy", get("atlas.entropy")),
        herzfeld_r_outer=herz,
        output_path=get("output.path"),
        raw=dict(raw),
    )


def _parse_sweep(get, base):
    variable = get("sweep.variable")
    if variable not in SWEEP_VARIABLES:
        raise ConfigError(f"sweep.variable must be one of {', '.join(SWEEP_VARIABLES)}")
    quantity = get("sweep.quantity")
    if quantity not in SWEEP_QUANTITIES:
        raise ConfigError(f"sweep.quantity must be one of {', '.join(SWEEP_QUANTITIES)}")
    for key in ("sweep.start", "sweep.stop", "sweep.step"):
        if not get(key):
            raise ConfigError(f"{key} is required for a sweep")
    start = _float("sweep.start", get("sweep.start"))
    stop = _float("sweep.stop", get("sweep.stop"))
    step = _float("sweep.step", get("sweep.step"))
    gap = _float("sweep.fixed_gap", get("sweep.fixed_gap"))
    if not stop > start:
        raise ConfigError(f"sweep.stop ({stop:g}) must exceed sweep.start ({start:g})")
    if not step > 0:
        raise ConfigError("sweep.step must be positive")
    if variable == "both-fixed-gap" and not gap > 0:
        raise ConfigError("sweep.fixed_gap must be positive")
    spec = SweepSpec(variable, start, stop, step, gap, quantity)
    # every axis point must give a valid shell
    spec.geometries(base)
    return spec


def help_text():
    width = max(len(k) for k in KEYS)
    lines = ["configuration keys (default in brackets):"]
    for key, (default, text) in KEYS.items():
        shown = default if default else "unset"
        lines.append(f"  {key:<{width}}  [{shown}] {text}")
    return "\n".join(lines)
