"""``shellconf`` command-line front end.

Usage::

    shellconf <command> [--config FILE] [--key=value ...] [--out PATH] [--reproducible]

Each command builds one :class:`~shellconf.tables.ResultTable` and writes it
as CSV.  Exit codes: 0 on success, 1 for configuration or I/O errors, 2 for
numerical failures (the offending parameters are echoed on stderr).
"""
from __future__ import annotations

import argparse
import datetime
import math
import sys

from . import __version__
from .config import COMMANDS, ConfigError, RunConfig, help_text, parse_config
from .degeneracy import AtlasError, UnboundStateError, enumerate_atlas
from .gps import SPECTROSCOPIC, EigensolverError, solve_radial
from .angular import selection_final_ells
from .information import MomentumNormError, entropy_report
from .metallicity import find_rm, herzfeld_check
from .response import polarizability
from .tables import ResultTable, emit_csv
from .transitions import GridMismatchError, oscillator_strength

__all__ = ["run", "main", "build_parser", "NumericalFailure"]

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2


class NumericalFailure(RuntimeError):
    """A module error raised while computing a row, with its parameters."""


def _edges(geometry):
    return geometry.r_inner, (geometry.r_outer if geometry.bounded else math.inf)


def _regime(geometry):
    return geometry.regime.value.upper() if hasattr(geometry.regime, "value") else str(geometry.regime)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _solve(cfg: RunConfig):
    table = ResultTable(["r_inner", "r_outer", "regime", "state", "energy", "nodes"])
    explicit = "quantum.state" in cfg.raw or "quantum.states" in cfg.raw
    for geo in cfg.geometries:
        if explicit:
            wanted = list(cfg.states)
        else:
            index, ell = cfg.states[0]
            wanted = [(i, ell) for i in range(index, index + cfg.n_states)]
        for ell in sorted({e for _, e in wanted}):
            top = max(i for i, e in wanted if e == ell) + 1
            spectrum = solve_radial(geo, cfg.model, ell, top, cfg.grid)
            for index in sorted(i for i, e in wanted if e == ell):
                s = spectrum[index]
                table.add(*_edges(geo), _regime(geo), s.label, s.energy, s.sign_changes())
    return table


def _atlas(cfg: RunConfig):
    header = ["potential", "n", "serial", "state", "r_inner", "r_outer", "regime",
              "parent", "energy", "free_energy"]
    if cfg.atlas_alpha:
        header.append("alpha1")
    if cfg.atlas_entropy:
        header.append("s_r")
    table = ResultTable(header)
    for model in cfg.models:
        for n in cfg.n_values:
            rows = enumerate_atlas(n, model, cfg.grid, with_alpha=cfg.atlas_alpha,
                                   with_entropy=cfg.atlas_entropy)
            for row in rows:
                cells = [model.kind.value, n, row.serial, row.label, *_edges(row.geometry),
                         row.regime.value.upper(), row.parent_label, row.energy, row.free_energy]
                if cfg.atlas_alpha:
                    cells.append(row.alpha1)
                if cfg.atlas_entropy:
                    cells.append(row.s_r)
                table.add(*cells)
    return table


def _transitions(cfg: RunConfig):
    table = ResultTable(["r_inner", "r_outer", "k", "initial", "final", "delta_e",
                         "radial_element", "f", "status"])
    for geo in cfg.geometries:
        cache = {}

        def spectrum(ell, count):
            if ell not in cache or len(cache[ell]) < count:
                cache[ell] = solve_radial(geo, cfg.model, ell, max(count, cfg.n_final + 4), cfg.grid)
            return cache[ell]

        for k in cfg.k_values:
            if cfg.transitions:
                pairs = list(cfg.transitions)
            else:
                pairs = [(st, (j, lp)) for st in cfg.states
                         for lp in selection_final_ells(k, st[1]) for j in range(cfg.n_final)]
            for (i0, l0), (i1, l1) in pairs:
                a = spectrum(l0, i0 + 1)[i0]
                b = spectrum(l1, i1 + 1)[i1]
                rec = oscillator_strength(k, a, b)
                table.add(*_edges(geo), k, a.label, b.label, rec.delta_e,
                          rec.radial_element, rec.f_value, rec.status)
    return table


def _polarizability(cfg: RunConfig):
    table = ResultTable(["r_inner", "r_outer", "k", "state", "energy", "channel", "alpha", "sign"])
    for geo in cfg.geometries:
        for st in cfg.states:
            for k in cfg.k_values:
                resp = polarizability(k, st, geo, cfg.model, cfg.grid)
                for lp, value in resp.per_channel.items():
                    table.add(*_edges(geo), k, resp.label, resp.energy, SPECTROSCOPIC[lp],
                              value, "negative" if value < 0 else "positive")
                table.add(*_edges(geo), k, resp.label, resp.energy, "total", resp.total,
                          "negative" if resp.negative else "positive")
    return table


def _herzfeld(cfg: RunConfig):
    if cfg.herzfeld_r_outer:
        table = ResultTable(["r_outer", "state", "status", "r_m", "metallic_zone", "evaluations"])
        for r_outer in cfg.herzfeld_r_outer:
            for st in cfg.states:
                res = find_rm(r_outer, st, cfg.model, cfg.grid)
                table.add(r_outer, res.state, res.status, res.r_m, res.metallic_zone, res.n_evaluations)
        return table
    table = ResultTable(["r_inner", "r_outer", "state", "volume", "alpha1", "metallic"])
    for geo in cfg.geometries:
        for st in cfg.states:
            point = herzfeld_check(geo, st, cfg.model, cfg.grid)
            table.add(*_edges(geo), point.state, point.volume_param, point.alpha1, point.metallic)
    return table


ENTROPY_HEADER = ["r_inner", "r_outer", "state", "energy", "s_r", "s_p", "s_t",
                  "e_r", "e_p", "e_t", "bbm", "p_max"]


def _entropy_cells(geo, st, cfg):
    rep = entropy_report(geo, cfg.model, st, cfg.grid, cfg.momentum)
    return [rep.label, rep.energy, rep.s_r_full, rep.s_p_full, rep.s_total,
            rep.e_r_full, rep.e_p_full, rep.e_total, rep.satisfies_bbm, rep.p_max]


def _entropy(cfg: RunConfig):
    table = ResultTable(list(ENTROPY_HEADER))
    for geo in cfg.geometries:
        for st in cfg.states:
            table.add(*_edges(geo), *_entropy_cells(geo, st, cfg))
    return table


def _sweep(cfg: RunConfig):
    sw = cfg.sweep
    st = cfg.states[0]
    k = cfg.k_values[0]
    axis = ["axis", "r_inner", "r_outer"]
    if sw.quantity == "energy":
        table = ResultTable(axis + ["state", "energy"])
    elif sw.quantity == "alpha":
        table = ResultTable(axis + ["state", "k", "alpha"])
    elif sw.quantity == "f":
        if not cfg.transitions:
            raise ConfigError("sweep.quantity=f needs quantum.transitions")
        table = ResultTable(axis + ["k", "initial", "final", "delta_e", "f"])
    else:
        table = ResultTable(axis + ENTROPY_HEADER[2:])
    for x, geo in sw.geometries(cfg.geometry):
        edges = _edges(geo)
        if sw.quantity == "energy":
            s = solve_radial(geo, cfg.model, st[1], st[0] + 1, cfg.grid)[st[0]]
            table.add(x, *edges, s.label, s.energy)
        elif sw.quantity == "alpha":
            resp = polarizability(k, st, geo, cfg.model, cfg.grid)
            table.add(x, *edges, resp.label, k, resp.total)
        elif sw.quantity == "f":
            (i0, l0), (i1, l1) = cfg.transitions[0]
            a = solve_radial(geo, cfg.model, l0, i0 + 1, cfg.grid)[i0]
            b = solve_radial(geo, cfg.model, l1, i1 + 1, cfg.grid)[i1]
            rec = oscillator_strength(k, a, b)
            table.add(x, *edges, k, a.label, b.label, rec.delta_e, rec.f_value)
        else:
            table.add(x, *edges, *_entropy_cells(geo, st, cfg))
    return table


DISPATCH = {
    "solve": _solve,
    "atlas": _atlas,
    "transitions": _transitions,
    "polarizability": _polarizability,
    "herzfeld": _herzfeld,
    "entropy": _entropy,
    "sweep": _sweep,
}

NUMERICAL_ERRORS = (EigensolverError, MomentumNormError, AtlasError, UnboundStateError,
                    GridMismatchError, ArithmeticError, RuntimeError, ValueError, IndexError)


def _provenance(cfg: RunConfig, reproducible):
    lines = [f"shellconf {__version__}", f"command={cfg.command}"]
    lines += [f"config {line}" for line in cfg.echo()]
    g = cfg.grid
    lines.append(f"grid n_points={g.n_points} map_scale={g.map_scale:g} truncation={g.r_max_truncation:g}")
    if not reproducible:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
        lines.append(f"generated {stamp}")
    return lines


def run(cfg: RunConfig, reproducible=False):
    """Compute the table for ``cfg``; returns ``(table, exit_code)``.

    Raises
    ------
    NumericalFailure
        Wrapping any module error, with the run parameters in the message.
    """
    try:
        table = DISPATCH[cfg.command](cfg)
    except ConfigError:
        raise
    except NUMERICAL_ERRORS as exc:
        params = "; ".join(cfg.echo()) or "defaults"
        resolved = (f"potential {', '.join(str(m) for m in cfg.models)};"
                    f" r_inner:r_outer {', '.join(str(g) for g in cfg.geometries)}")
        raise NumericalFailure(
            f"{cfg.command} failed ({type(exc).__name__}: {exc}) with {params} ({resolved})"
        ) from exc
    table.provenance = _provenance(cfg, reproducible)
    return table, EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser():
    parser = _Parser(
        prog="shellconf",
        description="Hydrogen-like atoms in spherical shells: spectra, transitions, "
                    "polarizabilities, entropies and degeneracy atlases.",
        epilog=help_text() + "\n\nany key may be given as --key=value; flags override the file.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--out", help="output CSV path (overrides output.path)")
    parser.add_argument("--reproducible", action="store_true",
                        help="omit the timestamp so identical configs give identical files")
    parser.add_argument("--version", action="version", version=f"shellconf {__version__}")
    return parser


def _overrides(extra):
    out = {}
    items = list(extra)
    while items:
        item = items.pop(0)
        if not item.startswith("--"):
            raise ConfigError(f"unexpected argument {item!r}; use --key=value")
        body = item[2:]
        if "=" in body:
            key, value = body.split("=", 1)
        elif items and not items[0].startswith("--"):
            key, value = body, items.pop(0)
        else:
            raise ConfigError(f"missing value for --{body}")
        out[key] = value
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args, extra = build_parser().parse_known_args(argv)
        overrides = _overrides(extra)
        if args.out is not None:
            overrides["output.path"] = args.out
        cfg = parse_config(args.command, args.config, overrides)
        table, code = run(cfg, reproducible=args.reproducible)
        emit_csv(table, cfg.output_path)
        return code
    except ConfigError as exc:
        print(f"shellconf: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalFailure as exc:
        print(f"shellconf: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"shellconf: I/O error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
