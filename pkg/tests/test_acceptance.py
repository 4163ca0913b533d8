"""Acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line (printed, and repeated in the pytest
terminal summary).  Reference numbers are the published table values; where
an independent oracle contradicts a published value the test says so and
checks the oracle instead.
"""
import math
import subprocess
import sys
import time
from collections import Counter

import numpy as np
import pytest

from oracles import dalgarno_lewis_extrapolated, lcha_energy
from shellconf.cli import run
from shellconf.config import parse_config
from shellconf.degeneracy import enumerate_atlas, free_state_energy
from shellconf.errata import audit_f_formulas
from shellconf.gps import GridSpec, solve_radial
from shellconf.information import BBM_BOUND, entropy_report
from shellconf.metallicity import find_rm
from shellconf.potentials import ConfinementGeometry, Regime, coulomb, debye, exp_cosine
from shellconf.response import polarizability, resolve_state
from shellconf.transitions import oscillator_strength, sum_rule

INF = math.inf

# the 37 shells shared by the transition, polarizability and entropy tables
TABLE_SHELLS = [(0, 1), (0.1, 1), (0.2, 1), (0.5, 1), (0.8, 1),
                (0, 2), (0.1, 2), (0.5, 2), (1, 2), (1.2, 2), (1.5, 2), (1.8, 2),
                (0, 5), (1, 5), (2, 5), (2.5, 5), (3, 5), (4, 5), (4.5, 5),
                (0, 10), (0.5, 10), (1, 10), (2, 10), (3, 10), (5, 10), (7, 10), (9.5, 10),
                (0, INF), (0.1, INF), (0.5, INF), (1, INF), (2, INF), (5, INF), (7, INF),
                (8, INF), (9, INF), (10, INF)]


def _state(geo, label):
    index, ell = resolve_state(label)
    return solve_radial(geo, coulomb(), ell, index + 1, GridSpec())[index]


def _check(failures, ok, message):
    if not ok:
        failures.append(message)


# --------------------------------------------------------------------------
# 1. Coulomb atlas for n = 4
# --------------------------------------------------------------------------

def test_criterion_1_coulomb_atlas(criterion):
    failures = []
    start = time.perf_counter()
    rows = enumerate_atlas(4, coulomb(), GridSpec(n_points=200, r_max_truncation=200.0),
                           with_alpha=True, with_entropy=True)
    elapsed = time.perf_counter() - start
    _check(failures, len(rows) == 20, f"{len(rows)} rows")
    worst = max(abs(r.energy + 0.03125) for r in rows)
    _check(failures, worst < 1e-6, f"energy off by {worst:.2e}")
    regimes = Counter(r.regime for r in rows)
    _check(failures, regimes == {Regime.FHA: 4, Regime.CHA: 6, Regime.SCHA: 4, Regime.LCHA: 6},
           f"categories {dict(regimes)}")
    per_ell = Counter(r.confined_label[1] for r in rows)
    _check(failures, per_ell == {0: 10, 1: 6, 2: 3, 3: 1}, f"per-l {dict(per_ell)}")
    _check(failures, elapsed < 60.0, f"runtime {elapsed:.1f} s")
    criterion("criterion 1: atlas n=4", failures, f"max |dE| {worst:.1e}, {elapsed:.1f} s")


# --------------------------------------------------------------------------
# 2. plasma atlases
# --------------------------------------------------------------------------

PLASMA = [
    (debye(0.01), 2, -0.115293282), (debye(0.01), 3, -0.046198857), (debye(0.01), 4, -0.022356120),
    (exp_cosine(0.01), 2, -0.115013458), (exp_cosine(0.01), 3, -0.045619079),
    (exp_cosine(0.01), 4, -0.021437465),
]


def test_criterion_2_plasma_atlases(criterion):
    failures = []
    worst = 0.0
    for model, n, energy in PLASMA:
        free = free_state_energy(model, n, 0)
        worst = max(worst, abs(free - energy))
        _check(failures, abs(free - energy) < 1e-6, f"{model.kind.value} n={n} E={free:.9f}")
        rows = enumerate_atlas(n, model)
        _check(failures, len(rows) == {2: 3, 3: 6, 4: 10}[n], f"{model.kind.value} n={n}: {len(rows)} rows")
        for row in rows:
            _check(failures, abs(row.energy - energy) < 1e-6,
                   f"{model.kind.value} {row.serial} E={row.energy:.9f}")
    criterion("criterion 2: plasma atlases", failures, f"max |dE| {worst:.1e}")


# --------------------------------------------------------------------------
# 3. dipole oscillator strengths
# --------------------------------------------------------------------------

# (r_inner, r_outer, initial, final, printed f)
TABLE_F = [
    (0, 1, "1s", "2p", 0.98455839),
    (0, INF, "1s", "2p", 0.41619672),
    (0, 1, "2p", "1s", -0.32818613),
    (1, 5, "2s", "2p", -0.47393100),
    (0, INF, "1s", "3p", 0.07910156),
    (0, INF, "2p", "3d", 0.69578470),
    (0.1, 1, "2s", "3p", 1.26759877),
    (0.5, 2, "2s", "3p", 0.93184418),
    (1.8, 2, "2p", "4d", 0.21252327),
    (0, 10, "1s", "3p", 0.25817376),
    (9.5, 10, "2p", "3d", 0.88911811),
    (5, INF, "2p", "2s", 0.09938867),
]


def test_criterion_3_oscillator_strengths(criterion):
    failures = []
    worst = 0.0
    for ra, rb, a, b, printed in TABLE_F:
        geo = ConfinementGeometry(ra, rb)
        f = oscillator_strength(1, _state(geo, a), _state(geo, b)).f_value
        worst = max(worst, abs(f - printed))
        _check(failures, abs(f - printed) < 1e-5, f"({ra},{rb}) {a}->{b}: {f:.8f} vs {printed}")
    criterion("criterion 3: oscillator strengths", failures, f"12 values, max |df| {worst:.1e}")


# --------------------------------------------------------------------------
# 4. analytic formulas against the solver
# --------------------------------------------------------------------------

def test_criterion_4_analytic_formulas(criterion):
    failures = []
    audits = audit_f_formulas()
    for a in audits:
        if not a.flagged:
            _check(failures, a.max_rel_error < 1e-6, f"{a.name} rel {a.max_rel_error:.1e}")
        _check(failures, max(c.n_final for c in a.checks) == 12, f"{a.name} stops early")
    dipole = [a for a in audits if a.channel.k == 1]
    _check(failures, len(dipole) == 2 and not any(a.flagged for a in dipole), "dipole line flagged")
    flagged = sorted(a.name for a in audits if a.flagged)
    criterion("criterion 4: analytic f formulas", failures,
              f"{len(audits) - len(flagged)} agree, errata: {', '.join(flagged)}")


# --------------------------------------------------------------------------
# 5. sum rules
# --------------------------------------------------------------------------

def test_criterion_5_sum_rules(criterion):
    failures = []
    worst = 0.0
    for geo in (ConfinementGeometry(), ConfinementGeometry(0, 1), ConfinementGeometry(1, 5),
                ConfinementGeometry(1, INF)):
        ground = _state(geo, "1s")
        for k in (1, 2, 3, 4):
            lhs, rhs = sum_rule(k, ground)
            rel = abs(lhs - rhs) / abs(rhs)
            worst = max(worst, rel)
            _check(failures, rel < 1e-6, f"{geo} k={k}: {rel:.1e}")
    criterion("criterion 5: sum rules", failures, f"max rel {worst:.1e}")


# --------------------------------------------------------------------------
# 6. dipole polarizabilities
# --------------------------------------------------------------------------

FREE_ALPHA = {"1s": 4.5, "2s": 120.0, "3s": 1012.5, "4s": 4992.0, "2p": 176.0, "3d": 1863.0}
CONFINED_ALPHA = [((0, 1), "1s", 0.02879202), ((1, 2), "1s", 3.22129727),
                  ((1.8, 2), "1s", 8.67861281), ((0, 5), "2s", -21.10657309)]
# cells printed with a minus sign
NEGATIVE_CELLS = {((0, 2), s) for s in ("2s", "3s", "4s")} | {((0, 5), s) for s in ("2s", "3s", "4s")} \
    | {((0, 10), s) for s in ("3s", "4s")} | {((0.1, INF), s) for s in ("2s", "3s", "4s")}
# printed +37.2397; both the pseudospectral sum and the finite-difference
# Dalgarno-Lewis route give a large negative value (near-degenerate 2p level)
ORACLE_OVERRIDES = {((0, 10), "2s")}


def test_criterion_6_polarizabilities(criterion):
    failures = []
    free = ConfinementGeometry()
    for state, exact in FREE_ALPHA.items():
        alpha = polarizability(1, state, free).total
        _check(failures, abs(alpha - exact) / exact < 1e-3, f"free {state}: {alpha}")
    for shell, state, printed in CONFINED_ALPHA:
        alpha = polarizability(1, state, ConfinementGeometry(*shell)).total
        _check(failures, abs(alpha - printed) / abs(printed) < 1e-3, f"{shell} {state}: {alpha}")
    mismatched = []
    for shell in TABLE_SHELLS:
        for state in FREE_ALPHA:
            if shell in {(7, INF), (8, INF), (9, INF), (10, INF)} and state == "4s":
                continue  # no printed value
            negative = polarizability(1, state, ConfinementGeometry(*shell)).total < 0
            if negative != ((shell, state) in NEGATIVE_CELLS):
                mismatched.append((shell, state))
    _check(failures, set(mismatched) == ORACLE_OVERRIDES, f"sign flags differ at {mismatched}")
    for shell, state in ORACLE_OVERRIDES:
        index, ell = resolve_state(state)
        oracle, _ = dalgarno_lewis_extrapolated(1, shell[0], shell[1], index, ell)
        ours = polarizability(1, state, ConfinementGeometry(*shell)).total
        _check(failures, oracle < 0 and abs(ours - oracle) / abs(oracle) < 1e-6,
               f"{shell} {state}: oracle {oracle}, ours {ours}")
    criterion("criterion 6: polarizabilities", failures,
              "sign flags match except (0,10) 2s, where the independent oracle sides with the solver")


# --------------------------------------------------------------------------
# 7. Herzfeld thresholds
# --------------------------------------------------------------------------

def test_criterion_7_herzfeld(criterion):
    failures = []
    for rb, state, printed in [(1, "1s", 0.81776), (5, "1s", 2.32954), (10, "1s", 3.14772), (10, "4s", 3.21915)]:
        res = find_rm(float(rb), state)
        _check(failures, res.status == "root" and abs(res.r_m - printed) < 5e-3,
               f"R_b={rb} {state}: {res.r_m}")
    zones = [find_rm(float(rb), "1s").metallic_zone for rb in range(1, 11)]
    _check(failures, all(b > a for a, b in zip(zones, zones[1:])), f"zones {zones}")
    criterion("criterion 7: Herzfeld thresholds", failures)


# --------------------------------------------------------------------------
# 8. entropies
# --------------------------------------------------------------------------

def test_criterion_8_entropies(criterion):
    failures = []
    rep = entropy_report(ConfinementGeometry(), coulomb(), "1s")
    printed = {"s_r_full": 4.14472988, "s_p_full": 2.42186234, "s_total": 6.56659222,
               "e_r_full": 0.03978873, "e_p_full": 0.20897494, "e_total": 0.00831484}
    for name, value in printed.items():
        ours = getattr(rep, name)
        _check(failures, abs(ours - value) < 1e-4, f"free 1s {name}: {ours}")
    cavity = entropy_report(ConfinementGeometry(0, 1), coulomb(), "1s").s_r_full
    _check(failures, abs(cavity - 0.52903053) < 1e-5, f"(0,1) S_r {cavity}")
    lowest = INF
    for shell in TABLE_SHELLS:
        total = entropy_report(ConfinementGeometry(*shell), coulomb(), "1s").s_total
        lowest = min(lowest, total)
        _check(failures, total >= BBM_BOUND, f"{shell} S_t {total}")
    criterion("criterion 8: entropies", failures, f"37 rows, min S_t {lowest:.6f} >= {BBM_BOUND:.6f}")


@pytest.mark.xfail(strict=True, reason="published LCHA(5) momentum entropy disagrees with the "
                                       "independent Whittaker-function oracle at 1.1e-3")
def test_left_confined_momentum_entropy_printed_value():
    assert entropy_report(ConfinementGeometry(5.0), coulomb(), "1s").s_p_full == \
        pytest.approx(-2.789102, abs=1e-3)


def test_left_confined_energy_behind_the_entropy_row():
    # the solver's level for that row matches the Whittaker oracle, so the
    # disagreement above is not a wrong state
    assert _state(ConfinementGeometry(5.0), "1s").energy == pytest.approx(lcha_energy(5.0)[0], abs=1e-9)


# --------------------------------------------------------------------------
# 9. property suites
# --------------------------------------------------------------------------

PROPERTY_TESTS = [
    "tests/test_gps.py::test_domain_monotonicity",
    "tests/test_gps.py::test_sturm_node_counts",
    "tests/test_gps.py::test_orthonormality",
    "tests/test_transitions.py::test_emission_absorption_reciprocity",
    "tests/test_gps.py::test_grid_doubling_stability",
    "tests/test_information.py::test_momentum_norm_preservation",
]


def test_criterion_9_property_suites(criterion, repo_root):
    start = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *PROPERTY_TESTS],
                         cwd=repo_root, capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    failures = []
    _check(failures, res.returncode == 0, res.stdout.strip().splitlines()[-1] if res.stdout else res.stderr)
    _check(failures, elapsed < 300.0, f"runtime {elapsed:.0f} s")
    criterion("criterion 9: property suites", failures, f"{elapsed:.0f} s")


# --------------------------------------------------------------------------
# figure trends, as sign conditions on sweep output
# --------------------------------------------------------------------------

def _sweep(**keys):
    overrides = {k.replace("__", "."): str(v) for k, v in keys.items()}
    table, code = run(parse_config("sweep", overrides=overrides), reproducible=True)
    assert code == 0
    return table


def _increasing(table, column):
    values = np.array(table.column(column), dtype=float)
    return bool(np.all(np.diff(values) > 0)), values


FIGURE_TRENDS = [
    # (label, sweep keys, column)
    ("energy vs R_a, gap 1, 1s", dict(sweep__variable="both-fixed-gap", sweep__fixed_gap=1, quantum__state="1s"), "energy"),
    ("energy vs R_a, gap 1, 2s", dict(sweep__variable="both-fixed-gap", sweep__fixed_gap=1, quantum__state="2s"), "energy"),
    ("energy vs R_a, gap 5, 1s", dict(sweep__variable="both-fixed-gap", sweep__fixed_gap=5, quantum__state="1s"), "energy"),
    ("energy vs R_a, gap 5, 2s", dict(sweep__variable="both-fixed-gap", sweep__fixed_gap=5, quantum__state="2s"), "energy"),
]
for k, (a, b), (c, d) in [(2, ("1s", "3d"), ("2p", "4f")), (3, ("1s", "4f"), ("2p", "5g")),
                          (4, ("1s", "5g"), ("2p", "6h"))]:
    for initial, final in ((a, b), (c, d)):
        base = dict(sweep__quantity="f", quantum__k=k, quantum__transitions=f"{initial}>{final}")
        FIGURE_TRENDS += [
            (f"f{k} {initial}->{final} vs R_a, R_b 5", dict(base, geometry__r_outer=5, sweep__stop=4.5), "f"),
            (f"f{k} {initial}->{final} vs R_a, gap 1", dict(base, sweep__variable="both-fixed-gap"), "f"),
            (f"f{k} {initial}->{final} vs R_a, left-confined", dict(base), "f"),
        ]
for k in (2, 3, 4):
    base = dict(sweep__quantity="alpha", quantum__k=k, quantum__state="1s")
    FIGURE_TRENDS += [
        (f"alpha{k} 1s vs r_c, cavity", dict(base, sweep__variable="r_outer", sweep__start=0.5), "alpha"),
        (f"alpha{k} 1s vs R_a, R_b 5", dict(base, geometry__r_outer=5, sweep__stop=4.5), "alpha"),
        (f"alpha{k} 1s vs R_a, gap 1", dict(base, sweep__variable="both-fixed-gap"), "alpha"),
        (f"alpha{k} 1s vs R_a, left-confined", dict(base), "alpha"),
    ]
for rb in (1, 2, 5, 10):
    FIGURE_TRENDS.append((f"alpha1 1s vs R_a, R_b {rb}",
                          dict(sweep__quantity="alpha", quantum__state="1s", geometry__r_outer=rb,
                               sweep__stop=0.9 * rb, sweep__step=rb / 10), "alpha"))
for state in ("1s", "2p", "3d", "4f", "5g"):
    FIGURE_TRENDS.append((f"S_r {state} vs R_a, gap 1",
                          dict(sweep__quantity="entropy", sweep__variable="both-fixed-gap", quantum__state=state,
                               sweep__stop=8, sweep__step=1), "s_r"))
FIGURE_TRENDS.append(("S_r 1s vs R_a, left-confined",
                      dict(sweep__quantity="entropy", quantum__state="1s", sweep__step=1), "s_r"))


@pytest.mark.parametrize("label, keys, column", FIGURE_TRENDS, ids=[t[0] for t in FIGURE_TRENDS])
def test_figure_trend_increasing(criterion, label, keys, column):
    keys = {"sweep__start": 0, "sweep__stop": 8, "sweep__step": 0.5, **keys}
    ok, values = _increasing(_sweep(**keys), column)
    criterion(f"trend: {label} increases", [] if ok else [f"values {values}"], f"{len(values)} points")
