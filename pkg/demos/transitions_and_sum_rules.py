"""Multipole oscillator strengths in cavities, shells and open shells.

Run with ``python demos/transitions_and_sum_rules.py``.
"""
from shellconf import ConfinementGeometry, coulomb, solve_radial
from shellconf.angular import selection_final_ells, wigner3j_zero_sq
from shellconf.transitions import oscillator_strength, sum_rule

########################################
## angular factors and selection rules
########################################

for k in (1, 2, 3):
    for ell in (0, 1, 2):
        finals = selection_final_ells(k, ell)
        print(f"k={k} l={ell} -> l' in {finals}",
              [str(wigner3j_zero_sq(lp, k, ell)) for lp in finals])

########################################
## dipole strengths from the ground state
########################################

shells = [ConfinementGeometry(0, 1), ConfinementGeometry(1, 5), ConfinementGeometry(0.5, 2),
          ConfinementGeometry(), ConfinementGeometry(1.0)]
for geometry in shells:
    s = solve_radial(geometry, coulomb(), 0, 3)
    p = solve_radial(geometry, coulomb(), 1, 3)
    f12 = oscillator_strength(1, s[0], p[0]).f_value
    f13 = oscillator_strength(1, s[0], p[1]).f_value
    down = oscillator_strength(1, p[0], s[0]).f_value
    print(f"{str(geometry):20s} 1s->2p {f12:.8f}  1s->3p {f13:.8f}  2p->1s {down:.8f}")

# emission strengths are negative: (2l+1) f(a->b) = -(2l'+1) f(b->a)

########################################
## Thomas-Reiche-Kuhn type sum rules
########################################

for geometry in shells[:4]:
    ground = solve_radial(geometry, coulomb(), 0, 1)[0]
    for k in (1, 2, 3, 4):
        lhs, rhs = sum_rule(k, ground)
        print(f"{str(geometry):20s} k={k}  sum f = {lhs:.10f}  k<r^(2k-2)> = {rhs:.10f}")
