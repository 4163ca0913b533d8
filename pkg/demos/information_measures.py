"""Shannon entropy and Onicescu energy in position and momentum space.

Run with ``python demos/information_measures.py``.
"""
import numpy as np

from shellconf import ConfinementGeometry, coulomb, entropy_report, solve_radial
from shellconf.information import BBM_BOUND, angular_entropy, momentum_transform

########################################
## the free 1s momentum function against its closed form
########################################

ground = solve_radial(ConfinementGeometry(), coulomb(), 0, 1)[0]
wf = momentum_transform(ground)
exact = 4 * np.sqrt(2 / np.pi) / (1 + wf.momenta**2) ** 2
print("norm", wf.norm, "max deviation", np.max(np.abs(wf.values - exact)))

########################################
## angular parts
########################################

for ell in range(4):
    print(ell, angular_entropy(ell))

########################################
## ground state across regimes
########################################

print("BBM bound", BBM_BOUND)
for geometry in (ConfinementGeometry(), ConfinementGeometry(0, 1), ConfinementGeometry(1.8, 2),
                 ConfinementGeometry(0, 10), ConfinementGeometry(5.0)):
    rep = entropy_report(geometry)
    print(f"{str(geometry):12s} S_r {rep.s_r_full:10.6f} S_p {rep.s_p_full:10.6f}"
          f" S_t {rep.s_total:10.6f}  E_t {rep.e_total:.6e}  BBM ok: {rep.satisfies_bbm}")

# squeezing the shell sharpens the position density and spreads the momentum one
