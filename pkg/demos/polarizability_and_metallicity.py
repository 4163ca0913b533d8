"""Dipole polarizabilities and the Herzfeld metallization threshold.

Run with ``python demos/polarizability_and_metallicity.py``.
"""
from shellconf import ConfinementGeometry, find_rm, polarizability
from shellconf.metallicity import herzfeld_check
from shellconf.response import channel_decomposition, negative_polarizability_scan

########################################
## the free atom: exact values 4.5, 120, 1012.5, 4992, 176, 1863
########################################

free = ConfinementGeometry()
for state in ("1s", "2s", "3s", "4s", "2p", "3d"):
    resp = polarizability(1, state, free)
    print(state, "%.6f" % resp.total, {lp: round(v, 4) for lp, v in resp.per_channel.items()})

print([t.notation for t in channel_decomposition(1, 2)])

########################################
## negative polarizabilities of excited s states in cavities
########################################

cavities = [ConfinementGeometry(0, rb) for rb in (1, 2, 5, 10)]
for row in negative_polarizability_scan(["2s", "3s"], cavities):
    print(f"{str(row.geometry):12s} {row.state} {row.alpha:14.6f} {row.sign}")

# the 2s -> 2p term has dE < 0 once walls push 2s above 2p

########################################
## Herzfeld criterion alpha1 >= V
########################################

for ra in (0.0, 0.5, 1.0, 1.5, 1.8):
    point = herzfeld_check(ConfinementGeometry(ra, 2.0), "1s")
    print(f"R_a = {ra:.1f}  V = {point.volume_param:.4f}  alpha1 = {point.alpha1:.6f}  metallic: {point.metallic}")

for rb in (1, 2, 5, 10):
    res = find_rm(rb, "1s")
    print(f"R_b = {rb:2d}  R_m = {res.r_m:.6f}  metallic zone width {res.metallic_zone:.6f}")
