"""Walk through the incidental degeneracy of a hydrogen atom in a shell.

Run with ``python demos/incidental_degeneracy.py``.
"""
from shellconf import ConfinementGeometry, GridSpec, coulomb, debye, exp_cosine, solve_radial
from shellconf.degeneracy import (
    count_by_category,
    count_total,
    enumerate_atlas,
    find_nodes_numeric,
    node_geometries,
)
from shellconf.hydrogen import HydrogenState, radial_nodes

########################################
## nodes of the free 3s state
########################################

state = HydrogenState(3, 0)
nodes = radial_nodes(state)
print("3s nodes (bohr):", ["%.10f" % r for r in nodes])   # (9 -/+ 3 sqrt 3) / 2

########################################
## every wall pair drawn from {0, nodes, inf}
########################################

for geometry, inside in node_geometries(state):
    energy = solve_radial(geometry, coulomb(), 0, inside + 1)[inside].energy
    print(f"{str(geometry):28s} nodes inside {inside}  E = {energy:.10f}")

# all six energies equal the free level -1/18

########################################
## counting: n(n+1)(n+2)/6 per level
########################################

for n in range(1, 7):
    by_regime = {k.value: v for k, v in count_by_category(n).items()}
    print(n, count_total(n), by_regime)

########################################
## the n = 4 atlas
########################################

for row in enumerate_atlas(4):
    print(f"{row.serial}  {row.label:3s} {str(row.geometry):28s} {row.regime.value:5s}"
          f" from {row.parent_label}  E = {row.energy:.8f}")

########################################
## plasma screening: nodes must be found numerically
########################################

spec = GridSpec()
for model in (debye(lam=0.01), exp_cosine(lam=0.01)):
    for n in (2, 3, 4):
        found = find_nodes_numeric(model, n, 0, spec)
        rows = enumerate_atlas(n, model)
        print(model.kind.value, n, ["%.6f" % r for r in found],
              "free E = %.9f" % rows[0].free_energy, len(rows), "rows")

# screening lifts the l-degeneracy, so only s states are listed
