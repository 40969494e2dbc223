"""Deciding whether a representation has a-value 1."""

from coxcell import MatrixRep, a1_criterion, classify_a_value, cwrt_annihilation, dihedral_graph, type_d
from coxcell.reps import direct_sum, sign_rep, trivial_rep
from coxcell.rrep import geometric_rep

# %% The three classes
g = type_d(4)
for name, rep in [("trivial", trivial_rep(g)), ("geometric", geometric_rep(g)), ("sign", sign_rep(g))]:
    print(f"{name:9s}", classify_a_value(rep).to_json())

# %% A hidden sign summand is found by a common -1 eigenvector
g = dihedral_graph(3)
rho = MatrixRep(g, {"r": [[-1, 1], [0, 1]], "t": [[1, 0], [1, -1]]})
mixed = direct_sum(rho, sign_rep(g))
w = a1_criterion(mixed)
print("witness pair", (w.r, w.t), "vector", [str(x) for x in w.vector])

# %% The same verdict from C_{w_rt} annihilation
for rep in (rho, mixed):
    print(a1_criterion(rep) is None, cwrt_annihilation(rep))
