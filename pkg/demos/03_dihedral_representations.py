"""Irreducible representations of dihedral groups and the element C_{w_rt} at q = 1."""
from coxcell.dihedral import cwrt_action, decompose, irreducible_kinds, irreducible_matrices
from coxcell.reps import direct_sum, MatrixRep
from coxcell import dihedral_graph

# %% The catalog for m = 6 and its matrices
m = 6
for kind in irreducible_kinds(m):
    irr = irreducible_matrices(m, kind)
    C = cwrt_action(irr.matrices["r"], irr.matrices["t"], m)
    print(f"{kind:8s} dim {irr.dim}  C_w_rt ->", C)

# %% Only the sign representation survives C_{w_rt}: it acts there by (-1)^m 2m
for m in range(2, 9):
    irr = irreducible_matrices(m, "sign")
    print(m, cwrt_action(irr.matrices["r"], irr.matrices["t"], m))

# %% Character decomposition of a direct sum
g = dihedral_graph(5)
parts = ["rho:1", "rho:2", "rho:2", "sign"]
rep = direct_sum(*[MatrixRep(g, irreducible_matrices(5, k).matrices, 10) for k in parts])
print(decompose(rep["r"], rep["t"], 5))
