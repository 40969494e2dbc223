"""Lusztig's a-function and the two-sided cells of D_m and A_3."""
from coxcell import FiniteCoxeterGroup, a_values, dihedral_graph, h_constants, lr_cells, type_a
from coxcell.hecke import cell_rep_matrices

# %% Structure constants of D4 and the a-value of every element
h = h_constants(FiniteCoxeterGroup.from_graph(dihedral_graph(4)))
a = a_values(h)
for w in h.group:
    print(f"a({w}) = {a[w]}")

# %% Cells and their order, lowest cell first
cells = lr_cells(h.table)
for i, block in enumerate(cells.blocks):
    print(i, [str(w) for w in block], "a =", a[block[0]])
print("covering relations (lower, upper):", cells.hasse())
print(cells.to_dot(a))

# %% The longest element acts by zero on the cell module of the a-value-1 cell
middle = cells.blocks[1]
mats = cell_rep_matrices(middle, h)
print("C_w0 on J_C1:", mats[h.group.longest])

# %% A3: five cells with a-values 0, 1, 2, 3, 6
h = h_constants(FiniteCoxeterGroup.from_graph(type_a(3)))
a = a_values(h)
for block in lr_cells(h.table).blocks:
    print(len(block), "elements, a =", a[block[0]])
