"""Kazhdan-Lusztig polynomials of small Coxeter groups."""
from coxcell import FiniteCoxeterGroup, c_basis, kl_table, type_a, dihedral_graph

# %% Dihedral groups: every P_{y,w} is 1
G = FiniteCoxeterGroup.from_graph(dihedral_graph(5))
table = kl_table(G)
print("D5 has", len(G), "elements;", len(table.P), "Bruhat pairs")
print("distinct polynomials:", {repr(p) for p in table.P.values()})

# %% A3 is the first place a nontrivial polynomial shows up
G = FiniteCoxeterGroup.from_graph(type_a(3))
table = kl_table(G)
g = G.graph
print("P(s2, s2s1s3s2) =", table.poly(g("s2"), g("s2", "s1", "s3", "s2")))
for (y, w), p in sorted(table.P.items()):
    if p.degree() > 0:
        print(f"  P({G.elements[y]}, {G.elements[w]}) = {p!r}")

# %% The C-basis in terms of T: C_s = T_s - v
print("C_s1 =", c_basis(g("s1"), table))
print("C_w0 has", len(c_basis(G.longest, table).terms), "terms")
