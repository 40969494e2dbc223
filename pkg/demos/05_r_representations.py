"""R-representations: the tree case and the one-parameter family on a cycle."""
import json
from fractions import Fraction

from coxcell import CycloNumber, affine_a, classify, holonomy, type_a
from coxcell.rrep import cycle_rep, f_map, find_cycle

# %% Trees have a single such representation
(entry,) = classify(type_a(4))
print(json.dumps(entry.to_json()))

# %% On the triangle each x gives V_x; x = 1 drops a fixed line
g = affine_a(2)
for x in [Fraction(1), Fraction(2), Fraction(-1, 3), CycloNumber.zeta(3)]:
    tilde, quo, U = cycle_rep(g, x)
    print(f"x = {x!r}: dim V~ = {tilde.dim}, dim U = {len(U)}, dim V = {quo.dim}, holonomy = {holonomy(quo)!r}")

# %% The holonomy is the product of the f-maps around the cycle
_, rep, _ = cycle_rep(affine_a(3), Fraction(7, 2))
cycle = find_cycle(rep.graph)
for a, b in zip(cycle, cycle[1:] + cycle[:1]):
    print(f"f_{b}{a} =", f_map(rep, b, a))
print("holonomy:", holonomy(rep))
