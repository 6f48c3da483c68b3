"""Root systems from Cartan matrices.

Every simple type gets its Cartan matrix in Bourbaki numbering, its positive
roots by closing under root strings, and the highest root with its marks.
Run with ``python demos/01_root_systems.py``.
"""

# %% Parsing types; aliases collapse to canonical names
from homrat import generate_roots, group_invariants, parse_type

for text in ["A2 + 2A1", "B2", "D3", "C1+C1", "1"]:
    print(f"{text!r:>12} -> {parse_type(text)}")

# %% G2: the short simple root is node 1, so the -3 sits in the long root's row
(g2,) = parse_type("G2")
rs = generate_roots(g2)
print("Cartan(G2) =", rs.cartan)
print("positive roots:", rs.positive_roots)
print("highest root marks", rs.marks, "comarks", rs.comarks, "Coxeter number", rs.coxeter_number)

# %% Dimensions: dim G = rank + 2 * #positive roots
for name in ["B3", "G2", "A3", "A2+2A1", "E8"]:
    gi = group_invariants(parse_type(name))
    print(f"{name:>7}: t={gi.rank} u={gi.num_pos_roots} dim={gi.dim}")

# %% Positive-root counts for every family up to rank 8
from homrat.catalog import simple_types

counts = {str(t): len(generate_roots(t).positive_roots) for t in simple_types(8)}
print(counts)
