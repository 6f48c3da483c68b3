"""Extended diagrams and Borel-de Siebenthal moves.

A semisimple move deletes a node of prime mark from the extended diagram;
a Levi move deletes an ordinary node and leaves a one-dimensional torus.
Iterating both reaches every connected subgroup containing a maximal torus.
"""

# %% Extended diagram of G2: the affine node hangs off the long root
from homrat import SimpleType, enumerate_maximal_rank, extended_diagram, levi_moves, parse_type, semisimple_moves

ext = extended_diagram(SimpleType("G", 2))
print("marks with node 0:", ext.marks_ext, "edges (i, j, bonds):", ext.edges)

# %% Semisimple moves on C_n split it as C_m + C_(n-m), always at comark 1
for n in range(2, 7):
    moves = semisimple_moves(SimpleType("C", n))
    print(f"C{n}:", sorted({str(m.result) for m in moves}), "comarks", {m.comark_at_node for m in moves})

# %% B3 has one removal whose comark is 2: the 3A1 subgroup is not simply connected
for m in semisimple_moves(SimpleType("B", 3)) + levi_moves(SimpleType("B", 3)):
    print(f"{m.kind:<17} node {m.node}: {m.result}  comark {m.comark_at_node}")

# %% Breadth-first enumeration keeps a shortest chain for each subgroup
for h in enumerate_maximal_rank(parse_type("C3"), depth=2):
    chain = " -> ".join(f"{m.kind[:4]}:{m.node}@{m.target}" for m in h.chain)
    print(f"{str(h):<10} dim {h.dim:<3} {chain}")
