"""Labelings, the verifier, and the two symmetries.

A (2,1)-total labeling assigns integers to vertices *and* edges: a vertex
and an edge touching it must differ by at least 2, while adjacent vertices
(or edges sharing an endpoint) just need distinct labels.
"""

from outerlabel import (
    Graph,
    TotalLabeling,
    complement,
    incidence_graph,
    label_outerplanar,
    span,
    verify,
)

# --- a single edge, by hand -------------------------------------------------

k2 = Graph.from_edges([(0, 1)])
f = TotalLabeling(k2, k=3, assignment={0: 0, 1: 1, (0, 1): 3})
print("hand labeling of one edge:", f.assignment)
print("violations:", verify(f, 2))          # -> [] means valid
print("span:", span(f))                     # 3 is optimal here

bad = TotalLabeling(k2, k=3, assignment={0: 0, 1: 1, (0, 1): 2})
print("too-close labeling:", [str(v) for v in verify(bad, 2)])

# --- the complement symmetry ------------------------------------------------

fbar = complement(f)
print("complement:", fbar.assignment, "still valid:", not verify(fbar, 2))

# --- convenience entry point ------------------------------------------------

hexagon = Graph.from_edges([(i, (i + 1) % 6) for i in range(6)])
g = hexagon.add_edges([(0, 3)])
lab = label_outerplanar(g)
print("\nhexagon + chord labeled automatically:")
print(" vertices:", {v: lab.vertex(v) for v in g.vertices})
print(" edges:   ", {e: lab.get(e) for e in g.edges})
print(" span:", span(lab), "(never more than max degree + 2)")

# --- the subdivision view ---------------------------------------------------

# Subdividing every edge turns a total labeling into a plain vertex
# labeling with gap 2 across edges and distinct labels at distance two.
ig, midpoints = incidence_graph(k2)
print("\nsubdivided single edge has", ig.n, "vertices;", dict(midpoints))
