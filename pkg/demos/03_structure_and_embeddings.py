"""Outerplane structure: boundary, chords, faces, and unavoidable patterns.

Every 2-connected outerplanar graph has a unique boundary cycle; the other
edges are non-crossing chords, and the chords tile the interior into
faces.  Hosts of minimum degree 2 always contain one of three small
patterns (adjacent 2-vertices; a triangle with a 2-vertex and 3-vertex;
two triangles sharing a 4-vertex), and when the first two are absent a
closed fan of triangles must appear -- the lever behind the degree-4
labeler.
"""

from outerlabel import Graph, recognize_embed, endfaces
from outerlabel import generators as gen
from outerlabel.embedding import NotOuterplanar, boundary_decompose
from outerlabel.structure import enumerate_chains, find_closed_chain, find_configuration

# --- recognition --------------------------------------------------------------

g = Graph.from_edges([(i, (i + 1) % 8) for i in range(8)] + [(0, 3), (4, 7)])
emb = recognize_embed(g)
print("boundary:", emb.boundary)
print("chords:  ", sorted(emb.inner_edges))
print("faces:   ", [f.vertices for f in emb.inner_faces])
print("endfaces:", [f.vertices for f in endfaces(emb)])

k4 = Graph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
try:
    recognize_embed(k4)
except NotOuterplanar as exc:
    print("K4 rejected:", exc)

# --- the chord-endpoint decomposition ----------------------------------------

xs, ys, qs = boundary_decompose(emb)
print("\nchord endpoints in boundary order:", xs)
print("2-vertex runs between them:", ys, "run lengths:", qs)

# --- unavoidable configurations ------------------------------------------------

for name, h in [
    ("5-cycle", gen.gen_cycle(5)),
    ("square + chord", Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
    ("merged fan", gen.gen_closed_chain(2, "merged")),
]:
    cfg = find_configuration(recognize_embed(h))
    print(f"{name:15s} -> {cfg.kind} at {cfg.witnesses}")

# --- chains of triangles --------------------------------------------------------

fan = gen.gen_closed_chain(3, "merged")
emb = recognize_embed(fan)
for ch in enumerate_chains(emb):
    print("chain:", ch.spine, "closing chord:", ch.closing_inner_edge)
best = find_closed_chain(emb)
print("selected closed chain:", best.spine, "attachments:", best.attachments)
