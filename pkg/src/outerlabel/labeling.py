"""Total labelings of vertices and edges, and the validity verifier.

A labeling assigns integers from ``{0..k}`` to vertices and edges.  It is
valid at separation ``p`` when every vertex differs from each incident edge
by at least ``p``, and adjacent vertices (or edges sharing an endpoint)
carry distinct labels.  The verifier below is the single source of truth:
every constructive labeler's output is checked through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graphs import Edge, Element, Graph, norm_edge


@dataclass(frozen=True)
class Violation:
    kind: str  # see VIOLATION_KINDS
    witnesses: tuple[Element, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.witnesses}"


VIOLATION_KINDS = (
    "vertex-edge-too-close",
    "adjacent-vertices-equalish",
    "adjacent-edges-equalish",
    "unlabeled-element",
    "label-out-of-range",
)


@dataclass
class TotalLabeling:
    """Partial or total assignment from vertices and edges to ``{0..k}``."""

    graph: Graph
    k: int
    assignment: dict[Element, int] = field(default_factory=dict)

    def get(self, element: Element) -> int | None:
        return self.assignment.get(element)

    def vertex(self, v: int) -> int | None:
        return self.assignment.get(v)

    def edge(self, u: int, v: int) -> int | None:
        return self.assignment.get(norm_edge(u, v))

    def set(self, element: Element, label: int) -> None:
        self.assignment[element] = label

    def set_edge(self, u: int, v: int, label: int) -> None:
        self.assignment[norm_edge(u, v)] = label

    def is_total(self) -> bool:
        return all(e in self.assignment for e in self.graph.elements())

    def copy(self) -> "TotalLabeling":
        return TotalLabeling(self.graph, self.k, dict(self.assignment))

    def update(self, other: Mapping[Element, int]) -> None:
        self.assignment.update(other)


def span(f: TotalLabeling) -> int:
    """Largest assigned label."""
    if not f.assignment:
        raise ValueError("empty labeling has no span")
    return max(f.assignment.values())


def verify(f: TotalLabeling, p: int = 2) -> list[Violation]:
    """All constraint violations of ``f`` at vertex-edge separation ``p``.

    An empty list means the labeling is a valid (p,1)-total labeling.
    The scan is deterministic and exhaustive.
    """
    g = f.graph
    a = f.assignment
    out: list[Violation] = []

    for el in g.elements():
        lab = a.get(el)
        if lab is None:
            out.append(Violation("unlabeled-element", (el,)))
        elif not (0 <= lab <= f.k):
            out.append(Violation("label-out-of-range", (el,)))

    for u, v in g.edges:
        lu, lv = a.get(u), a.get(v)
        if lu is not None and lv is not None and abs(lu - lv) < 1:
            out.append(Violation("adjacent-vertices-equalish", (u, v)))

    for e in g.edges:
        le = a.get(e)
        if le is None:
            continue
        for v in e:
            lv = a.get(v)
            if lv is not None and abs(lv - le) < p:
                out.append(Violation("vertex-edge-too-close", (v, e)))

    for v in g.vertices:
        inc = g.incident_edges(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                le, lf = a.get(inc[i]), a.get(inc[j])
                if le is not None and lf is not None and abs(le - lf) < 1:
                    out.append(
                        Violation("adjacent-edges-equalish", (inc[i], inc[j]))
                    )
    return out


def is_valid(f: TotalLabeling, p: int = 2) -> bool:
    return not verify(f, p)


def complement(f: TotalLabeling, k: int | None = None) -> TotalLabeling:
    """The labeling ``z -> k - f(z)``; valid exactly when ``f`` is."""
    kk = f.k if k is None else k
    for el, lab in f.assignment.items():
        if lab > kk:
            raise ValueError(f"label {lab} at {el} exceeds bound {kk}")
    return TotalLabeling(
        f.graph, kk, {el: kk - lab for el, lab in f.assignment.items()}
    )


def incidence_graph(g: Graph) -> tuple[Graph, dict[int, Edge]]:
    """Subdivide every edge once.

    Returns the subdivided graph plus a map from each new midpoint vertex to
    its source edge.  Vertex labelings of the result at separations (p, 1)
    correspond exactly to (p,1)-total labelings of ``g``.
    """
    next_id = (max(g.vertices) + 1) if g.vertices else 0
    mid_of: dict[int, Edge] = {}
    edges: list[Edge] = []
    for e in g.edges:
        mid = next_id
        next_id += 1
        mid_of[mid] = e
        edges.append(norm_edge(e[0], mid))
        edges.append(norm_edge(mid, e[1]))
    vs = set(g.vertices) | set(mid_of)
    return Graph(vs, edges), mid_of


def pull_back(
    g: Graph, vertex_labels: Mapping[int, int], mid_of: Mapping[int, Edge], k: int
) -> TotalLabeling:
    """Turn a vertex labeling of ``incidence_graph(g)`` into a total labeling of ``g``."""
    f = TotalLabeling(g, k)
    for v in g.vertices:
        f.set(v, vertex_labels[v])
    for mid, e in mid_of.items():
        f.set(e, vertex_labels[mid])
    return f


def degree_lower_bound(g: Graph, p: int = 2) -> int:
    """Smallest conceivable span: at a maximum-degree vertex the incident
    edges need distinct labels all at distance >= p from the vertex label."""
    if g.m == 0:
        return 0
    return g.max_degree() + p - 1
