"""Outerplanarity recognition and the boundary/chord/face embedding.

A connected outerplanar graph is handled block by block: every biconnected
block with three or more vertices has a unique Hamiltonian boundary cycle,
and all remaining block edges must be pairwise non-crossing chords of that
cycle.  "Clockwise" means the stored orientation of each cycle; there are
no coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Edge, Graph, norm_edge


class NotOuterplanar(ValueError):
    """Raised when some block has no boundary cycle or has crossing chords."""


@dataclass(frozen=True)
class Face:
    """An inner face as a cyclic vertex sequence, plus its chord count."""

    vertices: tuple[int, ...]
    inner_edge_count: int

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class BlockEmbedding:
    """One biconnected block: boundary cycle, chords, inner faces."""

    cycle: tuple[int, ...]
    chords: frozenset[Edge]
    faces: tuple[Face, ...]

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}

    def outer_edges(self) -> list[Edge]:
        c = self.cycle
        return [norm_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


@dataclass(frozen=True)
class OuterplanarEmbedding:
    graph: Graph
    blocks: tuple[BlockEmbedding, ...]
    bridge_edges: frozenset[Edge]

    @property
    def outer_edges(self) -> set[Edge]:
        out = set(self.bridge_edges)
        for b in self.blocks:
            out.update(b.outer_edges())
        return out

    @property
    def inner_edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for b in self.blocks:
            out.update(b.chords)
        return out

    @property
    def inner_faces(self) -> list[Face]:
        out: list[Face] = []
        for b in self.blocks:
            out.extend(b.faces)
        return out

    @property
    def boundary(self) -> tuple[int, ...]:
        """Boundary cycle of a 2-connected host (single block, no bridges)."""
        if self.bridge_edges or len(self.blocks) != 1:
            raise ValueError("boundary cycle is only stored for 2-connected hosts")
        b = self.blocks[0]
        if len(b.cycle) != self.graph.n:
            raise ValueError("boundary cycle is only stored for 2-connected hosts")
        return b.cycle

    def is_biconnected(self) -> bool:
        return not self.bridge_edges and len(self.blocks) == 1 and (
            len(self.blocks[0].cycle) == self.graph.n
        )

    def reversed(self) -> "OuterplanarEmbedding":
        """The same embedding with every boundary cycle read the other way."""
        blocks = tuple(
            _finish_block(b.cycle[::-1], b.chords) for b in self.blocks
        )
        return OuterplanarEmbedding(self.graph, blocks, self.bridge_edges)


def _chords_cross(cycle_pos: dict[int, int], e: Edge, f: Edge) -> bool:
    a, b = sorted((cycle_pos[e[0]], cycle_pos[e[1]]))
    c, d = sorted((cycle_pos[f[0]], cycle_pos[f[1]]))
    inside_c = a < c < b
    inside_d = a < d < b
    if {a, b} & {c, d}:
        return False
    return inside_c != inside_d


def _boundary_cycle(block: Graph) -> tuple[int, ...]:
    """The Hamiltonian boundary cycle of a 2-connected outerplanar block.

    Works by repeatedly deleting a degree-2 vertex (splicing its neighbors
    together when they are not yet adjacent) and reinserting on the way
    back up.  A 2-connected graph with minimum degree 3 has no outerplane
    drawing, so getting stuck is a sound rejection.
    """
    n = block.n
    if block.m > 2 * n - 3:
        raise NotOuterplanar("too many edges for an outerplane drawing")
    adj: dict[int, set[int]] = {v: set(block.neighbors(v)) for v in block.vertices}
    removed: list[tuple[int, int, int]] = []  # (vertex, left, right)
    while len(adj) > 3:
        v2 = next(
            (v for v in sorted(adj) if len(adj[v]) == 2),
            None,
        )
        if v2 is None:
            raise NotOuterplanar("a block has minimum degree 3")
        a, b = sorted(adj[v2])
        removed.append((v2, a, b))
        del adj[v2]
        adj[a].discard(v2)
        adj[b].discard(v2)
        adj[a].add(b)
        adj[b].add(a)
    if any(len(ns) != 2 for ns in adj.values()):
        raise NotOuterplanar("block does not reduce to a triangle")
    cycle = list(sorted(adj))
    if cycle[2] not in adj[cycle[0]]:
        raise NotOuterplanar("block does not reduce to a triangle")
    # reinsert in reverse removal order; neighbors must sit side by side
    for v, a, b in reversed(removed):
        pos = {u: i for i, u in enumerate(cycle)}
        ia, ib = pos[a], pos[b]
        k = len(cycle)
        if (ia + 1) % k == ib:
            cycle.insert(ib, v)
        elif (ib + 1) % k == ia:
            cycle.insert(ia, v)
        else:
            raise NotOuterplanar("chords of a block interleave")
    return _canonical_cycle(cycle)


def _canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and orient toward its smaller neighbor."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    rot = [cycle[(i + j) % k] for j in range(k)]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def _trace_faces(cycle: Sequence[int], chords: Iterable[Edge]) -> tuple[Face, ...]:
    """Inner faces of one block from the rotation system induced by the cycle."""
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    chords = list(chords)
    adj: dict[int, list[int]] = {v: [] for v in cycle}
    edges: list[Edge] = []
    for i, v in enumerate(cycle):
        edges.append(norm_edge(v, cycle[(i + 1) % k]))
    edges.extend(chords)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rotation = {
        v: sorted(ns, key=lambda u: (pos[u] - pos[v]) % k) for v, ns in adj.items()
    }
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for v, ns in rotation.items():
        for i, u in enumerate(ns):
            nxt[(v, u)] = (v, ns[(i + 1) % len(ns)])

    chordset = set(chords)
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    outer = {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    for u, v in list(nxt):
        if (u, v) in seen:
            continue
        walk = []
        cur = (u, v)
        while cur not in seen:
            seen.add(cur)
            walk.append(cur[0])
            cur = (cur[1], nxt[(cur[1], cur[0])][1])
        if any(d in outer for d in zip(walk, walk[1:] + walk[:1])):
            continue  # the outer face is traced along the boundary direction
        inner = sum(
            1
            for i in range(len(walk))
            if norm_edge(walk[i], walk[(i + 1) % len(walk)]) in chordset
        )
        faces.append(Face(tuple(walk), inner))
    faces.sort(key=lambda f: f.key())
    return tuple(faces)


def _finish_block(cycle: Sequence[int], chords: Iterable[Edge]) -> BlockEmbedding:
    chordset = frozenset(chords)
    return BlockEmbedding(tuple(cycle), chordset, _trace_faces(cycle, chordset))


def embed_block(block: Graph) -> BlockEmbedding:
    cycle = _boundary_cycle(block)
    pos = {v: i for i, v in enumerate(cycle)}
    k = len(cycle)
    boundary = {
        norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)
    }
    chords = [e for e in block.edges if e not in boundary]
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if _chords_cross(pos, chords[i], chords[j]):
                raise NotOuterplanar(f"chords {chords[i]} and {chords[j]} interleave")
    return _finish_block(cycle, chords)


def from_boundary(graph: Graph, boundary: Sequence[int]) -> OuterplanarEmbedding:
    """Embedding of a 2-connected graph whose boundary order is already known."""
    if sorted(boundary) != list(graph.vertices):
        raise ValueError("boundary must visit every vertex exactly once")
    k = len(boundary)
    cyc_edges = {norm_edge(boundary[i], boundary[(i + 1) % k]) for i in range(k)}
    if not cyc_edges <= set(graph.edges):
        raise ValueError("boundary is not a cycle of the graph")
    chords = [e for e in graph.edges if e not in cyc_edges]
    pos = {v: i for i, v in enumerate(boundary)}
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if _chords_cross(pos, chords[i], chords[j]):
                raise NotOuterplanar(f"chords {chords[i]} and {chords[j]} interleave")
    block = _finish_block(tuple(boundary), chords)
    return OuterplanarEmbedding(graph, (block,), frozenset())


def recognize_embed(g: Graph) -> OuterplanarEmbedding:
    """Recognize outerplanarity and build the embedding, or raise NotOuterplanar."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("recognition expects a connected graph")
    blocks: list[BlockEmbedding] = []
    bridges: set[Edge] = set()
    for blk in g.biconnected_components():
        if blk.n == 2:
            bridges.add(blk.edges[0])
        else:
            blocks.append(embed_block(blk))
    blocks.sort(key=lambda b: min(b.cycle))
    return OuterplanarEmbedding(g, tuple(blocks), frozenset(bridges))


def endfaces(emb: OuterplanarEmbedding) -> list[Face]:
    """Inner faces carrying exactly one chord."""
    return [f for f in emb.inner_faces if f.inner_edge_count == 1]


def block_endfaces(block: BlockEmbedding) -> list[Face]:
    return [f for f in block.faces if f.inner_edge_count == 1]


def boundary_decompose(
    emb: OuterplanarEmbedding, start: int | None = None
) -> tuple[list[int], list[list[int]], list[int]]:
    """Split the boundary of a 2-connected, maximum-degree-3 host.

    Returns the chord endpoints ``x_1..x_p`` in clockwise order, the runs of
    degree-2 vertices strictly between consecutive chord endpoints, and the
    run lengths.  ``start`` picks which chord endpoint becomes ``x_1``
    (default: the one with the smallest id).
    """
    g = emb.graph
    boundary = emb.boundary
    if g.max_degree() != 3:
        raise ValueError("decomposition expects maximum degree 3")
    three = [v for v in boundary if g.degree(v) == 3]
    if not three:
        raise ValueError("host has no chords to decompose around")
    if start is None:
        start = min(three)
    elif g.degree(start) != 3:
        raise ValueError(f"start vertex {start} is not a chord endpoint")
    k = len(boundary)
    i0 = boundary.index(start)
    order = [boundary[(i0 + j) % k] for j in range(k)]
    xs: list[int] = []
    ys: list[list[int]] = []
    for v in order:
        if g.degree(v) == 3:
            xs.append(v)
            ys.append([])
        else:
            ys[-1].append(v)
    qs = [len(run) for run in ys]
    return xs, ys, qs
