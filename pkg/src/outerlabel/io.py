"""File formats: edge-list text, graph/labeling JSON, DOT, embedding JSON."""

from __future__ import annotations

import json
from typing import Any

from .embedding import OuterplanarEmbedding
from .graphs import Graph, norm_edge
from .labeling import TotalLabeling


class FormatError(ValueError):
    pass


def parse_edgelist(text: str) -> Graph:
    """One ``u v`` pair per line; ``#`` starts a comment.

    Vertices are the endpoints that appear (the format cannot express
    isolated vertices).
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: non-integer vertex id") from exc
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: vertex ids must be nonnegative")
        edges.append((u, v))
    if not edges:
        raise FormatError("empty edge list")
    return Graph.from_edges(edges)


def dump_edgelist(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError('graph JSON needs {"n": int, "edges": [[u, v], ...]}')
    try:
        return Graph.from_edges([tuple(e) for e in data["edges"]], n=int(data["n"]))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def dump_graph_json(g: Graph) -> str:
    n = (max(g.vertices) + 1) if g.vertices else 0
    return json.dumps({"n": n, "edges": [list(e) for e in g.edges]})


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "json":
        return parse_graph_json(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def labeling_to_json(f: TotalLabeling) -> dict[str, Any]:
    vertices = {
        str(v): lab for v, lab in f.assignment.items() if isinstance(v, int)
    }
    edges = [
        [e[0], e[1], lab]
        for e, lab in f.assignment.items()
        if isinstance(e, tuple)
    ]
    edges.sort()
    return {"k": f.k, "vertices": vertices, "edges": edges}


def labeling_from_json(data: dict[str, Any], g: Graph) -> TotalLabeling:
    if not isinstance(data, dict) or "k" not in data:
        raise FormatError('labeling JSON needs "k", "vertices", "edges"')
    f = TotalLabeling(g, int(data["k"]))
    for v, lab in data.get("vertices", {}).items():
        vi = int(v)
        if not g.has_vertex(vi):
            raise FormatError(f"labeling mentions unknown vertex {vi}")
        f.set(vi, int(lab))
    for item in data.get("edges", []):
        u, v, lab = item
        e = norm_edge(int(u), int(v))
        if e not in set(g.edges):
            raise FormatError(f"labeling mentions unknown edge {e}")
        f.set(e, int(lab))
    return f


def to_dot(g: Graph, f: TotalLabeling | None = None) -> str:
    lines = ["graph G {"]
    for v in g.vertices:
        if f is not None and f.vertex(v) is not None:
            lines.append(f'  {v} [label="{v}:{f.vertex(v)}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        if f is not None and f.edge(u, v) is not None:
            lines.append(f'  {u} -- {v} [label="{f.edge(u, v)}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_to_json(emb: OuterplanarEmbedding) -> dict[str, Any]:
    blocks = []
    for b in emb.blocks:
        blocks.append(
            {
                "boundary": list(b.cycle),
                "chords": sorted(list(e) for e in b.chords),
                "faces": [
                    {"vertices": list(fc.vertices), "chords": fc.inner_edge_count}
                    for fc in b.faces
                ],
            }
        )
    return {
        "blocks": blocks,
        "bridges": sorted(list(e) for e in emb.bridge_edges),
        "outer_edges": sorted(list(e) for e in emb.outer_edges),
        "inner_edges": sorted(list(e) for e in emb.inner_edges),
    }
