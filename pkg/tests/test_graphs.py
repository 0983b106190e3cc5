from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import generators as gen
from outerlabel.graphs import Graph, norm_edge


def bfs_connected(vertices: set[int], adj: dict[int, set[int]]) -> bool:
    if not vertices:
        return True
    seen = {next(iter(sorted(vertices)))}
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for u in adj[v]:
            if u in vertices and u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen == vertices


def brute_cut_vertices(g: Graph) -> set[int]:
    out = set()
    for v in g.vertices:
        rest = set(g.vertices) - {v}
        adj = {u: {w for w in g.neighbors(u) if w != v} for u in rest}
        if len(rest) >= 1 and not bfs_connected(rest, adj):
            out.add(v)
    return out


def brute_bridges(g: Graph) -> set[tuple[int, int]]:
    out = set()
    vs = set(g.vertices)
    for e in g.edges:
        adj = {
            u: {w for w in g.neighbors(u) if norm_edge(u, w) != e}
            for u in vs
        }
        if not bfs_connected(vs, adj):
            out.add(e)
    return out


def test_degrees():
    star = Graph(range(5), [(0, i) for i in range(1, 5)])
    assert star.degree(0) == 4
    assert star.degree(3) == 1
    iso = Graph([0, 1], [])
    assert iso.degree(0) == 0
    c6 = gen.gen_cycle(6)
    assert all(c6.degree(v) == 2 for v in c6.vertices)


def test_max_min_degree():
    c5 = gen.gen_cycle(5)
    assert c5.max_degree() == 2 and c5.min_degree() == 2
    p4 = gen.gen_path(4)
    assert p4.max_degree() == 2 and p4.min_degree() == 1
    with pytest.raises(ValueError):
        Graph([], []).max_degree()


def test_chain_instance_degree():
    # fan of two triangles closed by the end-to-end chord
    g = gen.gen_closed_chain(2, "none")
    assert g.max_degree() == 4
    assert g.degree(2) == 4  # the shared spine vertex


def test_cut_vertices_examples():
    assert gen.gen_cycle(6).cut_vertices() == set()
    p5 = gen.gen_path(5)
    assert p5.cut_vertices() == {1, 2, 3}
    twotri = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert twotri.cut_vertices() == {2} == brute_cut_vertices(twotri)


def test_bridges_examples():
    assert gen.gen_cycle(6).bridges() == set()
    assert gen.gen_path(5).bridges() == {(0, 1), (1, 2), (2, 3), (3, 4)}
    tri_pend = Graph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert tri_pend.bridges() == {(2, 3)} == brute_bridges(tri_pend)


def test_biconnected_components_examples():
    comps = gen.gen_cycle(6).biconnected_components()
    assert len(comps) == 1 and comps[0].n == 6
    twotri = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    sizes = sorted(b.n for b in twotri.biconnected_components())
    assert sizes == [3, 3]
    p3 = gen.gen_path(3)
    assert sorted(b.edges for b in p3.biconnected_components()) == [
        ((0, 1),), ((1, 2),)
    ]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_connectivity_against_brute_force(seed):
    g = gen.gen_glued_outerplanar(8, seed=seed, constraints={}, retries=10)
    assert g.cut_vertices() == brute_cut_vertices(g)
    assert g.bridges() == brute_bridges(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_blocks_partition_edges(seed):
    g = gen.gen_glued_outerplanar(9, seed=seed, constraints={}, retries=10)
    blocks = g.biconnected_components()
    covered = list(itertools.chain.from_iterable(b.edges for b in blocks))
    assert sorted(covered) == list(g.edges)
    cuts = g.cut_vertices()
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            shared = set(blocks[i].vertices) & set(blocks[j].vertices)
            assert len(shared) <= 1
            assert all(v in cuts for v in shared)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_bridge_iff_no_cycle(seed):
    g = gen.gen_glued_outerplanar(8, seed=seed, constraints={}, retries=10)
    bridges = g.bridges()
    for e in g.edges:
        # an edge lies on a cycle iff its endpoints stay connected without it
        vs = set(g.vertices)
        adj = {
            u: {w for w in g.neighbors(u) if norm_edge(u, w) != e} for u in vs
        }
        seen = {e[0]}
        frontier = [e[0]]
        while frontier:
            v = frontier.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        on_cycle = e[1] in seen
        assert (e in bridges) == (not on_cycle)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_leaf_block_exists_when_cut(seed):
    g = gen.gen_glued_outerplanar(10, seed=seed, constraints={}, retries=10)
    cuts = g.cut_vertices()
    if not cuts:
        return
    blocks = g.biconnected_components()
    assert any(len(set(b.vertices) & cuts) == 1 for b in blocks)


def test_remove_and_add():
    c4 = gen.gen_cycle(4)
    p3 = c4.remove_vertices([3])
    assert p3.n == 3 and p3.m == 2
    assert c4.remove_vertices([]) == c4
    p = gen.gen_path(3)
    c3 = p.add_edges([(0, 2)])
    assert c3.m == 3 and all(c3.degree(v) == 2 for v in c3.vertices)
    grown = p.add_edges([(2, 9)])
    assert grown.has_vertex(9) and grown.has_edge(2, 9)


def test_remove_edges():
    c4 = gen.gen_cycle(4)
    broken = c4.remove_edges([(0, 1)])
    assert broken.m == 3 and not broken.has_edge(0, 1)
    assert broken.n == 4


def test_rejects_malformed():
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 0)])
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 2)])
