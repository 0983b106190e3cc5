from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import generators as gen
from outerlabel.embedding import (
    NotOuterplanar,
    boundary_decompose,
    endfaces,
    from_boundary,
    recognize_embed,
)
from outerlabel.graphs import Graph


def c6_chord():
    return Graph.from_edges([(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


def test_recognize_cycle():
    emb = recognize_embed(gen.gen_cycle(5))
    assert len(emb.boundary) == 5
    assert len(emb.outer_edges) == 5
    assert not emb.inner_edges
    assert len(emb.inner_faces) == 1


def test_recognize_c6_chord():
    emb = recognize_embed(c6_chord())
    assert emb.inner_edges == {(0, 3)}
    assert sorted(f.key() for f in emb.inner_faces) == [
        (0, 1, 2, 3), (0, 3, 4, 5)
    ]
    assert all(f.inner_edge_count == 1 for f in emb.inner_faces)


def test_reject_k4_and_k23():
    k4 = Graph.from_edges(
        [(a, b) for a in range(4) for b in range(a + 1, 4)]
    )
    with pytest.raises(NotOuterplanar):
        recognize_embed(k4)
    k23 = Graph.from_edges([(a, b) for a in (0, 1) for b in (2, 3, 4)])
    with pytest.raises(NotOuterplanar):
        recognize_embed(k23)


def test_reject_crossing_chords():
    g = Graph.from_edges(
        [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4)]
    )
    with pytest.raises(NotOuterplanar):
        recognize_embed(g)


def test_bridges_and_blocks():
    # two triangles joined by a bridge
    g = Graph.from_edges(
        [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    )
    emb = recognize_embed(g)
    assert emb.bridge_edges == {(2, 3)}
    assert len(emb.blocks) == 2
    assert (2, 3) in emb.outer_edges


def test_endfaces():
    emb = recognize_embed(c6_chord())
    assert len(endfaces(emb)) == 2
    assert endfaces(recognize_embed(gen.gen_cycle(5))) == []
    fan = gen.gen_fan(5)  # apex over a 5-path: extreme triangles are endfaces
    emb = recognize_embed(fan)
    ends = endfaces(emb)
    assert len(ends) == 2
    assert all(len(f.vertices) == 3 for f in ends)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_euler_face_count(seed):
    g = gen.gen_glued_outerplanar(10, seed=seed, constraints={}, retries=10)
    emb = recognize_embed(g)
    assert len(emb.inner_faces) == g.m - g.n + 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_graphs_accepted(seed):
    g = gen.gen_random_outerplanar(9, 0.6, seed=seed)
    emb = recognize_embed(g)
    assert len(emb.boundary) == g.n
    its = emb.reversed()
    assert len(its.inner_faces) == len(emb.inner_faces)
    assert its.inner_edges == emb.inner_edges


def test_face_edge_classification():
    emb = recognize_embed(gen.gen_closed_chain(3, "merged"))
    for face in emb.inner_faces:
        inner = sum(1 for e in face.edges() if e in emb.inner_edges)
        assert inner == face.inner_edge_count


def test_from_boundary_checks():
    g = c6_chord()
    emb = from_boundary(g, [0, 1, 2, 3, 4, 5])
    assert emb.inner_edges == {(0, 3)}
    with pytest.raises(ValueError):
        from_boundary(g, [0, 1, 2, 3, 4])
    with pytest.raises(ValueError):
        from_boundary(g, [0, 1, 3, 2, 4, 5])


def test_boundary_decompose_examples():
    xs, ys, qs = boundary_decompose(recognize_embed(c6_chord()))
    assert xs == [0, 3]
    assert qs == [2, 2]
    assert ys == [[1, 2], [4, 5]]

    c4 = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    xs, ys, qs = boundary_decompose(recognize_embed(c4))
    assert xs == [0, 2]
    assert qs == [1, 1]

    c8 = Graph.from_edges(
        [(i, (i + 1) % 8) for i in range(8)] + [(0, 3), (4, 7)]
    )
    xs, ys, qs = boundary_decompose(recognize_embed(c8))
    assert xs == [0, 3, 4, 7]
    assert qs == [2, 0, 2, 0]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_decompose_covers_boundary(seed):
    try:
        g = gen.gen_random_outerplanar(
            9, 0.35, seed=seed, constraints={"max_degree": 3}, retries=30
        )
    except gen.ConstraintsUnsatisfiable:
        return
    xs, ys, qs = boundary_decompose(recognize_embed(g))
    assert sum(q + 1 for q in qs) == g.n
    assert all(q >= 0 for q in qs)
    assert len(xs) % 2 == 0  # chords perfectly match the 3-vertices


def test_decompose_rejects_wrong_degree():
    with pytest.raises(ValueError):
        boundary_decompose(recognize_embed(gen.gen_cycle(5)))
    with pytest.raises(ValueError):
        boundary_decompose(recognize_embed(gen.gen_closed_chain(2, "merged")))
