from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import generators as gen
from outerlabel.exact import lambda_exact
from outerlabel.graphs import Graph, norm_edge
from outerlabel.labeling import (
    TotalLabeling,
    complement,
    degree_lower_bound,
    incidence_graph,
    pull_back,
    span,
    verify,
)

K2 = Graph.from_edges([(0, 1)])


def k2_labeling(a, b, e, k=3):
    f = TotalLabeling(K2, k)
    f.set(0, a)
    f.set(1, b)
    f.set((0, 1), e)
    return f


def test_verify_ok_example():
    assert verify(k2_labeling(0, 1, 3), 2) == []


def test_verify_too_close():
    bad = verify(k2_labeling(0, 1, 2), 2)
    assert any(v.kind == "vertex-edge-too-close" for v in bad)
    wits = {v.witnesses for v in bad if v.kind == "vertex-edge-too-close"}
    assert (1, (0, 1)) in wits


def test_verify_partial_and_range():
    f = TotalLabeling(K2, 3)
    f.set(0, 0)
    kinds = {v.kind for v in verify(f, 2)}
    assert "unlabeled-element" in kinds
    g = k2_labeling(0, 1, 9, k=3)
    assert any(v.kind == "label-out-of-range" for v in verify(g, 2))


def test_verify_adjacent_vertices_and_edges():
    p3 = gen.gen_path(3)
    f = TotalLabeling(p3, 5, {0: 0, 1: 0, 2: 4, (0, 1): 2, (1, 2): 2})
    kinds = {v.kind for v in verify(f, 2)}
    assert "adjacent-vertices-equalish" in kinds
    assert "adjacent-edges-equalish" in kinds


def test_verify_deterministic():
    f = k2_labeling(0, 1, 2)
    assert verify(f, 2) == verify(f, 2)


def test_span():
    single = Graph([0], [])
    f = TotalLabeling(single, 0, {0: 0})
    assert span(f) == 0
    assert span(k2_labeling(0, 1, 3)) == 3
    with pytest.raises(ValueError):
        span(TotalLabeling(single, 0))


def test_complement():
    f = k2_labeling(0, 1, 3)
    fb = complement(f)
    assert fb.assignment == {0: 3, 1: 2, (0, 1): 0}
    assert verify(fb, 2) == []
    assert complement(fb).assignment == f.assignment


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5_000))
def test_complement_preserves_validity(seed):
    g = gen.gen_glued_outerplanar(7, seed=seed, constraints={}, retries=10)
    k, f = lambda_exact(g, 2, 8)
    assert f is not None
    fb = complement(f)
    assert verify(fb, 2) == []


def test_incidence_graph_path_and_cycle():
    ig, mids = incidence_graph(K2)
    assert ig.n == 3 and ig.m == 2 and len(mids) == 1
    for n in (3, 4, 5):
        cg, mids = incidence_graph(gen.gen_cycle(n))
        assert cg.n == 2 * n and cg.m == 2 * n
        assert all(cg.degree(v) == 2 for v in cg.vertices)


def test_incidence_graph_triangle():
    tri = gen.gen_cycle(3)
    ig, mids = incidence_graph(tri)
    # original vertices end up pairwise non-adjacent
    for u, v in itertools.combinations(tri.vertices, 2):
        assert not ig.has_edge(u, v)
    # every new vertex joins exactly the two endpoints of its source edge
    for mid, (u, v) in mids.items():
        assert sorted(ig.neighbors(mid)) == sorted((u, v))
    assert ig.m == 2 * tri.m


def brute_l21_span(g: Graph, kmax: int = 8) -> int | None:
    """Independent brute-force distance-2 labeling optimum."""
    vs = list(g.vertices)
    dist2 = set()
    for v in vs:
        for u in g.neighbors(v):
            for w in g.neighbors(u):
                if w != v and not g.has_edge(v, w):
                    dist2.add(norm_edge(v, w))
    for k in range(kmax + 1):
        for combo in itertools.product(range(k + 1), repeat=len(vs)):
            lab = dict(zip(vs, combo))
            if all(abs(lab[u] - lab[v]) >= 2 for u, v in g.edges) and all(
                lab[u] != lab[v] for u, v in dist2
            ):
                return k
    return None


@pytest.mark.parametrize("edges", [
    [(0, 1)],
    [(0, 1), (1, 2)],
    [(0, 1), (1, 2), (0, 2)],
    [(0, 1), (1, 2), (2, 3), (3, 0)],
    [(0, 1), (1, 2), (0, 2), (2, 3)],
])
def test_incidence_pullback_matches(edges):
    g = Graph.from_edges(edges)
    lam, witness = lambda_exact(g, 2, 8)
    ig, mids = incidence_graph(g)
    assert brute_l21_span(ig) == lam
    # and the witness really is a distance-style labeling of the incidence graph
    vertex_labels = {v: witness.vertex(v) for v in g.vertices}
    for mid, e in mids.items():
        vertex_labels[mid] = witness.get(e)
    pulled = pull_back(g, vertex_labels, mids, witness.k)
    assert verify(pulled, 2) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5_000))
def test_degree_lower_bound_holds(seed):
    g = gen.gen_glued_outerplanar(7, seed=seed, constraints={}, retries=10)
    lam, f = lambda_exact(g, 2, 8)
    assert lam >= degree_lower_bound(g, 2)
    assert span(f) == lam


def test_verifier_catches_every_mutation():
    # exhaustiveness: perturbing any single element of a valid labeling in
    # any way is either still valid or reported with a correct witness
    g = gen.gen_closed_chain(2, "merged")
    from outerlabel.pipeline import label_outerplanar

    f = label_outerplanar(g)
    assert verify(f, 2) == []
    caught = 0
    for el in g.elements():
        original = f.assignment[el]
        for lab in range(f.k + 1):
            if lab == original:
                continue
            f.assignment[el] = lab
            bad = verify(f, 2)
            if bad:
                caught += 1
                # only one element changed, so it must be a witness somewhere
                assert any(el in v.witnesses for v in bad)
        f.assignment[el] = original
    assert caught > 0
    assert verify(f, 2) == []
