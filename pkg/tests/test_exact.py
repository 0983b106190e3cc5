from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import generators as gen
from outerlabel.exact import (
    SearchCapExceeded,
    extend_bounded,
    find_labeling_bounded,
    lambda_exact,
)
from outerlabel.graphs import Graph, norm_edge
from outerlabel.labeling import TotalLabeling, span, verify

K2 = Graph.from_edges([(0, 1)])


def enumerate_lambda(g: Graph, p: int = 2, kmax: int = 9) -> int | None:
    """Full enumeration from first principles (test-side oracle)."""
    elements = list(g.elements())
    pairs = []
    for u, v in g.edges:
        pairs.append((u, v, 1))
    for e in g.edges:
        for v in e:
            pairs.append((v, e, p))
    for v in g.vertices:
        inc = [norm_edge(v, u) for u in g.neighbors(v)]
        for a, b in itertools.combinations(inc, 2):
            pairs.append((a, b, 1))
    for k in range(kmax + 1):
        for combo in itertools.product(range(k + 1), repeat=len(elements)):
            lab = dict(zip(elements, combo))
            if all(abs(lab[x] - lab[y]) >= gap for x, y, gap in pairs):
                return k
    return None


def test_bounded_infeasible_then_feasible():
    assert find_labeling_bounded(K2, 2, 2) is None
    f = find_labeling_bounded(K2, 2, 3)
    assert f is not None and verify(f, 2) == []


def test_single_vertex():
    g = Graph([0], [])
    f = find_labeling_bounded(g, 2, 0)
    assert f is not None and f.assignment == {0: 0}


def test_known_exact_values():
    assert lambda_exact(K2, 2, 8)[0] == 3
    assert lambda_exact(gen.gen_path(3), 2, 8)[0] == 4
    assert lambda_exact(gen.gen_cycle(3), 2, 8)[0] == 4


@pytest.mark.parametrize("edges", [
    [(0, 1)],
    [(0, 1), (1, 2)],
    [(0, 1), (1, 2), (0, 2)],
    [(0, 1), (1, 2), (2, 3)],
    [(0, 1), (1, 2), (2, 3), (3, 0)],
    [(0, 1), (0, 2), (0, 3)],
])
def test_agrees_with_full_enumeration(edges):
    g = Graph.from_edges(edges)
    assert g.n + g.m <= 8
    assert lambda_exact(g, 2, 9)[0] == enumerate_lambda(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5_000))
def test_symmetry_pruning_sound(seed):
    g = gen.gen_glued_outerplanar(7, seed=seed, constraints={}, retries=10)
    with_prune, _ = lambda_exact(g, 2, 8, symmetry=True)
    without, _ = lambda_exact(g, 2, 8, symmetry=False)
    assert with_prune == without


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 5_000))
def test_outerplanar_sandwich(seed):
    g = gen.gen_glued_outerplanar(8, seed=seed, constraints={}, retries=10)
    lam, f = lambda_exact(g, 2, g.max_degree() + 2)
    assert lam is not None
    assert g.max_degree() + 1 <= lam <= g.max_degree() + 2
    assert verify(f, 2) == []


def test_cap_guard():
    big = gen.gen_cycle(20)
    with pytest.raises(SearchCapExceeded):
        find_labeling_bounded(big, 2, 4, cap=30)


def test_extend_bounded_noop_and_pendant():
    f = find_labeling_bounded(K2, 2, 3)
    done = extend_bounded(f, [], k=3)
    assert done is not None and done.assignment == f.assignment

    # pendant completion: label a path minus its tip, then put the tip back
    p4 = gen.gen_path(4)
    base = find_labeling_bounded(p4.remove_vertices([3]), 2, 5)
    grown = TotalLabeling(p4, 5, dict(base.assignment))
    done = extend_bounded(grown, [3, (2, 3)], k=5)
    assert done is not None and verify(done, 2) == []


def test_extend_bounded_respects_infeasibility():
    f = TotalLabeling(K2, 2, {0: 0, 1: 1})
    assert extend_bounded(f, [(0, 1)], k=2) is None


def test_witness_deterministic():
    g = gen.gen_glued_outerplanar(8, seed=11, constraints={}, retries=10)
    _, w1 = lambda_exact(g, 2, 8)
    _, w2 = lambda_exact(g, 2, 8)
    assert w1.assignment == w2.assignment


def test_lambda_le_constructive_span():
    from outerlabel.pipeline import label_outerplanar

    for seed in range(12):
        g = gen.gen_glued_outerplanar(8, seed=seed, constraints={}, retries=10)
        if g.max_degree() > 4 or g.n + g.m > 26:
            continue
        lam, _ = lambda_exact(g, 2, g.max_degree() + 2)
        f = label_outerplanar(g)
        assert lam <= span(f)
