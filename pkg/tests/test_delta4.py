from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import generators as gen
from outerlabel.delta3 import Diagnostics, NotDelta
from outerlabel.delta4 import (
    CASE_TARGETS,
    CLAIM_PAIRS,
    ChainCase,
    NoPair,
    apply_template,
    availability,
    availability_set,
    canonicalize,
    chain_template,
    claim_pair,
    label_delta4,
    reduce_c1c2,
)
from outerlabel.embedding import recognize_embed
from outerlabel.exact import lambda_exact
from outerlabel.graphs import Graph, norm_edge
from outerlabel.labeling import TotalLabeling, span, verify
from outerlabel.structure import Configuration, find_configuration


def test_availability_examples():
    assert availability_set(0, 6) == frozenset({1, 2, 3, 4})
    assert availability_set(3, 0) == frozenset({2, 4, 5, 6})
    for fw, few in product(range(7), repeat=2):
        assert len(availability_set(fw, few)) >= 3


def test_availability_from_labeling():
    g = Graph.from_edges([(0, 1)])
    f = TotalLabeling(g, 6, {0: 5, 1: 3, (0, 1): 0})
    assert availability(f, 0, 1) == frozenset({2, 4, 5, 6})
    with pytest.raises(ValueError):
        availability(TotalLabeling(g, 6), 0, 1)


def test_claim_pair_examples():
    full = frozenset(range(7))
    assert claim_pair(full, full) == (0, 6)
    assert claim_pair(frozenset({0, 2, 3}), frozenset({3, 4, 5})) == (2, 3)


def test_claim_pair_exhaustive():
    # acceptance-grade sweep: all realizable availability-set pairs
    sets = {availability_set(fw, few) for fw, few in product(range(7), repeat=2)}
    for l1 in sets:
        for l2 in sets:
            a, b = claim_pair(l1, l2)
            assert a in l1 and b in l2 and (a, b) in CLAIM_PAIRS


def test_claim_pair_failure_is_detectable():
    with pytest.raises(NoPair):
        claim_pair(frozenset({2}), frozenset({6}))


def test_canonicalize_examples():
    assert canonicalize((0, 6)) == ChainCase(1, (0, 6), False, False)
    assert canonicalize((6, 0)) == ChainCase(1, (0, 6), True, False)
    assert canonicalize((4, 3)) == ChainCase(4, (2, 3), False, True)
    assert canonicalize((3, 4)) == ChainCase(4, (2, 3), True, True)
    with pytest.raises(ValueError):
        canonicalize((2, 5))


def test_canonicalize_transform_roundtrip():
    for pair in CLAIM_PAIRS:
        cc = canonicalize(pair)
        a, b = pair
        if cc.complement:
            a, b = 6 - a, 6 - b
        if cc.reverse:
            a, b = b, a
        assert (a, b) == cc.pair == CASE_TARGETS[cc.case_id]


def test_template_case1_even_base_values():
    tmpl = chain_template(1, 2, (2, 4, 4, 2))
    assert tmpl[("v", 1)] == 0 and tmpl[("v", 5)] == 6
    assert tmpl[("v", 2)] == 6 and tmpl[("v", 3)] == 3 and tmpl[("v", 4)] == 0
    assert tmpl[("e", 2, 3)] == 1
    assert tmpl[("e", 1, 3)] == 6
    assert tmpl[("e", 3, 4)] == 5
    assert tmpl[("e", 3, 5)] == 0
    # completions drawn from {2,3,4} minus the stub-edge exclusions
    assert tmpl[("e", 1, 5)] == 3
    assert tmpl[("e", 1, 2)] == 2
    assert tmpl[("e", 4, 5)] == 4


def test_template_case1_even_extreme_stubs():
    tmpl = chain_template(1, 2, (2, 6, 4, 0))
    expected = {
        ("v", 1): 0, ("v", 2): 3, ("v", 3): 1, ("v", 4): 3, ("v", 5): 6,
        ("e", 1, 2): 5, ("e", 2, 3): 6, ("e", 1, 3): 4, ("e", 3, 4): 5,
        ("e", 4, 5): 1, ("e", 3, 5): 3, ("e", 1, 5): 2,
    }
    assert tmpl == expected


def test_template_case4_odd_base_values():
    tmpl = chain_template(4, 3, (4, 0, 0, 5))
    for idx, lab in {2: 1, 3: 0, 4: 1, 5: 6, 6: 2, 7: 3}.items():
        assert tmpl[("v", idx)] == lab
    for (i, j), lab in {(2, 3): 3, (1, 3): 4, (3, 4): 5, (4, 5): 3,
                        (3, 5): 2, (5, 6): 4, (6, 7): 0, (5, 7): 1}.items():
        assert tmpl[("e", i, j)] == lab


def test_template_rejects_inconsistent_context():
    with pytest.raises(ValueError):
        chain_template(1, 2, (0, 4, 4, 2))  # left attachment already labeled 0


def _stub_graph(t):
    g = gen.gen_closed_chain(t, "pendants")
    m = 2 * t + 1
    return g, tuple(range(m)), m, m + 1


def _contexts(a, b):
    for fw1, al in product(range(7), repeat=2):
        if abs(fw1 - al) < 2 or a not in availability_set(fw1, al):
            continue
        for fw2, be in product(range(7), repeat=2):
            if abs(fw2 - be) < 2 or b not in availability_set(fw2, be):
                continue
            yield fw1, al, fw2, be


@pytest.mark.parametrize("case_id", [1, 2, 3, 4])
@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_template_sweep_small(case_id, t):
    g, spine, w1, w2 = _stub_graph(t)
    a, b = CASE_TARGETS[case_id]
    m = 2 * t + 1
    for fw1, al, fw2, be in _contexts(a, b):
        tmpl = chain_template(case_id, t, (fw1, al, fw2, be))
        ext = apply_template(tmpl, spine)
        ext[w1], ext[w2] = fw1, fw2
        ext[norm_edge(0, w1)] = al
        ext[norm_edge(m - 1, w2)] = be
        assert verify(TotalLabeling(g, 6, ext), 2) == []


def test_reduce_c1():
    g = gen.gen_cycle(5)
    cfg = find_configuration(recognize_embed(g))
    h, freed = reduce_c1c2(g, cfg)
    assert h.n == 4 and h.m == 3
    assert freed == [0, (0, 1), (0, 4)]


def test_reduce_c2():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    cfg = find_configuration(recognize_embed(g))
    h, freed = reduce_c1c2(g, cfg)
    assert h.n == 3 and h.m == 3  # a triangle remains
    assert cfg.witnesses[0] in (1, 3)


def test_reduce_rejects_c3():
    with pytest.raises(ValueError):
        reduce_c1c2(gen.gen_cycle(5), Configuration("C3", (0, 1, 2, 3, 4)))


def test_label_delta4_requires_degree_4():
    with pytest.raises(NotDelta):
        label_delta4(gen.gen_cycle(5))
    with pytest.raises(NotDelta):
        label_delta4(c6 := Graph.from_edges(
            [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
        ))


@pytest.mark.parametrize("t", [2, 3, 4, 5, 6])
def test_closed_chain_instances(t):
    d = Diagnostics()
    f = label_delta4(gen.gen_closed_chain(t, "merged"), d)
    assert verify(f, 2) == [] and span(f) <= 6
    assert d.fallbacks == 0
    assert any("chain" in s for s in d.trace)


def test_pendant_and_reduction_branches():
    d = Diagnostics()
    f = label_delta4(gen.gen_closed_chain(3, "pendants"), d)
    assert verify(f, 2) == [] and span(f) <= 6

    # a 4-fan: every dispatch goes through C2 here
    fan = gen.gen_fan(4)
    d = Diagnostics()
    f = label_delta4(fan, d)
    assert verify(f, 2) == [] and span(f) <= 6


def test_c1_reduction_branch():
    # closed chain with the tie-off vertex subdivided: adjacent 2-vertices
    g = Graph.from_edges(
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (2, 4), (0, 4),
         (4, 5), (5, 6), (6, 0)]
    )
    assert g.max_degree() == 4
    cfg = find_configuration(recognize_embed(g))
    assert cfg.kind == "C1"
    f = label_delta4(g)
    assert verify(f, 2) == [] and span(f) <= 6


def test_disconnected_components():
    left = gen.gen_closed_chain(2, "merged")
    shift = 20
    edges = list(left.edges) + [
        (u + shift, v + shift) for u, v in left.edges
    ]
    f = label_delta4(Graph.from_edges(edges))
    assert verify(f, 2) == [] and span(f) <= 6


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 50_000))
def test_driver_over_random_corpus(seed):
    try:
        if seed % 2 == 0:
            g = gen.gen_random_outerplanar(
                5 + seed % 8, 0.5, seed=seed,
                constraints={"max_degree": 4}, retries=25,
            )
        else:
            g = gen.gen_glued_outerplanar(
                6 + seed % 8, seed=seed, constraints={"max_degree": 4},
                retries=25,
            )
    except gen.ConstraintsUnsatisfiable:
        return
    d = Diagnostics()
    f = label_delta4(g, d)
    assert verify(f, 2) == [] and span(f) <= 6
    assert d.fallbacks == 0


def test_span_never_below_optimum():
    for seed in range(20):
        try:
            g = gen.gen_random_outerplanar(
                7, 0.5, seed=seed, constraints={"max_degree": 4}, retries=20
            )
        except gen.ConstraintsUnsatisfiable:
            continue
        if g.n + g.m > 26:
            continue
        lam, _ = lambda_exact(g, 2, 6)
        f = label_delta4(g)
        assert lam is not None and lam <= span(f) <= 6


def test_outputs_close_under_complement():
    from outerlabel.labeling import complement

    for t in (2, 3):
        f = label_delta4(gen.gen_closed_chain(t, "merged"))
        assert verify(complement(f), 2) == []
