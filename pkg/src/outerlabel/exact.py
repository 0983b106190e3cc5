"""Exhaustive backtracking search for optimal (p,1)-total labelings.

Intended for desk-scale instances only: the element cap guards against
accidental exponential blowups.  Search order is fixed (elements by
decreasing constraint degree, labels ascending), so the first labeling
found, and hence every returned witness, is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Element, Graph, is_edge_element, norm_edge
from .labeling import TotalLabeling, degree_lower_bound

DEFAULT_ELEMENT_CAP = 30


class SearchCapExceeded(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search was decided."""


@dataclass
class SearchStats:
    nodes: int = 0
    calls: int = 0
    budget: int | None = None

    def merged(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(self.nodes + other.nodes, self.calls + other.calls)

    def charge(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"exceeded {self.budget} search nodes")


def _constraint_degree(g: Graph, el: Element) -> int:
    if is_edge_element(el):
        u, v = el
        return g.degree(u) + g.degree(v)
    return 2 * g.degree(el)


def _element_order(g: Graph, elements: list[Element]) -> list[Element]:
    # vertices sort before edges at equal constraint degree; ids break ties
    def key(el: Element):
        if is_edge_element(el):
            return (-_constraint_degree(g, el), 1, el)
        return (-_constraint_degree(g, el), 0, (el, el))

    return sorted(elements, key=key)


def _neighbor_constraints(g: Graph, p: int) -> dict[Element, list[tuple[Element, int]]]:
    """For each element, the elements it constrains with the required gap."""
    cons: dict[Element, list[tuple[Element, int]]] = {el: [] for el in g.elements()}
    for u, v in g.edges:
        cons[u].append((v, 1))
        cons[v].append((u, 1))
    for e in g.edges:
        for v in e:
            cons[v].append((e, p))
            cons[e].append((v, p))
    for v in g.vertices:
        inc = g.incident_edges(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                cons[inc[i]].append((inc[j], 1))
                cons[inc[j]].append((inc[i], 1))
    return cons


def _forbid_mask(label: int, gap: int, k: int) -> int:
    lo = max(0, label - gap + 1)
    hi = min(k, label + gap - 1)
    return ((1 << (hi - lo + 1)) - 1) << lo


def _search(
    g: Graph,
    p: int,
    k: int,
    fixed: dict[Element, int],
    free: list[Element],
    stats: SearchStats,
    symmetry: bool,
) -> dict[Element, int] | None:
    """Depth-first search with forward checking over bitmask domains."""
    cons = _neighbor_constraints(g, p)
    full = (1 << (k + 1)) - 1
    order = _element_order(g, free)
    index = {el: i for i, el in enumerate(order)}
    domains = [full] * len(order)

    for el, lab in fixed.items():
        if not (0 <= lab <= k):
            return None
        for other, gap in cons[el]:
            i = index.get(other)
            if i is not None:
                domains[i] &= ~_forbid_mask(lab, gap, k)
        if any(
            other in fixed and abs(fixed[other] - lab) < gap
            for other, gap in cons[el]
        ):
            return None
    if not order:
        return dict(fixed)
    if any(d == 0 for d in domains):
        return None

    if symmetry and not fixed:
        # the complement z -> k - f(z) preserves validity, so the first
        # branched element may be pinned to the lower half of the range
        half = (k + 1) // 2 + 1  # labels 0..ceil(k/2)
        domains[0] &= (1 << half) - 1

    assignment: list[int | None] = [None] * len(order)

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        el = order[pos]
        dom = domains[pos]
        while dom:
            low = dom & -dom
            lab = low.bit_length() - 1
            dom ^= low
            stats.charge()
            touched: list[tuple[int, int]] = []
            ok = True
            for other, gap in cons[el]:
                i = index.get(other)
                if i is None or i <= pos:
                    continue
                old = domains[i]
                new = old & ~_forbid_mask(lab, gap, k)
                if new != old:
                    domains[i] = new
                    touched.append((i, old))
                    if new == 0:
                        ok = False
                        break
            if ok:
                assignment[pos] = lab
                if rec(pos + 1):
                    return True
            for i, old in touched:
                domains[i] = old
        assignment[pos] = None
        return False

    # note: elements later in the order never constrain earlier fixed ones
    # except through `cons`, which is symmetric, so forward checks suffice
    if not rec(0):
        return None
    out = dict(fixed)
    for i, el in enumerate(order):
        out[el] = assignment[i]  # type: ignore[assignment]
    return out


def find_labeling_bounded(
    g: Graph,
    p: int = 2,
    k: int = 6,
    cap: int = DEFAULT_ELEMENT_CAP,
    stats: SearchStats | None = None,
    symmetry: bool = True,
    budget: int | None = None,
) -> TotalLabeling | None:
    """A valid (p,1)-total labeling within ``{0..k}``, or None if none exists.

    The search is exhaustive, so a None answer is a proof of infeasibility;
    an exhausted node ``budget`` raises instead of guessing.
    """
    n_elements = g.n + g.m
    if n_elements > cap:
        raise SearchCapExceeded(
            f"{n_elements} elements exceed the search cap {cap}"
        )
    st = stats if stats is not None else SearchStats()
    if budget is not None:
        st.budget = budget
    st.calls += 1
    found = _search(g, p, k, {}, list(g.elements()), st, symmetry)
    if found is None:
        return None
    return TotalLabeling(g, k, found)


def lambda_exact(
    g: Graph,
    p: int = 2,
    kmax: int = 16,
    cap: int = DEFAULT_ELEMENT_CAP,
    stats: SearchStats | None = None,
    symmetry: bool = True,
    budget: int | None = None,
) -> tuple[int | None, TotalLabeling | None]:
    """Least k <= kmax admitting a labeling, with a witness.

    Returns (None, None) when no bound kmax suffices or the node budget ran
    out; a spent budget never produces a partial answer.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    try:
        for k in range(degree_lower_bound(g, p), kmax + 1):
            f = find_labeling_bounded(
                g, p, k, cap=cap, stats=stats, symmetry=symmetry, budget=budget
            )
            if f is not None:
                return k, f
    except SearchBudgetExceeded:
        pass
    return None, None


def extend_bounded(
    f: TotalLabeling,
    free: list[Element],
    k: int | None = None,
    p: int = 2,
    stats: SearchStats | None = None,
) -> TotalLabeling | None:
    """Exhaustively complete ``f`` on the ``free`` elements within ``{0..k}``.

    Elements already assigned keep their labels; returns the first completion
    passing verification, or None when no completion exists.
    """
    kk = f.k if k is None else k
    g = f.graph
    norm_free: list[Element] = [
        norm_edge(*el) if is_edge_element(el) else el for el in free
    ]
    free_set = set(norm_free)
    fixed = {el: lab for el, lab in f.assignment.items() if el not in free_set}
    st = stats if stats is not None else SearchStats()
    st.calls += 1
    found = _search(g, p, kk, fixed, norm_free, st, False)
    if found is None:
        return None
    return TotalLabeling(g, kk, found)


def naive_lambda(g: Graph, p: int = 2, kmax: int = 10) -> int | None:
    """Full-enumeration reference for tiny graphs; used to cross-check the solver."""
    from itertools import product

    elements = list(g.elements())
    cons = _neighbor_constraints(g, p)
    for k in range(0, kmax + 1):
        for combo in product(range(k + 1), repeat=len(elements)):
            lab = dict(zip(elements, combo))
            ok = True
            for el, partners in cons.items():
                for other, gap in partners:
                    if abs(lab[el] - lab[other]) < gap:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return k
    return None
