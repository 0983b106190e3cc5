"""Top-level dispatch: label any outerplanar graph by its maximum degree."""

from __future__ import annotations

from .delta3 import Diagnostics, label_cycle_or_path, label_delta3
from .delta4 import label_delta4
from .exact import find_labeling_bounded
from .graphs import Element, Graph
from .labeling import TotalLabeling, verify


class UnsupportedDegree(ValueError):
    def __init__(self, delta: int):
        super().__init__(
            f"no constructive labeler for maximum degree {delta}; "
            "use the bounded search fallback"
        )
        self.delta = delta


def label_outerplanar(
    g: Graph,
    fallback_search: bool = False,
    diag: Diagnostics | None = None,
) -> TotalLabeling:
    """Verified (2,1)-total labeling with span at most max_degree + 2.

    Dispatches on the maximum degree; degrees above 4 are only served by the
    exhaustive bounded search (experimental), and only when requested.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    delta = g.max_degree() if g.n else 0
    if delta <= 2:
        assign: dict[Element, int] = {}
        for comp in g.components():
            assign.update(label_cycle_or_path(g.induced(comp), k=4).assignment)
        f = TotalLabeling(g, 4, assign)
    elif delta == 3:
        f = label_delta3(g, diag)
    elif delta == 4:
        f = label_delta4(g, diag)
    elif fallback_search:
        f = find_labeling_bounded(g, 2, delta + 2)
        if f is None:
            raise UnsupportedDegree(delta)
    else:
        raise UnsupportedDegree(delta)
    if verify(f, 2):
        raise AssertionError("dispatcher produced an invalid labeling")
    return f
