"""Span-6 labelings for outerplanar graphs of maximum degree 4.

Hosts of minimum degree 1 lose a pendant; hosts containing two adjacent
2-vertices or a triangle with a 2-vertex and a 3-vertex lose one 2-vertex,
and the freed elements are relabeled by bounded search.  The remaining
hosts contain a closed fan of triangles whose interior is cut out, labeled
by one of eight per-parity label templates, and spliced back.  Which
template applies is decided by which pair of endpoint labels the two
attachment stubs leave available; reversal and the label flip z -> 6 - z
reduce the fourteen possible pairs to four canonical cases.

All templates and their subcase patches are data tables keyed by spine
index patterns, so they can be audited entry by entry; the verifier has
the final word and any disagreement is logged and repaired by bounded
search.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .delta3 import (
    Diagnostics,
    InfeasibleTrace,
    NotDelta,
    _label_span5,
    label_cycle_or_path,
)
from .embedding import recognize_embed
from .exact import extend_bounded, find_labeling_bounded
from .graphs import Element, Graph, norm_edge
from .labeling import TotalLabeling, verify
from .structure import Configuration, find_closed_chain, find_configuration


class NoPair(ValueError):
    """No claimed endpoint pair fits the two availability sets."""


def availability(
    f: TotalLabeling, endpoint: int, attachment: int, k: int = 6
) -> frozenset[int]:
    """Labels assignable to a pendant ``endpoint`` hanging off ``attachment``.

    Excludes the attachment's label and the three labels within distance 1
    of the connecting edge's label; at least three labels always remain.
    """
    fw = f.vertex(attachment)
    few = f.edge(endpoint, attachment)
    if fw is None or few is None:
        raise ValueError("attachment vertex/edge must be labeled")
    return availability_set(fw, few, k)


def availability_set(fw: int, few: int, k: int = 6) -> frozenset[int]:
    out = set(range(k + 1)) - {fw, few - 1, few, few + 1}
    return frozenset(out)


CLAIM_PAIRS: tuple[tuple[int, int], ...] = (
    (0, 6), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (6, 0), (6, 5), (5, 4), (4, 3), (3, 2), (2, 1), (1, 0),
)


def claim_pair(l1: frozenset[int], l2: frozenset[int]) -> tuple[int, int]:
    """First claimed pair with one label in each availability set."""
    for a, b in CLAIM_PAIRS:
        if a in l1 and b in l2:
            return (a, b)
    raise NoPair(f"no claimed pair fits {sorted(l1)} x {sorted(l2)}")


CASE_TARGETS = {1: (0, 6), 2: (0, 1), 3: (1, 2), 4: (2, 3)}


@dataclass(frozen=True)
class ChainCase:
    case_id: int
    pair: tuple[int, int]  # the canonical endpoint labels
    reverse: bool
    complement: bool


def canonicalize(pair: tuple[int, int]) -> ChainCase:
    """Map a claimed pair onto one of the four canonical cases.

    Preference order: identity, spine reversal, label flip, both.  The
    transform tells the caller how to move between the found frame and the
    canonical one.
    """
    if pair not in CLAIM_PAIRS:
        raise ValueError(f"{pair} is not one of the claimed pairs")
    a, b = pair
    variants = [
        ((a, b), False, False),
        ((b, a), True, False),
        ((6 - a, 6 - b), False, True),
        ((6 - b, 6 - a), True, True),
    ]
    for target, reverse, comp in variants:
        for cid, canon in CASE_TARGETS.items():
            if target == canon:
                return ChainCase(cid, canon, reverse, comp)
    raise ValueError(f"{pair} does not reduce to a canonical case")


# -- template tables ---------------------------------------------------------
#
# Keys are spine index patterns: a vertex is "3" or "2t-1"; an edge is a
# pair of such patterns.  Blocks repeat for i = 2..k where t = 2k (even
# templates) or t = 2k+1 (odd templates).  Subcase instructions:
#
#   ("set_v", idx, label)           ("set_e", i, j, label)
#   ("choose_e", i, j, cands, excl) first label of cands not excluded;
#                                   excl tokens: "A" (left stub edge),
#                                   "B" (right stub edge), ("e", i, j)
#   ("if_e", i, j, values, ops)     run ops when edge (i, j) took a value
#
# Branches are guarded by t: ("t==2", ops), ("t>=4", ops), ("any", ops).

_CLOSING = ("e", "1", "2t+1")

TEMPLATES: dict[tuple[int, str], dict] = {
    (1, "even"): {
        "endpoints": (0, 6),
        "base_v": {"2": 6, "3": 3, "4": 0, "5": 6},
        "base_e": {("2", "3"): 1, ("1", "3"): 6, ("3", "4"): 5,
                   ("4", "5"): 4, ("3", "5"): 0},
        "block_v": {"4i-2": 1, "4i-1": 3, "4i": 0, "4i+1": 6},
        "block_e": {("4i-3", "4i-2"): 3, ("4i-2", "4i-1"): 6,
                    ("4i-3", "4i-1"): 1, ("4i-1", "4i"): 5,
                    ("4i", "4i+1"): 4, ("4i-1", "4i+1"): 0},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (2, 3, 4), ("A", "B")),
                ("choose_e", "1", "2", (2, 3, 4), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (2, 3, 4), ("B", _CLOSING)),
            ])],
            ("eq", "ne"): [("any", [
                ("set_v", "2", 1), ("set_v", "3", 2),
                ("set_e", "1", "2", 5), ("set_e", "2", "3", 6),
                ("set_e", "1", "3", 4),
                ("choose_e", "1", "2t+1", (2, 3), ("B",)),
                ("choose_e", "2t", "2t+1", (2, 3, 4), (_CLOSING, "B")),
            ])],
            ("ne", "eq"): [("any", [
                ("set_v", "2t-1", 4), ("set_v", "2t", 5),
                ("set_e", "2t-1", "2t", 0), ("set_e", "2t", "2t+1", 1),
                ("set_e", "2t-1", "2t+1", 2),
                ("choose_e", "1", "2t+1", (3, 4), ("A",)),
                ("choose_e", "1", "2", (2, 3, 4), (_CLOSING, "A")),
            ])],
            ("eq", "eq"): [
                ("t==2", [
                    ("set_v", "2", 3), ("set_v", "3", 1), ("set_v", "4", 3),
                    ("set_e", "1", "2", 5), ("set_e", "2", "3", 6),
                    ("set_e", "1", "3", 4), ("set_e", "3", "4", 5),
                    ("set_e", "4", "5", 1), ("set_e", "3", "5", 3),
                    ("set_e", "1", "5", 2),
                ]),
                ("t>=4", [
                    ("set_v", "2", 1), ("set_v", "3", 2),
                    ("set_e", "1", "2", 5), ("set_e", "2", "3", 6),
                    ("set_e", "1", "3", 4),
                    ("set_v", "2t-1", 4), ("set_v", "2t", 5),
                    ("set_e", "2t-1", "2t", 0), ("set_e", "2t", "2t+1", 1),
                    ("set_e", "2t-1", "2t+1", 2), ("set_e", "1", "2t+1", 3),
                ]),
            ],
        },
    },
    (1, "odd"): {
        "endpoints": (0, 6),
        "base_v": {"2": 6, "3": 3, "4": 0, "5": 4, "6": 0, "7": 6},
        "base_e": {("2", "3"): 0, ("1", "3"): 6, ("3", "4"): 5,
                   ("4", "5"): 2, ("3", "5"): 1, ("5", "6"): 6,
                   ("6", "7"): 4, ("5", "7"): 0},
        "block_v": {"4i": 0, "4i+1": 4, "4i+2": 0, "4i+3": 6},
        "block_e": {("4i-1", "4i"): 3, ("4i", "4i+1"): 2,
                    ("4i-1", "4i+1"): 1, ("4i+1", "4i+2"): 6,
                    ("4i+2", "4i+3"): 4, ("4i+1", "4i+3"): 0},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (2, 3, 4), ("A", "B")),
                ("choose_e", "1", "2", (2, 3, 4), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (2, 3, 4), ("B", _CLOSING)),
            ])],
            ("eq", "ne"): [("any", [
                ("set_v", "2", 2), ("set_v", "3", 6),
                ("set_e", "1", "2", 5), ("set_e", "1", "3", 4),
                ("set_e", "3", "4", 3),
                ("choose_e", "1", "2t+1", (2, 3), ("B",)),
                ("choose_e", "2t", "2t+1", (2, 3, 4), (_CLOSING, "B")),
            ])],
            ("ne", "eq"): [("any", [
                ("set_v", "2t-1", 5), ("set_v", "2t", 3),
                ("set_e", "2t-1", "2t", 0), ("set_e", "2t", "2t+1", 1),
                ("set_e", "2t-1", "2t+1", 3),
                ("choose_e", "1", "2t+1", (2, 4), ("A",)),
                ("choose_e", "1", "2", (2, 3, 4), ("A", _CLOSING)),
            ])],
            ("eq", "eq"): [("any", [
                ("set_v", "2", 2), ("set_v", "3", 6),
                ("set_e", "1", "2", 5), ("set_e", "1", "3", 4),
                ("set_e", "3", "4", 3),
                ("set_v", "2t-1", 5), ("set_v", "2t", 3),
                ("set_e", "2t-1", "2t", 0), ("set_e", "2t", "2t+1", 1),
                ("set_e", "2t-1", "2t+1", 3), ("set_e", "1", "2t+1", 2),
            ])],
        },
    },
    (2, "even"): {
        "endpoints": (0, 1),
        "base_v": {"2": 2, "3": 6, "4": 5, "5": 1},
        "base_e": {("2", "3"): 0, ("1", "3"): 2, ("3", "4"): 1,
                   ("4", "5"): 3, ("3", "5"): 4},
        "block_v": {"4i-2": 4, "4i-1": 0, "4i": 2, "4i+1": 1},
        "block_e": {("4i-3", "4i-2"): 6, ("4i-2", "4i-1"): 2,
                    ("4i-3", "4i-1"): 5, ("4i-1", "4i"): 6,
                    ("4i", "4i+1"): 4, ("4i-1", "4i+1"): 3},
        "subcases": {
            ("ne", "nb"): [
                ("t==2", "OPS_2E_PLAIN_T2"),
                ("t>=4", "OPS_2E_PLAIN_T4"),
            ],
            ("eq", "nb"): [
                ("t==2", "OPS_2E_LOW_T2"),
                ("t>=4", "OPS_2E_LOW_T4"),
            ],
            ("ne", "b3"): [
                ("t==2", "OPS_2E_PLAIN_T2"),
                ("t>=4", [
                    ("set_e", "2t-1", "2t+1", 6),
                    ("choose_e", "1", "2t+1", (4, 5), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "2t", "2t+1", (4, 5), (_CLOSING,)),
                    ("if_e", "2t", "2t+1", (4,), [
                        ("set_v", "2t", 6), ("set_e", "2t-1", "2t", 3),
                    ]),
                    ("if_e", "2t", "2t+1", (5,), [
                        ("set_e", "2t-1", "2t", 4),
                    ]),
                ]),
            ],
            ("ne", "b4"): [
                ("t==2", [
                    ("set_e", "3", "5", 3), ("set_v", "4", 3),
                    ("choose_e", "1", "5", (5, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "4", "5", (5, 6), (_CLOSING,)),
                ]),
                ("t>=4", "OPS_2E_PLAIN_T4"),
            ],
            ("eq", "b3"): [
                ("t==2", "OPS_2E_LOW_T2"),
                ("t>=4", [
                    ("set_e", "1", "2", 4), ("set_e", "1", "3", 3),
                    ("set_v", "2t", 6), ("set_e", "2t-1", "2t", 3),
                    ("set_e", "2t", "2t+1", 4),
                    ("set_e", "2t-1", "2t+1", 6),
                    ("set_e", "1", "2t+1", 5),
                ]),
            ],
            ("eq", "b4"): [
                ("t==2", [
                    ("set_v", "2", 2), ("set_v", "3", 6), ("set_v", "4", 3),
                    ("set_e", "1", "2", 5), ("set_e", "2", "3", 0),
                    ("set_e", "1", "3", 4), ("set_e", "3", "4", 1),
                    ("set_e", "4", "5", 5), ("set_e", "3", "5", 3),
                    ("set_e", "1", "5", 6),
                ]),
                ("t>=4", "OPS_2E_LOW_T4"),
            ],
        },
    },
    (2, "odd"): {
        "endpoints": (0, 1),
        "base_v": {"2": 2, "3": 6, "4": 4, "5": 0, "6": 6, "7": 1},
        "base_e": {("2", "3"): 0, ("1", "3"): 2, ("3", "4"): 1,
                   ("4", "5"): 6, ("3", "5"): 4, ("5", "6"): 2,
                   ("6", "7"): 3, ("5", "7"): 5},
        "block_v": {"4i": 6, "4i+1": 0, "4i+2": 6, "4i+3": 1},
        "block_e": {("4i-1", "4i"): 4, ("4i", "4i+1"): 3,
                    ("4i-1", "4i+1"): 6, ("4i+1", "4i+2"): 2,
                    ("4i+2", "4i+3"): 3, ("4i+1", "4i+3"): 5},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (3, 4, 6), ("A", "B")),
                ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (3, 4, 6), ("B", _CLOSING)),
                ("if_e", "2t", "2t+1", (6,), [("set_v", "2t", 4)]),
            ])],
            ("eq", "ne"): [("any", [
                ("set_e", "1", "2", 5), ("set_e", "1", "3", 3),
                ("choose_e", "1", "2t+1", (4, 6), ("B",)),
                ("choose_e", "2t", "2t+1", (3, 4, 6), (_CLOSING, "B")),
                ("if_e", "2t", "2t+1", (6,), [("set_v", "2t", 4)]),
            ])],
            ("ne", "eq"): [
                ("t==3", [
                    ("set_v", "6", 2), ("set_e", "5", "6", 5),
                    ("set_e", "5", "7", 3),
                    ("choose_e", "1", "7", (4, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "6", "7", (4, 6), (_CLOSING,)),
                ]),
                ("t>=5", [
                    ("set_e", "2t-1", "2t+1", 4),
                    ("choose_e", "1", "2t+1", (3, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "2t", "2t+1", (3, 6), (_CLOSING,)),
                    ("if_e", "2t", "2t+1", (6,), [("set_v", "2t", 4)]),
                ]),
            ],
            ("eq", "eq"): [
                ("t==3", [
                    ("set_e", "1", "2", 5), ("set_e", "1", "3", 3),
                    ("set_v", "6", 2), ("set_e", "5", "6", 5),
                    ("set_e", "6", "7", 6), ("set_e", "5", "7", 3),
                    ("set_e", "1", "7", 4),
                ]),
                ("t>=5", [
                    ("set_e", "1", "2", 5), ("set_e", "1", "3", 3),
                    ("set_e", "2t-1", "2t+1", 4), ("set_e", "1", "2t+1", 6),
                ]),
            ],
        },
    },
    (3, "even"): {
        "endpoints": (1, 2),
        "base_v": {"2": 0, "3": 5, "4": 3, "5": 2},
        "base_e": {("2", "3"): 2, ("1", "3"): 3, ("3", "4"): 1,
                   ("4", "5"): 6, ("3", "5"): 0},
        "block_v": {"4i-2": 0, "4i-1": 6, "4i": 0, "4i+1": 2},
        "block_e": {("4i-3", "4i-2"): 5, ("4i-2", "4i-1"): 3,
                    ("4i-3", "4i-1"): 4, ("4i-1", "4i"): 2,
                    ("4i", "4i+1"): 6, ("4i-1", "4i+1"): 0},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (4, 5, 6), ("A", "B")),
                ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (4, 5, 6), ("B", _CLOSING)),
                ("if_e", "4", "5", (4,), [("set_v", "4", 6)]),
            ])],
            ("eq", "ne"): [("any", [
                ("set_v", "3", 6), ("set_e", "2", "3", 3),
                ("set_e", "1", "3", 4),
                ("choose_e", "1", "2t+1", (5, 6), ("B",)),
                ("choose_e", "1", "2", (5, 6), (_CLOSING,)),
                ("choose_e", "2t", "2t+1", (4, 5, 6), ("B", _CLOSING)),
                ("if_e", "4", "5", (4,), [
                    ("set_v", "4", 0), ("set_e", "3", "4", 2),
                ]),
            ])],
            ("ne", "eq"): [
                ("t==2", [
                    ("set_e", "3", "5", 4), ("set_v", "3", 6),
                    ("choose_e", "1", "5", (5, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "4", "5", (5, 6), (_CLOSING,)),
                ]),
                ("t>=4", [
                    ("set_e", "2t-1", "2t+1", 5),
                    ("set_v", "2t-2", 1), ("set_v", "2t-1", 0),
                    ("choose_e", "1", "2t+1", (4, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "2t", "2t+1", (4, 6), (_CLOSING,)),
                    ("if_e", "2t", "2t+1", (4,), [("set_v", "2t", 6)]),
                    ("if_e", "2t", "2t+1", (6,), [("set_v", "2t", 4)]),
                ]),
            ],
            ("eq", "eq"): [
                ("t==2", [
                    ("set_v", "2", 2), ("set_v", "3", 0), ("set_v", "4", 6),
                    ("set_e", "1", "2", 6), ("set_e", "2", "3", 5),
                    ("set_e", "1", "3", 4), ("set_e", "3", "4", 2),
                    ("set_e", "4", "5", 4), ("set_e", "3", "5", 6),
                    ("set_e", "1", "5", 5),
                ]),
                ("t>=4", [
                    ("set_e", "1", "2", 5), ("set_v", "3", 6),
                    ("set_e", "1", "3", 4),
                    ("set_v", "2t-2", 1), ("set_v", "2t-1", 0),
                    ("set_v", "2t", 6), ("set_e", "2t", "2t+1", 4),
                    ("set_e", "2t-1", "2t+1", 5), ("set_e", "1", "2t+1", 6),
                ]),
            ],
        },
    },
    (3, "odd"): {
        "endpoints": (1, 2),
        "base_v": {"2": 0, "3": 5, "4": 2, "5": 6, "6": 0, "7": 2},
        "base_e": {("2", "3"): 2, ("1", "3"): 3, ("3", "4"): 0,
                   ("4", "5"): 4, ("3", "5"): 1, ("5", "6"): 2,
                   ("6", "7"): 6, ("5", "7"): 0},
        "block_v": {"4i": 0, "4i+1": 6, "4i+2": 0, "4i+3": 2},
        "block_e": {("4i-1", "4i"): 5, ("4i", "4i+1"): 3,
                    ("4i-1", "4i+1"): 4, ("4i+1", "4i+2"): 2,
                    ("4i+2", "4i+3"): 6, ("4i+1", "4i+3"): 0},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (4, 5, 6), ("A", "B")),
                ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (4, 5, 6), ("B", _CLOSING)),
            ])],
            ("eq", "ne"): [("any", [
                ("set_e", "1", "3", 6), ("set_v", "3", 4),
                ("choose_e", "1", "2t+1", (4, 5), ("B",)),
                ("choose_e", "1", "2", (4, 5), (_CLOSING,)),
                ("choose_e", "2t", "2t+1", (4, 5, 6), (_CLOSING, "B")),
            ])],
            ("ne", "eq"): [
                ("t==3", [
                    ("set_v", "4", 4), ("set_e", "4", "5", 2),
                    ("set_e", "5", "6", 3), ("set_e", "5", "7", 4),
                    ("choose_e", "1", "7", (5, 6), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "6", "7", (5, 6), (_CLOSING,)),
                ]),
                ("t>=5", [
                    ("set_v", "2t-2", 6), ("set_v", "2t-1", 0),
                    ("set_e", "2t-3", "2t-2", 4),
                    ("set_e", "2t-3", "2t-1", 5),
                    ("set_e", "2t-1", "2t+1", 6),
                    ("choose_e", "1", "2t+1", (4, 5), ("A",)),
                    ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "2t", "2t+1", (4, 5), (_CLOSING,)),
                    ("if_e", "2t", "2t+1", (4,), [
                        ("set_v", "2t", 6), ("set_e", "2t-1", "2t", 2),
                    ]),
                    ("if_e", "2t", "2t+1", (5,), [
                        ("set_v", "2t", 1), ("set_e", "2t-1", "2t", 4),
                    ]),
                ]),
            ],
            ("eq", "eq"): [
                ("t==3", [
                    ("set_e", "1", "2", 4), ("set_e", "1", "3", 6),
                    ("set_v", "3", 4), ("set_v", "4", 5),
                    ("set_e", "3", "4", 1), ("set_e", "4", "5", 2),
                    ("set_e", "3", "5", 0), ("set_e", "5", "6", 3),
                    ("set_e", "6", "7", 6), ("set_e", "5", "7", 4),
                    ("set_e", "1", "7", 5),
                ]),
                ("t>=5", [
                    ("set_e", "1", "2", 5), ("set_e", "1", "3", 6),
                    ("set_v", "3", 4),
                    ("set_v", "2t-2", 6), ("set_v", "2t-1", 0),
                    ("set_v", "2t", 1),
                    ("set_e", "2t-3", "2t-2", 4),
                    ("set_e", "2t-3", "2t-1", 5),
                    ("set_e", "2t-1", "2t", 4), ("set_e", "2t", "2t+1", 5),
                    ("set_e", "2t-1", "2t+1", 6), ("set_e", "1", "2t+1", 4),
                ]),
            ],
        },
    },
    (4, "even"): {
        "endpoints": (2, 3),
        "base_v": {"2": 1, "3": 6, "4": 4, "5": 3},
        "base_e": {("2", "3"): 3, ("1", "3"): 4, ("3", "4"): 2,
                   ("4", "5"): 0, ("3", "5"): 1},
        "block_v": {"4i-2": 2, "4i-1": 4, "4i": 5, "4i+1": 3},
        "block_e": {("4i-3", "4i-2"): 5, ("4i-2", "4i-1"): 0,
                    ("4i-3", "4i-1"): 6, ("4i-1", "4i"): 2,
                    ("4i", "4i+1"): 0, ("4i-1", "4i+1"): 1},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (0, 5, 6), ("A", "B")),
                ("choose_e", "1", "2", (0, 5, 6), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (0, 5, 6), ("B", _CLOSING)),
                ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ("if_e", "2t", "2t+1", (5, 6), [("set_v", "2t", 0)]),
            ])],
            ("eq", "ne"): [("any", [
                ("set_e", "1", "3", 0),
                ("choose_e", "1", "2t+1", (5, 6), ("B",)),
                ("choose_e", "1", "2", (5, 6), (_CLOSING,)),
                ("choose_e", "2t", "2t+1", (0, 5, 6), ("B", _CLOSING)),
                ("if_e", "2t", "2t+1", (5, 6), [("set_v", "2t", 0)]),
            ])],
            ("ne", "eq"): [
                ("t==2", [
                    ("set_e", "3", "5", 0), ("set_v", "4", 0),
                    ("choose_e", "1", "5", (5, 6), ("A",)),
                    ("choose_e", "1", "2", (0, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "4", "5", (5, 6), (_CLOSING,)),
                    ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ]),
                ("t>=4", [
                    ("set_e", "2t-1", "2t+1", 5),
                    ("set_v", "2t-2", 1), ("set_v", "2t-1", 0),
                    ("set_e", "2t-2", "2t-1", 3), ("set_v", "2t", 4),
                    ("choose_e", "1", "2t+1", (0, 6), ("A",)),
                    ("choose_e", "1", "2", (0, 5, 6), (_CLOSING, "A")),
                    ("choose_e", "2t", "2t+1", (0, 6), (_CLOSING,)),
                    ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ]),
            ],
            ("eq", "eq"): [
                ("t==2", [
                    ("set_v", "2", 4), ("set_v", "3", 0), ("set_v", "4", 1),
                    ("set_e", "1", "2", 6), ("set_e", "2", "3", 2),
                    ("set_e", "1", "3", 5), ("set_e", "3", "4", 3),
                    ("set_e", "4", "5", 5), ("set_e", "3", "5", 6),
                    ("set_e", "1", "5", 0),
                ]),
                ("t>=4", [
                    ("set_e", "1", "2", 5), ("set_e", "1", "3", 0),
                    ("set_v", "2t-2", 1), ("set_v", "2t-1", 0),
                    ("set_v", "2t", 4),
                    ("set_e", "2t-2", "2t-1", 3),
                    ("set_e", "2t-1", "2t+1", 5), ("set_e", "1", "2t+1", 6),
                ]),
            ],
        },
    },
    (4, "odd"): {
        "endpoints": (2, 3),
        "base_v": {"2": 1, "3": 0, "4": 1, "5": 6, "6": 2, "7": 3},
        "base_e": {("2", "3"): 3, ("1", "3"): 4, ("3", "4"): 5,
                   ("4", "5"): 3, ("3", "5"): 2, ("5", "6"): 4,
                   ("6", "7"): 0, ("5", "7"): 1},
        "block_v": {"4i": 2, "4i+1": 4, "4i+2": 5, "4i+3": 3},
        "block_e": {("4i-1", "4i"): 5, ("4i", "4i+1"): 0,
                    ("4i-1", "4i+1"): 6, ("4i+1", "4i+2"): 2,
                    ("4i+2", "4i+3"): 0, ("4i+1", "4i+3"): 1},
        "subcases": {
            ("ne", "ne"): [("any", [
                ("choose_e", "1", "2t+1", (0, 5, 6), ("A", "B")),
                ("choose_e", "1", "2", (0, 5, 6), ("A", _CLOSING)),
                ("choose_e", "2t", "2t+1", (0, 5, 6), ("B", _CLOSING)),
                ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ("if_e", "2t", "2t+1", (5, 6), [("set_v", "2t", 0)]),
            ])],
            ("eq", "ne"): [("any", [
                ("set_e", "1", "3", 6),
                ("choose_e", "1", "2t+1", (0, 5), ("B",)),
                ("choose_e", "1", "2", (0, 5), (_CLOSING,)),
                ("choose_e", "2t", "2t+1", (0, 5, 6), (_CLOSING, "B")),
                ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ("if_e", "2t", "2t+1", (5, 6), [("set_v", "2t", 0)]),
            ])],
            ("ne", "eq"): [
                ("t==3", [
                    ("set_e", "5", "7", 0),
                    ("choose_e", "1", "7", (5, 6), ("A",)),
                    ("choose_e", "1", "2", (0, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "6", "7", (5, 6), (_CLOSING,)),
                    ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                ]),
                ("t>=5", [
                    ("set_v", "2t-2", 0), ("set_v", "2t-1", 1),
                    ("set_e", "2t-2", "2t-1", 4),
                    ("set_e", "2t-1", "2t", 3),
                    ("set_e", "2t-1", "2t+1", 5),
                    ("choose_e", "1", "2t+1", (0, 6), ("A",)),
                    ("choose_e", "1", "2", (0, 5, 6), ("A", _CLOSING)),
                    ("choose_e", "2t", "2t+1", (0, 6), (_CLOSING,)),
                    ("if_e", "1", "2", (0,), [("set_v", "2", 5)]),
                    ("if_e", "2t", "2t+1", (6,), [("set_v", "2t", 0)]),
                ]),
            ],
            ("eq", "eq"): [
                ("t==3", [
                    ("set_e", "1", "2", 0), ("set_e", "1", "3", 6),
                    ("set_v", "2", 5), ("set_e", "6", "7", 6),
                    ("set_e", "5", "7", 0), ("set_e", "1", "7", 5),
                ]),
                ("t>=5", [
                    ("set_e", "1", "2", 5), ("set_e", "1", "3", 6),
                    ("set_v", "2t-2", 0), ("set_v", "2t-1", 1),
                    ("set_v", "2t", 0),
                    ("set_e", "2t-2", "2t-1", 4),
                    ("set_e", "2t-1", "2t", 3), ("set_e", "2t", "2t+1", 6),
                    ("set_e", "2t-1", "2t+1", 5), ("set_e", "1", "2t+1", 0),
                ]),
            ],
        },
    },
}

# shared instruction lists referenced by name in the tables above
_SHARED_OPS = {
    "OPS_2E_PLAIN_T2": [
        ("choose_e", "1", "5", (3, 5, 6), ("A", "B")),
        ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
        ("choose_e", "4", "5", (3, 5, 6), ("B", _CLOSING)),
        ("if_e", "4", "5", (5, 6), [("set_v", "4", 3)]),
    ],
    "OPS_2E_PLAIN_T4": [
        ("choose_e", "1", "2t+1", (4, 5, 6), ("A", "B")),
        ("choose_e", "1", "2", (4, 5, 6), ("A", _CLOSING)),
        ("choose_e", "2t", "2t+1", (4, 5, 6), ("B", _CLOSING)),
        ("if_e", "2t", "2t+1", (6,), [("set_e", "2t-1", "2t", 4)]),
    ],
    "OPS_2E_LOW_T2": [
        ("set_e", "1", "3", 3),
        ("choose_e", "1", "5", (5, 6), ("B",)),
        ("choose_e", "1", "2", (4, 5, 6), (_CLOSING,)),
        ("choose_e", "4", "5", (3, 5, 6), ("B", _CLOSING)),
        ("if_e", "4", "5", (5, 6), [("set_v", "4", 3)]),
    ],
    "OPS_2E_LOW_T4": [
        ("set_e", "1", "3", 3),
        ("choose_e", "1", "2t+1", (4, 5, 6), ("B",)),
        ("choose_e", "1", "2", (4, 5, 6), (_CLOSING,)),
        ("choose_e", "2t", "2t+1", (4, 5, 6), ("B", _CLOSING)),
        ("if_e", "2t", "2t+1", (6,), [("set_e", "2t-1", "2t", 4)]),
    ],
}

_IDX_RE = re.compile(r"^(?:(\d*)([it]))?([+-]?\d+)?$")


def _idx(expr: str | int, t: int, i: int | None = None) -> int:
    if isinstance(expr, int):
        return expr
    m = _IDX_RE.match(expr.replace(" ", ""))
    if not m or (m.group(1) is None and m.group(3) is None):
        raise ValueError(f"bad index pattern {expr!r}")
    coef, var, off = m.groups()
    val = 0
    if var:
        base = t if var == "t" else i
        if base is None:
            raise ValueError(f"pattern {expr!r} needs a block index")
        val = (int(coef) if coef else 1) * base
    if off:
        val += int(off)
    return val


class CaseFault(RuntimeError):
    """A template produced an empty choice set or an invalid labeling."""


def _subcase_key(case_id: int, parity: str, alpha: int, beta: int) -> tuple[str, str]:
    specials = {1: 6, 2: 2, 3: 3, 4: 4}
    a = "eq" if alpha == specials[case_id] else "ne"
    if case_id == 2 and parity == "even":
        b = {3: "b3", 4: "b4"}.get(beta, "nb")
    else:
        b_special = {1: 0, 2: 5, 3: 0, 4: 1}[case_id]
        b = "eq" if beta == b_special else "ne"
    return a, b


def chain_template(
    case_id: int,
    t: int,
    host_context: tuple[int, int, int, int],
) -> dict[tuple, int]:
    """Labels for a closed fan of ``t`` triangles, canonical frame.

    ``host_context`` is (left attachment label, left stub edge label, right
    attachment label, right stub edge label).  Keys of the result are
    ``("v", index)`` and ``("e", i, j)`` over 1-based spine indices,
    including the closing edge (1, 2t+1).  The endpoint vertex labels are
    the case's canonical pair.
    """
    if case_id not in CASE_TARGETS:
        raise ValueError(f"unknown case {case_id}")
    if t < 2:
        raise ValueError("chains need at least two triangles")
    fw1, alpha, fw2, beta = host_context
    a_lab, b_lab = CASE_TARGETS[case_id]
    if a_lab not in availability_set(fw1, alpha) or b_lab not in availability_set(
        fw2, beta
    ):
        raise ValueError("host context does not admit the case's endpoint labels")
    parity = "even" if t % 2 == 0 else "odd"
    spec = TEMPLATES[(case_id, parity)]
    lab: dict[tuple, int] = {}

    def put_v(idx: int, value: int) -> None:
        lab[("v", idx)] = value

    def put_e(i: int, j: int, value: int) -> None:
        lab[("e", min(i, j), max(i, j))] = value

    put_v(1, a_lab)
    put_v(2 * t + 1, b_lab)
    for pat, value in spec["base_v"].items():
        put_v(_idx(pat, t), value)
    for (pi, pj), value in spec["base_e"].items():
        put_e(_idx(pi, t), _idx(pj, t), value)
    k_blocks = t // 2 if parity == "even" else (t - 1) // 2
    for i in range(2, k_blocks + 1):
        for pat, value in spec["block_v"].items():
            put_v(_idx(pat, t, i), value)
        for (pi, pj), value in spec["block_e"].items():
            put_e(_idx(pi, t, i), _idx(pj, t, i), value)

    key = _subcase_key(case_id, parity, alpha, beta)
    branches = spec["subcases"][key]
    ops = None
    for guard, body in branches:
        if guard == "any":
            ops = body
        elif guard.startswith("t==") and t == int(guard[3:]):
            ops = body
        elif guard.startswith("t>=") and t >= int(guard[3:]):
            ops = body
        if ops is not None:
            break
    if ops is None:
        raise CaseFault(f"no branch for case {case_id} parity {parity} t={t}")
    if isinstance(ops, str):
        ops = _SHARED_OPS[ops]

    def resolve(token) -> int:
        if token == "A":
            return alpha
        if token == "B":
            return beta
        kind, pi, pj = token
        i, j = _idx(pi, t), _idx(pj, t)
        return lab[("e", min(i, j), max(i, j))]

    def run_ops(body) -> None:
        for op in body:
            if op[0] == "set_v":
                put_v(_idx(op[1], t), op[2])
            elif op[0] == "set_e":
                put_e(_idx(op[1], t), _idx(op[2], t), op[3])
            elif op[0] == "choose_e":
                _, pi, pj, cands, excl = op
                banned = {resolve(tok) for tok in excl}
                pick = next((c for c in cands if c not in banned), None)
                if pick is None:
                    raise CaseFault(
                        f"empty choice for edge ({pi},{pj}) in case {case_id}"
                    )
                put_e(_idx(pi, t), _idx(pj, t), pick)
            elif op[0] == "if_e":
                _, pi, pj, values, body2 = op
                i, j = _idx(pi, t), _idx(pj, t)
                if lab[("e", min(i, j), max(i, j))] in values:
                    run_ops(body2)
            else:
                raise ValueError(f"unknown op {op[0]}")

    run_ops(ops)
    return lab


def apply_template(
    tmpl: dict[tuple, int], spine: tuple[int, ...]
) -> dict[Element, int]:
    """Map canonical spine indices onto actual vertex ids."""
    out: dict[Element, int] = {}
    for key, value in tmpl.items():
        if key[0] == "v":
            out[spine[key[1] - 1]] = value
        else:
            out[norm_edge(spine[key[1] - 1], spine[key[2] - 1])] = value
    return out


# -- reductions and the driver -----------------------------------------------

def reduce_c1c2(g: Graph, config: Configuration) -> tuple[Graph, list[Element]]:
    """Drop one 2-vertex of a C1/C2 instance; freed elements come back later."""
    if config.kind not in ("C1", "C2"):
        raise ValueError("reduction applies to C1/C2 only")
    u1 = config.witnesses[0]
    if g.degree(u1) != 2:
        raise ValueError(f"witness {u1} is not a 2-vertex")
    freed: list[Element] = [u1] + g.incident_edges(u1)
    return g.remove_vertices([u1]), freed


def label_delta4(g: Graph, diag: Diagnostics | None = None) -> TotalLabeling:
    """Verified span <= 6 labeling of an outerplanar graph with max degree 4."""
    if g.n == 0:
        raise ValueError("empty graph")
    if g.max_degree() != 4:
        raise NotDelta(4, g.max_degree())
    assign: dict[Element, int] = {}
    for comp in g.components():
        assign.update(_label_span6(g.induced(comp), diag).assignment)
    out = TotalLabeling(g, 6, assign)
    bad = verify(out, 2)
    if bad:
        raise InfeasibleTrace(f"driver produced an invalid labeling: {bad[:3]}")
    return out


def _by_components_span6(g: Graph, diag: Diagnostics | None) -> TotalLabeling:
    assign: dict[Element, int] = {}
    for comp in g.components():
        assign.update(_label_span6(g.induced(comp), diag).assignment)
    return TotalLabeling(g, 6, assign)


def _label_span6(g: Graph, diag: Diagnostics | None) -> TotalLabeling:
    """Connected host, maximum degree <= 4, verified labeling within {0..6}."""
    delta = g.max_degree()
    if delta <= 2:
        return label_cycle_or_path(g, k=6)
    if delta == 3:
        return TotalLabeling(g, 6, dict(_label_span5(g, diag).assignment))
    if g.n + g.m <= 9:
        f = find_labeling_bounded(g, 2, 6)
        if f is None:
            raise InfeasibleTrace("tiny host admits no labeling within {0..6}")
        return f
    if g.min_degree() == 1:
        return _peel_pendants6(g, diag)
    emb = recognize_embed(g)
    cfg = find_configuration(emb)
    if diag is not None:
        diag.step(f"degree-4 dispatch: {cfg.kind} at {cfg.witnesses}")
    if cfg.kind in ("C1", "C2"):
        return _reduce_and_fill(g, cfg, diag)
    chain = find_closed_chain(emb, check_preconditions=False)
    return _chain_surgery(g, chain, diag)


def _peel_pendants6(g: Graph, diag: Diagnostics | None) -> TotalLabeling:
    stack: list[tuple[int, int]] = []
    h = g
    while h.max_degree() == 4 and h.min_degree() == 1 and h.n + h.m > 9:
        u1 = min(v for v in h.vertices if h.degree(v) == 1)
        u2 = h.neighbors(u1)[0]
        stack.append((u1, u2))
        h = h.remove_vertices([u1])
    f = _by_components_span6(h, diag)
    cur = h
    while stack:
        u1, u2 = stack.pop()
        cur = cur.add_edges([(u1, u2)])
        grown = TotalLabeling(cur, 6, dict(f.assignment))
        f2 = extend_bounded(grown, [u1, norm_edge(u1, u2)], k=6)
        if f2 is None or verify(f2, 2):
            raise InfeasibleTrace(f"pendant completion failed at vertex {u1}")
        f = f2
    return f


def _reduce_and_fill(
    g: Graph, cfg: Configuration, diag: Diagnostics | None
) -> TotalLabeling:
    h, freed = reduce_c1c2(g, cfg)
    fh = _by_components_span6(h, diag)
    grown = TotalLabeling(g, 6, dict(fh.assignment))
    done = extend_bounded(grown, freed, k=6)
    if done is None:
        # Freeing only the dropped vertex's own elements is not always
        # completable (the host can force both freed edges into {3,6},
        # say, leaving no vertex label).  Widening the search to the
        # neighbors' elements relabels a slightly larger patch instead.
        u1 = cfg.witnesses[0]
        wider = set(freed)
        for nb in g.neighbors(u1):
            wider.add(nb)
            wider.update(g.incident_edges(nb))
        if diag is not None:
            diag.note(
                event="widened-completion",
                where=f"{cfg.kind} completion",
                freed=len(wider),
            )
        done = extend_bounded(grown, sorted(wider, key=repr), k=6)
    if done is None or verify(done, 2):
        raise InfeasibleTrace(f"{cfg.kind} reduction could not be completed")
    return done


def _chain_surgery(g: Graph, chain, diag: Diagnostics | None) -> TotalLabeling:
    spine = chain.spine
    closing = chain.closing_inner_edge
    w1, w2 = chain.attachments
    h = g.remove_vertices(chain.interior()).remove_edges([closing])
    fh = _by_components_span6(h, diag)

    l1 = availability(fh, spine[0], w1)
    l2 = availability(fh, spine[-1], w2)
    pair = claim_pair(l1, l2)
    cc = canonicalize(pair)
    if diag is not None:
        diag.step(
            f"chain t={chain.t} pair={pair} case={cc.case_id} "
            f"reverse={cc.reverse} complement={cc.complement}"
        )

    host = dict(fh.assignment)
    if cc.complement:
        host = {z: 6 - l for z, l in host.items()}
    sp = spine[::-1] if cc.reverse else spine
    wl, wr = (w2, w1) if cc.reverse else (w1, w2)
    ctx = (
        host[wl],
        host[norm_edge(sp[0], wl)],
        host[wr],
        host[norm_edge(sp[-1], wr)],
    )
    if diag is not None:
        parity = "even" if chain.t % 2 == 0 else "odd"
        diag.step(
            f"subcase {_subcase_key(cc.case_id, parity, ctx[1], ctx[3])} "
            f"stub edges ({ctx[1]}, {ctx[3]})"
        )
    try:
        tmpl = chain_template(cc.case_id, chain.t, ctx)
        ext = apply_template(tmpl, sp)
        merged = dict(host)
        merged.pop(sp[0], None)
        merged.pop(sp[-1], None)
        merged.update(ext)
        if cc.complement:
            merged = {z: 6 - l for z, l in merged.items()}
        cand = TotalLabeling(g, 6, merged)
        bad = verify(cand, 2)
    except CaseFault as exc:
        bad = [exc]
        merged = dict(fh.assignment)
        cand = None
    if not bad:
        return cand
    if diag is not None:
        diag.note(
            event="fallback",
            where=f"chain template case {cc.case_id} t={chain.t}",
            detail=str(bad[:2]),
        )
    free: list[Element] = list(spine)
    free.append(closing)
    for i in range(len(spine) - 1):
        free.append(norm_edge(spine[i], spine[i + 1]))
    for i in range(0, len(spine) - 2, 2):
        free.append(norm_edge(spine[i], spine[i + 2]))
    if len(free) > 30:
        raise InfeasibleTrace("chain template failed on a long chain")
    base = TotalLabeling(g, 6, dict(fh.assignment))
    done = extend_bounded(base, free, k=6)
    if done is None or verify(done, 2):
        raise InfeasibleTrace("chain fallback search failed")
    return done
