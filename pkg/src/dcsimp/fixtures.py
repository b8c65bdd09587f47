"""Hand-picked systems that each exercise one distinctive regime.

The same four systems ship as ``.dcs`` files under ``fixtures/`` at the
repository root; a test keeps the two copies identical.
"""

from __future__ import annotations

from .core import PrecedenceGraph, normalize


def two_classes() -> PrecedenceGraph:
    """Five nodes; {2,3,4,5} ride the zero-weight cycle 3-4-2-5-3, node 1
    stands alone.

    The only removable constraint is the slack intra-class edge (3,2) with
    weight 3 against a minimum walk weight of 2.  The condensation has two
    nodes and edge weights exactly 1 and 0.
    """
    return normalize(
        5,
        [
            (1, 2, 1),
            (3, 1, 2),
            (2, 5, -1),
            (5, 3, -1),
            (3, 4, 1),
            (4, 2, 1),
            (3, 2, 3),
        ],
    )


def shortcut_trap() -> PrecedenceGraph:
    """Zero-weight cycle 1-3-1 bait for the fast redundancy criterion.

    The detour bound for edge (1,2) through (1,3) is -4 + 7 = 3, exactly
    c_12, yet dropping (1,2) loses information: no path to node 2 remains.
    Any redundancy test that ignores zero-weight cycles gets this wrong.
    """
    return normalize(3, [(1, 2, 3), (1, 3, -4), (3, 1, 4)])


def tied_optima() -> PrecedenceGraph:
    """Two maximum redundant edge sets of size one, {(1,2)} and {(1,3)},
    whose union is not redundant; nodes 2 and 3 share the zero cycle 2-3-2."""
    return normalize(3, [(1, 2, 0), (1, 3, 1), (2, 3, 1), (3, 2, -1)])


def weight_sensitive() -> PrecedenceGraph:
    """No zero cycle and nothing redundant, although ignoring weights the
    chord (1,2) would be droppable (1 -> 3 -> 2 reaches node 2 but costs 2)."""
    return normalize(3, [(1, 2, 1), (1, 3, 1), (3, 2, 1)])


ALL = {
    "two_classes": two_classes,
    "shortcut_trap": shortcut_trap,
    "tied_optima": tied_optima,
    "weight_sensitive": weight_sensitive,
}
