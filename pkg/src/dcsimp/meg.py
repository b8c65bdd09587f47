"""Minimum equivalent graph of an unweighted digraph.

Keep the fewest arcs that preserve every reachability i ~> j.  The
intra-class subproblem of the decomposition reduces to exactly this.  The
problem is NP-hard in general, so the exact solver is a bounded search and
a greedy maximal fallback is provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import LimitExceeded, NotASubset

Arc = tuple[int, int]

DEFAULT_EXACT_LIMIT = 20


@dataclass(frozen=True)
class Digraph:
    """Unweighted digraph on nodes 1..n without self-loops."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        for i, j in self.arcs:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"arc ({i},{j}) outside nodes 1..{self.n}")
            if i == j:
                raise ValueError(f"self-loop ({i},{i}) not allowed")


def _adjacency(arcs: Iterable[Arc]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for i, j in arcs:
        adj.setdefault(i, []).append(j)
    return adj


def _reaches(arcs: Iterable[Arc], src: int, dst: int) -> bool:
    """Breadth-first search for a walk src ~> dst over the given arcs."""
    adj = _adjacency(arcs)
    if src == dst:
        return True
    seen = {src}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj.get(u, ()):
                if v == dst:
                    return True
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return False


def reachability(h: Digraph) -> list[list[bool]]:
    """Closure matrix: entry [i-1][j-1] says a walk i ~> j exists.

    The diagonal is True (the degenerate walk).
    """
    adj = _adjacency(h.arcs)
    mat = [[False] * h.n for _ in range(h.n)]
    for s in range(1, h.n + 1):
        seen = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj.get(u, ()):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        row = mat[s - 1]
        for t in seen:
            row[t - 1] = True
    return mat


def same_reachability(h: Digraph, kept: Iterable[Arc]) -> bool:
    """Does keeping only ``kept`` preserve every reachability of h?

    Dropping arcs can only lose walks, so equality holds exactly when every
    dropped arc (i,j) still has some walk i ~> j through the kept arcs.
    """
    kset = frozenset(kept)
    if not kset <= h.arcs:
        raise NotASubset(f"{sorted(kset - h.arcs)} are not arcs of the digraph")
    for i, j in sorted(h.arcs - kset):
        if not _reaches(kset, i, j):
            return False
    return True


def meg_greedy(h: Digraph) -> frozenset[Arc]:
    """Drop arcs in lexicographic order whenever reachability survives.

    Checking just the arc being dropped suffices: replacement walks for
    earlier drops can reroute any use of this arc through the walk found
    here, which avoids it.  The result is minimal (no single kept arc can
    still go) but not necessarily minimum.
    """
    kept = set(h.arcs)
    for i, j in sorted(h.arcs):
        kept.remove((i, j))
        if not _reaches(kept, i, j):
            kept.add((i, j))
    return frozenset(kept)


def meg_exact(h: Digraph, limit: int = DEFAULT_EXACT_LIMIT) -> frozenset[Arc]:
    """A minimum-cardinality arc subset preserving all reachabilities.

    Branch and bound over drop/keep decisions per arc, seeded with the
    greedy solution.  The drop branch is tried first and is pruned when the
    arc has no replacement walk even with every undecided arc still present
    (more deletions only make that worse); a branch dies once its kept arcs
    already match the incumbent.
    """
    if len(h.arcs) > limit:
        raise LimitExceeded(
            f"{len(h.arcs)} arcs exceed the exact search limit of {limit}"
        )
    arcs = sorted(h.arcs)
    best = sorted(meg_greedy(h))

    def search(idx: int, kept: list[Arc], removed: set[Arc]) -> None:
        nonlocal best
        if len(kept) >= len(best):
            return
        if idx == len(arcs):
            if same_reachability(h, kept):
                best = list(kept)
            return
        a = arcs[idx]
        live = [x for x in arcs if x != a and x not in removed]
        if _reaches(live, a[0], a[1]):
            removed.add(a)
            search(idx + 1, kept, removed)
            removed.discard(a)
        kept.append(a)
        search(idx + 1, kept, removed)
        kept.pop()

    search(0, [], set())
    return frozenset(best)
