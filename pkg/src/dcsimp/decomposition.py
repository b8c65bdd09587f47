"""Zero-cycle classes, edge partition, condensation, and the general
maximum redundant edge set.

Two nodes are equivalent when some zero-weight closed walk passes through
both.  Inside a class every minimum walk weight is pinned down rigidly
(d_ij = -d_ji, and d_ij = d_is + d_sj for any class member s), which is what
lets the redundancy problem split cleanly:

* slack intra-class edges (weight above the minimum walk weight) are always
  removable, all at once;
* between classes, everything except one cheapest crossing per ordered class
  pair is removable, and whether that last crossing goes too is decided on
  the condensation, whose cycles are all strictly positive, so the fast
  criterion applies;
* the tight intra-class edges form an unweighted reachability problem: which
  arcs of a strongly connected digraph can go while preserving reachability.
  That piece is NP-hard and goes to the MEG solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping

from .core import DistanceMatrix, Edge, PrecedenceGraph, min_walk_weights
from .errors import ExactLimitExceeded
from .meg import DEFAULT_EXACT_LIMIT, Digraph, meg_exact, meg_greedy
from .redundancy import mres_no_zero_cycles

RepresentativePolicy = Literal["smallest", "largest"]


@dataclass(frozen=True)
class Partition:
    """Node classes of the zero-closed-walk relation.

    Classes are ordered by smallest member, so their indices do not depend
    on the representative policy.  ``class_of`` maps node -> class index.
    """

    classes: tuple[frozenset[int], ...]
    reps: tuple[int, ...]
    class_of: Mapping[int, int]


@dataclass(frozen=True)
class EdgePartition:
    """Edges routed by the node partition.

    ``intra[k]`` holds the edges inside class k, split into ``intra_slack[k]``
    (weight strictly above the minimum walk weight; always removable) and
    ``intra_tight[k]`` (weight equal to it).  ``cross[(a, b)]`` holds the
    edges from class a to class b, keyed only for nonempty pairs;
    ``cross_min[(a, b)]`` is the subset realizing the cheapest
    rep-to-rep crossing, and ``cross_rep[(a, b)]`` its lexicographically
    smallest member, the pair's representing edge.
    """

    intra: tuple[frozenset[Edge], ...]
    intra_slack: tuple[frozenset[Edge], ...]
    intra_tight: tuple[frozenset[Edge], ...]
    cross: Mapping[tuple[int, int], frozenset[Edge]]
    cross_min: Mapping[tuple[int, int], frozenset[Edge]]
    cross_rep: Mapping[tuple[int, int], Edge]

    @property
    def cross_all(self) -> frozenset[Edge]:
        return frozenset(e for es in self.cross.values() for e in es)

    @property
    def cross_min_all(self) -> frozenset[Edge]:
        return frozenset(e for es in self.cross_min.values() for e in es)

    @property
    def cross_rep_all(self) -> frozenset[Edge]:
        return frozenset(self.cross_rep.values())


@dataclass(frozen=True)
class Condensation:
    """One node per class (its representative); one edge per nonempty
    ordered class pair, weighted by the pair's cheapest rep-to-rep crossing:
    d(rep_a, s) + c_st + d(t, rep_b) at the representing edge (s, t)."""

    reps: tuple[int, ...]
    edges: Mapping[tuple[int, int], Fraction]

    def as_graph(self) -> PrecedenceGraph:
        """The condensation renumbered onto nodes 1..K in class order."""
        index = {rep: k + 1 for k, rep in enumerate(self.reps)}
        return PrecedenceGraph(
            len(self.reps),
            {(index[a], index[b]): w for (a, b), w in self.edges.items()},
        )


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the maximum redundant edge set solver.

    ``exact_limit`` bounds the arcs per intra-class exact MEG solve; above
    it the solve either falls back to greedy (``allow_heuristic``) or raises.
    The representative policy only matters for exercising independence
    properties; results are equivalent either way.
    """

    exact_limit: int = DEFAULT_EXACT_LIMIT
    allow_heuristic: bool = False
    representative: RepresentativePolicy = "smallest"


@dataclass(frozen=True)
class MresResult:
    """A redundant edge set plus the strength of its guarantee.

    ``certified`` means every intra-class piece was solved exactly, so the
    set is a true maximum; otherwise it is maximal but possibly smaller
    than optimal.
    """

    edges: frozenset[Edge]
    certified: bool


def equivalence_classes(
    d: DistanceMatrix, *, representative: RepresentativePolicy = "smallest"
) -> Partition:
    """Group nodes connected by zero-weight closed walks.

    i ~ j exactly when both directions are reachable and d_ij + d_ji = 0.
    The relation is transitive (concatenating two zero-weight closed walks
    through a shared node gives another), but the classes are built as
    connected components anyway, which needs no such argument to be correct.
    """
    parent = list(range(d.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, d.n + 1):
        row = d.rows[i]
        for j in range(i + 1, d.n + 1):
            dij = row[j]
            if dij is None:
                continue
            dji = d.rows[j][i]
            if dji is not None and dij + dji == 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for v in range(1, d.n + 1):
        groups.setdefault(find(v), []).append(v)
    classes = tuple(
        frozenset(members) for members in sorted(groups.values(), key=min)
    )
    if representative == "smallest":
        reps = tuple(min(c) for c in classes)
    elif representative == "largest":
        reps = tuple(max(c) for c in classes)
    else:
        raise ValueError(f"unknown representative policy {representative!r}")
    class_of = {v: k for k, c in enumerate(classes) for v in c}
    return Partition(classes, reps, class_of)


def partition_edges(
    g: PrecedenceGraph, d: DistanceMatrix, p: Partition
) -> EdgePartition:
    """Route every edge to its intra-class or cross-class bucket."""
    k = len(p.classes)
    intra: list[set[Edge]] = [set() for _ in range(k)]
    slack: list[set[Edge]] = [set() for _ in range(k)]
    cross: dict[tuple[int, int], set[Edge]] = {}
    for (i, j), w in g.edges.items():
        ci, cj = p.class_of[i], p.class_of[j]
        if ci == cj:
            intra[ci].add((i, j))
            if w > d.get(i, j):
                slack[ci].add((i, j))
        else:
            cross.setdefault((ci, cj), set()).add((i, j))
    cross_min: dict[tuple[int, int], frozenset[Edge]] = {}
    cross_rep: dict[tuple[int, int], Edge] = {}
    for (ci, cj), edges in cross.items():
        va, vb = p.reps[ci], p.reps[cj]
        best = None
        argmin: list[Edge] = []
        for s, t in edges:
            # reps and endpoints share classes, so both distances exist
            cost = d.get(va, s) + g.edges[(s, t)] + d.get(t, vb)
            if best is None or cost < best:
                best, argmin = cost, [(s, t)]
            elif cost == best:
                argmin.append((s, t))
        cross_min[(ci, cj)] = frozenset(argmin)
        cross_rep[(ci, cj)] = min(argmin)
    return EdgePartition(
        intra=tuple(frozenset(s) for s in intra),
        intra_slack=tuple(frozenset(s) for s in slack),
        intra_tight=tuple(frozenset(a - b) for a, b in zip(intra, slack)),
        cross={pair: frozenset(es) for pair, es in cross.items()},
        cross_min=cross_min,
        cross_rep=cross_rep,
    )


def condensation(
    g: PrecedenceGraph, d: DistanceMatrix, p: Partition, ep: EdgePartition
) -> Condensation:
    """Collapse each class onto its representative.

    Every cycle of the result weighs strictly more than zero: a zero-weight
    closed walk through two representatives would have merged their classes.
    """
    edges: dict[tuple[int, int], Fraction] = {}
    for (ci, cj), (s, t) in ep.cross_rep.items():
        va, vb = p.reps[ci], p.reps[cj]
        edges[(va, vb)] = d.get(va, s) + g.edges[(s, t)] + d.get(t, vb)
    return Condensation(p.reps, edges)


def condensation_redundant_pairs(c: Condensation) -> frozenset[tuple[int, int]]:
    """Class-index pairs whose condensation edge is redundant.

    The condensation has only strictly positive cycles, so the fast
    criterion computes its unique maximum redundant edge set directly.
    """
    removed = mres_no_zero_cycles(c.as_graph())
    return frozenset((a - 1, b - 1) for a, b in removed)


def _class_digraph(
    members: frozenset[int], arcs: frozenset[Edge]
) -> tuple[Digraph, dict[Edge, Edge]]:
    """Relabel one class onto nodes 1..m for the MEG solver."""
    order = sorted(members)
    local = {v: q + 1 for q, v in enumerate(order)}
    back = {(local[s], local[t]): (s, t) for s, t in arcs}
    return Digraph(len(order), frozenset(back)), back


def max_redundant_edge_set(
    g: PrecedenceGraph, cfg: SolverConfig = SolverConfig()
) -> MresResult:
    """A maximum redundant edge set of an arbitrary feasible system.

    Assembled per the decomposition (see module docstring): all slack
    intra-class edges, all non-representing cross edges, the representing
    edges of pairs found redundant on the condensation, and per class the
    complement of a minimum equivalent graph of its tight edges.  With exact
    intra-class solves the result is a certified maximum; greedy fallback
    (opt-in) degrades the certificate to maximal.
    """
    d = min_walk_weights(g)
    p = equivalence_classes(d, representative=cfg.representative)
    ep = partition_edges(g, d, p)
    cond = condensation(g, d, p, ep)
    removed_pairs = condensation_redundant_pairs(cond)
    out: set[Edge] = set()
    certified = True
    for pair, eij in ep.cross.items():
        if pair in removed_pairs:
            out |= eij
        else:
            out |= eij - {ep.cross_rep[pair]}
    for k, members in enumerate(p.classes):
        out |= ep.intra_slack[k]
        tight = ep.intra_tight[k]
        if not tight:
            continue
        h, back = _class_digraph(members, tight)
        if len(tight) <= cfg.exact_limit:
            kept = meg_exact(h, cfg.exact_limit)
        elif cfg.allow_heuristic:
            kept = meg_greedy(h)
            certified = False
        else:
            raise ExactLimitExceeded(
                f"class {{{', '.join(map(str, sorted(members)))}}} has "
                f"{len(tight)} tight edges, over the exact limit of "
                f"{cfg.exact_limit}; allow the heuristic to accept a "
                "maximal (uncertified) result"
            )
        out |= tight - {back[a] for a in kept}
    return MresResult(frozenset(out), certified)
