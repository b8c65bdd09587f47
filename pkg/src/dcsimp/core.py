"""Value types and core analyses for precedence graphs.

A precedence relation system is a finite set of difference constraints
``x_i - x_j <= c_ij`` over variables ``x_1 .. x_n``.  The same data is a
weighted digraph: one node per variable, one edge ``(i, j)`` of weight
``c_ij`` per constraint.  Everything in this package works on that view.

Weights are exact rationals (:class:`fractions.Fraction`).  Exactness is not
a nicety here: the decomposition machinery keys on cycle weights being
*exactly* zero, a question floating point cannot answer.

Feasibility is a walk statement: the system has a solution precisely when no
closed walk has negative weight, and then the tightest derivable bound on
``x_u - x_v`` is the minimum weight over all walks ``u ~> v``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import (
    IndexOutOfRange,
    InfeasibleSystem,
    NegativeSelfLoop,
    NotAWalk,
    SameNode,
    SelfLoopDropped,
)

Edge = tuple[int, int]
WeightLike = Union[Fraction, int, str]

# Floyd-Warshall dispatch: below this node count the plain-Python loops beat
# the numpy setup cost.
_NUMPY_MIN_NODES = 40
# The int64 kernel is used only while (n + 1) * (max |scaled weight| + 1)
# stays under this, which keeps every true walk weight far below the
# unreachable sentinel and rules overflow out.
_INT64_GUARD = 1 << 40
_INF = 1 << 61
_UNREACHABLE = 1 << 60


def as_weight(value: WeightLike) -> Fraction:
    """Coerce an int, Fraction, or decimal/rational string to an exact weight.

    Floats are rejected on purpose: a binary float rarely equals the decimal
    the caller had in mind, and the error would surface much later as a
    misclassified zero-weight cycle.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("weights must be rational numbers, not bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational constant: {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(
            f"refusing float weight {value!r}; pass a string or Fraction instead"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a weight")


@dataclass(frozen=True)
class PrecedenceGraph:
    """A difference constraint system viewed as a weighted digraph.

    Nodes are ``1..n``.  ``edges`` maps ordered pairs ``(i, j)`` to exact
    weights; self-loops and parallel edges are excluded by construction
    (collapse raw input through :func:`normalize` first).  Instances are
    immutable; the edge mapping is copied defensively.
    """

    n: int
    edges: Mapping[Edge, Fraction]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        clean: dict[Edge, Fraction] = {}
        for (i, j), w in self.edges.items():
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise IndexOutOfRange(f"edge ({i},{j}) outside nodes 1..{self.n}")
            if i == j:
                raise ValueError(
                    f"self-loop ({i},{i}); feed raw constraints through normalize()"
                )
            clean[(i, j)] = as_weight(w)
        object.__setattr__(self, "edges", clean)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _out(self) -> dict[int, tuple[tuple[int, Fraction], ...]]:
        out: dict[int, list[tuple[int, Fraction]]] = {
            i: [] for i in range(1, self.n + 1)
        }
        for (i, j), w in sorted(self.edges.items()):
            out[i].append((j, w))
        return {i: tuple(v) for i, v in out.items()}

    def successors(self, i: int) -> tuple[tuple[int, Fraction], ...]:
        """Out-edges of node i as (target, weight) pairs, sorted by target."""
        return self._out[i]

    def weight(self, i: int, j: int) -> Fraction:
        return self.edges[(i, j)]

    def without(self, remove: Iterable[Edge]) -> "PrecedenceGraph":
        """A copy with the given edges deleted; node set unchanged."""
        gone = set(remove)
        return PrecedenceGraph(
            self.n, {e: w for e, w in self.edges.items() if e not in gone}
        )

    def restricted_to(self, keep: Iterable[Edge]) -> "PrecedenceGraph":
        """A copy containing only the given edges; node set unchanged."""
        kept = set(keep)
        return PrecedenceGraph(
            self.n, {e: w for e, w in self.edges.items() if e in kept}
        )


@dataclass(frozen=True)
class Walk:
    """A node sequence ``(i_0, .., i_m)``; each consecutive pair must be an edge.

    A single node is the degenerate walk of weight zero.
    """

    nodes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if not self.nodes:
            raise ValueError("a walk visits at least one node")

    @property
    def steps(self) -> tuple[Edge, ...]:
        return tuple(zip(self.nodes, self.nodes[1:]))

    @property
    def closed(self) -> bool:
        return len(self.nodes) > 1 and self.nodes[0] == self.nodes[-1]


@dataclass(frozen=True, repr=False)
class DistanceMatrix:
    """Minimum walk weights of a feasible system.

    ``get(i, j)`` is the least weight over all walks ``i ~> j``, or ``None``
    when no such walk exists.  Unreachability is an absent value by design;
    a big sentinel number would leak into exact arithmetic.  ``rows`` is
    1-indexed with a padding row/column 0.
    """

    n: int
    feasible: bool
    rows: tuple[tuple[Fraction | None, ...], ...]

    def get(self, i: int, j: int) -> Fraction | None:
        return self.rows[i][j]

    def reachable(self, i: int, j: int) -> bool:
        return self.rows[i][j] is not None

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, feasible={self.feasible})"


@dataclass(frozen=True)
class WalkDecomposition:
    """A walk split into a simple path plus simple cycles (order of peeling)."""

    path: Walk
    cycles: tuple[Walk, ...]


def normalize(
    n: int, raw_edges: Iterable[tuple[int, int, WeightLike]]
) -> PrecedenceGraph:
    """Collapse raw constraint entries into a precedence graph.

    Parallel constraints on the same pair keep the tightest (minimum) weight,
    since every one of them must hold.  A self-loop with nonnegative weight
    says nothing (``0 <= c``) and is dropped with a :class:`SelfLoopDropped`
    warning; a negative self-loop is unsatisfiable outright.
    """
    edges: dict[Edge, Fraction] = {}
    for i, j, raw in raw_edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"constraint ({i},{j}) outside nodes 1..{n}")
        w = as_weight(raw)
        if i == j:
            if w < 0:
                raise NegativeSelfLoop(
                    f"constraint x_{i} - x_{i} <= {w} is unsatisfiable"
                )
            warnings.warn(
                f"dropping vacuous self-loop ({i},{i}) of weight {w}",
                SelfLoopDropped,
                stacklevel=2,
            )
            continue
        cur = edges.get((i, j))
        if cur is None or w < cur:
            edges[(i, j)] = w
    return PrecedenceGraph(n, edges)


def _scaled_integer_edges(g: PrecedenceGraph) -> tuple[dict[Edge, int], int]:
    """Rescale all weights to integers by the lcm of their denominators."""
    scale = lcm(*(w.denominator for w in g.edges.values())) if g.edges else 1
    return {e: int(w * scale) for e, w in g.edges.items()}, scale


def _fw_python(n: int, scaled: dict[Edge, int]) -> list[list[int | None]]:
    """Floyd-Warshall on integer weights, None marking unreachable pairs."""
    rows: list[list[int | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        rows[i][i] = 0
    for (i, j), w in scaled.items():
        cur = rows[i][j]
        if cur is None or w < cur:
            rows[i][j] = w
    for k in range(1, n + 1):
        rk = rows[k]
        for i in range(1, n + 1):
            dik = rows[i][k]
            if dik is None:
                continue
            ri = rows[i]
            for j in range(1, n + 1):
                dkj = rk[j]
                if dkj is None:
                    continue
                s = dik + dkj
                cur = ri[j]
                if cur is None or s < cur:
                    ri[j] = s
    return rows


def _fw_numpy(n: int, scaled: dict[Edge, int]) -> list[list[int | None]]:
    """Same relaxation order as :func:`_fw_python`, vectorized over int64.

    The sentinel never collides with real walk weights: callers guarantee
    every true weight stays below ``_INT64_GUARD``, while any sum touching
    the sentinel stays above ``_UNREACHABLE``.
    """
    a = np.full((n + 1, n + 1), _INF, dtype=np.int64)
    idx = np.arange(n + 1)
    a[idx, idx] = 0
    for (i, j), w in scaled.items():
        if w < a[i, j]:
            a[i, j] = w
    for k in range(1, n + 1):
        np.minimum(a, a[:, k, None] + a[None, k, :], out=a)
    rows: list[list[int | None]] = []
    for i in range(n + 1):
        rows.append([None if v >= _UNREACHABLE else int(v) for v in a[i]])
    rows[0] = [None] * (n + 1)
    for i in range(1, n + 1):
        rows[i][0] = None
    return rows


def _negative_cycle_witness(n: int, scaled: dict[Edge, int]) -> Walk:
    """Extract one negative-weight closed walk via Bellman-Ford predecessors.

    Only called when a negative cycle is known to exist.  Starting every
    node at distance 0 plays the role of a virtual source, so any negative
    cycle keeps relaxing through round n.
    """
    dist = [0] * (n + 1)
    pred = [0] * (n + 1)
    order = sorted(scaled.items())
    touched = 0
    for _ in range(n):
        touched = 0
        for (u, v), w in order:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = u
                touched = v
        if not touched:
            break
    if not touched:
        raise AssertionError("caller promised a negative cycle")
    x = touched
    for _ in range(n):
        x = pred[x]
    cycle = [x]
    cur = pred[x]
    while cur != x:
        cycle.append(cur)
        cur = pred[cur]
    cycle.append(x)
    cycle.reverse()
    return Walk(tuple(cycle))


def min_walk_weights(g: PrecedenceGraph) -> DistanceMatrix:
    """All-pairs minimum walk weights by Floyd-Warshall.

    Raises :class:`InfeasibleSystem` (carrying a witness cycle) when the
    relaxation drives some diagonal entry below zero, i.e. a negative-weight
    closed walk exists and the system has no solution.

    Weights are rescaled to integers internally; large graphs run on an
    int64 numpy kernel, small or wide-magnitude ones on plain Python ints.
    Both kernels produce identical output.
    """
    n = g.n
    scaled, scale = _scaled_integer_edges(g)
    maxabs = max((abs(w) for w in scaled.values()), default=0)
    if n >= _NUMPY_MIN_NODES and (maxabs + 1) * (n + 1) < _INT64_GUARD:
        rows_int = _fw_numpy(n, scaled)
    else:
        rows_int = _fw_python(n, scaled)
    for i in range(1, n + 1):
        dii = rows_int[i][i]
        if dii is not None and dii < 0:
            witness = _negative_cycle_witness(n, scaled)
            raise InfeasibleSystem(
                "no solution: negative-weight closed walk "
                f"{'-'.join(map(str, witness.nodes))} "
                f"has weight {Fraction(walk_weight_over(scaled, witness), scale)}",
                cycle=witness,
            )
    rows = tuple(
        tuple(None if v is None else Fraction(v, scale) for v in row)
        for row in rows_int
    )
    return DistanceMatrix(n, True, rows)


def walk_weight_over(scaled: Mapping[Edge, int], walk: Walk) -> int:
    """Sum of integer edge weights along a walk (no validity checks)."""
    return sum(scaled[step] for step in walk.steps)


def _check_walk(g: PrecedenceGraph, walk: Walk) -> None:
    for node in walk.nodes:
        if not (1 <= node <= g.n):
            raise NotAWalk(f"node {node} outside 1..{g.n}")
    for i, j in walk.steps:
        if (i, j) not in g.edges:
            raise NotAWalk(f"({i},{j}) is not an edge")


def walk_weight(g: PrecedenceGraph, walk: Walk) -> Fraction:
    """Total weight of a walk; the degenerate single-node walk weighs zero."""
    _check_walk(g, walk)
    total = Fraction(0)
    for step in walk.steps:
        total += g.edges[step]
    return total


def implies(d: DistanceMatrix, u: int, v: int, bound: WeightLike) -> bool:
    """Does the system force ``x_u - x_v <= bound``?

    Under feasibility the tightest derivable bound on ``x_u - x_v`` is the
    minimum walk weight ``u ~> v``; no walk means no finite bound at all.
    """
    if u == v:
        raise SameNode(f"implication needs two distinct nodes, got {u} twice")
    if not (1 <= u <= d.n and 1 <= v <= d.n):
        raise IndexOutOfRange(f"nodes ({u},{v}) outside 1..{d.n}")
    duv = d.get(u, v)
    return duv is not None and duv <= as_weight(bound)


def decompose_walk(g: PrecedenceGraph, walk: Walk) -> WalkDecomposition:
    """Split a walk into a simple path plus simple cycles.

    Scans the walk once, keeping a stack of nodes not yet known to repeat.
    Whenever the next node already sits on the stack, the segment from its
    earlier occurrence is peeled off as a cycle; stack nodes are pairwise
    distinct, so every peeled cycle is simple, and the surviving stack is a
    simple path from first to last node (degenerate when they coincide).
    Each input edge lands in exactly one output piece, so total weight and
    the edge multiset are both conserved.
    """
    _check_walk(g, walk)
    stack = [walk.nodes[0]]
    pos = {walk.nodes[0]: 0}
    cycles: list[Walk] = []
    for x in walk.nodes[1:]:
        at = pos.get(x)
        if at is None:
            pos[x] = len(stack)
            stack.append(x)
            continue
        cycles.append(Walk(tuple(stack[at:]) + (x,)))
        for y in stack[at + 1 :]:
            del pos[y]
        del stack[at + 1 :]
    return WalkDecomposition(Walk(tuple(stack)), tuple(cycles))
