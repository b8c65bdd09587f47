"""Command-line interface.

Commands:

* ``info FILE``       summary statistics of a system
* ``redundant FILE``  list all redundant edges
* ``simplify FILE``   delete a maximum redundant edge set
* ``reduce FILE``     synthesize the minimum equivalent system
* ``condense FILE``   condensation of the system (or of its reduction)
* ``check A B``       are two systems equivalent?

Results go to stdout (or ``--out FILE``); summaries and diagnostics go to
stderr.  Exit codes: 0 success, 1 parse or usage error, 2 infeasible system,
3 systems not equivalent, 4 exact limit exceeded without --allow-heuristic.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass, field

from . import fileformat
from .core import PrecedenceGraph, min_walk_weights
from .decomposition import (
    SolverConfig,
    condensation,
    equivalence_classes,
    max_redundant_edge_set,
    partition_edges,
)
from .errors import (
    DcsError,
    ExactLimitExceeded,
    InfeasibleSystem,
    ParseError,
    ZeroWeightCycle,
)
from .meg import DEFAULT_EXACT_LIMIT
from .redundancy import find_redundant_edges, has_zero_weight_cycle
from .reduction import equivalent_reduction, er_condensation
from .verify import brute_force_redundant_edges, systems_equivalent

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_NOT_EQUIVALENT = 3
EXIT_LIMIT = 4


@dataclass
class RunConfig:
    """One resolved invocation, independent of argparse."""

    command: str
    inputs: list[str] = field(default_factory=list)
    out: str | None = None
    exact_limit: int = DEFAULT_EXACT_LIMIT
    allow_heuristic: bool = False
    representative: str = "smallest"
    oracle: bool = False
    of_reduction: bool = False


@dataclass
class AnalysisSummary:
    """What ``info`` prints."""

    n: int
    m: int
    feasible: bool
    zero_cycle: bool
    class_count: int
    class_sizes: list[int]
    slack_intra_count: int
    condensation_edges: int
    removable_count: int
    certified: bool

    def render(self) -> str:
        lines = [
            f"nodes: {self.n}",
            f"constraints: {self.m}",
            f"feasible: {'yes' if self.feasible else 'no'}",
            f"zero-weight cycle: {'yes' if self.zero_cycle else 'no'}",
            f"classes: {self.class_count}",
            f"class sizes: {' '.join(map(str, self.class_sizes))}",
            f"slack intra-class edges: {self.slack_intra_count}",
            f"condensation edges: {self.condensation_edges}",
            f"removable edges (max): {self.removable_count}",
            f"certified maximum: {'yes' if self.certified else 'no'}",
        ]
        return "\n".join(lines) + "\n"


def _solver_config(cfg: RunConfig) -> SolverConfig:
    return SolverConfig(
        exact_limit=cfg.exact_limit,
        allow_heuristic=cfg.allow_heuristic,
        representative=cfg.representative,  # type: ignore[arg-type]
    )


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _load(path: str) -> PrecedenceGraph:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = fileformat.load(path)
    for w in caught:
        _note(f"warning: {w.message}")
    return g


def _cmd_info(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    d = min_walk_weights(g)
    p = equivalence_classes(d, representative=cfg.representative)  # type: ignore[arg-type]
    ep = partition_edges(g, d, p)
    cond = condensation(g, d, p, ep)
    res = max_redundant_edge_set(g, _solver_config(cfg))
    summary = AnalysisSummary(
        n=g.n,
        m=g.m,
        feasible=True,
        zero_cycle=has_zero_weight_cycle(d),
        class_count=len(p.classes),
        class_sizes=[len(c) for c in p.classes],
        slack_intra_count=sum(len(s) for s in ep.intra_slack),
        condensation_edges=len(cond.edges),
        removable_count=len(res.edges),
        certified=res.certified,
    )
    _emit(cfg, summary.render())
    return EXIT_OK


def _cmd_redundant(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    d = min_walk_weights(g)
    if not has_zero_weight_cycle(d):
        edges = find_redundant_edges(g, d)
    elif cfg.oracle:
        edges = brute_force_redundant_edges(g)
    else:
        raise ZeroWeightCycle(
            "the system has a zero-weight cycle, where the fast criterion "
            "is unsound; rerun with --oracle to check each edge by deletion"
        )
    _emit(cfg, "".join(f"{i} {j}\n" for i, j in sorted(edges)))
    return EXIT_OK


def _cmd_simplify(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    res = max_redundant_edge_set(g, _solver_config(cfg))
    _emit(cfg, fileformat.dumps(g.without(res.edges)))
    grade = "certified" if res.certified else "maximal (not certified)"
    _note(f"removed {len(res.edges)}, {grade}")
    return EXIT_OK


def _cmd_reduce(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    rr = equivalent_reduction(g, representative=cfg.representative)  # type: ignore[arg-type]
    _emit(cfg, fileformat.dumps(rr.reduced))
    _note(f"reduced to {rr.reduced.m} constraints ({rr.removed_count} fewer)")
    return EXIT_OK


def _cmd_condense(cfg: RunConfig) -> int:
    g = _load(cfg.inputs[0])
    d = min_walk_weights(g)
    p = equivalence_classes(d, representative=cfg.representative)  # type: ignore[arg-type]
    if cfg.of_reduction:
        rr = equivalent_reduction(g, representative=cfg.representative)  # type: ignore[arg-type]
        cond = er_condensation(rr, d)
    else:
        ep = partition_edges(g, d, p)
        cond = condensation(g, d, p, ep)
    _emit(cfg, fileformat.dumps(cond.as_graph()))
    for k, (rep, members) in enumerate(zip(cond.reps, p.classes), 1):
        _note(f"class {k}: rep {rep}, nodes {' '.join(map(str, sorted(members)))}")
    return EXIT_OK


def _cmd_check(cfg: RunConfig) -> int:
    a = _load(cfg.inputs[0])
    b = _load(cfg.inputs[1])
    report = systems_equivalent(a, b)
    if report.equivalent:
        _emit(cfg, "equivalent\n")
        return EXIT_OK
    (i, j), side = report.witness
    origin = cfg.inputs[0] if side == "a" else cfg.inputs[1]
    _emit(
        cfg,
        f"not equivalent: constraint ({i},{j}) of {origin} "
        "is not implied by the other system\n",
    )
    return EXIT_NOT_EQUIVALENT


_COMMANDS = {
    "info": _cmd_info,
    "redundant": _cmd_redundant,
    "simplify": _cmd_simplify,
    "reduce": _cmd_reduce,
    "condense": _cmd_condense,
    "check": _cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcsimp",
        description="Simplify difference-constraint (precedence) systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, solver: bool = False) -> None:
        p.add_argument("--out", metavar="FILE", help="write results here instead of stdout")
        if solver:
            p.add_argument(
                "--exact-limit",
                type=int,
                default=DEFAULT_EXACT_LIMIT,
                metavar="N",
                help="max arcs per exact intra-class solve (default %(default)s)",
            )
            p.add_argument(
                "--allow-heuristic",
                action="store_true",
                help="fall back to a greedy (maximal, uncertified) solve over the limit",
            )
            p.add_argument(
                "--representative",
                choices=["smallest", "largest"],
                default="smallest",
                help="class representative policy (default %(default)s)",
            )

    p_info = sub.add_parser("info", help="summary statistics")
    p_info.add_argument("input")
    common(p_info, solver=True)

    p_red = sub.add_parser("redundant", help="list all redundant edges")
    p_red.add_argument("input")
    p_red.add_argument(
        "--oracle",
        action="store_true",
        help="with zero-weight cycles, check each edge by deletion",
    )
    common(p_red)

    p_simp = sub.add_parser("simplify", help="delete a maximum redundant edge set")
    p_simp.add_argument("input")
    common(p_simp, solver=True)

    p_reduce = sub.add_parser("reduce", help="synthesize the minimum equivalent system")
    p_reduce.add_argument("input")
    common(p_reduce, solver=True)

    p_cond = sub.add_parser("condense", help="condense classes onto representatives")
    p_cond.add_argument("input")
    p_cond.add_argument(
        "--of-reduction",
        action="store_true",
        help="condense the equivalent reduction instead of the input",
    )
    common(p_cond, solver=True)

    p_check = sub.add_parser("check", help="are two systems equivalent?")
    p_check.add_argument("input_a")
    p_check.add_argument("input_b")
    common(p_check)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    inputs = [args.input] if hasattr(args, "input") else [args.input_a, args.input_b]
    return RunConfig(
        command=args.command,
        inputs=inputs,
        out=args.out,
        exact_limit=getattr(args, "exact_limit", DEFAULT_EXACT_LIMIT),
        allow_heuristic=getattr(args, "allow_heuristic", False),
        representative=getattr(args, "representative", "smallest"),
        oracle=getattr(args, "oracle", False),
        of_reduction=getattr(args, "of_reduction", False),
    )


def run(cfg: RunConfig) -> int:
    """Execute one command, mapping library errors to exit codes."""
    try:
        return _COMMANDS[cfg.command](cfg)
    except ParseError as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE
    except InfeasibleSystem as exc:
        _note(f"error: {exc}")
        return EXIT_INFEASIBLE
    except ExactLimitExceeded as exc:
        _note(f"error: {exc}")
        return EXIT_LIMIT
    except (DcsError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    raise SystemExit(main())
