"""Command line interface.

Problem files are JSON objects:

    {
      "vertices": [{"name": "u", "genus": 1}, {"name": "v"}],
      "edges": [{"id": "e0", "endpoints": ["u", "v"]},
                {"endpoints": ["u", "v"]}],
      "polarization": {"u": "1/2", "v": "1/2"},
      "basepoint": "u",
      "stratum": ["e0"]
    }

Vertices may be given as bare names; genus defaults to 0.  Edge ids
default to "e0", "e1", ... in file order.  Rationals are written as
"p/q" strings or integer literals; floats are rejected.  Results are
JSON on stdout; --verbose adds a human summary on stderr.

Exit codes: 0 success, 2 bad usage or problem file, 3 domain errors
raised while computing (disconnected graph where forbidden, guard
limits, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import DisconnectedGraphError, JacGraphError, PolarizationTotalError
from .graph import Multigraph
from .lattice import Cochain, complexity, picard_group, same_class
from .polarization import Polarization
from .quasistable import StratumContext
from .strata import EDGE_GUARD_DEFAULT, blowup_decomposition, strata_report

KIND_NAMES = {"ss": "semistable", "qs": "quasistable", "stable": "stable"}


class ProblemFileError(Exception):
    """Anything wrong with the problem file or the request itself."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ProblemFileError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ProblemFileError(
            f"float {value!r} rejected; write rationals as \"p/q\" strings"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemFileError(f"cannot parse rational {value!r}") from exc
    raise ProblemFileError(f"not a rational: {value!r}")


def format_rational(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class Problem:
    graph: Multigraph
    polarization: Polarization | None
    basepoint: str
    stratum: frozenset


def load_problem(path: str, basepoint_flag=None, stratum_flag=None) -> Problem:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ProblemFileError("problem file must be a JSON object")

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        raise ProblemFileError("'vertices' must be a list")
    names = []
    genus = {}
    for entry in raw_vertices:
        if isinstance(entry, str):
            name, gv = entry, 0
        elif isinstance(entry, dict) and isinstance(entry.get("name"), str):
            name = entry["name"]
            gv = entry.get("genus", 0)
            if not isinstance(gv, int) or isinstance(gv, bool) or gv < 0:
                raise ProblemFileError(
                    f"genus of {name!r} must be a nonnegative integer"
                )
        else:
            raise ProblemFileError(f"cannot interpret vertex entry {entry!r}")
        if name in genus:
            raise ProblemFileError(f"duplicate vertex name {name!r}")
        names.append(name)
        genus[name] = gv

    edges = []
    explicit = {e.get("id") for e in data.get("edges", []) if isinstance(e, dict)}
    for k, entry in enumerate(data.get("edges", [])):
        if not isinstance(entry, dict) or "endpoints" not in entry:
            raise ProblemFileError(f"cannot interpret edge entry {entry!r}")
        ends = entry["endpoints"]
        if not (isinstance(ends, list) and len(ends) == 2):
            raise ProblemFileError(f"edge {k} needs exactly two endpoints")
        u, v = ends
        for w in (u, v):
            if w not in genus:
                raise ProblemFileError(f"edge {k} endpoint {w!r} is not a vertex")
        eid = entry.get("id")
        if eid is None:
            eid = f"e{k}"
            if eid in explicit:
                raise ProblemFileError(
                    f"default id {eid!r} collides with an explicit edge id"
                )
        elif not isinstance(eid, str):
            raise ProblemFileError(f"edge id {eid!r} must be a string")
        edges.append((eid, u, v))
    if len({e[0] for e in edges}) != len(edges):
        raise ProblemFileError("duplicate edge ids")

    try:
        graph = Multigraph(names, edges, genus)
    except JacGraphError as exc:
        raise ProblemFileError(str(exc)) from exc

    pol = None
    if "polarization" in data:
        raw_pol = data["polarization"]
        if not isinstance(raw_pol, dict):
            raise ProblemFileError("'polarization' must be an object")
        unknown = [k for k in raw_pol if k not in genus]
        if unknown:
            raise ProblemFileError(f"polarization names unknown vertices {unknown!r}")
        missing = [v for v in names if v not in raw_pol]
        if missing:
            raise ProblemFileError(f"polarization misses vertices {missing!r}")
        values = {k: parse_rational(v) for k, v in raw_pol.items()}
        try:
            pol = Polarization(graph, values)
        except PolarizationTotalError as exc:
            raise ProblemFileError(str(exc)) from exc

    basepoint = basepoint_flag or data.get("basepoint")
    if basepoint is None and names:
        basepoint = names[0]
    if basepoint is not None and basepoint not in genus:
        raise ProblemFileError(f"basepoint {basepoint!r} is not a vertex")

    if stratum_flag is not None:
        raw_stratum = stratum_flag
    else:
        raw_stratum = data.get("stratum", [])
        if not isinstance(raw_stratum, list):
            raise ProblemFileError("'stratum' must be a list of edge ids")
    known = {e[0] for e in edges}
    bad = [eid for eid in raw_stratum if eid not in known]
    if bad:
        raise ProblemFileError(f"stratum names unknown edges {bad!r}")
    stratum = frozenset(raw_stratum)
    if len(stratum) != len(list(raw_stratum)):
        raise ProblemFileError("stratum lists an edge twice")

    return Problem(graph, pol, basepoint, stratum)


def _require_polarization(problem: Problem) -> Polarization:
    if problem.polarization is None:
        raise ProblemFileError("this command needs a 'polarization' entry")
    return problem.polarization


def _context(problem: Problem) -> StratumContext:
    return StratumContext(
        problem.graph,
        _require_polarization(problem),
        problem.basepoint,
        problem.stratum,
    )


def _edge_guard(args) -> int:
    env = os.environ.get("JACGRAPH_GUARD_EDGES")
    if env is None:
        return EDGE_GUARD_DEFAULT
    try:
        return int(env)
    except ValueError:
        raise ProblemFileError(
            f"JACGRAPH_GUARD_EDGES must be an integer, got {env!r}"
        ) from None


# -- subcommands -------------------------------------------------------------


def cmd_complexity(problem: Problem, args) -> dict:
    c = complexity(problem.graph)
    payload = {"complexity": c}
    try:
        pic = picard_group(problem.graph)
        payload["picard"] = list(pic.invariant_factors)
    except DisconnectedGraphError as exc:
        payload["picard"] = None
        payload["picard_error"] = str(exc)
    if args.verbose:
        print(f"complexity {c}", file=sys.stderr)
    return payload


def cmd_enum(problem: Problem, args) -> dict:
    kind = KIND_NAMES[args.kind]
    ctx = _context(problem)
    found = ctx.enumerate(kind)
    if args.verbose:
        print(
            f"{len(found)} {kind} multidegrees "
            f"(budget {ctx.budget}, stratum {sorted(ctx.stratum)})",
            file=sys.stderr,
        )
    return {
        "kind": kind,
        "vertices": list(problem.graph.vertices),
        "count": len(found),
        "multidegrees": [list(d.values) for d in found],
    }


def cmd_reduce(problem: Problem, args) -> dict:
    ctx = _context(problem)
    g = problem.graph
    parts = [p.strip() for p in args.multidegree.split(",")]
    if len(parts) != g.num_vertices:
        raise ProblemFileError(
            f"--multidegree needs {g.num_vertices} integers, got {len(parts)}"
        )
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ProblemFileError(
            f"--multidegree must be comma-separated integers, got {args.multidegree!r}"
        ) from None
    d = Cochain(g, values)
    report = ctx.reduce_report(d)
    gdel = ctx.deleted_graph
    checked = same_class(gdel, d.rebind(gdel), report.output.rebind(gdel))
    if args.verbose:
        print(f"reduced in {report.steps} steps", file=sys.stderr)
    return {
        "vertices": list(g.vertices),
        "input": values,
        "output": list(report.output.values),
        "steps": report.steps,
        "class_checked": checked,
    }


def cmd_check_pol(problem: Problem, args) -> dict:
    q = _require_polarization(problem)
    general = q.is_general()
    nondegenerate = q.is_nondegenerate()
    witness = None
    if not general:
        hit = q.integral_witness()
        if hit is not None:
            W, spine = hit
            witness = {
                "vertices": [v for v in problem.graph.vertices if v in W],
                "is_spine": spine,
            }
    if args.verbose:
        msg = f"general: {'yes' if general else 'no'}"
        msg += f", nondegenerate: {'yes' if nondegenerate else 'no'}"
        if witness:
            kind = "spine" if witness["is_spine"] else "non-spine"
            msg += f" (integral {kind} subset {witness['vertices']})"
        print(msg, file=sys.stderr)
    return {
        "general": general,
        "nondegenerate": nondegenerate,
        "witness": witness,
    }


def cmd_strata(problem: Problem, args) -> dict:
    q = _require_polarization(problem)
    report = strata_report(
        problem.graph,
        problem.basepoint,
        q,
        max_codim=args.max_codim,
        guard_edges=_edge_guard(args),
    )
    rows = [
        {
            "stratum": list(r.stratum),
            "codimension": r.codimension,
            "connected": r.connected,
            "expected_count": r.expected_count,
            "multidegrees": [list(d.values) for d in r.multidegrees],
            "normalization_multidegrees": [list(t) for t in r.normalization_multidegrees],
            "closure_children": [list(c) for c in r.closure_children],
        }
        for r in report.rows
    ]
    if args.verbose:
        print(
            f"{len(rows)} strata, {report.total_multidegrees} multidegrees"
            + (
                f", subdivision has {report.subdivided_complexity}"
                if report.complete
                else " (truncated)"
            ),
            file=sys.stderr,
        )
    return {
        "vertices": list(problem.graph.vertices),
        "basepoint": problem.basepoint,
        "complete": report.complete,
        "total_multidegrees": report.total_multidegrees,
        "subdivided_complexity": report.subdivided_complexity,
        "rows": rows,
    }


def cmd_blowup_check(problem: Problem, args) -> dict:
    q = _require_polarization(problem)
    dec = blowup_decomposition(
        problem.graph,
        problem.basepoint,
        q,
        guard_edges=_edge_guard(args),
    )
    buckets = [
        {
            "stratum": list(b.stratum),
            "count": b.count,
            "expected_count": b.expected_count,
            "multidegrees": [list(d.values) for d in b.multidegrees],
        }
        for b in dec.buckets
    ]
    if args.verbose:
        ok = dec.total == dec.expected_total and all(
            b.count == b.expected_count for b in dec.buckets
        )
        print(
            f"total {dec.total}, expected {dec.expected_total}, "
            f"buckets {'consistent' if ok else 'INCONSISTENT'}",
            file=sys.stderr,
        )
    return {
        "vertices": list(problem.graph.vertices),
        "subdivided_vertices": list(dec.subdivided_graph.vertices),
        "exceptional_vertices": {eid: x for eid, x in dec.exceptional_vertices},
        "total": dec.total,
        "expected_total": dec.expected_total,
        "buckets": buckets,
    }


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacgraph",
        description="Multidegree stability, degree class groups and strata "
        "for vertex-weighted multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, stratum=False, basepoint=False):
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--verbose", action="store_true", help="summary on stderr")
        if stratum:
            p.add_argument(
                "--stratum",
                help="comma-separated edge ids, overriding the file",
            )
        if basepoint:
            p.add_argument("--basepoint", help="vertex name, overriding the file")

    p = sub.add_parser("complexity", help="spanning-tree count and degree class group")
    common(p)
    p.set_defaults(handler=cmd_complexity)

    p = sub.add_parser("enum", help="list multidegrees of a given kind")
    common(p, stratum=True, basepoint=True)
    p.add_argument(
        "--kind",
        choices=sorted(KIND_NAMES),
        default="qs",
        help="ss=semistable, qs=quasistable (default), stable",
    )
    p.set_defaults(handler=cmd_enum)

    p = sub.add_parser("reduce", help="reduce a multidegree to the quasistable representative")
    common(p, stratum=True, basepoint=True)
    p.add_argument(
        "--multidegree",
        required=True,
        help="comma-separated integers in vertex order",
    )
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("check-pol", help="classify the polarization")
    common(p)
    p.set_defaults(handler=cmd_check_pol)

    p = sub.add_parser("strata", help="stratum-by-stratum report")
    common(p, basepoint=True)
    p.add_argument("--max-codim", type=int, default=None, help="truncate the report")
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser("blowup-check", help="subdivision decomposition consistency")
    common(p, basepoint=True)
    p.set_defaults(handler=cmd_blowup_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        stratum_flag = None
        if getattr(args, "stratum", None) is not None:
            stratum_flag = [s for s in args.stratum.split(",") if s]
        problem = load_problem(
            args.file,
            basepoint_flag=getattr(args, "basepoint", None),
            stratum_flag=stratum_flag,
        )
        payload = args.handler(problem, args)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except JacGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def entry_point():  # pragma: no cover - console script shim
    raise SystemExit(main())


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
