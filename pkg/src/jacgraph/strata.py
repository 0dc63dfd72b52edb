"""Stratification bookkeeping: per-stratum multidegree sets, the closure
poset over edge subsets, pushforward degrees and the subdivision
decomposition.

A stratum is an edge subset S.  Its multidegree set is computed on the
loop-free core of the graph with the non-loop part of S as the deleted
edges; the count always matches the spanning-tree number of the graph
minus S.  Subdividing every edge at once packs all strata into a single
quasistable enumeration whose exceptional vertices carry only -1 or 0;
bucketing by the -1 positions recovers the strata.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import BlowupValueError, GraphMismatchError, GuardLimitError
from .graph import Multigraph, Vertex
from .lattice import Cochain, complexity
from .polarization import Polarization
from .quasistable import StratumContext

EDGE_GUARD_DEFAULT = 16


def stratum_multidegrees(
    g: Multigraph,
    stratum: Iterable,
    basepoint: Vertex,
    q: Polarization,
) -> list[Cochain]:
    """Quasistable multidegrees of one stratum, in enumeration coordinates.

    Loops never matter here: the scan runs on the graph without loops,
    with the non-loop part of the stratum deleted, on the total-degree
    budget ``total(q) - |non-loop part|``.  The returned cochains are
    bound to the original graph (same vertex listing).
    """
    if q.graph != g:
        raise GraphMismatchError("polarization bound to a different graph")
    S = g.edge_subset(stratum)
    core = g.remove_loops()
    s_core = frozenset(eid for eid in S if not g.edge(eid).is_loop)
    q_core = Polarization(core, dict(zip(g.vertices, q.values)))
    ctx = StratumContext(core, q_core, basepoint, s_core)
    return [d.rebind(g) for d in ctx.enumerate("quasistable")]


@dataclass(frozen=True)
class StratumRow:
    stratum: tuple
    codimension: int
    connected: bool
    expected_count: int
    multidegrees: tuple[Cochain, ...]
    normalization_multidegrees: tuple[tuple, ...]
    closure_children: tuple[tuple, ...]


@dataclass(frozen=True)
class StrataReport:
    graph: Multigraph
    basepoint: Vertex
    rows: tuple[StratumRow, ...]
    complete: bool
    total_multidegrees: int
    subdivided_complexity: int


def strata_report(
    g: Multigraph,
    basepoint: Vertex,
    q: Polarization,
    max_codim: int | None = None,
    guard_edges: int = EDGE_GUARD_DEFAULT,
) -> StrataReport:
    """One row per edge subset up to the requested codimension.

    Rows are ordered by size and then lexicographically in edge order.
    ``closure_children`` lists the one-edge-larger subsets present in the
    report: the immediate covers of the stratum in the closure order
    (larger stratum = deeper in the closure).
    """
    if q.graph != g:
        raise GraphMismatchError("polarization bound to a different graph")
    g._check_vertex(basepoint)
    m = g.num_edges
    if m > guard_edges:
        raise GuardLimitError(
            f"strata over {m} edges exceed the guard of {guard_edges} "
            "(JACGRAPH_GUARD_EDGES overrides it on the command line)"
        )
    ids = g.edge_ids()
    loop_ids = frozenset(e.id for e in g.edges if e.is_loop)
    depth = m if max_codim is None else min(max_codim, m)

    rows = []
    for size in range(depth + 1):
        for combo in combinations(range(m), size):
            S = tuple(ids[i] for i in combo)
            gdel = g.delete_edges(S)
            mds = stratum_multidegrees(g, S, basepoint, q)
            s_loops = [
                sum(1 for eid in S if eid in loop_ids and g.edge(eid).u == v)
                for v in g.vertices
            ]
            norm = tuple(
                tuple(d.values[i] - s_loops[i] for i in range(g.num_vertices))
                for d in mds
            )
            children = []
            if size < depth:
                chosen = set(combo)
                for j in range(m):
                    if j not in chosen:
                        bigger = tuple(sorted(chosen | {j}))
                        children.append(tuple(ids[i] for i in bigger))
            rows.append(
                StratumRow(
                    stratum=S,
                    codimension=size,
                    connected=gdel.is_connected(),
                    expected_count=complexity(gdel),
                    multidegrees=tuple(mds),
                    normalization_multidegrees=norm,
                    closure_children=tuple(children),
                )
            )

    subdivided, _ = g.subdivide_edges(ids)
    return StrataReport(
        graph=g,
        basepoint=basepoint,
        rows=tuple(rows),
        complete=depth == m,
        total_multidegrees=sum(len(r.multidegrees) for r in rows),
        subdivided_complexity=complexity(subdivided),
    )


@dataclass(frozen=True)
class PushforwardDegrees:
    """Degrees seen on the original graph after a stratum normalization.

    Per vertex: the normalization value plus one for each stratum loop at
    the vertex.  Per vertex subset: the vertex degrees plus one for each
    non-loop stratum edge inside the subset.  The grand total gains |S|.
    """

    graph: Multigraph
    stratum: frozenset
    vertex_degrees: Cochain
    total: int

    def degree_of(self, W: Iterable[Vertex]) -> int:
        g = self.graph
        W = g.vertex_subset(W)
        inside = sum(
            1
            for eid in self.stratum
            if not (e := g.edge(eid)).is_loop and e.u in W and e.v in W
        )
        return self.vertex_degrees.sum_over(W) + inside


def pushforward_multidegree(
    g: Multigraph, stratum: Iterable, d: Cochain
) -> PushforwardDegrees:
    """Transfer a multidegree from the stratum-deleted graph back to g."""
    S = g.edge_subset(stratum)
    if d.graph.vertices != g.vertices:
        raise GraphMismatchError(
            "multidegree lives on a graph with a different vertex listing"
        )
    loops = [
        sum(1 for eid in S if (e := g.edge(eid)).is_loop and e.u == v)
        for v in g.vertices
    ]
    vertex_degrees = Cochain(
        g, tuple(d.values[i] + loops[i] for i in range(g.num_vertices))
    )
    return PushforwardDegrees(
        graph=g,
        stratum=S,
        vertex_degrees=vertex_degrees,
        total=d.total + len(S),
    )


@dataclass(frozen=True)
class BlowupBucket:
    stratum: tuple
    count: int
    expected_count: int
    multidegrees: tuple[Cochain, ...]


@dataclass(frozen=True)
class BlowupDecomposition:
    graph: Multigraph
    subdivided_graph: Multigraph
    basepoint: Vertex
    exceptional_vertices: tuple[tuple, ...]
    total: int
    expected_total: int
    buckets: tuple[BlowupBucket, ...]


def blowup_decomposition(
    g: Multigraph,
    basepoint: Vertex,
    q: Polarization,
    guard_edges: int = EDGE_GUARD_DEFAULT,
) -> BlowupDecomposition:
    """Quasistable multidegrees of the full subdivision, bucketed by their
    -1 pattern on the exceptional vertices.

    Every exceptional vertex must carry -1 or 0 (anything else raises
    BlowupValueError), the bucket of a given -1 pattern S matches the
    stratum count of S, and the grand total is the spanning-tree count of
    the subdivision.
    """
    if q.graph != g:
        raise GraphMismatchError("polarization bound to a different graph")
    g._check_vertex(basepoint)
    m = g.num_edges
    if m > guard_edges:
        raise GuardLimitError(
            f"subdividing {m} edges exceeds the guard of {guard_edges} "
            "(JACGRAPH_GUARD_EDGES overrides it on the command line)"
        )
    ids = g.edge_ids()
    sub, middle = g.subdivide_edges(ids)
    vals = {v: q[v] for v in g.vertices}
    for x in middle.values():
        vals[x] = Fraction(0)
    ctx = StratumContext(sub, Polarization(sub, vals), basepoint)
    found = ctx.enumerate("quasistable")

    grouped: dict[frozenset, list[Cochain]] = {}
    for d in found:
        neg = []
        for eid in ids:
            value = d[middle[eid]]
            if value not in (-1, 0):
                raise BlowupValueError(
                    f"exceptional vertex for edge {eid!r} carries {value}"
                )
            if value == -1:
                neg.append(eid)
        grouped.setdefault(frozenset(neg), []).append(d)

    buckets = []
    for size in range(m + 1):
        for combo in combinations(range(m), size):
            S = tuple(ids[i] for i in combo)
            members = grouped.get(frozenset(S), [])
            buckets.append(
                BlowupBucket(
                    stratum=S,
                    count=len(members),
                    expected_count=complexity(g.delete_edges(S)),
                    multidegrees=tuple(members),
                )
            )

    return BlowupDecomposition(
        graph=g,
        subdivided_graph=sub,
        basepoint=basepoint,
        exceptional_vertices=tuple((eid, middle[eid]) for eid in ids),
        total=len(found),
        expected_total=complexity(sub),
        buckets=tuple(buckets),
    )
