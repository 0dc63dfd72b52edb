"""Semistable, quasistable and stable multidegrees on a polarized graph.

A *stratum context* fixes a multigraph, a polarization q, a basepoint
vertex and an edge subset S (the stratum).  Multidegrees live on the
total-degree budget ``total(q) - |S|``.  For a vertex subset W write

    deficit(d, W) =  q_W - val(W)/2 - d_W - |S-edges inside W|
    excess(d, W)  =  d_W + |S-edges inside W| - q_W - val(W)/2 + val_S(W)

with val the crossing valence in the full graph.  A multidegree is

- semistable  when no subset has positive deficit,
- quasistable when additionally every proper subset through the
  basepoint has strictly negative deficit,
- stable      when every proper nonempty subset does.

``excess(d, W) == deficit(d, complement(W))``, so one subset scan serves
both.  The subsets maximizing either functional are closed under
intersection and union; the reduction walks d along Laplacian images of
the smallest maximizers until the distinguished quasistable
representative of its class is reached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Iterable

from . import _kernel
from ._kernel import SUBSET_SCAN_LIMIT
from .errors import (
    DegreeBudgetError,
    DisconnectedGraphError,
    EmptyGraphError,
    GraphMismatchError,
    GuardLimitError,
    ReductionGuardError,
)
from .graph import Multigraph, Vertex
from .lattice import Cochain
from .polarization import Polarization

KINDS = ("semistable", "quasistable", "stable")

_MODE = {
    "semistable": _kernel.MODE_SEMISTABLE,
    "quasistable": _kernel.MODE_QUASISTABLE,
    "stable": _kernel.MODE_STABLE,
}


@dataclass(frozen=True)
class DefectReport:
    """Worst-case defect data of a multidegree.

    ``max_excess == max_deficit`` always (complement symmetry).  The core
    sets are the intersections of all maximizing subsets; both are
    themselves maximizers.  ``basepoint_deficit_core`` intersects the
    zero-deficit subsets through the basepoint and is None unless the
    multidegree is semistable.
    """

    max_excess: Fraction
    max_deficit: Fraction
    excess_core: frozenset
    deficit_core: frozenset
    basepoint_deficit_core: frozenset | None


@dataclass(frozen=True)
class ReduceReport:
    output: "Cochain"
    steps: int


class StratumContext:
    """Ambient data for multidegree stability questions."""

    def __init__(
        self,
        graph: Multigraph,
        q: Polarization,
        basepoint: Vertex,
        stratum: Iterable = (),
    ):
        if q.graph != graph:
            raise GraphMismatchError("polarization bound to a different graph")
        graph._check_vertex(basepoint)
        self.graph = graph
        self.q = q
        self.basepoint = basepoint
        self.stratum = graph.edge_subset(stratum)
        self.budget = q.total - len(self.stratum)

        n = graph.num_vertices
        # even scale clearing every denominator, so scale * q_W and
        # scale * val(W)/2 are integers
        self.scale = 2 * lcm(*(x.denominator for x in q.values)) if n else 2
        self._scaled_q = [int(x * self.scale) for x in q.values]
        pos = graph._vpos
        self._edge_pairs = [(pos[e.u], pos[e.v]) for e in graph.edges]
        self._s_flags = [e.id in self.stratum for e in graph.edges]
        self._s_loops = [
            sum(
                1
                for e in graph.edges
                if e.id in self.stratum and e.is_loop and e.u == v
            )
            for v in graph.vertices
        ]
        self._v0 = pos[basepoint]
        self._tables_cache: dict = {}
        self._deleted = None
        self._del_rows = None

    # -- plumbing --------------------------------------------------------

    @property
    def deleted_graph(self) -> Multigraph:
        """The graph with the stratum edges removed (same vertices)."""
        if self._deleted is None:
            self._deleted = self.graph.delete_edges(self.stratum)
        return self._deleted

    def _scan_guard(self):
        n = self.graph.num_vertices
        if n == 0:
            raise EmptyGraphError("stability needs at least one vertex")
        if n > SUBSET_SCAN_LIMIT:
            raise GuardLimitError(
                f"subset scan over {n} vertices exceeds the limit of {SUBSET_SCAN_LIMIT}"
            )

    def _check_cochain(self, d: Cochain):
        if d.graph != self.graph:
            raise GraphMismatchError("multidegree bound to a different graph")

    def _require_budget(self, d: Cochain):
        if d.total != self.budget:
            raise DegreeBudgetError(
                f"total degree {d.total} does not meet the budget {self.budget}"
            )

    def _rhs_bound(self) -> int:
        return (
            sum(abs(x) for x in self._scaled_q)
            + 2 * self.scale * self.graph.num_edges
            + 4
        )

    def _tables(self, impl, order=None):
        key = (impl.__name__, order)
        tab = self._tables_cache.get(key)
        if tab is None:
            n = self.graph.num_vertices
            if order is None:
                edges = self._edge_pairs
                sq = self._scaled_q
            else:
                inv = [0] * n
                for new, old in enumerate(order):
                    inv[old] = new
                edges = [(inv[a], inv[b]) for a, b in self._edge_pairs]
                sq = [self._scaled_q[old] for old in order]
            tab = impl.build_tables(n, edges, self._s_flags, sq, self.scale)
            self._tables_cache[key] = tab
        return tab

    def _mask_to_set(self, mask: int, order=None) -> frozenset:
        verts = self.graph.vertices
        if order is None:
            return frozenset(
                verts[i] for i in range(len(verts)) if mask >> i & 1
            )
        return frozenset(
            verts[order[i]] for i in range(len(verts)) if mask >> i & 1
        )

    def _defect_scan(self, vals):
        bound = self._rhs_bound() + self.scale * (sum(abs(x) for x in vals) + 1)
        impl = _kernel.select(bound)
        tables = self._tables(impl)
        return impl.defect_scan(tables, vals, self._v0)

    # -- pointwise defect functionals ------------------------------------

    def deficit(self, d: Cochain, W: Iterable[Vertex]) -> Fraction:
        """How far d falls below its floor on W; exact rational."""
        self._check_cochain(d)
        self._require_budget(d)
        g = self.graph
        W = g.vertex_subset(W)
        if not W:
            return Fraction(0)
        return (
            self.q.sum_over(W)
            - Fraction(g.valence(W), 2)
            - d.sum_over(W)
            - g.induced_edge_count(self.stratum, W)
        )

    def excess(self, d: Cochain, W: Iterable[Vertex]) -> Fraction:
        """How far d rises above its ceiling on W; equals the deficit of
        the complement."""
        self._check_cochain(d)
        self._require_budget(d)
        g = self.graph
        W = g.vertex_subset(W)
        if not W:
            return Fraction(0)
        return (
            d.sum_over(W)
            + g.induced_edge_count(self.stratum, W)
            - self.q.sum_over(W)
            - Fraction(g.valence(W), 2)
            + g.valence_in(self.stratum, W)
        )

    def defects(self, d: Cochain) -> DefectReport:
        self._check_cochain(d)
        self._require_budget(d)
        self._scan_guard()
        n = self.graph.num_vertices
        full = (1 << n) - 1
        best, and_acc, or_acc, _, bp = self._defect_scan(list(d.values))
        worst = Fraction(best, self.scale)
        return DefectReport(
            max_excess=worst,
            max_deficit=worst,
            excess_core=self._mask_to_set(full ^ or_acc),
            deficit_core=self._mask_to_set(and_acc),
            basepoint_deficit_core=(
                self._mask_to_set(bp) if bp is not None else None
            ),
        )

    # -- stability predicates --------------------------------------------

    def is_semistable(self, d: Cochain) -> bool:
        self._check_cochain(d)
        if d.total != self.budget:
            return False
        self._scan_guard()
        best, *_ = self._defect_scan(list(d.values))
        return best == 0

    def is_quasistable(self, d: Cochain) -> bool:
        self._check_cochain(d)
        if d.total != self.budget:
            return False
        self._scan_guard()
        n = self.graph.num_vertices
        best, _, _, _, bp = self._defect_scan(list(d.values))
        return best == 0 and bp == (1 << n) - 1

    def is_stable(self, d: Cochain) -> bool:
        self._check_cochain(d)
        if d.total != self.budget:
            return False
        self._scan_guard()
        best, _, _, count, _ = self._defect_scan(list(d.values))
        # zero deficit may only be attained by the empty set and everything
        return best == 0 and count == 2

    # -- reduction -------------------------------------------------------

    def _delta_rows(self):
        """Rows of the Laplacian of the stratum-deleted graph."""
        if self._del_rows is None:
            g = self.deleted_graph
            n = g.num_vertices
            rows = [[0] * n for _ in range(n)]
            for i, u in enumerate(g.vertices):
                deg = 0
                for j, v in enumerate(g.vertices):
                    if i != j:
                        mult = g.adjacency(u, v)
                        rows[i][j] = mult
                        deg += mult
                rows[i][i] = -deg
            self._del_rows = rows
        return self._del_rows

    def _apply_delta(self, vals, mask, multiplier):
        """vals += multiplier * Laplacian(indicator of mask), in place.

        The diagonal row entry is minus the vertex valence, so summing the
        row over the mask members handles inside and outside vertices
        uniformly.
        """
        rows = self._delta_rows()
        n = len(vals)
        members = [j for j in range(n) if mask >> j & 1]
        for i in range(n):
            row = rows[i]
            vals[i] += multiplier * sum(row[j] for j in members)

    def _reduce(self, d: Cochain, to_quasistable: bool):
        self._check_cochain(d)
        self._require_budget(d)
        self._scan_guard()
        if not self.deleted_graph.is_connected():
            raise DisconnectedGraphError(
                "reduction needs the stratum-deleted graph to be connected"
            )
        n = self.graph.num_vertices
        full = (1 << n) - 1
        rows = self._delta_rows()
        vals = list(d.values)
        best, and_acc, or_acc, count, bp = self._defect_scan(vals)
        # generous: the worst deficit drops by >= 1/scale every at most
        # 2**n passes, then the basepoint stage grows its core each pass
        limit = (best + n + 2) * (1 << n) + 8
        steps = 0
        passes = 0
        while best > 0:
            core = full ^ or_acc
            members = [j for j in range(n) if core >> j & 1]
            # cut size of the core in the stratum-deleted graph
            cut = -sum(rows[i][j] for i in members for j in members)
            batch = max(1, best // (self.scale * cut)) if cut else 1
            if batch > 1:
                # one application lowers the core excess by the cut size;
                # try the whole batch, keep it only if the worst defect
                # actually dropped (far-away subsets may gain)
                self._apply_delta(vals, core, batch)
                nbest, nand, nor, ncount, nbp = self._defect_scan(vals)
                if nbest < best:
                    steps += batch
                    best, and_acc, or_acc, count, bp = nbest, nand, nor, ncount, nbp
                    passes += 1
                    if passes > limit:
                        raise ReductionGuardError(
                            "descent to semistability exceeded its iteration guard"
                        )
                    continue
                self._apply_delta(vals, core, -batch)
            self._apply_delta(vals, core, +1)
            steps += 1
            passes += 1
            if passes > limit:
                raise ReductionGuardError(
                    "descent to semistability exceeded its iteration guard"
                )
            best, and_acc, or_acc, count, bp = self._defect_scan(vals)
        if to_quasistable:
            while bp != full:
                self._apply_delta(vals, bp, -1)
                steps += 1
                passes += 1
                if passes > limit:
                    raise ReductionGuardError(
                        "descent to the basepoint representative exceeded its guard"
                    )
                best, and_acc, or_acc, count, bp = self._defect_scan(vals)
                if best != 0:
                    raise ReductionGuardError(
                        "internal error: semistability lost during basepoint descent"
                    )
        return Cochain(self.graph, vals), steps

    def reduce_to_semistable(self, d: Cochain) -> Cochain:
        """A semistable multidegree in the class of d (same total degree,
        difference a Laplacian image of the stratum-deleted graph)."""
        return self._reduce(d, to_quasistable=False)[0]

    def reduce_to_quasistable(self, d: Cochain) -> Cochain:
        """The unique quasistable multidegree in the class of d."""
        return self._reduce(d, to_quasistable=True)[0]

    def reduce_report(self, d: Cochain) -> ReduceReport:
        out, steps = self._reduce(d, to_quasistable=True)
        return ReduceReport(output=out, steps=steps)

    # -- enumeration -----------------------------------------------------

    def _bfs_order(self):
        """Vertex indices ordered by breadth-first search from the
        basepoint; contiguous prefixes then tend to be connected, which
        makes the per-prefix bounds prune early."""
        g = self.graph
        n = g.num_vertices
        pos = g._vpos
        seen = [False] * n
        order = []
        queue = [self._v0]
        seen[self._v0] = True
        while queue:
            nxt = []
            for i in queue:
                order.append(i)
                u = g.vertices[i]
                for w in g._adj[u]:
                    j = pos[w]
                    if not seen[j]:
                        seen[j] = True
                        nxt.append(j)
            queue = sorted(nxt)
        for i in range(n):
            if not seen[i]:
                order.append(i)
        return tuple(order)

    def singleton_box(self) -> tuple[list[int], list[int]]:
        """Componentwise bounds satisfied by every semistable multidegree,
        derived from the one-vertex subsets and their complements."""
        g = self.graph
        lo, hi = [], []
        for v in g.vertices:
            val_v = g.valence({v})
            s_cross = g.valence_in(self.stratum, {v})
            s_loops = self._s_loops[g._vpos[v]]
            qv = self.q[v]
            lo.append(ceil(qv - Fraction(val_v, 2) - s_loops))
            hi.append(floor(qv + Fraction(val_v, 2) - s_cross - s_loops))
        return lo, hi

    def enumerate(self, kind: str = "quasistable") -> list[Cochain]:
        """All multidegrees of the requested kind, sorted by their value
        tuples in vertex order."""
        if kind not in _MODE:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        self._scan_guard()
        g = self.graph
        n = g.num_vertices
        lo, hi = self.singleton_box()
        if any(a > b for a, b in zip(lo, hi)):
            return []
        order = self._bfs_order()
        bound = (
            self._rhs_bound()
            + self.scale * (sum(max(abs(a), abs(b)) for a, b in zip(lo, hi)) + 1)
        )
        impl = _kernel.select(bound)
        tables = self._tables(impl, order)
        inv = [0] * n
        for new, old in enumerate(order):
            inv[old] = new
        raw = impl.box_enumerate(
            tables,
            inv[self._v0],
            self.budget,
            [lo[old] for old in order],
            [hi[old] for old in order],
            _MODE[kind],
        )
        tuples = sorted(tuple(row[inv[i]] for i in range(n)) for row in raw)
        return [Cochain(g, t) for t in tuples]


def semistable_equality_witness(g: Multigraph, q: Polarization):
    """For a non-general polarization, a connected proper subset with
    connected complement together with a semistable multidegree sitting
    exactly on the subset's floor.

    Returns ``(subset, multidegree)`` or None when q is general.  When q
    is degenerate (not non-degenerate) the subset is moreover not a spine.
    The multidegree is assembled from quasistable pieces on the subset
    (with its restricted polarization) and on the complement (with the
    polarization pushed up by half the crossing valence).
    """
    if q.graph != g:
        raise GraphMismatchError("polarization bound to a different graph")
    if not g.is_connected():
        raise DisconnectedGraphError("witness search needs a connected graph")
    hit = q.integral_witness()
    if hit is None:
        return None
    Y, y_is_spine = hit

    def first_component(h, want_nonspine):
        comps = h.components()
        if want_nonspine:
            for c in comps:
                if not g.is_spine(c):
                    return c
        return comps[0]

    want_nonspine = not y_is_spine
    Zp = first_component(g.induced_subgraph(Y), want_nonspine)
    Z = first_component(g.induced_subgraph(g.complement(Zp)), want_nonspine)
    Zc = g.complement(Z)

    sub = g.induced_subgraph(Z)
    ctx_in = StratumContext(sub, q.restrict(Z), sub.vertices[0])
    d_in = ctx_in.enumerate("quasistable")[0]

    rest = g.induced_subgraph(Zc)
    lifted = Polarization(
        rest,
        {v: q[v] + Fraction(g.valence({v}, Z), 2) for v in rest.vertices},
    )
    ctx_out = StratumContext(rest, lifted, rest.vertices[0])
    d_out = ctx_out.enumerate("quasistable")[0]

    vals = {v: (d_in[v] if v in Z else d_out[v]) for v in g.vertices}
    return Z, Cochain(g, vals)
