"""Rational vertex weightings (polarizations) and their classification.

A polarization assigns an exact rational to every vertex with an integer
grand total.  The module implements the standard massaging operations
(restriction, stratum normalization, subdivision transfer, bridge
contraction, the canonical weighting) and the two classification
predicates used downstream:

- *general*: no proper nonempty vertex subset is integral for q;
- *non-degenerate*: no such subset that crosses a non-bridge edge is
  integral.  Equivalently, q becomes general after contracting bridges.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ._kernel import SUBSET_SCAN_LIMIT
from .errors import (
    CanonicalPolarizationError,
    EmptyGraphError,
    GraphConstructionError,
    GuardLimitError,
    InvalidSubsetError,
    NonIntegralRestrictionError,
    PolarizationTotalError,
)
from .graph import Multigraph, Vertex


def _to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise GraphConstructionError(
            f"refusing float polarization value {x!r}; use Fraction, int or 'p/q'"
        )
    return Fraction(x)


class Polarization:
    """Exact rational values on the vertices of a graph, integer total."""

    __slots__ = ("graph", "values")

    def __init__(self, graph: Multigraph, values):
        self.graph = graph
        if isinstance(values, Mapping):
            missing = [v for v in graph.vertices if v not in values]
            if missing:
                raise GraphConstructionError(f"polarization misses values for {missing!r}")
            if len(values) != len(graph.vertices):
                extra = [v for v in values if v not in graph._vpos]
                raise GraphConstructionError(
                    f"polarization has values for non-vertices {extra!r}"
                )
            vals = tuple(_to_fraction(values[v]) for v in graph.vertices)
        else:
            vals = tuple(_to_fraction(x) for x in values)
            if len(vals) != len(graph.vertices):
                raise GraphConstructionError(
                    f"expected {len(graph.vertices)} values, got {len(vals)}"
                )
        self.values = vals
        tot = sum(vals, Fraction(0))
        if tot.denominator != 1:
            raise PolarizationTotalError(f"polarization total {tot} is not an integer")

    def __getitem__(self, v: Vertex) -> Fraction:
        return self.values[self.graph._vpos[v]]

    @property
    def total(self) -> int:
        return int(sum(self.values, Fraction(0)))

    def sum_over(self, W: Iterable[Vertex]) -> Fraction:
        W = self.graph.vertex_subset(W)
        return sum((self[v] for v in W), Fraction(0))

    def as_dict(self) -> dict:
        return dict(zip(self.graph.vertices, self.values))

    def __eq__(self, other):
        if not isinstance(other, Polarization):
            return NotImplemented
        return self.values == other.values and self.graph == other.graph

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        pairs = ", ".join(f"{v!r}: {x}" for v, x in zip(self.graph.vertices, self.values))
        return f"Polarization({{{pairs}}})"

    # -- derived polarizations ------------------------------------------

    def restrict(self, W: Iterable[Vertex]) -> "Polarization":
        """Polarization induced on the subgraph spanned by W.

        Each vertex loses half an edge worth of weight for every edge it
        sends out of W.  Defined only when the subset total minus half the
        crossing valence is an integer.
        """
        g = self.graph
        W = g.vertex_subset(W)
        if not W:
            raise InvalidSubsetError("cannot restrict to the empty subset")
        adjusted = self.sum_over(W) - Fraction(g.valence(W), 2)
        if adjusted.denominator != 1:
            raise NonIntegralRestrictionError(
                f"restricted total {adjusted} is not an integer"
            )
        Wc = g.complement(W)
        sub = g.induced_subgraph(W)
        vals = {
            v: self[v] - Fraction(g.valence({v}, Wc), 2)
            for v in sub.vertices
        }
        return Polarization(sub, vals)

    def normalized(self, S: Iterable) -> "Polarization":
        """Transfer to the graph with the edges of S deleted.

        Every vertex pays half for each S-edge it crosses and a whole unit
        for each S-loop based at it; the total drops by |S|.
        """
        g = self.graph
        S = g.edge_subset(S)
        gdel = g.delete_edges(S)
        vals = {}
        for v in g.vertices:
            crossing = sum(
                1
                for eid in S
                if not (e := g.edge(eid)).is_loop and v in (e.u, e.v)
            )
            s_loops = sum(1 for eid in S if (e := g.edge(eid)).is_loop and e.u == v)
            vals[v] = self[v] - Fraction(crossing, 2) - s_loops
        return Polarization(gdel, vals)

    def blown_up(self, S: Iterable) -> "Polarization":
        """Transfer to the subdivision of the edges of S: old vertices keep
        their values, the new middle vertices get zero."""
        g = self.graph
        S = g.edge_subset(S)
        gsub, middle = g.subdivide_edges(S)
        vals = {v: self[v] for v in g.vertices}
        for x in middle.values():
            vals[x] = Fraction(0)
        return Polarization(gsub, vals)

    def contracted(self) -> "Polarization":
        """Transfer to the bridge contraction; merged vertices add values."""
        g = self.graph
        gc, mapping = g.contract_bridges()
        vals = {v: Fraction(0) for v in gc.vertices}
        for v in g.vertices:
            vals[mapping[v]] += self[v]
        return Polarization(gc, vals)

    # -- classification --------------------------------------------------

    def is_integral_at(self, W: Iterable[Vertex]) -> bool:
        """Whether every connected piece of W and of its complement has an
        integer adjusted total (subset total minus half its valence)."""
        g = self.graph
        W = g.vertex_subset(W)
        if not W or len(W) == g.num_vertices:
            raise InvalidSubsetError("integrality is tested on proper nonempty subsets")
        for side in (W, g.complement(W)):
            for piece in g.induced_subgraph(side).components():
                adjusted = self.sum_over(piece) - Fraction(g.valence(piece), 2)
                if adjusted.denominator != 1:
                    return False
        return True

    def _proper_subsets(self):
        g = self.graph
        n = g.num_vertices
        if n < 1:
            raise EmptyGraphError("classification needs at least one vertex")
        if n > SUBSET_SCAN_LIMIT:
            raise GuardLimitError(
                f"subset scan over {n} vertices exceeds the limit of {SUBSET_SCAN_LIMIT}"
            )
        verts = g.vertices
        for mask in range(1, (1 << n) - 1):
            yield frozenset(verts[i] for i in range(n) if mask >> i & 1)

    def is_general(self) -> bool:
        """True when no proper nonempty subset is integral for q."""
        return all(not self.is_integral_at(W) for W in self._proper_subsets())

    def is_nondegenerate(self) -> bool:
        """True when no integral proper subset crosses a non-bridge edge.

        Subsets whose crossing edges are all bridges (spines) are allowed
        to be integral; everything else must not be.
        """
        g = self.graph
        for W in self._proper_subsets():
            if g.is_spine(W):
                continue
            if self.is_integral_at(W):
                return False
        return True

    def integral_witness(self):
        """A proper integral subset, preferring one that is not a spine.

        Returns (subset, is_spine) or None when the polarization is
        general.  Deterministic: subsets are scanned in bitmask order.
        """
        g = self.graph
        spine_hit = None
        for W in self._proper_subsets():
            if self.is_integral_at(W):
                if not g.is_spine(W):
                    return W, False
                if spine_hit is None:
                    spine_hit = W
        if spine_hit is not None:
            return spine_hit, True
        return None


def canonical_polarization(g: Multigraph, degree: int) -> Polarization:
    """The weighting proportional to 2*genus - 2 + valence at each vertex
    (loops count twice), scaled to the requested total degree.

    Needs the total genus g to satisfy 2g - 2 != 0.
    """
    if g.num_vertices == 0:
        raise EmptyGraphError("canonical polarization needs at least one vertex")
    total_genus = g.subcurve_genus(g.vertices)
    denom = 2 * total_genus - 2
    if denom == 0:
        raise CanonicalPolarizationError(
            "canonical polarization undefined: 2g - 2 vanishes"
        )
    vals = {
        v: Fraction(
            degree * (2 * g.genus_of(v) - 2 + g.valence({v}) + 2 * g.loops_at(v)),
            denom,
        )
        for v in g.vertices
    }
    return Polarization(g, vals)
