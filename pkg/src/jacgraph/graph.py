"""Vertex-weighted multigraphs with loops, subset calculus and surgeries.

Conventions used throughout the package:

- vertices and edges keep their construction order, and every derived
  listing (components, subsets, new graphs) is deterministic;
- loops are stored like any other edge but never contribute to valences,
  crossing counts or bridges;
- surgeries (edge deletion, subdivision, contraction, ...) build new
  graphs; a Multigraph is never mutated after construction.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, NamedTuple

from .errors import (
    GraphConstructionError,
    InvalidSubsetError,
    UnknownEdgeError,
    UnknownVertexError,
)

Vertex = Hashable


class Edge(NamedTuple):
    id: Hashable
    u: Vertex
    v: Vertex

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: Vertex) -> Vertex:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise UnknownVertexError(f"vertex {w!r} is not an endpoint of edge {self.id!r}")


class Multigraph:
    """A finite multigraph with integer genus weights on the vertices.

    Parallel edges and loops are allowed.  Edges carry stable ids; when an
    edge is given as a plain endpoint pair the id defaults to ``e<k>`` with
    ``k`` the position in the input listing.
    """

    __slots__ = (
        "vertices",
        "edges",
        "_genus",
        "_vpos",
        "_edge_by_id",
        "_adj",
        "_loops",
    )

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable = (),
        genus: Mapping[Vertex, int] | None = None,
    ):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise GraphConstructionError("duplicate vertex labels")
        self.vertices = vs
        self._vpos = {v: i for i, v in enumerate(vs)}

        norm = []
        for k, item in enumerate(edges):
            if isinstance(item, Edge):
                eid, u, v = item
            elif len(item) == 2:
                (u, v), eid = item, f"e{k}"
            elif len(item) == 3:
                eid, u, v = item
            else:
                raise GraphConstructionError(f"cannot interpret edge entry {item!r}")
            if u not in self._vpos:
                raise UnknownVertexError(f"edge {eid!r} endpoint {u!r} is not a vertex")
            if v not in self._vpos:
                raise UnknownVertexError(f"edge {eid!r} endpoint {v!r} is not a vertex")
            norm.append(Edge(eid, u, v))
        self.edges = tuple(norm)
        self._edge_by_id = {e.id: e for e in self.edges}
        if len(self._edge_by_id) != len(self.edges):
            raise GraphConstructionError("duplicate edge ids")

        g = {v: 0 for v in vs}
        for v, gv in (genus or {}).items():
            if v not in self._vpos:
                raise UnknownVertexError(f"genus given for unknown vertex {v!r}")
            if int(gv) != gv or gv < 0:
                raise GraphConstructionError(f"genus of {v!r} must be a nonnegative integer")
            g[v] = int(gv)
        self._genus = g

        # adjacency with multiplicities, loops kept separate
        adj: dict[Vertex, dict[Vertex, int]] = {v: {} for v in vs}
        loops: dict[Vertex, int] = {v: 0 for v in vs}
        for e in self.edges:
            if e.is_loop:
                loops[e.u] += 1
            else:
                adj[e.u][e.v] = adj[e.u].get(e.v, 0) + 1
                adj[e.v][e.u] = adj[e.v].get(e.u, 0) + 1
        self._adj = adj
        self._loops = loops

    # -- basic queries ---------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def genus_of(self, v: Vertex) -> int:
        self._check_vertex(v)
        return self._genus[v]

    def genus_map(self) -> dict[Vertex, int]:
        return dict(self._genus)

    def edge(self, eid) -> Edge:
        try:
            return self._edge_by_id[eid]
        except KeyError:
            raise UnknownEdgeError(f"unknown edge id {eid!r}") from None

    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)

    def loops_at(self, v: Vertex) -> int:
        self._check_vertex(v)
        return self._loops[v]

    def adjacency(self, u: Vertex, v: Vertex) -> int:
        """Number of non-loop edges joining two distinct vertices."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        return self._adj[u].get(v, 0)

    def _check_vertex(self, v):
        if v not in self._vpos:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def vertex_subset(self, ws: Iterable[Vertex]) -> frozenset:
        W = frozenset(ws)
        for v in W:
            self._check_vertex(v)
        return W

    def edge_subset(self, es: Iterable) -> frozenset:
        S = frozenset(es)
        for eid in S:
            if eid not in self._edge_by_id:
                raise UnknownEdgeError(f"unknown edge id {eid!r}")
        return S

    def complement(self, W: Iterable[Vertex]) -> frozenset:
        W = self.vertex_subset(W)
        return frozenset(v for v in self.vertices if v not in W)

    # -- valences --------------------------------------------------------

    def valence(self, W1: Iterable[Vertex], W2: Iterable[Vertex] | None = None) -> int:
        """Number of non-loop edges with one endpoint in W1 and one in W2.

        With W2 omitted it counts the edges crossing from W1 to its
        complement.  W1 and W2 must be disjoint; loops never count.
        """
        return self.valence_in(self.edge_ids(), W1, W2)

    def valence_in(
        self,
        S: Iterable,
        W1: Iterable[Vertex],
        W2: Iterable[Vertex] | None = None,
    ) -> int:
        """Like :meth:`valence` but only edges from the set S are counted."""
        S = self.edge_subset(S)
        W1 = self.vertex_subset(W1)
        W2 = self.complement(W1) if W2 is None else self.vertex_subset(W2)
        if W1 & W2:
            raise InvalidSubsetError("valence requires disjoint vertex subsets")
        count = 0
        for eid in S:
            e = self._edge_by_id[eid]
            if e.is_loop:
                continue
            if (e.u in W1 and e.v in W2) or (e.u in W2 and e.v in W1):
                count += 1
        return count

    def induced_edge_count(self, S: Iterable, W: Iterable[Vertex]) -> int:
        """Number of edges of S with both endpoints in W; loops at W count."""
        S = self.edge_subset(S)
        W = self.vertex_subset(W)
        return sum(
            1
            for eid in S
            if (e := self._edge_by_id[eid]).u in W and e.v in W
        )

    # -- connectivity ----------------------------------------------------

    def components(self) -> list[frozenset]:
        """Connected components as vertex sets, ordered by first vertex."""
        seen: set = set()
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def first_betti(self) -> int:
        """Cycle rank |E| - |V| + (number of components); loops contribute."""
        return self.num_edges - self.num_vertices + len(self.components())

    def subcurve_genus(self, W: Iterable[Vertex]) -> int:
        """Total genus carried by W: vertex genera plus the cycle rank of
        the induced subgraph."""
        W = self.vertex_subset(W)
        if not W:
            raise InvalidSubsetError("subcurve genus needs a nonempty vertex subset")
        sub = self.induced_subgraph(W)
        return sum(self._genus[v] for v in W) + sub.first_betti()

    # -- bridges and spines ----------------------------------------------

    def bridges(self) -> frozenset:
        """Edge ids whose removal disconnects their component.

        Iterative depth-first search with low-links; a parallel edge is
        never a bridge because the twin edge provides the back link, and
        loops are ignored outright.
        """
        disc: dict[Vertex, int] = {}
        low: dict[Vertex, int] = {}
        out = set()
        counter = 0
        for root in self.vertices:
            if root in disc:
                continue
            stack = [(root, None, None, self._iter_incident(root))]
            disc[root] = low[root] = counter
            counter += 1
            while stack:
                x, parent_edge, parent, it = stack[-1]
                advanced = False
                for eid, y in it:
                    if eid == parent_edge or y == x:
                        continue
                    if y not in disc:
                        disc[y] = low[y] = counter
                        counter += 1
                        stack.append((y, eid, x, self._iter_incident(y)))
                        advanced = True
                        break
                    low[x] = min(low[x], disc[y])
                if advanced:
                    continue
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        out.add(parent_edge)
        return frozenset(out)

    def _iter_incident(self, x):
        for e in self.edges:
            if e.is_loop:
                continue
            if e.u == x:
                yield e.id, e.v
            elif e.v == x:
                yield e.id, e.u

    def is_spine(self, W: Iterable[Vertex]) -> bool:
        """True when every edge crossing from W to its complement is a bridge."""
        W = self.vertex_subset(W)
        br = self.bridges()
        for e in self.edges:
            if e.is_loop:
                continue
            if (e.u in W) != (e.v in W) and e.id not in br:
                return False
        return True

    # -- surgeries -------------------------------------------------------

    def delete_edges(self, S: Iterable) -> "Multigraph":
        S = self.edge_subset(S)
        return Multigraph(
            self.vertices,
            [e for e in self.edges if e.id not in S],
            self._genus,
        )

    def remove_loops(self) -> "Multigraph":
        return Multigraph(
            self.vertices,
            [e for e in self.edges if not e.is_loop],
            self._genus,
        )

    def induced_subgraph(self, W: Iterable[Vertex]) -> "Multigraph":
        """Subgraph on W keeping every edge (loops included) inside W."""
        W = self.vertex_subset(W)
        return Multigraph(
            [v for v in self.vertices if v in W],
            [e for e in self.edges if e.u in W and e.v in W],
            {v: self._genus[v] for v in W},
        )

    def subdivide_edges(self, S: Iterable) -> tuple["Multigraph", dict]:
        """Replace each edge of S by a length-two path through a fresh
        genus-zero vertex.

        Returns the new graph and the map edge id -> new middle vertex.
        Loops become two parallel edges between the old vertex and the new
        one.  New vertices are appended after the old ones in the order of
        the subdivided edges.
        """
        S = self.edge_subset(S)
        taken = set(self.vertices)
        new_vertices = list(self.vertices)
        genus = dict(self._genus)
        middle: dict = {}
        edge_items: list[Edge] = []
        used_ids = {e.id for e in self.edges if e.id not in S}

        def fresh_vertex(base):
            label = base
            while label in taken:
                label = label + "'" if isinstance(label, str) else (label, "'")
            taken.add(label)
            return label

        def fresh_edge_id(base):
            eid = base
            while eid in used_ids:
                eid = eid + "'" if isinstance(eid, str) else (eid, "'")
            used_ids.add(eid)
            return eid

        for e in self.edges:
            if e.id not in S:
                edge_items.append(e)
                continue
            x = fresh_vertex(f"{e.id}*" if isinstance(e.id, str) else (e.id, "*"))
            new_vertices.append(x)
            genus[x] = 0
            middle[e.id] = x
            base = e.id if isinstance(e.id, str) else str(e.id)
            edge_items.append(Edge(fresh_edge_id(f"{base}:a"), e.u, x))
            edge_items.append(Edge(fresh_edge_id(f"{base}:b"), x, e.v))
        return Multigraph(new_vertices, edge_items, genus), middle

    def contract_bridges(self) -> tuple["Multigraph", dict]:
        """Contract every bridge; genus weights add up on merged vertices.

        Returns the contracted graph together with the vertex surjection
        old vertex -> merged vertex.  Merged vertices are labelled by their
        earliest member.  Non-bridge edges survive; an edge whose endpoints
        merge becomes a loop.
        """
        br = self.bridges()
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            if e.id in br:
                a, b = find(e.u), find(e.v)
                if a != b:
                    # keep the earlier vertex as the class representative
                    if self._vpos[a] > self._vpos[b]:
                        a, b = b, a
                    parent[b] = a

        mapping = {v: find(v) for v in self.vertices}
        reps = []
        for v in self.vertices:
            if mapping[v] == v:
                reps.append(v)
        genus = {r: 0 for r in reps}
        for v in self.vertices:
            genus[mapping[v]] += self._genus[v]
        edge_items = [
            Edge(e.id, mapping[e.u], mapping[e.v])
            for e in self.edges
            if e.id not in br
        ]
        return Multigraph(reps, edge_items, genus), mapping

    # -- equality --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self._genus == other._genus
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return (
            f"Multigraph({len(self.vertices)} vertices, {len(self.edges)} edges)"
        )
