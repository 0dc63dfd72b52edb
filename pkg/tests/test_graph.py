import pytest

from jacgraph import (
    Edge,
    GraphConstructionError,
    InvalidSubsetError,
    Multigraph,
    UnknownEdgeError,
    UnknownVertexError,
)

import oracles


class TestConstruction:
    def test_edge_forms(self):
        g = Multigraph(
            ["a", "b"],
            [("a", "b"), ("x1", "a", "b"), Edge("x2", "b", "b")],
        )
        assert g.edge_ids() == ("e0", "x1", "x2")
        assert g.edge("x2").is_loop
        assert g.edge("e0").other("a") == "b"

    def test_default_ids_positional(self):
        g = Multigraph(["a"], [("a", "a"), ("a", "a")])
        assert g.edge_ids() == ("e0", "e1")

    def test_duplicate_vertices_rejected(self):
        with pytest.raises(GraphConstructionError):
            Multigraph(["a", "a"])

    def test_duplicate_edge_ids_rejected(self):
        with pytest.raises(GraphConstructionError):
            Multigraph(["a", "b"], [("x", "a", "b"), ("x", "a", "b")])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(UnknownVertexError):
            Multigraph(["a"], [("a", "b")])

    def test_genus_defaults_and_validation(self):
        g = Multigraph(["a", "b"], [], {"b": 2})
        assert g.genus_of("a") == 0
        assert g.genus_map() == {"a": 0, "b": 2}
        with pytest.raises(GraphConstructionError):
            Multigraph(["a"], [], {"a": -1})
        with pytest.raises(UnknownVertexError):
            Multigraph(["a"], [], {"zz": 1})

    def test_unknown_lookups(self):
        g = Multigraph(["a"], [("a", "a")])
        with pytest.raises(UnknownEdgeError):
            g.edge("nope")
        with pytest.raises(UnknownVertexError):
            g.loops_at("nope")
        with pytest.raises(UnknownEdgeError):
            g.edge_subset(["nope"])
        with pytest.raises(UnknownVertexError):
            g.vertex_subset(["nope"])

    def test_structural_equality(self):
        g1 = Multigraph(["a", "b"], [("a", "b")], {"a": 1})
        g2 = Multigraph(["a", "b"], [("a", "b")], {"a": 1})
        g3 = Multigraph(["a", "b"], [("a", "b")], {"a": 2})
        assert g1 == g2 and hash(g1) == hash(g2)
        assert g1 != g3


class TestCounting:
    def test_valence_ignores_loops(self, dumbbell):
        assert dumbbell.valence({"x"}) == 1
        assert dumbbell.loops_at("x") == 1
        assert dumbbell.adjacency("x", "y") == 1

    def test_valence_banana(self, banana):
        assert banana.valence({"u"}) == 2
        assert banana.valence({"u"}, {"v"}) == 2
        assert banana.adjacency("u", "v") == 2

    def test_valence_pairwise_disjointness(self, triangle):
        assert triangle.valence({"a"}, {"b"}) == 1
        with pytest.raises(InvalidSubsetError):
            triangle.valence({"a", "b"}, {"b", "c"})

    def test_valence_restricted(self, triangle):
        assert triangle.valence_in(["e0"], {"a"}) == 1
        assert triangle.valence_in(["e1"], {"a"}) == 0

    def test_induced_edge_count_includes_loops(self, dumbbell):
        every = dumbbell.edge_ids()
        assert dumbbell.induced_edge_count(every, {"x"}) == 1
        assert dumbbell.induced_edge_count(every, {"x", "y"}) == 3
        assert dumbbell.induced_edge_count(["e1"], {"x"}) == 0

    def test_valence_matches_oracle_on_fixtures(self, triangle, dumbbell, square):
        for g in (triangle, dumbbell, square):
            vs = list(g.vertices)
            for mask in range(1, 2 ** len(vs) - 1):
                W = {v for i, v in enumerate(vs) if mask >> i & 1}
                assert g.valence(W) == oracles.crossing_count(g, W)


class TestConnectivity:
    def test_components_connected(self, triangle):
        assert triangle.components() == [frozenset({"a", "b", "c"})]
        assert triangle.is_connected()

    def test_components_disconnected(self):
        g = Multigraph(["a", "b", "c"], [("a", "b")])
        assert g.components() == [frozenset({"a", "b"}), frozenset({"c"})]
        assert not g.is_connected()

    def test_first_betti(self, banana, triangle, dumbbell, path2):
        assert banana.first_betti() == 1
        assert triangle.first_betti() == 1
        assert dumbbell.first_betti() == 2
        assert path2.first_betti() == 0

    def test_subcurve_genus(self, dumbbell):
        g = Multigraph(["x", "y"], [("x", "x"), ("x", "y"), ("y", "y")], {"x": 1})
        assert g.subcurve_genus({"x"}) == 2  # genus 1 plus one loop
        assert g.subcurve_genus({"x", "y"}) == 3
        assert dumbbell.subcurve_genus({"y"}) == 1
        with pytest.raises(InvalidSubsetError):
            dumbbell.subcurve_genus(set())


class TestBridges:
    def test_no_bridges_in_cycles(self, banana, triangle, square):
        assert banana.bridges() == frozenset()
        assert triangle.bridges() == frozenset()
        assert square.bridges() == frozenset()

    def test_bridge_found(self, path2, dumbbell):
        assert path2.bridges() == {"e0"}
        assert dumbbell.bridges() == {"e1"}

    def test_parallel_pair_is_not_a_bridge(self):
        g = Multigraph(["a", "b", "c"], [("a", "b"), ("a", "b"), ("b", "c")])
        assert g.bridges() == {"e2"}

    def test_bridges_match_deletion_oracle(self, corpus_cases):
        for case in corpus_cases[:30]:
            g = case.graph
            expect = {
                e.id
                for e in g.edges
                if not e.is_loop and not g.delete_edges([e.id]).is_connected()
            }
            assert g.bridges() == expect

    def test_is_spine(self, banana, dumbbell):
        assert not banana.is_spine({"u"})
        assert dumbbell.is_spine({"x"})
        # no crossing edges at all: vacuously a spine
        assert banana.is_spine(set())
        assert banana.is_spine({"u", "v"})


class TestSurgery:
    def test_delete_edges(self, banana):
        g = banana.delete_edges(["e0"])
        assert g.edge_ids() == ("e1",)
        assert g.vertices == banana.vertices

    def test_remove_loops(self, dumbbell):
        g = dumbbell.remove_loops()
        assert g.edge_ids() == ("e1",)

    def test_induced_subgraph(self, dumbbell):
        sub = dumbbell.induced_subgraph({"x"})
        assert sub.vertices == ("x",)
        assert sub.edge_ids() == ("e0",)

    def test_subdivide_edge(self, path2):
        g, middle = path2.subdivide_edges(["e0"])
        assert middle == {"e0": "e0*"}
        assert g.vertices == ("u", "v", "e0*")
        assert g.genus_of("e0*") == 0
        assert g.adjacency("u", "e0*") == 1
        assert g.adjacency("e0*", "v") == 1
        assert g.adjacency("u", "v") == 0

    def test_subdivide_loop_gives_parallel_pair(self):
        g0 = Multigraph(["x"], [("x", "x")], {"x": 1})
        g, middle = g0.subdivide_edges(["e0"])
        m = middle["e0"]
        assert g.adjacency("x", m) == 2
        assert g.loops_at("x") == 0
        assert g.first_betti() == 1

    def test_subdivide_name_collision(self):
        g0 = Multigraph(["a", "e0*"], [("a", "e0*")])
        g, middle = g0.subdivide_edges(["e0"])
        assert middle["e0"] not in ("a", "e0*")
        assert g.num_vertices == 3

    def test_contract_bridges_dumbbell(self, dumbbell):
        g, mapping = dumbbell.contract_bridges()
        assert g.vertices == ("x",)
        assert mapping == {"x": "x", "y": "x"}
        assert g.loops_at("x") == 2

    def test_contract_bridges_sums_genus(self):
        g0 = Multigraph(["u", "v"], [("u", "v")], {"u": 1, "v": 1})
        g, _ = g0.contract_bridges()
        assert g.vertices == ("u",)
        assert g.genus_of("u") == 2

    def test_contract_bridges_no_bridges(self, triangle):
        g, mapping = triangle.contract_bridges()
        assert g == triangle
        assert mapping == {v: v for v in triangle.vertices}

    def test_contract_preserves_betti(self, corpus_cases):
        for case in corpus_cases[:30]:
            g = case.graph
            contracted, _ = g.contract_bridges()
            assert contracted.first_betti() == g.first_betti()
