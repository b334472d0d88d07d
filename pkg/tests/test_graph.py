import pytest

from termnet.graph import CollocationNetwork, TermNode, loads

from conftest import make_network, net_from


class TestConstruction:
    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            net_from({("a", "b"): 0.0})
        with pytest.raises(ValueError):
            net_from({("a", "b"): -1.0})

    def test_edge_endpoints_must_be_nodes(self):
        with pytest.raises(ValueError):
            CollocationNetwork([TermNode("a", 1)], {("a", "b"): 1.0}, directed=True)

    def test_simplified_rejects_loops(self):
        with pytest.raises(ValueError):
            CollocationNetwork(
                [TermNode("a", 1)], {("a", "a"): 1.0}, directed=True, simplified=True
            )

    def test_undirected_pairs_accumulate(self):
        # the same unordered pair, inserted both ways, is stored once
        net = net_from({("a", "b"): 2.0, ("b", "a"): 1.0}, directed=False)
        assert net.edges() == [("a", "b", 3.0)]

    def test_node_labels_are_validated(self):
        with pytest.raises(ValueError):
            TermNode("", 1)
        with pytest.raises(ValueError):
            TermNode("Upper", 1)
        with pytest.raises(ValueError):
            TermNode("ok", 0)

    def test_isolated_nodes_allowed(self):
        net = CollocationNetwork([TermNode("lone", 3)], {}, directed=True)
        assert net.labels() == ["lone"]
        assert net.edge_count == 0


class TestToUndirected:
    def test_reciprocal_edges_merge_with_summed_weight(self):
        net = net_from({("a", "b"): 2.0, ("b", "a"): 1.0})
        und = net.to_undirected()
        assert und.edges() == [("a", "b", 3.0)]
        assert not und.directed

    def test_single_edge_keeps_weight(self):
        und = net_from({("a", "b"): 2.0}).to_undirected()
        assert und.edges() == [("a", "b", 2.0)]

    def test_self_loop_preserved(self):
        und = net_from({("a", "a"): 4.0}).to_undirected()
        assert und.edges() == [("a", "a", 4.0)]

    def test_node_set_unchanged(self):
        net = CollocationNetwork(
            [TermNode("a", 1), TermNode("b", 2), TermNode("iso", 1)],
            {("a", "b"): 1.0},
            directed=True,
        )
        assert net.to_undirected().labels() == ["a", "b", "iso"]

    def test_requires_directed(self):
        with pytest.raises(ValueError):
            net_from({("a", "b"): 1.0}, directed=False).to_undirected()

    def test_total_weight_preserved(self, rng):
        for _ in range(25):
            net = make_network(rng, directed=True)
            assert net.to_undirected().total_weight() == pytest.approx(
                net.total_weight()
            )


class TestSimplify:
    def test_drops_loops_keeps_rest(self):
        simplified = net_from({("a", "a"): 4.0, ("a", "b"): 1.0}).simplify()
        assert simplified.edges() == [("a", "b", 1.0)]
        assert simplified.simplified

    def test_loop_free_network_unchanged(self):
        net = net_from({("a", "b"): 1.0, ("b", "c"): 2.0})
        assert net.simplify().edges() == net.edges()

    def test_nodes_survive_simplification(self):
        simplified = net_from({("a", "a"): 4.0}).simplify()
        assert simplified.labels() == ["a"]
        assert simplified.edge_count == 0

    def test_idempotent(self, rng):
        for _ in range(25):
            net = make_network(rng)
            once = net.simplify()
            assert once.simplify() == once

    def test_commutes_with_to_undirected(self, rng):
        for _ in range(25):
            net = make_network(rng, directed=True)
            assert net.to_undirected().simplify() == net.simplify().to_undirected()


class TestEdgeListFormat:
    def test_round_trip(self, rng):
        for directed in (True, False):
            net = make_network(rng, directed=directed)
            assert loads(net.dumps()) == net

    def test_isolated_nodes_round_trip(self):
        net = CollocationNetwork(
            [TermNode("a", 1), TermNode("iso", 7)], {("a", "a"): 2.0}, directed=True
        )
        restored = loads(net.dumps())
        assert restored.labels() == ["a", "iso"]
        assert restored.term_frequency("iso") == 7

    def test_tab_separated_edge_lines(self):
        text = net_from({("a", "b"): 2.0}).dumps()
        assert "a\tb\t2" in text.splitlines()

    def test_malformed_input_rejected(self):
        with pytest.raises(ValueError):
            loads("*edges\na\tb\n")  # no header, wrong arity
