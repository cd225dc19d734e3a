import math

import pytest

from partial_periodicity.errors import BudgetExceededError
from partial_periodicity.oracle import (
    COMPLETE,
    PQGraph,
    h_oracle,
    h_oracle_exhaustive,
    l_oracle,
    min_vertex_separator,
    q_edge_counts,
    separator_to_word,
    separator_witness,
)
from partial_periodicity.thresholds import l_full
from partial_periodicity.words import has_strong_period

SMALL = [(p, q) for q in range(3, 8) for p in range(2, q) if math.gcd(p, q) == 1]


class TestGraph:
    def test_adjacency(self):
        g = PQGraph(12, 5, 7)
        assert g.adjacent(0, 5) and g.adjacent(0, 7) and g.adjacent(3, 10)
        assert not g.adjacent(0, 1) and not g.adjacent(4, 4)
        assert g.p_class(2) == [2, 7]
        assert g.q_class(4) == [4, 11]

    def test_edges_and_components(self):
        g = PQGraph(10, 5, 7)
        assert len(g.edges()) == 5 + 3
        assert len(g.components()) == 2
        assert PQGraph(12, 5, 7).components() == [list(range(12))]

    def test_is_connected_with_removals(self):
        g = PQGraph(11, 5, 7)
        assert g.is_connected()
        assert not g.is_connected(1 << 10)

    def test_q_edge_counts(self):
        g = PQGraph(20, 5, 7)
        counts = q_edge_counts(g)
        assert sum(counts) == 20 - 7
        assert counts == [3, 3, 3, 2, 2]


class TestSeparators:
    def test_five_seven_values(self):
        assert [h_oracle(n, 5, 7) for n in range(10, 26)] == \
            [0, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 5, 6]

    @pytest.mark.parametrize("p,q", SMALL)
    def test_flow_matches_exhaustive(self, p, q):
        for n in range(q, p + q + 8):
            flow = h_oracle(n, p, q)
            assert h_oracle_exhaustive(n, p, q, max_h=int(min(flow, n))) == flow

    @pytest.mark.parametrize("n,p,q", [(14, 3, 5), (20, 5, 7), (25, 5, 7), (30, 4, 9)])
    def test_all_pairs_agrees(self, n, p, q):
        g = PQGraph(n, p, q)
        assert min_vertex_separator(g) == min_vertex_separator(g, all_pairs=True)

    def test_complete_graph(self):
        assert min_vertex_separator(PQGraph(3, 1, 2)) == COMPLETE

    @pytest.mark.parametrize("n,p,q", [(12, 5, 7), (21, 5, 7), (24, 5, 7), (40, 4, 11)])
    def test_witness_is_counterexample(self, n, p, q):
        g = PQGraph(n, p, q)
        sep = separator_witness(g)
        assert len(sep) == h_oracle(n, p, q)
        w = separator_to_word(g, sep)
        assert w.holes == len(sep)
        assert has_strong_period(w, p) and has_strong_period(w, q)
        assert not has_strong_period(w, 1)

    def test_exhaustive_budget(self):
        with pytest.raises(BudgetExceededError):
            h_oracle_exhaustive(60, 5, 7, max_h=10, budget=1000)
        assert h_oracle_exhaustive(25, 5, 7, max_h=3) is None

    def test_domain(self):
        with pytest.raises(ValueError):
            h_oracle(10, 4, 6)
        with pytest.raises(ValueError):
            h_oracle(5, 5, 7)


class TestInverse:
    def test_five_seven(self):
        assert [l_oracle(h, 5, 7, 40) for h in range(6)] == [11, 12, 16, 19, 21, 25]

    @pytest.mark.parametrize("p,q", [(3, 4), (3, 5), (4, 5), (3, 7)])
    def test_matches_formula(self, p, q):
        for h in range(8):
            assert l_oracle(h, p, q, 80) == l_full(h, p, q)

    def test_scan_budget(self):
        with pytest.raises(BudgetExceededError):
            l_oracle(10, 5, 7, 20)
