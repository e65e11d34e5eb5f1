
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import kingminor as km


class TestCubic:
    def test_k4_is_unique_cubic_on_four(self):
        g = km.gen_random_cubic(4, seed=123)
        assert g.edges == [(i, j) for i in range(4) for j in range(i + 1, 4)]

    def test_edge_count_formula(self):
        g = km.gen_random_cubic(100, seed=9)
        assert g.m == 150
        assert all(d == 3 for d in g.degree)

    def test_odd_or_small_rejected(self):
        for n in (5, 3, 2, 0, -2):
            with pytest.raises(ValueError):
                km.gen_random_cubic(n, seed=1)

    def test_deterministic(self):
        assert km.gen_random_cubic(60, seed=4) == km.gen_random_cubic(60, seed=4)
        assert km.gen_random_cubic(60, seed=4) != km.gen_random_cubic(60, seed=5)

    @pytest.mark.parametrize("n", [10, 100, 1000])
    def test_degree_histogram_across_seeds(self, n):
        for seed in range(20):
            g = km.gen_random_cubic(n, seed=seed)
            assert g.m == 3 * n // 2
            assert all(d == 3 for d in g.degree)


class TestBarabasiAlbert:
    def test_seed_clique_only(self):
        g = km.gen_barabasi_albert(2, m0=2, m=2, seed=0)
        assert g.edges == [(0, 1)]

    def test_edge_count_formula(self):
        g = km.gen_barabasi_albert(100, m0=2, m=2, seed=8)
        assert g.m == 1 + 2 * 98

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            km.gen_barabasi_albert(10, m0=3, m=4, seed=0)   # m > m0
        with pytest.raises(ValueError):
            km.gen_barabasi_albert(2, m0=3, m=2, seed=0)    # m0 > n
        with pytest.raises(ValueError):
            km.gen_barabasi_albert(10, m0=2, m=1, seed=0)   # m < 2

    def test_larger_seed_clique(self):
        g = km.gen_barabasi_albert(50, m0=4, m=3, seed=2)
        assert g.m == 6 + 3 * 46
        assert g.is_connected()

    @pytest.mark.parametrize("n", [10, 100, 1000])
    def test_connected_100_seeds(self, n):
        for seed in range(100):
            assert km.gen_barabasi_albert(n, seed=seed).is_connected()


class TestErdosRenyi:
    def test_tree_floor(self):
        # round(0.2 * 45) = 9 = n - 1, the tree alone meets the target
        g = km.gen_erdos_renyi_connected(10, 0.2, seed=1)
        assert g.m == 9

    def test_edge_count_formula(self):
        g = km.gen_erdos_renyi_connected(100, 0.2, seed=5)
        assert g.m == 990

    def test_k2(self):
        g = km.gen_erdos_renyi_connected(2, 1.0, seed=0)
        assert g.edges == [(0, 1)]

    def test_full_density(self):
        g = km.gen_erdos_renyi_connected(12, 1.0, seed=3)
        assert g.m == 66

    def test_round_half_up(self):
        # 0.5 * C(5,2) = 5.0 exactly; round half up keeps 5
        g = km.gen_erdos_renyi_connected(5, 0.5, seed=7)
        assert g.m == 5
        # 0.35 * C(9,2) = 12.6 -> 13
        g = km.gen_erdos_renyi_connected(9, 0.35, seed=7)
        assert g.m == 13

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            km.gen_erdos_renyi_connected(1, 0.5, seed=0)
        with pytest.raises(ValueError):
            km.gen_erdos_renyi_connected(10, 0.0, seed=0)
        with pytest.raises(ValueError):
            km.gen_erdos_renyi_connected(10, 1.5, seed=0)

    @pytest.mark.parametrize("n", [10, 100, 1000])
    def test_connected_100_seeds(self, n):
        for seed in range(100):
            assert km.gen_erdos_renyi_connected(n, 0.2, seed=seed).is_connected()


@settings(max_examples=30, deadline=None)
@given(n=st.integers(4, 60), seed=st.integers(0, 2**32))
def test_generator_outputs_simple_and_reproducible(n, seed):
    n -= n % 2
    for make in (km.gen_random_cubic,
                 lambda n, s: km.gen_barabasi_albert(n, seed=s),
                 lambda n, s: km.gen_erdos_renyi_connected(n, 0.3, seed=s)):
        g = make(n, seed)
        assert len(set(g.edges)) == g.m
        assert all(i != j and 0 <= i < j < g.n for i, j in g.edges)
        assert sum(g.degree) == 2 * g.m
        assert g == make(n, seed)


class TestGraphFiles:
    def test_round_trip(self, tmp_path):
        g = km.complete_graph(4)
        path = tmp_path / "k4.txt"
        km.write_graph(g, path)
        assert km.read_graph(path) == g

    def test_round_trip_generated(self, tmp_path):
        g = km.gen_erdos_renyi_connected(30, 0.3, seed=6)
        path = tmp_path / "g.txt"
        km.write_graph(g, path)
        assert km.read_graph(path) == g

    def test_single_vertex_no_edges(self, tmp_path):
        path = tmp_path / "one.txt"
        path.write_text("p 1 0\n")
        g = km.read_graph(path)
        assert g.n == 1 and g.m == 0

    @pytest.mark.parametrize("content,lineno", [
        ("p 3 1\ne 0 5\n", 2),           # index out of range
        ("p 3 1\ne 1 1\n", 2),           # self-loop
        ("p 3 2\ne 0 1\ne 1 0\n", 3),    # duplicate edge
        ("p x 1\ne 0 1\n", 1),           # malformed header
        ("e 0 1\n", 1),                  # edge before header
        ("p 3 1\nq 0 1\n", 2),           # unknown record
    ])
    def test_errors_carry_line_numbers(self, tmp_path, content, lineno):
        path = tmp_path / "bad.txt"
        path.write_text(content)
        with pytest.raises(km.GraphFormatError, match=f"line {lineno}"):
            km.read_graph(path)

    def test_edge_count_mismatch(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("p 3 2\ne 0 1\n")
        with pytest.raises(km.GraphFormatError, match="declares 2"):
            km.read_graph(path)

    def test_comments_ignored(self, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("c a comment\np 2 1\nc another\ne 0 1\n")
        assert km.read_graph(path).m == 1


class TestInputGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            km.InputGraph(3, [(1, 1)])

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            km.InputGraph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            km.InputGraph(3, [(0, 3)])

    def test_csr_round_trip(self):
        g = km.gen_barabasi_albert(20, seed=3)
        adj_ptr, adj_v, adj_e, edge_u, edge_v, deg = g.csr()
        assert list(deg) == g.degree
        rebuilt = {(int(edge_u[k]), int(edge_v[k])) for k in range(g.m)}
        assert rebuilt == set(g.edges)
        for i in range(g.n):
            nbrs = [int(adj_v[p]) for p in range(adj_ptr[i], adj_ptr[i + 1])]
            assert nbrs == g.adjacency[i]
