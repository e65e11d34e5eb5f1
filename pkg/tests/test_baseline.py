import numpy as np
import pytest

import kingminor as km
from conftest import assert_m1_m2


class TestCompleteEmbedding:
    def test_small_grid(self):
        placement = km.complete_embedding(2)
        assert placement.n == 3
        assert not placement.free_cells()
        assert km.verify(placement, placement.graph, placement.king).is_minor_embedding

    @pytest.mark.parametrize("L", [3, 8, 20, 64])
    def test_pattern_properties(self, L):
        placement = km.complete_embedding(L)
        assert placement.n == L + 1
        assert not placement.free_cells()
        assert placement.check_paths()
        assert placement.embedded_count == (L + 1) * L // 2
        sizes = sorted(placement.size)
        assert sizes == [L - 1] * L + [L]

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            km.complete_embedding(1)

    def test_guiding_pattern_covers_grid(self):
        gp = km.GuidingPattern.build(8)
        assert gp.guide.shape == (64,)
        assert set(int(g) for g in gp.guide) == set(range(9))
        chains = {g: 0 for g in range(9)}
        for g in gp.guide:
            chains[int(g)] += 1
        assert sorted(chains.values()) == [7] * 8 + [8]


class TestInitialPlacement:
    def test_n_at_baseline_embeds_everything(self):
        g = km.gen_erdos_renyi_connected(9, 0.9, seed=2)
        placement = km.initial_placement(g, 8)
        assert placement.embedded_count == g.m
        assert km.verify(placement, g, placement.king).is_minor_embedding

    def test_small_n_uses_largest_chains_and_leaves_rest_free(self):
        g = km.InputGraph(2, [(0, 1)])
        placement = km.initial_placement(g, 8)
        # the largest baseline chains: the full column (8) and one wire (7)
        assert sorted(placement.size) == [7, 8]
        assert len(placement.free_cells()) == 64 - 15
        assert placement.embedded_count == 1

    def test_double_baseline_splits_each_path_in_two(self):
        g = km.InputGraph(18, [])
        placement = km.initial_placement(g, 8)
        assert len(placement.free_cells()) == 0
        guide = km.GuidingPattern.build(8).guide
        per_parent = {}
        for i in range(18):
            parents = {int(guide[placement.king.index(c)])
                       for c in placement.chain(i)}
            assert len(parents) == 1          # segments stay within one path
            per_parent.setdefault(parents.pop(), []).append(placement.size[i])
        assert all(len(v) == 2 for v in per_parent.values())
        assert all(abs(v[0] - v[1]) <= 1 for v in per_parent.values())
        assert_m1_m2(placement)
        assert placement.check_paths()

    def test_capacity_saturation_gives_single_cells(self):
        g = km.InputGraph(16, [])
        placement = km.initial_placement(g, 4)
        assert all(s == 1 for s in placement.size)

    def test_over_capacity_rejected(self):
        with pytest.raises(ValueError, match="capacity"):
            km.initial_placement(km.InputGraph(17, []), 4)

    @pytest.mark.parametrize("n", [12, 23, 40, 64])
    def test_segments_valid_for_many_sizes(self, n):
        g = km.InputGraph(n, [])
        placement = km.initial_placement(g, 8)
        assert_m1_m2(placement)
        assert placement.check_paths()
        assert not placement.free_cells()


class TestCliqueUpperBound:
    def test_values(self):
        assert km.clique_upper_bound(1) == 2
        assert km.clique_upper_bound(2) == 4
        assert km.clique_upper_bound(8) == 16

    def test_tight_at_two(self):
        # all four cells of the 2x2 grid are mutually adjacent, so the
        # four-vertex complete graph embeds: the bound is met exactly
        king = km.KingGraph(2)
        g = km.complete_graph(4)
        placement = km.Placement(
            king, g, [[(0, 0)], [(0, 1)], [(1, 0)], [(1, 1)]])
        assert km.verify(placement, g, king).is_minor_embedding

    def test_invalid(self):
        with pytest.raises(ValueError):
            km.clique_upper_bound(0)


class TestTreeDecomposition:
    def test_width_and_bags_at_five(self):
        td = km.tree_decomposition(5)
        assert len(td.bags) == 4
        assert all(len(b) == 10 for b in td.bags)
        assert td.width == 9

    def test_minimal_grid(self):
        td = km.tree_decomposition(2)
        assert len(td.bags) == 1
        assert len(td.bags[0]) == 4
        assert td.width == 3

    @pytest.mark.parametrize("L", [3, 10, 50, 100])
    def test_validator_passes_and_width_formula(self, L):
        td = km.tree_decomposition(L)
        assert td.width == 2 * L - 1

    def test_independent_property_check(self):
        # re-check T1-T3 with test-local code
        L = 7
        king = km.KingGraph(L)
        td = km.tree_decomposition(L)
        bagsets = [set(b) for b in td.bags]
        covered = set().union(*bagsets)
        assert covered == {(r, c) for r in range(L) for c in range(L)}
        for x, w in king.iter_edges():
            a, b = king.cell(x), king.cell(w)
            assert any(a in s and b in s for s in bagsets)
        for cell in covered:
            where = [k for k, s in enumerate(bagsets) if cell in s]
            assert where == list(range(where[0], where[-1] + 1))

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            km.tree_decomposition(1)


class TestResourceBounds:
    def test_king_degree_eight(self):
        assert km.min_supervertex_size(9, 8) == 1
        assert km.min_hardware_vertices(9, 8) == 9

    def test_minimal_case(self):
        # K4 into 3-regular hardware is tight: K4 itself is the host,
        # so 4(4-3)/(3-2) = 4 cells and unit chains
        assert km.min_supervertex_size(4, 3) == 1
        assert km.min_hardware_vertices(4, 3) == 4

    def test_rejects_degenerate_degree(self):
        with pytest.raises(ValueError):
            km.min_hardware_vertices(9, 2)
        with pytest.raises(ValueError):
            km.min_supervertex_size(3, 8)

    def test_baseline_respects_hardware_bound(self):
        # L*L cells always suffice for the (L+1)-clique the baseline hosts
        for L in range(3, 321):
            assert L * L >= km.min_hardware_vertices(L + 1, 8)

    def test_verifier_rejects_undersized_clique_claims(self):
        # a 10-clique needs ceil(10*7/6) = 12 cells; any 10-cell claim fails
        assert km.min_hardware_vertices(10, 8) == 12
        king = km.KingGraph(4)
        g = km.complete_graph(10)
        cells = [(r, c) for r in range(4) for c in range(4)][:10]
        placement = km.Placement(king, g, [[c] for c in cells])
        assert not km.verify(placement, g, king).is_minor_embedding
