"""Acceptance suite: one test per criterion, each printing a pass line with
its wall time (run with -s or -v to see them). Budgets are asserted."""

import time

import kingminor as km
from conftest import assert_m1_m2, random_valid_placement
from test_terminal import independent_ring_check


class Timer:
    def __init__(self, limit_s):
        self.limit = limit_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False

    def check(self, label):
        print(f"\nACCEPTANCE {label}: PASS in {self.elapsed:.1f}s "
              f"(limit {self.limit}s)")
        assert self.elapsed < self.limit, \
            f"{label} exceeded its {self.limit}s budget ({self.elapsed:.1f}s)"


def test_criterion_01_baseline_validity():
    with Timer(5) as t:
        for L in range(2, 65):
            placement = km.complete_embedding(L)
            result = km.verify(placement, placement.graph, placement.king)
            assert result.is_minor_embedding, f"L={L}"
            assert not placement.free_cells()
    t.check("1 baseline-validity")


def test_criterion_02_treewidth_and_impossible_cliques():
    with Timer(10) as t:
        for L in range(2, 101):
            td = km.tree_decomposition(L)   # validates T1-T3 on construction
            assert td.width == 2 * L - 1
            assert km.clique_upper_bound(L) == td.width + 1
    t.check("2a treewidth-construction")
    cfg = km.ScheduleConfig(family="s3", t_max=100_000)
    for L in range(3, 9):
        g = km.complete_graph(2 * L + 1)
        try:
            placement, report = km.run_pssa(g, km.KingGraph(L), cfg, seed=L)
        except ValueError:
            # K_7 at L=3 exceeds the coupler capacity and is rejected before
            # the loop; a fortiori no embedding exists
            assert g.m > km.edge_count(L)
            continue
        assert not report.found, f"K_{2*L+1} claimed embedded into L={L}"
    print("ACCEPTANCE 2b impossible-cliques: PASS")


def test_criterion_03_scoring_oracle():
    with Timer(30) as t:
        for L, n in ((6, 10), (12, 24)):
            for seed in (1, 2):
                g = km.gen_random_cubic(n, seed=seed)
                cfg = km.ScheduleConfig(family="s1", t_max=10_000)
                # audit_stride=1 recomputes every representation count and
                # the score from scratch after every accepted or rejected
                # move and fails the run on any disagreement
                placement, _ = km.run_pssa(g, km.KingGraph(L), cfg, seed=seed,
                                           audit_stride=1, terminal=False)
                assert placement.check_paths()
                assert_m1_m2(placement)
                assert km.count_embedded_edges(placement) == \
                    placement.embedded_count
    t.check("3 scoring-oracle")


def test_criterion_04_pattern_table_oracle():
    with Timer(1) as t:
        table = km.build_pattern_table()
        for pattern in range(256):
            assert bool(table[pattern]) == independent_ring_check(pattern)
    t.check("4 pattern-table-oracle")


def test_criterion_05_cleanup_conservation():
    with Timer(30) as t:
        for seed in range(100):
            placement = random_valid_placement(12, 18 + 2 * (seed % 4), seed,
                                               seed + 1000, moves=2000)
            before = placement.embedded_count
            km.cleanup(placement)
            assert placement.embedded_count == before
            assert km.count_embedded_edges(placement) == before
            assert_m1_m2(placement)
    t.check("5 cleanup-conservation")


def test_criterion_06_terminal_search_dominance():
    with Timer(600) as t:
        king = km.KingGraph(20)
        cfg = km.ScheduleConfig(family="s3", t_max=1_000_000)
        full_with = full_without = 0
        for seed in range(20):
            g = km.gen_random_cubic(40, seed=4000 + seed)
            _, plain = km.run_pssa(g, king, cfg, seed=seed, terminal=False)
            _, improved = km.run_pssa(g, king, cfg, seed=seed, terminal=True)
            assert improved.embedded >= plain.embedded, f"seed {seed}"
            full_without += plain.found
            full_with += improved.found
        assert full_with >= full_without
    t.check("6 terminal-search-dominance")


def test_criterion_07_desk_threshold_cubic():
    with Timer(3600) as t:
        cfg = km.ScheduleConfig(family="s3", t_max=2_000_000)
        nbar = km.embedding_threshold("cubic", 20, cfg, step=1, seed=720,
                                      samples=20, success_cut=19,
                                      degree_weighted=True)
        assert nbar is not None
        assert nbar > 21, "threshold must strictly exceed the baseline L+1"
        assert nbar >= 40, f"cubic threshold n_bar(20)={nbar} below 2L"
    t.check(f"7 desk-threshold-cubic (n_bar={nbar})")


def test_criterion_08_desk_threshold_barabasi_albert():
    with Timer(3600) as t:
        cfg = km.ScheduleConfig(family="s3", t_max=2_000_000)
        nbar = km.embedding_threshold("ba", 20, cfg, step=1, seed=820,
                                      samples=20, success_cut=19,
                                      degree_weighted=False)
        assert nbar is not None
        assert nbar >= 30, f"BA threshold n_bar(20)={nbar} below 1.5L"
    t.check(f"8 desk-threshold-ba (n_bar={nbar})")


def test_criterion_09_baseline_floor():
    with Timer(60) as t:
        L = 10
        cfg = km.ScheduleConfig(family="s3", t_max=10_000)
        cases = []
        cases += [("cubic", n) for n in range(4, L + 2, 2)]
        cases += [("ba", n) for n in range(2, L + 2)]
        cases += [("er", n) for n in range(2, L + 2)]
        cases += [("clique", n) for n in range(1, L + 2)]
        for cls, n in cases:
            point, iters = km.embedding_probability(cls, n, L, 20, cfg,
                                                    seed=n * 31 + 7)
            assert point.p_emb == 1.0, f"{cls} n={n}"
            assert iters == [0] * 20, f"{cls} n={n} used annealing iterations"
    t.check("9 baseline-floor")


def test_criterion_10_er_collapse():
    with Timer(3600) as t:
        cfg = km.ScheduleConfig(family="s3", t_max=2_000_000)
        nbar = km.embedding_threshold("er", 40, cfg, step=1, seed=1040,
                                      samples=20, success_cut=19, rho=0.2)
        assert nbar is not None
        assert nbar - 41 <= 10, f"ER threshold n_bar(40)={nbar} escapes baseline"
    t.check(f"10 er-collapse (n_bar={nbar})")


def test_criterion_11_determinism(tmp_path):
    with Timer(120) as t:
        king = km.KingGraph(10)
        g = km.gen_random_cubic(24, seed=5)
        cfg = km.ScheduleConfig(family="s3", t_max=100_000)
        blobs = []
        for rep in range(2):
            placement, report = km.run_pssa(g, king, cfg, seed=11)
            path = tmp_path / f"p{rep}.json"
            placement.save(path)
            blobs.append(path.read_bytes())
        assert blobs[0] == blobs[1]
        csvs = []
        bench_cfg = km.ScheduleConfig(family="s3", t_max=30_000)
        for rep in range(2):
            report = km.threshold_sweep("cubic", [8], bench_cfg, seed=3,
                                        samples=5, success_cut=5)
            csvs.append(report.to_csv().encode())
        assert csvs[0] == csvs[1]
    t.check("11 determinism")


def test_criterion_12_compile_conservation():
    with Timer(1) as t:
        placement = km.complete_embedding(8)
        n = 9
        rng = km.Stream(12)
        J = {(i, j): float(rng.below(19) - 9) or 1.0
             for i in range(n) for j in range(i + 1, n)}
        h = [float(rng.below(21) - 10) for _ in range(n)]
        model = km.compile_ising(J, h, placement)
        king = placement.king
        label = placement.label
        inter = [k for k in model.couplings if label[k[0]] != label[k[1]]]
        assert len(inter) == n * (n - 1) // 2
        for i in range(n):
            total = 0.0
            for cell in placement.chain(i):
                total += model.fields[king.index(cell)]
            assert total == h[i]
    t.check("12 compile-conservation")
