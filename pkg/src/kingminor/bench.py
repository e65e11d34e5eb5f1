"""Benchmark harness: embedding probabilities and threshold sweeps.

For a graph class, hardware size, and pipeline configuration, the embedding
probability at vertex count n is the fraction of sampled inputs the pipeline
embeds (success certified by the verifier). The threshold for one hardware
size is the smallest tested n whose success count drops below the cut.
Per-sample seeds derive from the master seed by drawing two 64-bit values per
sample in sample order (graph seed, then run seed), so reports are
reproducible and samples can run on parallel workers with an order-fixed
reduction.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .graphs import (InputGraph, complete_graph, gen_barabasi_albert,
                     gen_erdos_renyi_connected, gen_random_cubic)
from .hardware import KingGraph
from .pssa import ScheduleConfig, run_pssa
from .rng import Stream

_MAX_CONNECT_ATTEMPTS = 1000


def make_graph(cls: str, n: int, seed: int, rho: float = 0.2,
               m0: int = 2, m: int = 2) -> InputGraph:
    if cls == "cubic":
        return gen_random_cubic(n, seed)
    if cls == "ba":
        return gen_barabasi_albert(n, m0=m0, m=m, seed=seed)
    if cls == "er":
        return gen_erdos_renyi_connected(n, rho, seed=seed)
    if cls == "clique":
        return complete_graph(n)
    raise ValueError(f"unknown graph class {cls!r}")


def class_round(cls: str, n: int) -> int:
    """Round a requested size up to the nearest feasible one (cubic graphs
    need an even vertex count)."""
    if cls == "cubic" and n % 2 == 1:
        return n + 1
    return n


@dataclass
class PointResult:
    cls: str
    n: int
    L: int
    samples: int
    successes: int
    discarded: int = 0

    @property
    def p_emb(self) -> float:
        return self.successes / self.samples


@dataclass
class BenchReport:
    cls: str
    config: ScheduleConfig
    degree_weighted: bool
    terminal: bool
    seed: int
    samples: int
    success_cut: int
    points: list = field(default_factory=list)     # PointResult per (n, L)
    thresholds: dict = field(default_factory=dict)  # L -> n_bar (or None)
    wall_seconds: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        lines = ["class,L,n_bar,c"]
        for L in sorted(self.thresholds):
            nbar = self.thresholds[L]
            if nbar is None:
                lines.append(f"{self.cls},{L},,")
            else:
                lines.append(f"{self.cls},{L},{nbar},{nbar / L:.6f}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [
            f"class            {self.cls}",
            f"schedule         {self.config.family} (t_max={self.config.t_max})",
            f"degree_weighted  {'yes' if self.degree_weighted else 'no'}",
            f"terminal_search  {'yes' if self.terminal else 'no'}",
            f"samples          {self.samples} (success cut {self.success_cut})",
            f"seed             {self.seed}",
        ]
        for L in sorted(self.thresholds):
            nbar = self.thresholds[L]
            wall = self.wall_seconds.get(L)
            wall_s = f"  [{wall:.1f}s]" if wall is not None else ""
            if nbar is None:
                lines.append(f"L={L}: no threshold found{wall_s}")
            else:
                lines.append(f"L={L}: n_bar={nbar} (c={nbar / L:.3f}){wall_s}")
        for pt in self.points:
            lines.append(
                f"  {pt.cls} n={pt.n} L={pt.L}: {pt.successes}/{pt.samples}"
                + (f" ({pt.discarded} discarded)" if pt.discarded else ""))
        return "\n".join(lines) + "\n"


def _sample_seeds(master: Stream, samples: int) -> list[tuple[int, int]]:
    return [(master.u64(), master.u64()) for _ in range(samples)]


def _run_sample(cls, n, king, config, graph_seed, run_seed, degree_weighted,
                terminal, rho, require_connected):
    sub = Stream(graph_seed)
    discarded = 0
    graph = make_graph(cls, n, sub.u64(), rho=rho)
    if require_connected:
        while not graph.is_connected():
            discarded += 1
            if discarded >= _MAX_CONNECT_ATTEMPTS:
                raise RuntimeError(
                    f"no connected {cls} sample with n={n} after "
                    f"{_MAX_CONNECT_ATTEMPTS} draws")
            graph = make_graph(cls, n, sub.u64(), rho=rho)
    _, report = run_pssa(graph, king, config, seed=run_seed,
                         degree_weighted=degree_weighted, terminal=terminal)
    return report.found, report.iterations, discarded


def embedding_probability(cls: str, n: int, L: int, samples: int,
                          config: ScheduleConfig, seed: int,
                          degree_weighted: bool = False, terminal: bool = True,
                          rho: float = 0.2, require_connected: bool = False,
                          workers: int = 1):
    """Fraction of `samples` generated inputs of the class at size n the
    pipeline embeds into the L x L hardware. Returns (PointResult,
    per-sample iteration counts)."""
    if samples < 1:
        raise ValueError("need at least one sample")
    king = KingGraph(L)
    seeds = _sample_seeds(Stream(seed), samples)

    def one(idx):
        gs, rs = seeds[idx]
        return _run_sample(cls, n, king, config, gs, rs, degree_weighted,
                           terminal, rho, require_connected)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, range(samples)))
    else:
        results = [one(idx) for idx in range(samples)]
    successes = sum(1 for found, _, _ in results if found)
    discarded = sum(d for _, _, d in results)
    iters = [it for _, it, _ in results]
    return PointResult(cls=cls, n=n, L=L, samples=samples,
                       successes=successes, discarded=discarded), iters


def embedding_threshold(cls: str, L: int, config: ScheduleConfig,
                        step: int = 1, seed: int = 0, samples: int = 20,
                        success_cut: int = 19, degree_weighted: bool = False,
                        terminal: bool = True, rho: float = 0.2,
                        require_connected: bool = False, workers: int = 1,
                        collect=None):
    """Smallest tested vertex count whose success count falls below the cut.
    Starts at n = L and increases by `step`; with step > 1 the bracket
    between the last passing and the first failing size is narrowed by
    bisection so the reported threshold is exact up to class rounding."""
    if step < 1:
        raise ValueError("step must be >= 1")
    master = Stream(seed)

    def measure(n_eff):
        point, _ = embedding_probability(
            cls, n_eff, L, samples, config, master.u64(),
            degree_weighted=degree_weighted, terminal=terminal, rho=rho,
            require_connected=require_connected, workers=workers)
        if collect is not None:
            collect.append(point)
        return point.successes >= success_cut

    n = L
    last_pass = None
    capacity = L * L
    while True:
        n_eff = class_round(cls, n)
        if n_eff > capacity:
            return None
        if not measure(n_eff):
            first_fail = n_eff
            break
        last_pass = n_eff
        n = n_eff + step
    # narrow the bracket when the sweep stepped over candidate sizes
    while last_pass is not None and first_fail - last_pass > 1:
        mid = class_round(cls, (last_pass + first_fail) // 2)
        if mid <= last_pass or mid >= first_fail:
            break
        if measure(mid):
            last_pass = mid
        else:
            first_fail = mid
    return first_fail


def threshold_sweep(cls: str, L_list, config: ScheduleConfig, step: int = 1,
                    seed: int = 0, samples: int = 20, success_cut: int = 19,
                    degree_weighted: bool = False, terminal: bool = True,
                    rho: float = 0.2, require_connected: bool = False,
                    workers: int = 1) -> BenchReport:
    """Thresholds for each hardware size in L_list; per-L failures are
    recorded and the sweep continues. The CSV is a pure function of the
    arguments (wall times go to the text report only)."""
    report = BenchReport(cls=cls, config=config, degree_weighted=degree_weighted,
                         terminal=terminal, seed=seed, samples=samples,
                         success_cut=success_cut)
    master = Stream(seed)
    for L in L_list:
        point_seed = master.u64()
        start = time.perf_counter()
        try:
            nbar = embedding_threshold(
                cls, L, config, step=step, seed=point_seed, samples=samples,
                success_cut=success_cut, degree_weighted=degree_weighted,
                terminal=terminal, rho=rho, require_connected=require_connected,
                workers=workers, collect=report.points)
        except (ValueError, RuntimeError):
            report.thresholds[L] = None
            report.wall_seconds[L] = time.perf_counter() - start
            continue
        report.thresholds[L] = nbar
        report.wall_seconds[L] = time.perf_counter() - start
    return report
