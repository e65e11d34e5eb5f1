"""Swap-shift annealing engine.

The search walks over placements whose chains are paths, proposing either a
swap of two whole chains or a shift of one leaf cell between adjacent chains,
and accepts with the Metropolis rule exp(dE/T) > r on the embedded-edge
score. Shift proposals are biased along the baseline guiding pattern early in
the run and may be direction-reversed by the degree-weighted rule. The hot
loop runs compiled; this module owns configuration, validation, reporting,
and thin wrappers over the proposal kernels for direct use in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .baseline import GuidingPattern, initial_placement
from .graphs import InputGraph
from .hardware import KingGraph
from .placement import Placement, verify
from .rng import Stream

FAMILIES = {"s1": 1, "s2": 2, "s3": 3, "s4": 4}
SINGLE_PHASE = {"s2", "s4"}

# Default schedule constants: start temperatures of the two phases, the
# exponential cooling factor applied every 1000 steps, and the endpoints of
# the linear shift/away-shift probability schedules.
DEFAULT_T0 = 60.315
DEFAULT_T_HALF = 33.435
DEFAULT_BETA = 0.9999
DEFAULT_PS = (1.0, 0.0)
DEFAULT_PA = (0.095, 0.487)
DEFAULT_T_MAX = 70_000_000


@dataclass(frozen=True)
class ScheduleConfig:
    """Annealing schedule: temperature family plus move-probability endpoints.

    The default temperature constants were tuned against a score counting
    100 points per embedded edge; `score_scale` carries that unit into the
    Metropolis test (the engine accepts on exp(score_scale * dE / T)).
    Exponential families apply `beta` every t_max/70000 steps, i.e. every
    1000 steps at the default budget, so the cooling profile does not depend
    on the budget."""
    family: str = "s3"
    t_max: int = DEFAULT_T_MAX
    T0: float = DEFAULT_T0
    T_half: float = DEFAULT_T_HALF
    beta: float = DEFAULT_BETA
    ps_start: float = DEFAULT_PS[0]
    ps_end: float = DEFAULT_PS[1]
    pa_start: float = DEFAULT_PA[0]
    pa_end: float = DEFAULT_PA[1]
    score_scale: float = 100.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown schedule family {self.family!r}")
        if self.t_max != 0 and self.t_max < 2:
            raise ValueError("t_max must be 0 (skip annealing) or >= 2")
        if not (0.0 < self.beta < 1.0):
            raise ValueError("cooling factor beta must be in (0, 1)")
        for p in (self.ps_start, self.ps_end, self.pa_start, self.pa_end):
            if not (0.0 <= p <= 1.0):
                raise ValueError("move probabilities must be in [0, 1]")
        if self.T0 < 0 or self.T_half < 0:
            raise ValueError("temperatures must be non-negative")
        if self.score_scale <= 0:
            raise ValueError("score_scale must be positive")

    @property
    def family_code(self) -> int:
        return FAMILIES[self.family]

    @property
    def annealing_iterations(self) -> int:
        """Loop length: single-phase families hand over to the terminal
        search at t_max/2."""
        return self.t_max // 2 if self.family in SINGLE_PHASE else self.t_max

    def with_t_max(self, t_max: int) -> "ScheduleConfig":
        return replace(self, t_max=t_max)


def temperature(t: int, config: ScheduleConfig) -> float:
    """T(t). Linear families cool to zero within each phase; exponential
    families multiply by beta every 1000 steps and restart the second phase
    at T_half. Single-phase families follow the first-phase curve (the run
    never evaluates them past t_max/2)."""
    if config.t_max == 0:
        raise ValueError("schedule undefined for t_max=0 (annealing skipped)")
    if not (0 <= t <= config.t_max):
        raise ValueError(f"t={t} outside [0, {config.t_max}]")
    return float(_kernels.temperature(t, config.family_code, config.t_max,
                                      config.T0, config.T_half, config.beta))


def move_probabilities(t: int, config: ScheduleConfig) -> tuple[float, float]:
    """(p_shift, p_away) at step t: linear interpolation over [0, t_max]."""
    if config.t_max == 0:
        raise ValueError("schedule undefined for t_max=0 (annealing skipped)")
    if not (0 <= t <= config.t_max):
        raise ValueError(f"t={t} outside [0, {config.t_max}]")
    ps, pa = _kernels.move_probabilities(t, config.t_max,
                                         config.ps_start, config.ps_end,
                                         config.pa_start, config.pa_end)
    return float(ps), float(pa)


def accept(delta_e: int, T: float, rng: Stream) -> bool:
    """Metropolis test exp(dE/T) > r, r uniform in [0,1). At T=0 this keeps
    non-worsening moves and rejects the rest."""
    return bool(_kernels.accept(rng.state, delta_e, T))


@dataclass
class AnnealState:
    """One run's search state: current and best placements, step counter,
    generator stream, and the guiding pattern the shifts are biased along."""
    placement: Placement
    best: Placement
    t: int
    rng: Stream
    config: ScheduleConfig
    guide: np.ndarray
    degree_weighted: bool = False


def propose_swap(state: AnnealState, rng: Stream | None = None):
    """Draw a swap proposal (i, j) or None for a skip. The partner chain j is
    found cell-first: a uniform cell of the chain across a uniform input
    edge, then a uniform in-grid neighbor of that cell."""
    rng = rng or state.rng
    p = state.placement
    if p.graph.m == 0:
        raise ValueError("swap proposals need a non-empty input edge set")
    _, _, _, edge_u, edge_v, _ = p.graph.csr()
    i, j = _kernels.propose_swap(rng.state, edge_u, edge_v, p.graph.m,
                                 p.label, p.head, p.nxt, p.size,
                                 p.king.nbr, p.king.nbrn)
    return None if i == -1 else (int(i), int(j))


def propose_shift(state: AnnealState, rng: Stream | None = None,
                  degree_weighted: bool | None = None):
    """Draw a shift proposal (u, i, j, v) or None for a skip: u a uniform
    leaf of a uniform chain with more than one cell, v a uniform adjacent
    leaf of another chain, restricted to the same guiding-pattern chain
    unless the away coin (probability p_a(t)) fires."""
    rng = rng or state.rng
    if degree_weighted is None:
        degree_weighted = state.degree_weighted
    p = state.placement
    _, pa = move_probabilities(state.t, state.config)
    _, _, _, _, _, deg = p.graph.csr()
    cand = np.empty(8, dtype=np.int32)
    u, i, j, v = _kernels.propose_shift(
        rng.state, p.label, p.head, p.tail, p.size, p._nbig, state.guide,
        p.king.nbr, p.king.nbrn, deg, p.graph.n, pa, degree_weighted, cand)
    if u == -1:
        return None
    return p.king.cell(int(u)), int(i), int(j), p.king.cell(int(v))


@dataclass
class RunReport:
    found: bool
    embedded: int
    input_edges: int
    iterations: int
    n: int
    L: int
    seed: int
    schedule: str
    t_max: int
    degree_weighted: bool
    terminal: bool

    def to_text(self) -> str:
        lines = [
            f"found            {'yes' if self.found else 'no'}",
            f"embedded_edges   {self.embedded}/{self.input_edges}",
            f"iterations       {self.iterations}",
            f"n                {self.n}",
            f"L                {self.L}",
            f"schedule         {self.schedule}",
            f"t_max            {self.t_max}",
            f"seed             {self.seed}",
            f"degree_weighted  {'yes' if self.degree_weighted else 'no'}",
            f"terminal_search  {'yes' if self.terminal else 'no'}",
        ]
        return "\n".join(lines) + "\n"


def run_pssa(graph: InputGraph, king: KingGraph,
             config: ScheduleConfig | None = None, seed: int = 0,
             degree_weighted: bool = False, terminal: bool = True,
             audit_stride: int = 0):
    """Full embedding attempt: baseline initial placement, swap-shift
    annealing until the score reaches |E(G)| or the schedule runs out, then
    (optionally) the terminal free-cell search. Returns (placement, report);
    report.found is certified by the verifier, never by the engine's own
    bookkeeping. Deterministic given (graph, config, seed, flags).

    audit_stride > 0 recomputes the score from scratch every that many
    iterations and aborts on any disagreement with the incremental counts
    (used by the test suite)."""
    from .terminal import terminal_search

    config = config or ScheduleConfig()
    L = king.L
    if graph.n > king.ncells:
        raise ValueError(f"{graph.n} vertices exceed {king.ncells} hardware cells")
    if graph.m > king.edge_count:
        raise ValueError(f"{graph.m} input edges exceed "
                         f"{king.edge_count} hardware couplers")
    placement = initial_placement(graph, L)
    m = graph.m
    iterations = 0
    if placement.embedded_count < m and config.t_max > 0:
        guide = GuidingPattern.build(L).guide
        stream = Stream(seed)
        adj_ptr, adj_v, adj_e, edge_u, edge_v, deg = graph.csr()
        p = placement
        b_label, b_nxt, b_prv = p.label.copy(), p.nxt.copy(), p.prv.copy()
        b_head, b_tail, b_size = p.head.copy(), p.tail.copy(), p.size.copy()
        best_e = p._eemb.copy()
        audit_ncount = np.zeros(m, dtype=np.int64)
        iterations, status = _kernels.anneal(
            king.nbr, king.nbrn, guide,
            adj_ptr, adj_v, adj_e, edge_u, edge_v, deg, m,
            p.label, p.nxt, p.prv, p.head, p.tail, p.size,
            p.ncount, p._eemb, p._nbig,
            b_label, b_nxt, b_prv, b_head, b_tail, b_size, best_e,
            config.family_code, config.annealing_iterations, config.t_max,
            config.T0, config.T_half, config.beta,
            config.ps_start, config.ps_end, config.pa_start, config.pa_end,
            degree_weighted, config.score_scale, audit_stride, audit_ncount,
            stream.state)
        if status == _kernels.STATUS_AUDIT_FAIL:
            raise AssertionError(
                f"incremental score diverged from full recompute at t={iterations}")
        # continue from the best placement seen
        p.label[:] = b_label
        p.nxt[:] = b_nxt
        p.prv[:] = b_prv
        p.head[:] = b_head
        p.tail[:] = b_tail
        p.size[:] = b_size
        p._eemb[0] = _kernels.recount(p.label, king.nbr, king.nbrn,
                                      adj_ptr, adj_v, adj_e, p.ncount)
        p._nbig[0] = int(np.sum(p.size > 1))
    if terminal and placement.embedded_count < m:
        terminal_search(placement)
    certified = verify(placement, graph, king)
    found = certified.is_minor_embedding
    if found != (placement.embedded_count == m):
        raise RuntimeError("score bookkeeping disagrees with the verifier")
    report = RunReport(
        found=found, embedded=placement.embedded_count, input_edges=m,
        iterations=int(iterations), n=graph.n, L=L, seed=seed,
        schedule=config.family, t_max=config.t_max,
        degree_weighted=degree_weighted, terminal=terminal)
    return placement, report
