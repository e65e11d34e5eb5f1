"""kingminor: minor embedding of sparse graphs into King's-graph annealer hardware.

Find chains of hardware cells representing each input vertex so that every
input coupling lands on at least one hardware coupler: a swap-shift annealing
search over path-shaped chains, a terminal free-cell routing phase, an
independent embedding verifier, capacity bounds, and a benchmark harness for
embedding-threshold sweeps.
"""

from .baseline import (ConstructionError, GuidingPattern, clique_upper_bound,
                       complete_embedding, initial_placement,
                       min_hardware_vertices, min_supervertex_size,
                       tree_decomposition)
from .bench import (BenchReport, embedding_probability, embedding_threshold,
                    threshold_sweep)
from .graphs import (GraphFormatError, InputGraph, complete_graph,
                     gen_barabasi_albert, gen_erdos_renyi_connected,
                     gen_random_cubic, read_graph, write_graph)
from .hardware import KingGraph, edge_count
from .placement import (FREE, HardwareIsing, Placement, VerifyResult,
                        Violation, compile_ising, count_embedded_edges,
                        load_placement, verify)
from .pssa import (AnnealState, RunReport, ScheduleConfig, accept,
                   move_probabilities, propose_shift, propose_swap, run_pssa,
                   temperature)
from .rng import Stream
from .terminal import (bfs_link, build_pattern_table, cleanup, is_deletable,
                       terminal_search)

__version__ = "0.1.0"

__all__ = [
    "AnnealState", "BenchReport", "ConstructionError", "FREE",
    "GraphFormatError", "GuidingPattern", "HardwareIsing", "InputGraph",
    "KingGraph", "Placement", "RunReport", "ScheduleConfig", "Stream",
    "VerifyResult", "Violation", "accept", "bfs_link", "build_pattern_table",
    "cleanup", "clique_upper_bound", "compile_ising", "complete_embedding",
    "complete_graph", "count_embedded_edges", "edge_count",
    "embedding_probability", "embedding_threshold", "gen_barabasi_albert",
    "gen_erdos_renyi_connected", "gen_random_cubic", "initial_placement",
    "is_deletable", "load_placement", "min_hardware_vertices",
    "min_supervertex_size", "move_probabilities", "propose_shift",
    "propose_swap", "read_graph", "run_pssa", "temperature",
    "terminal_search", "threshold_sweep", "tree_decomposition", "verify",
    "write_graph",
]
