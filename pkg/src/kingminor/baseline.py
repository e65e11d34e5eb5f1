"""Baseline complete-graph pattern, initial placements, and capacity bounds.

The pattern hosting K_{L+1} on the L x L grid is built as a wire weave: L
wires start one per row and move column by column through an odd-even
transposition network sorting toward the reversed order, so every pair of
wires either crosses (through opposite diagonals of a 2x2 block, which king
adjacency supports without sharing cells) or runs track-adjacent; the last
column is the (L+1)-th chain and touches every wire. Each chain is a
monotone-in-column path, i.e. a diagonal that reflects at its sorted track.
The constructor never trusts this reasoning: it verifies the result and
fails loudly if the pattern is invalid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import InputGraph, complete_graph
from .hardware import KingGraph
from .placement import Placement, verify


class ConstructionError(RuntimeError):
    """A constructor with a self-verification contract produced an invalid result."""


def _wire_chains(L: int) -> list[list[tuple[int, int]]]:
    col = [(r, L - 1) for r in range(L)]
    perm = list(range(L))        # perm[track] = wire
    track = list(range(L))       # track[wire]
    cells = [[(w, 0)] for w in range(L)]
    for s in range(L - 2):
        t = s % 2
        while t + 1 < L:
            a, b = perm[t], perm[t + 1]
            if a < b:
                perm[t], perm[t + 1] = b, a
                track[a], track[b] = t + 1, t
            t += 2
        for w in range(L):
            cells[w].append((track[w], s + 1))
    return cells + [col]


def complete_embedding(L: int) -> Placement:
    """A self-verified placement of the complete graph on L+1 vertices into
    the L x L king grid, covering every cell with path-shaped chains."""
    if L < 2:
        raise ValueError("complete embedding needs L >= 2")
    king = KingGraph(L)
    chains = _wire_chains(L)
    placement = Placement(king, complete_graph(L + 1), chains)
    result = verify(placement, placement.graph, king)
    if not result.is_minor_embedding:
        raise ConstructionError(
            f"baseline pattern invalid for L={L}: "
            + "; ".join(v.detail for v in result.violations[:3]))
    if placement.free_cells():
        raise ConstructionError(f"baseline pattern leaves cells free for L={L}")
    if not placement.check_paths():
        raise ConstructionError(f"baseline chains are not paths for L={L}")
    return placement


_PATTERN_CACHE: dict = {}


@dataclass
class GuidingPattern:
    """The baseline chains plus the per-cell label saying which baseline
    chain each hardware cell belongs to (used to bias shift moves)."""
    king: KingGraph
    chains: list
    guide: np.ndarray

    @classmethod
    def build(cls, L: int) -> "GuidingPattern":
        """Built from the verified complete-graph placement and cached per L
        (immutable, so sharing across runs and workers is safe)."""
        cached = _PATTERN_CACHE.get(L)
        if cached is not None:
            return cached
        placement = complete_embedding(L)
        king = placement.king
        guide = np.full(king.ncells, -1, dtype=np.int32)
        chains = placement.chains()
        for g, cells in enumerate(chains):
            for cell in cells:
                guide[king.index(cell)] = g
        if np.any(guide < 0):
            raise ConstructionError("guiding pattern does not cover the grid")
        guide.setflags(write=False)
        pattern = cls(king=king, chains=chains, guide=guide)
        _PATTERN_CACHE[L] = pattern
        return pattern


def initial_placement(graph: InputGraph, L: int) -> Placement:
    """Starting placement for the annealing search. For n <= L+1 the n
    largest baseline chains are used as-is (already a minor embedding of any
    n-vertex graph); for larger n the baseline paths are cut into n
    contiguous segments, counts allocated proportionally to chain length by
    largest-remainder rounding."""
    n = graph.n
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    if n > L * L:
        raise ValueError(f"{n} vertices exceed the {L}x{L} hardware capacity")
    king = KingGraph(L)
    if L == 1:
        return Placement(king, graph, [[(0, 0)]])
    base = _wire_chains(L)
    if n <= L + 1:
        order = sorted(range(len(base)), key=lambda g: (-len(base[g]), g))
        chosen = sorted(order[:n])
        return Placement(king, graph, [base[g] for g in chosen])
    counts = _allocate_segments([len(c) for c in base], n)
    chains = []
    for g, cells in enumerate(base):
        chains.extend(_split_contiguous(cells, counts[g]))
    return Placement(king, graph, chains)


def _allocate_segments(lengths: list[int], n: int) -> list[int]:
    """Largest-remainder apportionment of n segments over the baseline
    chains, proportional to length, at least 1 and at most len(chain) each."""
    total = sum(lengths)
    quotas = [n * ln / total for ln in lengths]
    counts = [min(max(int(q), 1), ln) for q, ln in zip(quotas, lengths)]
    leftover = n - sum(counts)
    remainders = sorted(range(len(lengths)),
                        key=lambda g: (-(quotas[g] - int(quotas[g])), g))
    while leftover > 0:
        for g in remainders:
            if leftover == 0:
                break
            if counts[g] < lengths[g]:
                counts[g] += 1
                leftover -= 1
    while leftover < 0:
        for g in reversed(remainders):
            if leftover == 0:
                break
            if counts[g] > 1:
                counts[g] -= 1
                leftover += 1
    return counts


def _split_contiguous(cells, k: int):
    base, rem = divmod(len(cells), k)
    out, at = [], 0
    for piece in range(k):
        ln = base + (1 if piece < rem else 0)
        out.append(cells[at:at + ln])
        at += ln
    return out


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------


def clique_upper_bound(L: int) -> int:
    """No complete graph on more than 2L vertices is a minor of the L x L
    king grid (its treewidth is at most 2L-1)."""
    if L < 1:
        raise ValueError("L must be >= 1")
    return 2 * L


@dataclass
class TreeDecomposition:
    bags: list          # list of cell lists
    tree_edges: list    # path over bag indices
    width: int

    def validate(self, king: KingGraph) -> None:
        """T1: bags cover all cells. T2: every hardware edge inside some bag.
        T3: bags containing any one cell form a contiguous run of the path."""
        allcells = set()
        for bag in self.bags:
            allcells.update(bag)
        if allcells != {(r, c) for r in range(king.L) for c in range(king.L)}:
            raise ConstructionError("T1 violated: bags do not cover the grid")
        bagsets = [set(b) for b in self.bags]
        for x, w in king.iter_edges():
            a, b = king.cell(x), king.cell(w)
            if not any(a in s and b in s for s in bagsets):
                raise ConstructionError(f"T2 violated: edge {a}-{b} in no bag")
        for cell in allcells:
            idxs = [k for k, s in enumerate(bagsets) if cell in s]
            if idxs != list(range(min(idxs), max(idxs) + 1)):
                raise ConstructionError(f"T3 violated at cell {cell}")
        if self.width != max(len(b) for b in self.bags) - 1:
            raise ConstructionError("recorded width is wrong")


def tree_decomposition(L: int) -> TreeDecomposition:
    """Path decomposition with bags of two adjacent cell columns each;
    width 2L-1, which bounds the hardware treewidth and hence the largest
    embeddable complete graph. Validated at construction."""
    if L < 2:
        raise ValueError("tree decomposition needs L >= 2")
    bags = []
    for k in range(L - 1):
        bags.append(sorted((r, c) for r in range(L) for c in (k, k + 1)))
    td = TreeDecomposition(
        bags=bags,
        tree_edges=[(k, k + 1) for k in range(L - 2)],
        width=2 * L - 1,
    )
    td.validate(KingGraph(L))
    return td


def min_hardware_vertices(N: int, d: int) -> int:
    """Least number of degree-<=d hardware vertices that can host a complete
    minor on N vertices: ceil(N(N-3)/(d-2))."""
    _check_bound_args(N, d)
    return math.ceil(N * (N - 3) / (d - 2))


def min_supervertex_size(N: int, d: int) -> int:
    """Least chain size in any complete-graph minor on degree-<=d hardware:
    ceil((N-3)/(d-2))."""
    _check_bound_args(N, d)
    return math.ceil((N - 3) / (d - 2))


def _check_bound_args(N: int, d: int) -> None:
    if N < 4:
        raise ValueError("bound needs N >= 4")
    if d <= 2:
        raise ValueError("degree bound d must exceed 2 (paths and cycles host no cliques)")
