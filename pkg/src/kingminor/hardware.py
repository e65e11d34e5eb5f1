"""King's-graph hardware model.

An L x L grid of cells where two distinct cells are adjacent iff a chess king
could move between them (Chebyshev distance 1). Cells are addressed either as
(row, col) pairs or as flat row-major indices r*L + c.
"""

from __future__ import annotations

import numpy as np

# Fixed clockwise neighbor order; all traversals in the repo use it so runs
# are reproducible given a seed.
NEIGHBOR_OFFSETS = (
    (-1, 0),   # N
    (-1, 1),   # NE
    (0, 1),    # E
    (1, 1),    # SE
    (1, 0),    # S
    (1, -1),   # SW
    (0, -1),   # W
    (-1, -1),  # NW
)


def edge_count(L: int) -> int:
    """Closed-form number of hardware edges, 2(L-1)(2L-1)."""
    if L < 1:
        raise ValueError("L must be >= 1")
    return 2 * (L - 1) * (2 * L - 1)


class KingGraph:
    """Immutable L x L king-move hardware grid with precomputed neighbor tables."""

    def __init__(self, L: int):
        if L < 1:
            raise ValueError("L must be >= 1")
        self.L = L
        self.ncells = L * L
        # nbr8: position-aligned (N..NW), -1 where the move leaves the grid.
        # nbr: the same neighbors compacted left, with nbrn valid entries.
        nbr8 = np.full((self.ncells, 8), -1, dtype=np.int32)
        nbr = np.full((self.ncells, 8), -1, dtype=np.int32)
        nbrn = np.zeros(self.ncells, dtype=np.int32)
        for r in range(L):
            for c in range(L):
                x = r * L + c
                k = 0
                for pos, (dr, dc) in enumerate(NEIGHBOR_OFFSETS):
                    rr, cc = r + dr, c + dc
                    if 0 <= rr < L and 0 <= cc < L:
                        w = rr * L + cc
                        nbr8[x, pos] = w
                        nbr[x, k] = w
                        k += 1
                nbrn[x] = k
        nbr8.setflags(write=False)
        nbr.setflags(write=False)
        nbrn.setflags(write=False)
        self.nbr8 = nbr8
        self.nbr = nbr
        self.nbrn = nbrn

    def index(self, cell: tuple[int, int]) -> int:
        r, c = cell
        if not (0 <= r < self.L and 0 <= c < self.L):
            raise ValueError(f"cell {cell} outside {self.L}x{self.L} grid")
        return r * self.L + c

    def cell(self, idx: int) -> tuple[int, int]:
        return divmod(int(idx), self.L)

    def neighbors(self, cell: tuple[int, int]) -> list[tuple[int, int]]:
        """In-grid king neighbors of `cell` in the fixed clockwise order
        N, NE, E, SE, S, SW, W, NW."""
        x = self.index(cell)
        return [self.cell(self.nbr[x, q]) for q in range(self.nbrn[x])]

    def adjacent(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return a != b and max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1

    def iter_edges(self):
        """All hardware edges as flat-index pairs (x, w) with x < w."""
        for x in range(self.ncells):
            for q in range(self.nbrn[x]):
                w = int(self.nbr[x, q])
                if w > x:
                    yield x, w

    @property
    def edge_count(self) -> int:
        return edge_count(self.L)

    def __repr__(self) -> str:
        return f"KingGraph(L={self.L})"
