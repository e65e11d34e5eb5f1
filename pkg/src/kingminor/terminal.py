"""Post-annealing terminal phase: free up removable cells, then route the
still-missing input edges through the freed cells with breadth-first search.

A cell is removable when (p1) its same-chain neighbors form a single
king-connected cluster in the 8-ring, so deletion keeps the chain connected
and non-empty, and (p2) every input-edge representation it carries exists
elsewhere too, so the score cannot drop. The p1 test is a 256-entry table
lookup over the ring occupation pattern; the table is generated from the
connectivity definition rather than transcribed by hand.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .hardware import NEIGHBOR_OFFSETS
from .placement import FREE, Placement

_TABLE = None


def build_pattern_table() -> np.ndarray:
    """256 booleans indexed by the 8-bit ring occupation pattern (bit v set
    iff ring position v holds a same-chain cell, positions in the fixed
    N..NW order). An entry is deletable iff the set positions are non-empty
    and king-connected among themselves."""
    table = np.zeros(256, dtype=np.uint8)
    for pat in range(1, 256):
        members = [v for v in range(8) if pat >> v & 1]
        stack = [members[0]]
        seen = {members[0]}
        while stack:
            a = stack.pop()
            ar, ac = NEIGHBOR_OFFSETS[a]
            for b in members:
                if b in seen:
                    continue
                br, bc = NEIGHBOR_OFFSETS[b]
                if max(abs(ar - br), abs(ac - bc)) == 1:
                    seen.add(b)
                    stack.append(b)
        table[pat] = len(seen) == len(members)
    table.setflags(write=False)
    return table


def _table() -> np.ndarray:
    global _TABLE
    if _TABLE is None:
        _TABLE = build_pattern_table()
    return _TABLE


def is_deletable(placement: Placement, u) -> bool:
    """Removability test for cell u; decrements the affected representation
    counts exactly when the answer is True (the caller then releases the
    cell)."""
    x = placement.king.index(u)
    if placement.label[x] == FREE:
        raise ValueError(f"cell {u} is not assigned to any chain")
    adj_ptr, adj_v, adj_e, _, _, _ = placement.graph.csr()
    jbuf = np.empty(8, dtype=np.int32)
    ebuf = np.empty(8, dtype=np.int32)
    cbuf = np.empty(8, dtype=np.int64)
    row = np.full(placement.n, -1, dtype=np.int32)
    return bool(_kernels.deletable(
        placement.label, placement.king.nbr, placement.king.nbrn,
        placement.king.nbr8, adj_ptr, adj_v, adj_e, placement.ncount,
        _table(), x, jbuf, ebuf, cbuf, row))


def _drop_path_structure(placement: Placement) -> None:
    placement.paths_valid = False
    placement.nxt[:] = -1
    placement.prv[:] = -1
    placement.head[:] = -1
    placement.tail[:] = -1


def cleanup(placement: Placement):
    """Cyclic sweep over all cells releasing every removable one; stops after
    a full round without a removal. Leaves the embedded-edge count unchanged.
    Returns the free cells."""
    adj_ptr, adj_v, adj_e, _, _, _ = placement.graph.csr()
    _kernels.cleanup(placement.label, placement.size, placement.ncount,
                     placement.king.nbr, placement.king.nbrn,
                     placement.king.nbr8, adj_ptr, adj_v, adj_e, _table())
    _drop_path_structure(placement)
    placement._nbig[0] = int(np.sum(placement.size > 1))
    return placement.free_cells()


def bfs_link(placement: Placement, i: int, j: int) -> bool:
    """Try to represent input edge (i,j) by growing chain i along a shortest
    path of free cells to chain j. On failure nothing changes."""
    graph = placement.graph
    e = (i, j) if i < j else (j, i)
    try:
        eidx = graph.edges.index(e)
    except ValueError:
        raise ValueError(f"({i},{j}) is not an input edge")
    if placement.ncount[eidx] > 0:
        raise ValueError(f"chains {i} and {j} are already linked")
    adj_ptr, adj_v, adj_e, _, _, _ = graph.csr()
    ncells = placement.king.ncells
    color = np.empty(ncells, dtype=np.int8)
    parent = np.empty(ncells, dtype=np.int32)
    queue = np.empty(ncells, dtype=np.int32)
    ok = _kernels.bfs_link(placement.label, placement.size, placement.ncount,
                           placement._eemb, placement.king.nbr,
                           placement.king.nbrn, adj_ptr, adj_v, adj_e,
                           i, j, color, parent, queue)
    if ok:
        _drop_path_structure(placement)
        placement._nbig[0] = int(np.sum(placement.size > 1))
    return bool(ok)


def terminal_search(placement: Placement) -> Placement:
    """Cleanup, then scan vertices in ascending order attempting a BFS link
    for every incident edge that still lacks a hardware representation.
    The embedded-edge count never decreases. The final placement is returned
    even when some edges stay unrepresented."""
    adj_ptr, adj_v, adj_e, _, _, _ = placement.graph.csr()
    king = placement.king
    _kernels.cleanup(placement.label, placement.size, placement.ncount,
                     king.nbr, king.nbrn, king.nbr8, adj_ptr, adj_v, adj_e,
                     _table())
    ncells = king.ncells
    color = np.empty(ncells, dtype=np.int8)
    parent = np.empty(ncells, dtype=np.int32)
    queue = np.empty(ncells, dtype=np.int32)
    _kernels.terminal_link_all(placement.label, placement.size,
                               placement.ncount, placement._eemb,
                               king.nbr, king.nbrn, adj_ptr, adj_v, adj_e,
                               color, parent, queue)
    _drop_path_structure(placement)
    placement._nbig[0] = int(np.sum(placement.size > 1))
    return placement
