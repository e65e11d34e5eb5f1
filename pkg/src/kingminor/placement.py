"""Super-vertex placements, the embedding verifier, scoring, and Ising compilation.

A placement maps every input vertex i to a non-empty set of hardware cells
(its chain). During annealing each chain is additionally kept as a path so
that leaf moves are O(1); after the terminal phase chains may be arbitrary
connected sets. The verifier and the full-scan edge counter are deliberately
plain Python with no reliance on the incremental bookkeeping: they are the
oracles everything else is judged against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graphs import InputGraph
from .hardware import KingGraph

FREE = -1


class Placement:
    """Assignment of input vertices to disjoint chains of hardware cells.

    Mutable only through apply_shift / apply_swap (annealing moves) and the
    terminal-phase routines; those keep the per-edge representation counts
    and the embedded-edge total incrementally correct.
    """

    def __init__(self, king: KingGraph, graph: InputGraph, chains):
        if len(chains) != graph.n:
            raise ValueError(
                f"placement has {len(chains)} chains for a graph with "
                f"{graph.n} vertices")
        self.king = king
        self.graph = graph
        n, ncells = graph.n, king.ncells
        self.label = np.full(ncells, FREE, dtype=np.int32)
        self.nxt = np.full(ncells, -1, dtype=np.int32)
        self.prv = np.full(ncells, -1, dtype=np.int32)
        self.head = np.full(n, -1, dtype=np.int32)
        self.tail = np.full(n, -1, dtype=np.int32)
        self.size = np.zeros(n, dtype=np.int64)
        self.paths_valid = True
        for i, cells in enumerate(chains):
            if not cells:
                raise ValueError(f"chain {i} is empty")
            idxs = [king.index(c) for c in cells]
            for x in idxs:
                if self.label[x] != FREE:
                    raise ValueError(
                        f"cell {king.cell(x)} assigned to both vertex "
                        f"{self.label[x]} and vertex {i}")
                self.label[x] = i
            self.size[i] = len(idxs)
            self.head[i] = idxs[0]
            self.tail[i] = idxs[-1]
            ok = True
            for a, b in zip(idxs, idxs[1:]):
                if not king.adjacent(king.cell(a), king.cell(b)):
                    ok = False
                self.nxt[a] = b
                self.prv[b] = a
            if not ok:
                self.paths_valid = False
        self.ncount = np.zeros(graph.m, dtype=np.int64)
        self._eemb = np.zeros(1, dtype=np.int64)
        adj_ptr, adj_v, adj_e, _, _, _ = graph.csr()
        self._eemb[0] = _kernels.recount(self.label, king.nbr, king.nbrn,
                                         adj_ptr, adj_v, adj_e, self.ncount)
        self._nbig = np.array([int(np.sum(self.size > 1))], dtype=np.int64)

    # -- read access -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def embedded_count(self) -> int:
        return int(self._eemb[0])

    def chain(self, i: int) -> list[tuple[int, int]]:
        """Cells of chain i, in path order while paths are maintained,
        ascending cell index otherwise."""
        if self.paths_valid:
            out = []
            x = int(self.head[i])
            while x != -1:
                out.append(self.king.cell(x))
                x = int(self.nxt[x])
            return out
        return [self.king.cell(x) for x in np.flatnonzero(self.label == i)]

    def chains(self) -> list[list[tuple[int, int]]]:
        return [self.chain(i) for i in range(self.n)]

    def leaves(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        if not self.paths_valid:
            raise ValueError("chains are no longer path-shaped")
        return self.king.cell(int(self.head[i])), self.king.cell(int(self.tail[i]))

    def edge_reps(self) -> dict:
        """N(i,j) per input edge (i,j)."""
        return {e: int(c) for e, c in zip(self.graph.edges, self.ncount)}

    def free_cells(self) -> list[tuple[int, int]]:
        return [self.king.cell(x) for x in np.flatnonzero(self.label == FREE)]

    def check_paths(self) -> bool:
        """True iff every chain's stored sequence is a king path covering
        exactly its labeled cells."""
        seen = 0
        for i in range(self.n):
            cells = []
            x = int(self.head[i])
            prev = None
            while x != -1:
                if self.label[x] != i:
                    return False
                cell = self.king.cell(x)
                if prev is not None and not self.king.adjacent(prev, cell):
                    return False
                cells.append(cell)
                prev = cell
                x = int(self.nxt[x])
            if len(cells) != self.size[i] or len(set(cells)) != len(cells):
                return False
            seen += len(cells)
        return seen == int(np.sum(self.label != FREE))

    def copy(self) -> "Placement":
        dup = object.__new__(Placement)
        dup.king = self.king
        dup.graph = self.graph
        for name in ("label", "nxt", "prv", "head", "tail", "size", "ncount",
                     "_eemb", "_nbig"):
            setattr(dup, name, getattr(self, name).copy())
        dup.paths_valid = self.paths_valid
        return dup

    # -- annealing moves ----------------------------------------------------

    def apply_shift(self, u, i: int, j: int, v) -> int:
        """Move leaf cell u from chain i onto leaf v of chain j; returns the
        embedded-edge change. Proposal generators never emit invalid moves,
        so violations here mean a caller bug."""
        if not self.paths_valid:
            raise ValueError("shift requires path-form chains")
        ux, vx = self.king.index(u), self.king.index(v)
        if i == j:
            raise ValueError("shift within one chain")
        if self.label[ux] != i or self.label[vx] != j:
            raise ValueError("cells not owned by the stated chains")
        if ux != self.head[i] and ux != self.tail[i]:
            raise ValueError(f"{u} is not a leaf of chain {i}")
        if self.size[i] <= 1:
            raise ValueError(f"chain {i} would become empty")
        if vx != self.head[j] and vx != self.tail[j]:
            raise ValueError(f"{v} is not a leaf of chain {j}")
        if not self.king.adjacent(u, v):
            raise ValueError(f"{u} and {v} are not adjacent")
        adj_ptr, adj_v, adj_e, _, _, _ = self.graph.csr()
        row = np.full(self.n, -1, dtype=np.int32)
        return int(_kernels.apply_shift(
            self.label, self.nxt, self.prv, self.head, self.tail, self.size,
            self.ncount, self._eemb, self._nbig, adj_ptr, adj_v, adj_e,
            self.king.nbr, self.king.nbrn, ux, i, j, vx, row))

    def apply_swap(self, i: int, j: int) -> int:
        """Exchange chains i and j wholesale; returns the embedded-edge change."""
        if not self.paths_valid:
            raise ValueError("swap requires path-form chains")
        if i == j:
            raise ValueError("swap needs two distinct chains")
        if self.size[i] == 0 or self.size[j] == 0:
            raise ValueError("swap needs two non-empty chains")
        adj_ptr, adj_v, adj_e, _, _, _ = self.graph.csr()
        rows = np.full((2, self.n), -1, dtype=np.int32)
        return int(_kernels.apply_swap(
            self.label, self.nxt, self.prv, self.head, self.tail, self.size,
            self.ncount, self._eemb, adj_ptr, adj_v, adj_e,
            self.king.nbr, self.king.nbrn, i, j, rows[0], rows[1]))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "L": self.king.L,
            "n": self.n,
            "chains": [[[r, c] for r, c in self.chain(i)] for i in range(self.n)],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_json())


def load_placement(path, graph: InputGraph, king: KingGraph | None = None) -> Placement:
    with open(path, "r", encoding="ascii") as fh:
        doc = json.load(fh)
    L = int(doc["L"])
    if king is None:
        king = KingGraph(L)
    elif king.L != L:
        raise ValueError(f"placement file is for L={L}, expected L={king.L}")
    chains = [[(int(r), int(c)) for r, c in cells] for cells in doc["chains"]]
    if int(doc["n"]) != len(chains):
        raise ValueError("placement file header n disagrees with its chains")
    return Placement(king, graph, chains)


# ---------------------------------------------------------------------------
# Verifier
# ---------------------------------------------------------------------------


@dataclass
class Violation:
    kind: str          # "structure" | "empty-chain" | "disconnected-chain"
                       # | "overlap" | "missing-edge"
    detail: str


@dataclass
class VerifyResult:
    is_super_vertex_placement: bool
    is_minor_embedding: bool
    violations: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_minor_embedding


def verify(placement: Placement, graph: InputGraph, king: KingGraph) -> VerifyResult:
    """Full check of the embedding conditions: every chain non-empty and
    connected, chains pairwise disjoint with labels the exact inverse, and
    every input edge represented by at least one hardware edge. Collects all
    violations instead of stopping at the first."""
    violations = []
    n = graph.n
    label = placement.label

    if placement.n != n:
        violations.append(Violation(
            "structure", f"placement covers {placement.n} vertices, graph has {n}"))
    if placement.king.L != king.L:
        violations.append(Violation(
            "structure", f"placement is on L={placement.king.L}, expected L={king.L}"))

    # label <-> chain cross-consistency
    chain_cells = []
    owned = 0
    for i in range(min(placement.n, n)):
        cells = placement.chain(i)
        chain_cells.append(cells)
        owned += len(cells)
        if len(set(cells)) != len(cells):
            violations.append(Violation(
                "overlap", f"chain {i} lists a cell more than once"))
        for cell in cells:
            x = king.index(cell)
            if label[x] != i:
                violations.append(Violation(
                    "structure",
                    f"cell {cell} in chain {i} but labeled {int(label[x])}"))
    if owned != int(np.sum(label != FREE)):
        violations.append(Violation(
            "structure", "labeled cells and chain contents disagree"))

    structural_ok = not violations

    for i, cells in enumerate(chain_cells):
        if not cells:
            violations.append(Violation("empty-chain", f"chain {i} is empty"))
            continue
        if not _connected(cells, king):
            violations.append(Violation(
                "disconnected-chain", f"chain {i} is not connected"))

    # M3 in one pass over the hardware edges
    represented = set()
    for x, w in king.iter_edges():
        a, b = int(label[x]), int(label[w])
        if a != FREE and b != FREE and a != b:
            represented.add((a, b) if a < b else (b, a))
    missing = [e for e in graph.edges if e not in represented]
    for e in missing:
        violations.append(Violation(
            "missing-edge", f"input edge {e} has no hardware representation"))

    svp = structural_ok and not any(
        v.kind in ("empty-chain", "disconnected-chain", "overlap")
        for v in violations)
    return VerifyResult(
        is_super_vertex_placement=svp,
        is_minor_embedding=svp and not missing,
        violations=violations,
    )


def _connected(cells, king: KingGraph) -> bool:
    cellset = set(cells)
    stack = [cells[0]]
    seen = {cells[0]}
    while stack:
        cur = stack.pop()
        for nb in king.neighbors(cur):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cellset)


def count_embedded_edges(placement: Placement, graph: InputGraph | None = None) -> int:
    """Embedded-edge total by full scan of all hardware edges; the oracle the
    incremental counter is audited against."""
    graph = graph or placement.graph
    eset = graph.edge_set()
    label = placement.label
    king = placement.king
    represented = set()
    for x, w in king.iter_edges():
        a, b = int(label[x]), int(label[w])
        if a != FREE and b != FREE and a != b:
            e = (a, b) if a < b else (b, a)
            if e in eset:
                represented.add(e)
    return len(represented)


# ---------------------------------------------------------------------------
# Ising parameter compilation
# ---------------------------------------------------------------------------


@dataclass
class HardwareIsing:
    """Compiled hardware model under H = -sum J' s s' - sum h' s, so positive
    intra-chain couplings are ferromagnetic (align the chain's spins)."""
    L: int
    couplings: dict       # (cell_index_u, cell_index_w) with u < w -> strength
    fields: np.ndarray    # per hardware cell


def compile_ising(J: dict, h, placement: Placement, c_chain: float = 1.0) -> HardwareIsing:
    """Map problem couplings J and fields h onto the hardware through a
    verified placement: each input coupling goes on exactly one hardware
    coupler between the two chains (the lexicographically smallest), chain
    path edges get ferromagnetic strength c_chain * (sum_j |J_ij| + |h_i|),
    and each field is split evenly across its chain's cells."""
    if c_chain <= 0:
        raise ValueError("c_chain must be positive")
    h = np.asarray(h, dtype=np.float64)
    n = h.shape[0]
    jmap = {}
    for (i, j), val in J.items():
        if i == j:
            raise ValueError(f"coupling ({i},{j}) is a self-interaction")
        key = (i, j) if i < j else (j, i)
        if key in jmap and jmap[key] != val:
            raise ValueError(f"conflicting values for coupling {key}")
        jmap[key] = float(val)
    support = [e for e, v in sorted(jmap.items()) if v != 0.0]
    induced = InputGraph(n, support)
    king = placement.king
    result = verify(placement, induced, king)
    if not result.is_minor_embedding:
        raise ValueError(
            "placement is not a minor embedding of the coupling support: "
            + "; ".join(v.detail for v in result.violations[:3]))

    couplings: dict = {}
    label = placement.label

    # (i) one coupler per input edge, lexicographically smallest cell pair
    for (i, j) in support:
        best = None
        for cell in placement.chain(i):
            x = king.index(cell)
            for q in range(king.nbrn[x]):
                w = int(king.nbr[x, q])
                if label[w] == j:
                    key = (x, w) if x < w else (w, x)
                    if best is None or key < best:
                        best = key
        couplings[best] = jmap[(i, j)]

    # (ii) ferromagnetic chain couplings along each chain's path edges
    # (spanning-tree edges when a chain is no longer path-shaped)
    strengths = np.zeros(n)
    for i in range(n):
        s = abs(h[i])
        for j in induced.adjacency[i]:
            s += abs(jmap[(i, j) if i < j else (j, i)])
        strengths[i] = c_chain * s
    for i in range(n):
        cells = placement.chain(i)
        if len(cells) == 1:
            continue
        if placement.paths_valid:
            pairs = zip(cells, cells[1:])
        else:
            pairs = _spanning_tree_edges(cells, king)
        for a, b in pairs:
            x, w = king.index(a), king.index(b)
            key = (x, w) if x < w else (w, x)
            couplings[key] = strengths[i]

    # (iii) fields split evenly; the last share absorbs the rounding so the
    # running sum reproduces h_i exactly
    fields = np.zeros(king.ncells)
    for i in range(n):
        cells = placement.chain(i)
        k = len(cells)
        share = h[i] / k
        running = 0.0
        for cell in cells[:-1]:
            fields[king.index(cell)] = share
            running += share
        fields[king.index(cells[-1])] = h[i] - running
    return HardwareIsing(L=king.L, couplings=couplings, fields=fields)


def _spanning_tree_edges(cells, king: KingGraph):
    cellset = set(cells)
    root = min(cells)
    seen = {root}
    queue = [root]
    edges = []
    while queue:
        cur = queue.pop(0)
        for nb in king.neighbors(cur):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                edges.append((cur, nb))
                queue.append(nb)
    return edges
