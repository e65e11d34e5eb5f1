"""Input graphs: data model, random generators, and file I/O.

Graphs are simple and undirected, vertices labeled 0..n-1. The three
generators cover the benchmark families: random cubic graphs (pairing model
with restart on collision), Barabasi-Albert preferential attachment grown
from a connected seed clique, and a connected Erdos-Renyi variant grown from
a uniform random recursive tree. All generators are pure functions of
(parameters, seed).
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .rng import Stream


class GraphFormatError(ValueError):
    """Malformed graph file; message carries the offending line number."""


class InputGraph:
    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        canon = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            a, b = (i, j) if i < j else (j, i)
            if (a, b) in canon:
                raise ValueError(f"duplicate edge ({a},{b})")
            canon.add((a, b))
        self.edges = sorted(canon)
        self.adjacency = [[] for _ in range(self.n)]
        for a, b in self.edges:
            self.adjacency[a].append(b)
            self.adjacency[b].append(a)
        for lst in self.adjacency:
            lst.sort()
        self.degree = [len(lst) for lst in self.adjacency]
        self._csr = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> set:
        return set(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def csr(self):
        """(adj_ptr, adj_v, adj_e, edge_u, edge_v, deg) numpy views for the
        compiled kernels. Edge ids index `self.edges`; neighbor lists are
        ascending."""
        if self._csr is None:
            n, m = self.n, self.m
            eid = {e: k for k, e in enumerate(self.edges)}
            adj_ptr = np.zeros(n + 1, dtype=np.int64)
            adj_v = np.zeros(2 * m, dtype=np.int32)
            adj_e = np.zeros(2 * m, dtype=np.int32)
            pos = 0
            for i in range(n):
                for j in self.adjacency[i]:
                    adj_v[pos] = j
                    adj_e[pos] = eid[(i, j) if i < j else (j, i)]
                    pos += 1
                adj_ptr[i + 1] = pos
            edge_u = np.array([a for a, _ in self.edges], dtype=np.int32)
            edge_v = np.array([b for _, b in self.edges], dtype=np.int32)
            deg = np.array(self.degree, dtype=np.int64)
            for arr in (adj_ptr, adj_v, adj_e, edge_u, edge_v, deg):
                arr.setflags(write=False)
            self._csr = (adj_ptr, adj_v, adj_e, edge_u, edge_v, deg)
        return self._csr

    def __eq__(self, other):
        return (isinstance(other, InputGraph)
                and self.n == other.n and self.edges == other.edges)

    def __repr__(self):
        return f"InputGraph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> InputGraph:
    return InputGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

_STUCK_PROBE = 64


def gen_random_cubic(n: int, seed: int) -> InputGraph:
    """Uniform-ish random 3-regular graph via the pairing model: three stubs
    per vertex, paired uniformly at random; a draw producing a loop or a
    multi-edge is rejected, and the whole round restarts when no suitable
    pair remains. Connectedness is NOT enforced."""
    if n < 4 or n % 2 != 0:
        raise ValueError("cubic graphs need an even vertex count n >= 4")
    stream = Stream(seed)
    while True:
        edges = _pairing_round(n, stream)
        if edges is not None:
            return InputGraph(n, edges)


def _pairing_round(n, stream):
    stubs = [v for v in range(n) for _ in range(3)]
    eset = set()
    failures = 0
    while stubs:
        k = len(stubs)
        i1 = stream.below(k)
        i2 = stream.below(k - 1)
        if i2 >= i1:
            i2 += 1
        u, v = stubs[i1], stubs[i2]
        a, b = (u, v) if u < v else (v, u)
        if u == v or (a, b) in eset:
            failures += 1
            if failures >= _STUCK_PROBE and not _suitable_pair_exists(stubs, eset):
                return None
            continue
        failures = 0
        eset.add((a, b))
        for idx in sorted((i1, i2), reverse=True):
            stubs[idx] = stubs[-1]
            stubs.pop()
    return eset


def _suitable_pair_exists(stubs, eset):
    distinct = sorted(set(stubs))
    for x, u in enumerate(distinct):
        for v in distinct[x + 1:]:
            if (u, v) not in eset:
                return True
    return False


def gen_barabasi_albert(n: int, m0: int = 2, m: int = 2, seed: int = 0) -> InputGraph:
    """Preferential attachment: a complete seed on m0 vertices, then each new
    vertex attaches to m distinct existing vertices with probability
    proportional to current degree. Always connected."""
    if not (2 <= m <= m0 <= n):
        raise ValueError("need 2 <= m <= m0 <= n")
    stream = Stream(seed)
    edges = [(i, j) for i in range(m0) for j in range(i + 1, m0)]
    # one entry per degree unit; uniform draws from it are degree-weighted
    attach = [v for v in range(m0) for _ in range(m0 - 1)]
    for v in range(m0, n):
        targets = set()
        while len(targets) < m:
            targets.add(attach[stream.below(len(attach))])
        for t in sorted(targets):
            edges.append((t, v))
            attach.append(t)
        attach.extend([v] * m)
    return InputGraph(n, edges)


def gen_erdos_renyi_connected(n: int, rho: float, seed: int = 0) -> InputGraph:
    """Connected Erdos-Renyi variant: a uniform random recursive tree on n
    vertices, then edges drawn uniformly from the unoccupied pairs until the
    edge count reaches max(n-1, round(rho * n(n-1)/2)) (round half up)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not (0.0 < rho <= 1.0):
        raise ValueError("edge density rho must be in (0, 1]")
    stream = Stream(seed)
    total_pairs = n * (n - 1) // 2
    target = max(n - 1, int(rho * total_pairs + 0.5))
    eset = set()
    for v in range(1, n):
        p = stream.below(v)
        eset.add((p, v))
    remaining = target - len(eset)
    if remaining > 0:
        if target <= 0.4 * total_pairs:
            from . import _kernels
            while remaining:
                batch = np.empty((remaining + remaining // 2 + 16, 2),
                                 dtype=np.int64)
                _kernels.rng_pair_fill(stream.state, n, batch)
                for a, b in batch:
                    e = (int(a), int(b))
                    if e not in eset:
                        eset.add(e)
                        remaining -= 1
                        if remaining == 0:
                            break
        else:
            free = [(i, j) for i in range(n) for j in range(i + 1, n)
                    if (i, j) not in eset]
            # partial Fisher-Yates: uniform `remaining`-subset in draw order
            for k in range(remaining):
                r = k + stream.below(len(free) - k)
                free[k], free[r] = free[r], free[k]
                eset.add(free[k])
    return InputGraph(n, eset)


# ---------------------------------------------------------------------------
# File format: line-oriented text, `p <n> <m>` header then `e <i> <j>` lines
# with 0-based endpoints. `c ...` lines are comments.
# ---------------------------------------------------------------------------


def write_graph(graph: InputGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"p {graph.n} {graph.m}\n")
        for a, b in graph.edges:
            fh.write(f"e {a} {b}\n")


def read_graph(path) -> InputGraph:
    n = None
    declared_m = None
    edges = []
    eset = set()
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            fields = line.split()
            if fields[0] == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate header")
                if len(fields) != 3:
                    raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
                try:
                    n, declared_m = int(fields[1]), int(fields[2])
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
                if n < 1 or declared_m < 0:
                    raise GraphFormatError(f"line {lineno}: invalid header values")
            elif fields[0] == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                if len(fields) != 3:
                    raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
                try:
                    i, j = int(fields[1]), int(fields[2])
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
                if not (0 <= i < n and 0 <= j < n):
                    raise GraphFormatError(
                        f"line {lineno}: vertex index out of range in {line!r}")
                if i == j:
                    raise GraphFormatError(f"line {lineno}: self-loop at {i}")
                e = (i, j) if i < j else (j, i)
                if e in eset:
                    raise GraphFormatError(f"line {lineno}: duplicate edge ({i},{j})")
                eset.add(e)
                edges.append(e)
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise GraphFormatError("line 1: missing 'p <n> <m>' header")
    if len(edges) != declared_m:
        raise GraphFormatError(
            f"end of file: header declares {declared_m} edges, found {len(edges)}")
    return InputGraph(n, edges)
