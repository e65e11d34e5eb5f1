"""Compiled inner loops: RNG, incremental move application, annealing, terminal phase.

Everything here operates on plain numpy arrays so the hot path stays inside
numba. The Python-facing modules own validation and wrap these kernels; no
kernel raises, they report through return codes instead.

State arrays shared by most kernels:
  label   int32[ncells]   owning input vertex per hardware cell, -1 = free
  nxt/prv int32[ncells]   doubly linked path order within each chain
  head/tail int32[n]      path endpoints per chain
  size    int64[n]        cells per chain
  ncount  int64[m]        hardware-edge representation count per input edge
  eemb    int64[1]        number of input edges with ncount > 0
  nbig    int64[1]        number of chains with size > 1
Graph arrays (CSR, neighbors ascending):
  adj_ptr int64[n+1], adj_v int32[2m], adj_e int32[2m], edge_u/edge_v int32[m]
Hardware arrays:
  nbr     int32[ncells,8] in-grid neighbors, fixed clockwise order, -1 padded
  nbrn    int32[ncells]   number of in-grid neighbors
  nbr8    int32[ncells,8] position-aligned neighbors (N,NE,E,SE,S,SW,W,NW), -1 missing
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# SplitMix64 - the repo-wide PRNG (64-bit state, one mixing pass per output).
# Streams are split by drawing a fresh 64-bit seed from the parent stream.
# ---------------------------------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_INV53 = 1.0 / float(1 << 53)

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def rng_next(state):
    state[0] += _GOLDEN
    z = state[0]
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


@njit(**_JIT)
def rng_f64(state):
    # 53 significant bits -> uniform double in [0, 1)
    return float(rng_next(state) >> _S11) * _INV53


@njit(**_JIT)
def rng_below(state, n):
    # floor(u * n); bias O(n / 2^53), negligible for the sizes used here
    k = int(rng_f64(state) * n)
    if k >= n:
        k = n - 1
    return k


# ---------------------------------------------------------------------------
# Edge lookup and score bookkeeping
# ---------------------------------------------------------------------------


@njit(**_JIT)
def edge_id(adj_ptr, adj_v, adj_e, a, b):
    for p in range(adj_ptr[a], adj_ptr[a + 1]):
        if adj_v[p] == b:
            return adj_e[p]
    return -1


@njit(**_JIT)
def fill_eid_row(adj_ptr, adj_v, adj_e, a, row):
    """row[b] <- id of input edge (a,b) for every neighbor b of a. Paired
    with clear_eid_row so the O(n) scratch array stays -1 between uses."""
    for p in range(adj_ptr[a], adj_ptr[a + 1]):
        row[adj_v[p]] = adj_e[p]


@njit(**_JIT)
def clear_eid_row(adj_ptr, adj_v, a, row):
    for p in range(adj_ptr[a], adj_ptr[a + 1]):
        row[adj_v[p]] = -1


@njit(**_JIT)
def recount(label, nbr, nbrn, adj_ptr, adj_v, adj_e, ncount):
    """Rebuild ncount from labels by scanning every hardware edge once.
    Returns the embedded-edge total."""
    ncount[:] = 0
    ncells = label.shape[0]
    for x in range(ncells):
        lx = label[x]
        for q in range(nbrn[x]):
            w = nbr[x, q]
            if w < x:
                continue
            lw = label[w]
            if lx == -1 or lw == -1 or lx == lw:
                continue
            e = edge_id(adj_ptr, adj_v, adj_e, lx, lw)
            if e >= 0:
                ncount[e] += 1
    total = 0
    for e in range(ncount.shape[0]):
        if ncount[e] > 0:
            total += 1
    return total


@njit(**_JIT)
def apply_shift(label, nxt, prv, head, tail, size, ncount, eemb, nbig,
                adj_ptr, adj_v, adj_e, nbr, nbrn, u, i, j, v, row):
    """Move leaf cell u from chain i onto leaf v of chain j.
    Preconditions (validated by callers): u leaf of i, size[i] > 1,
    v leaf of j, u adjacent to v, i != j; row is an all -1 scratch of
    length n. Returns the score change."""
    d = 0
    fill_eid_row(adj_ptr, adj_v, adj_e, i, row)
    for q in range(nbrn[u]):
        w = nbr[u, q]
        lw = label[w]
        if lw == -1 or lw == i:
            continue
        e = row[lw]
        if e >= 0:
            ncount[e] -= 1
            if ncount[e] == 0:
                d -= 1
    clear_eid_row(adj_ptr, adj_v, i, row)
    # detach u (an endpoint) from chain i
    if u == head[i]:
        h = nxt[u]
        head[i] = h
        prv[h] = -1
    else:
        t = prv[u]
        tail[i] = t
        nxt[t] = -1
    nxt[u] = -1
    prv[u] = -1
    size[i] -= 1
    if size[i] == 1:
        nbig[0] -= 1
    # attach u at leaf v of chain j (tail side when v is both endpoints)
    if v == tail[j]:
        nxt[v] = u
        prv[u] = v
        tail[j] = u
    else:
        prv[v] = u
        nxt[u] = v
        head[j] = u
    size[j] += 1
    if size[j] == 2:
        nbig[0] += 1
    label[u] = j
    fill_eid_row(adj_ptr, adj_v, adj_e, j, row)
    for q in range(nbrn[u]):
        w = nbr[u, q]
        lw = label[w]
        if lw == -1 or lw == j:
            continue
        e = row[lw]
        if e >= 0:
            if ncount[e] == 0:
                d += 1
            ncount[e] += 1
    clear_eid_row(adj_ptr, adj_v, j, row)
    eemb[0] += d
    return d


@njit(**_JIT)
def apply_swap(label, nxt, prv, head, tail, size, ncount, eemb,
               adj_ptr, adj_v, adj_e, nbr, nbrn, i, j, row_i, row_j):
    """Exchange chains i and j wholesale. Returns the score change.
    Hardware edges between the two chains keep representing (i,j), so only
    contributions involving third chains actually change. row_i/row_j are
    all -1 scratch arrays of length n."""
    d = 0
    fill_eid_row(adj_ptr, adj_v, adj_e, i, row_i)
    fill_eid_row(adj_ptr, adj_v, adj_e, j, row_j)
    x = head[i]
    while x != -1:
        for q in range(nbrn[x]):
            w = nbr[x, q]
            lw = label[w]
            if lw == -1 or lw == i:
                continue
            e = row_i[lw]
            if e >= 0:
                ncount[e] -= 1
                if ncount[e] == 0:
                    d -= 1
        x = nxt[x]
    x = head[j]
    while x != -1:
        for q in range(nbrn[x]):
            w = nbr[x, q]
            lw = label[w]
            if lw == -1 or lw == j or lw == i:
                continue
            e = row_j[lw]
            if e >= 0:
                ncount[e] -= 1
                if ncount[e] == 0:
                    d -= 1
        x = nxt[x]
    x = head[i]
    while x != -1:
        label[x] = j
        x = nxt[x]
    x = head[j]
    while x != -1:
        label[x] = i
        x = nxt[x]
    head[i], head[j] = head[j], head[i]
    tail[i], tail[j] = tail[j], tail[i]
    size[i], size[j] = size[j], size[i]
    x = head[i]
    while x != -1:
        for q in range(nbrn[x]):
            w = nbr[x, q]
            lw = label[w]
            if lw == -1 or lw == i:
                continue
            e = row_i[lw]
            if e >= 0:
                if ncount[e] == 0:
                    d += 1
                ncount[e] += 1
        x = nxt[x]
    x = head[j]
    while x != -1:
        for q in range(nbrn[x]):
            w = nbr[x, q]
            lw = label[w]
            if lw == -1 or lw == j or lw == i:
                continue
            e = row_j[lw]
            if e >= 0:
                if ncount[e] == 0:
                    d += 1
                ncount[e] += 1
        x = nxt[x]
    clear_eid_row(adj_ptr, adj_v, i, row_i)
    clear_eid_row(adj_ptr, adj_v, j, row_j)
    eemb[0] += d
    return d


# ---------------------------------------------------------------------------
# Schedules and acceptance
# ---------------------------------------------------------------------------

FAMILY_LINEAR_DOUBLE = 1
FAMILY_LINEAR_SINGLE = 2
FAMILY_EXP_DOUBLE = 3
FAMILY_EXP_SINGLE = 4

# The exponential families were tuned at a 7e7-step budget where the cooling
# factor fires every 1000 steps (35,000 updates per phase). The update cadence
# scales with t_max so the temperature profile is budget-invariant, exactly
# like the linear families.
NOMINAL_T_MAX = 70_000_000
_UPDATES = NOMINAL_T_MAX // 1000


@njit(**_JIT)
def temperature(t, family, t_max, T0, T_half, beta):
    first = 2 * t < t_max
    if family == 1 or family == 2:
        if first or family == 2:
            return T0 * (1.0 - 2.0 * t / t_max)
        return T_half * (2.0 - 2.0 * t / t_max)
    if first or family == 4:
        return T0 * beta ** (t * _UPDATES // t_max)
    half = (t_max + 1) // 2
    return T_half * beta ** ((t - half) * _UPDATES // t_max)


@njit(**_JIT)
def move_probabilities(t, t_max, ps0, ps1, pa0, pa1):
    f = t / t_max
    return ps0 + (ps1 - ps0) * f, pa0 + (pa1 - pa0) * f


@njit(**_JIT)
def accept(state, d, T):
    if d >= 0:
        return True
    if T <= 0.0:
        return False
    return np.exp(d / T) > rng_f64(state)


# ---------------------------------------------------------------------------
# Proposal generators
# ---------------------------------------------------------------------------


@njit(**_JIT)
def propose_swap(state, edge_u, edge_v, m, label, head, nxt, size, nbr, nbrn):
    """Returns (i, j) or (-1, -1) for skip. j is sampled cell-first: a uniform
    cell w of the partner chain, then a uniform in-grid neighbor of w."""
    e = rng_below(state, m)
    if rng_below(state, 2) == 0:
        i = edge_u[e]
        k = edge_v[e]
    else:
        i = edge_v[e]
        k = edge_u[e]
    steps = rng_below(state, size[k])
    w = head[k]
    for _ in range(steps):
        w = nxt[w]
    wp = nbr[w, rng_below(state, nbrn[w])]
    j = label[wp]
    if j == -1 or j == i or j == k:
        return -1, -1
    return i, j


@njit(**_JIT)
def propose_shift(state, label, head, tail, size, nbig, guide, nbr, nbrn,
                  deg, n, p_away, degree_weighted, cand):
    """Returns (u, i, j, v) or (-1, -1, -1, -1) for skip."""
    if nbig[0] == 0:
        return -1, -1, -1, -1
    while True:
        i = rng_below(state, n)
        if size[i] > 1:
            break
    u = head[i] if rng_below(state, 2) == 0 else tail[i]
    away = rng_f64(state) < p_away
    ncand = 0
    gu = guide[u]
    for q in range(nbrn[u]):
        w = nbr[u, q]
        lw = label[w]
        if lw == -1 or lw == i:
            continue
        if w != head[lw] and w != tail[lw]:
            continue
        if not away and guide[w] != gu:
            continue
        cand[ncand] = w
        ncand += 1
    if ncand == 0:
        return -1, -1, -1, -1
    v = cand[rng_below(state, ncand)]
    j = label[v]
    if degree_weighted:
        di = deg[i] if deg[i] > 0 else 1
        dj = deg[j] if deg[j] > 0 else 1
        dri = size[i] / di
        drj = size[j] / dj
        if rng_f64(state) >= dri / (dri + drj):
            if size[j] == 1:
                return -1, -1, -1, -1
            return v, j, i, u
    return u, i, j, v


# ---------------------------------------------------------------------------
# Annealing main loop
# ---------------------------------------------------------------------------

STATUS_EXHAUSTED = 0
STATUS_FOUND = 1
STATUS_AUDIT_FAIL = -1


@njit(**_JIT)
def snapshot(label, nxt, prv, head, tail, size,
             b_label, b_nxt, b_prv, b_head, b_tail, b_size):
    b_label[:] = label
    b_nxt[:] = nxt
    b_prv[:] = prv
    b_head[:] = head
    b_tail[:] = tail
    b_size[:] = size


@njit(**_JIT)
def anneal(nbr, nbrn, guide,
           adj_ptr, adj_v, adj_e, edge_u, edge_v, deg, m,
           label, nxt, prv, head, tail, size, ncount, eemb, nbig,
           b_label, b_nxt, b_prv, b_head, b_tail, b_size, best_e,
           family, t_end, t_max, T0, T_half, beta, ps0, ps1, pa0, pa1,
           degree_weighted, score_scale, audit_stride, audit_ncount, state):
    """Runs the swap/shift annealing loop for t in [0, t_end). Maintains the
    best-seen placement in the b_* buffers. Returns (iterations, status)."""
    n = head.shape[0]
    cand = np.empty(8, dtype=np.int32)
    row_a = np.full(n, -1, dtype=np.int32)
    row_b = np.full(n, -1, dtype=np.int32)
    it = 0
    for t in range(t_end):
        it = t + 1
        f = t / t_max
        ps = ps0 + (ps1 - ps0) * f
        if rng_f64(state) < ps:
            pa = pa0 + (pa1 - pa0) * f
            u, i, j, v = propose_shift(state, label, head, tail, size, nbig,
                                       guide, nbr, nbrn, deg, n, pa,
                                       degree_weighted, cand)
            if u != -1:
                was_head = u == head[i]
                d = apply_shift(label, nxt, prv, head, tail, size, ncount,
                                eemb, nbig, adj_ptr, adj_v, adj_e, nbr, nbrn,
                                u, i, j, v, row_a)
                T = temperature(t, family, t_max, T0, T_half, beta)
                if accept(state, d * score_scale, T):
                    if eemb[0] > best_e[0]:
                        best_e[0] = eemb[0]
                        snapshot(label, nxt, prv, head, tail, size,
                                 b_label, b_nxt, b_prv, b_head, b_tail, b_size)
                        if best_e[0] == m:
                            return it, STATUS_FOUND
                else:
                    # undo: reattach u at the end of chain i it was taken from
                    w = head[i] if was_head else tail[i]
                    apply_shift(label, nxt, prv, head, tail, size, ncount,
                                eemb, nbig, adj_ptr, adj_v, adj_e, nbr, nbrn,
                                u, j, i, w, row_a)
        else:
            i, j = propose_swap(state, edge_u, edge_v, m, label, head, nxt,
                                size, nbr, nbrn)
            if i != -1:
                d = apply_swap(label, nxt, prv, head, tail, size, ncount, eemb,
                               adj_ptr, adj_v, adj_e, nbr, nbrn, i, j,
                               row_a, row_b)
                T = temperature(t, family, t_max, T0, T_half, beta)
                if accept(state, d * score_scale, T):
                    if eemb[0] > best_e[0]:
                        best_e[0] = eemb[0]
                        snapshot(label, nxt, prv, head, tail, size,
                                 b_label, b_nxt, b_prv, b_head, b_tail, b_size)
                        if best_e[0] == m:
                            return it, STATUS_FOUND
                else:
                    apply_swap(label, nxt, prv, head, tail, size, ncount, eemb,
                               adj_ptr, adj_v, adj_e, nbr, nbrn, i, j,
                               row_a, row_b)
        if audit_stride > 0 and it % audit_stride == 0:
            full = recount(label, nbr, nbrn, adj_ptr, adj_v, adj_e, audit_ncount)
            if full != eemb[0]:
                return it, STATUS_AUDIT_FAIL
            for e in range(m):
                if audit_ncount[e] != ncount[e]:
                    return it, STATUS_AUDIT_FAIL
    return it, STATUS_EXHAUSTED


# ---------------------------------------------------------------------------
# Terminal phase: free-cell creation and BFS chain linking
# ---------------------------------------------------------------------------


@njit(**_JIT)
def deletable(label, nbr, nbrn, nbr8, adj_ptr, adj_v, adj_e, ncount, table,
              u, jbuf, ebuf, cbuf, row):
    """Two-stage removability test for cell u (must be labeled).
    Stage one looks the 8-neighborhood occupation pattern up in `table`;
    stage two checks that no incident input-edge representation is the last
    one. Decrements ncount (the recorded side effect) only when returning
    True. row is an all -1 scratch of length n."""
    i = label[u]
    pat = 0
    for v in range(8):
        w = nbr8[u, v]
        if w >= 0 and label[w] == i:
            pat |= 1 << v
    if not table[pat]:
        return False
    nj = 0
    fill_eid_row(adj_ptr, adj_v, adj_e, i, row)
    for q in range(nbrn[u]):
        w = nbr[u, q]
        lw = label[w]
        if lw == -1 or lw == i:
            continue
        e = row[lw]
        if e < 0:
            continue
        seen = False
        for z in range(nj):
            if jbuf[z] == lw:
                cbuf[z] += 1
                seen = True
                break
        if not seen:
            jbuf[nj] = lw
            ebuf[nj] = e
            cbuf[nj] = 1
            nj += 1
    clear_eid_row(adj_ptr, adj_v, i, row)
    for z in range(nj):
        if cbuf[z] >= ncount[ebuf[z]]:
            return False
    for z in range(nj):
        ncount[ebuf[z]] -= cbuf[z]
    return True


@njit(**_JIT)
def cleanup(label, size, ncount, nbr, nbrn, nbr8, adj_ptr, adj_v, adj_e,
            table):
    """Cyclic row-major sweep releasing every removable cell to the free set.
    Stops once ncells-1 consecutive cells yielded no removal. Returns the
    number of cells freed."""
    ncells = label.shape[0]
    jbuf = np.empty(8, dtype=np.int32)
    ebuf = np.empty(8, dtype=np.int32)
    cbuf = np.empty(8, dtype=np.int64)
    row = np.full(size.shape[0], -1, dtype=np.int32)
    u = 0
    nodelete = 0
    freed = 0
    while nodelete < ncells - 1:
        i = label[u]
        if i >= 0 and deletable(label, nbr, nbrn, nbr8, adj_ptr, adj_v, adj_e,
                                ncount, table, u, jbuf, ebuf, cbuf, row):
            label[u] = -1
            size[i] -= 1
            freed += 1
            nodelete = 0
        else:
            nodelete += 1
        u += 1
        if u == ncells:
            u = 0
    return freed


@njit(**_JIT)
def bfs_link(label, size, ncount, eemb, nbr, nbrn, adj_ptr, adj_v, adj_e,
             i, j, color, parent, queue):
    """Grow chain i along a shortest free-cell path to chain j.
    Colors: 0 free/unvisited, 1 queued, 2 target, 3 blocked. On failure the
    placement is untouched. Returns 1 on success."""
    ncells = label.shape[0]
    qt = 0
    for x in range(ncells):
        lx = label[x]
        if lx == i:
            color[x] = 1
            parent[x] = -1
            queue[qt] = x
            qt += 1
        elif lx == j:
            color[x] = 2
        elif lx == -1:
            color[x] = 0
        else:
            color[x] = 3
    meet = -1
    qh = 0
    while qh < qt and meet == -1:
        x = queue[qh]
        qh += 1
        for q in range(nbrn[x]):
            w = nbr[x, q]
            c = color[w]
            if c == 2:
                meet = x
                break
            if c == 0:
                color[w] = 1
                parent[w] = x
                queue[qt] = w
                qt += 1
    if meet == -1:
        return 0
    row = np.full(size.shape[0], -1, dtype=np.int32)
    fill_eid_row(adj_ptr, adj_v, adj_e, i, row)
    x = meet
    while label[x] != i:
        label[x] = i
        size[i] += 1
        for q in range(nbrn[x]):
            w = nbr[x, q]
            lw = label[w]
            if lw == -1 or lw == i:
                continue
            e = row[lw]
            if e >= 0:
                if ncount[e] == 0:
                    eemb[0] += 1
                ncount[e] += 1
        x = parent[x]
    return 1


@njit(**_JIT)
def terminal_link_all(label, size, ncount, eemb, nbr, nbrn,
                      adj_ptr, adj_v, adj_e, color, parent, queue):
    """Scan input vertices in ascending order; attempt a BFS link for every
    incident edge still lacking a hardware representation."""
    n = size.shape[0]
    linked = 0
    for i in range(n):
        for p in range(adj_ptr[i], adj_ptr[i + 1]):
            if ncount[adj_e[p]] == 0:
                linked += bfs_link(label, size, ncount, eemb, nbr, nbrn,
                                   adj_ptr, adj_v, adj_e, i, adj_v[p],
                                   color, parent, queue)
    return linked


@njit(**_JIT)
def rng_pair_fill(state, n, out):
    """Fill out[k] = (a, b), a < b, each a uniform unordered vertex pair."""
    for k in range(out.shape[0]):
        a = rng_below(state, n)
        b = rng_below(state, n - 1)
        if b >= a:
            b += 1
        if a < b:
            out[k, 0] = a
            out[k, 1] = b
        else:
            out[k, 0] = b
            out[k, 1] = a
