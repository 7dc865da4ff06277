"""Hot wedge-traversal loops, compiled with numba.

Every kernel is ``nogil`` so chunks of work can run concurrently from a
thread pool. Chunk outputs are private arrays merged by integer summation in
the caller, which makes results independent of how work was split or
scheduled.
"""

import numpy as np
from numba import njit

I64 = np.int64


@njit(cache=True, nogil=True)
def count_side(a_offs, a_nbrs, b_offs, b_nbrs, a_rank, b_rank, starts, counts_a, counts_b, cap):
    """Aggregate butterfly contributions from wedges rooted at ``starts`` (side A).

    For a start sp, a mid mp in N(sp) and an end ep in N(mp), the wedge is
    aggregated only when ep outranks both sp and mp (smaller rank = higher
    priority). Adjacency lists ascend in rank, so the scan breaks at the first
    failing end. Per end with c aggregated wedges, C(c,2) butterflies are
    credited to the start and the end, and each mid gets c-1.

    ``cap`` bounds the number of wedges any single start can produce.
    Returns the number of wedges aggregated.
    """
    n_a = a_offs.shape[0] - 1
    wdg = np.zeros(n_a, dtype=I64)
    nze = np.empty(n_a, dtype=I64)
    nzw_mp = np.empty(cap, dtype=I64)
    nzw_ep = np.empty(cap, dtype=I64)
    wedges = 0
    for si in range(starts.shape[0]):
        sp = starts[si]
        rsp = a_rank[sp]
        n_nze = 0
        n_nzw = 0
        for j in range(a_offs[sp], a_offs[sp + 1]):
            mp = a_nbrs[j]
            rmp = b_rank[mp]
            rlim = rmp if rmp < rsp else rsp
            for k in range(b_offs[mp], b_offs[mp + 1]):
                ep = b_nbrs[k]
                if a_rank[ep] >= rlim:
                    break
                if wdg[ep] == 0:
                    nze[n_nze] = ep
                    n_nze += 1
                wdg[ep] += 1
                nzw_mp[n_nzw] = mp
                nzw_ep[n_nzw] = ep
                n_nzw += 1
        wedges += n_nzw
        sp_add = 0
        for t in range(n_nze):
            ep = nze[t]
            c = wdg[ep]
            bcnt = c * (c - 1) // 2
            counts_a[ep] += bcnt
            sp_add += bcnt
        counts_a[sp] += sp_add
        for t in range(n_nzw):
            counts_b[nzw_mp[t]] += wdg[nzw_ep[t]] - 1
        for t in range(n_nze):
            wdg[nze[t]] = 0
    return wedges


@njit(cache=True, nogil=True)
def peel_batch(us, u_offs, u_nbrs, v_offs, v_nbrs, alive, dec_out, touched_flag):
    """Accumulate support decrements from peeling every vertex of ``us``.

    Scans the (possibly stale) effective adjacency; entries for dead vertices
    cost a wedge but produce no decrement. For each still-live 2-hop neighbor
    with c >= 2 shared live neighbors, C(c,2) is added to ``dec_out`` and its
    flag is set. Returns the number of wedges scanned.
    """
    n_u = dec_out.shape[0]
    wdg = np.zeros(n_u, dtype=I64)
    nze = np.empty(n_u, dtype=I64)
    wedges = 0
    for t in range(us.shape[0]):
        u = us[t]
        n_nze = 0
        for j in range(u_offs[u], u_offs[u + 1]):
            v = u_nbrs[j]
            for k in range(v_offs[v], v_offs[v + 1]):
                u2 = v_nbrs[k]
                if u2 == u:
                    continue
                wedges += 1
                if alive[u2]:
                    if wdg[u2] == 0:
                        nze[n_nze] = u2
                        n_nze += 1
                    wdg[u2] += 1
        for s in range(n_nze):
            u2 = nze[s]
            c = wdg[u2]
            wdg[u2] = 0
            if c >= 2:
                dec_out[u2] += c * (c - 1) // 2
                touched_flag[u2] = True
    return wedges


@njit(cache=True, nogil=True)
def peel_single(u, u_offs, u_nbrs, v_offs, v_nbrs, alive, supports, floor, wdg, nze, touched_out):
    """Peel one vertex, applying floored support decrements in place.

    ``wdg`` must be all zeros on entry and is restored before returning;
    ``nze``/``touched_out`` are label-capacity scratch. Touched vertices (those
    with a positive decrement) land in ``touched_out``. Returns
    (touched count, wedges scanned).
    """
    n_nze = 0
    wedges = 0
    for j in range(u_offs[u], u_offs[u + 1]):
        v = u_nbrs[j]
        for k in range(v_offs[v], v_offs[v + 1]):
            u2 = v_nbrs[k]
            if u2 == u:
                continue
            wedges += 1
            if alive[u2]:
                if wdg[u2] == 0:
                    nze[n_nze] = u2
                    n_nze += 1
                wdg[u2] += 1
    n_t = 0
    for t in range(n_nze):
        u2 = nze[t]
        c = wdg[u2]
        wdg[u2] = 0
        if c >= 2:
            s = supports[u2] - c * (c - 1) // 2
            if s < floor:
                s = floor
            supports[u2] = s
            touched_out[n_t] = u2
            n_t += 1
    return n_t, wedges


@njit(cache=True, nogil=True)
def _heap_push(heap_s, heap_l, n, s, l):
    """Push (s, l) onto a binary min-heap ordered by support, then label."""
    i = n
    while i > 0:
        p = (i - 1) >> 1
        ps = heap_s[p]
        pl = heap_l[p]
        if ps > s or (ps == s and pl > l):
            heap_s[i] = ps
            heap_l[i] = pl
            i = p
        else:
            break
    heap_s[i] = s
    heap_l[i] = l
    return n + 1


@njit(cache=True, nogil=True)
def _heap_pop(heap_s, heap_l, n):
    s = heap_s[0]
    l = heap_l[0]
    n -= 1
    if n > 0:
        ls = heap_s[n]
        ll = heap_l[n]
        i = 0
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            r = c + 1
            if r < n and (heap_s[r] < heap_s[c] or (heap_s[r] == heap_s[c] and heap_l[r] < heap_l[c])):
                c = r
            if heap_s[c] < ls or (heap_s[c] == ls and heap_l[c] < ll):
                heap_s[i] = heap_s[c]
                heap_l[i] = heap_l[c]
                i = c
            else:
                break
        heap_s[i] = ls
        heap_l[i] = ll
    return s, l, n


@njit(cache=True, nogil=True)
def compact_csr(u_offs, u_nbrs, v_offs, v_nbrs, alive):
    """Filtered copy of both adjacency sides keeping only live-U edges."""
    n_u = u_offs.shape[0] - 1
    n_v = v_offs.shape[0] - 1
    total = 0
    new_u_offs = np.empty(n_u + 1, dtype=I64)
    new_u_offs[0] = 0
    for u in range(n_u):
        if alive[u]:
            total += u_offs[u + 1] - u_offs[u]
        new_u_offs[u + 1] = total
    new_u_nbrs = np.empty(total, dtype=I64)
    p = 0
    for u in range(n_u):
        if alive[u]:
            for j in range(u_offs[u], u_offs[u + 1]):
                new_u_nbrs[p] = u_nbrs[j]
                p += 1
    new_v_offs = np.empty(n_v + 1, dtype=I64)
    new_v_offs[0] = 0
    total = 0
    for v in range(n_v):
        for j in range(v_offs[v], v_offs[v + 1]):
            if alive[v_nbrs[j]]:
                total += 1
        new_v_offs[v + 1] = total
    new_v_nbrs = np.empty(total, dtype=I64)
    p = 0
    for v in range(n_v):
        for j in range(v_offs[v], v_offs[v + 1]):
            if alive[v_nbrs[j]]:
                new_v_nbrs[p] = v_nbrs[j]
                p += 1
    return new_u_offs, new_u_nbrs, new_v_offs, new_v_nbrs


@njit(cache=True, nogil=True)
def peel_subgraph(u_offs, u_nbrs, v_offs, v_nbrs, alive, supports, theta, heap_s, heap_l, heap_n, wdg, nze, threshold):
    """Full extract-min peel of one graph, with optional periodic compaction.

    The fused form of the sequential peel loop: lazy min-heap (stale entries
    skipped on pop, ties to the smaller label), floored decrements with the
    floor equal to the value just assigned, updated vertices re-pushed. When
    ``threshold`` is positive, both adjacency sides are compacted after any
    extraction that brings the wedge tally since the previous compaction to
    the threshold. Returns the total wedges scanned.
    """
    wedges_since = 0
    wedges_total = 0
    while heap_n > 0:
        s, u, heap_n = _heap_pop(heap_s, heap_l, heap_n)
        if not alive[u] or supports[u] != s:
            continue
        theta[u] = s
        alive[u] = False
        n_nze = 0
        for j in range(u_offs[u], u_offs[u + 1]):
            v = u_nbrs[j]
            for k in range(v_offs[v], v_offs[v + 1]):
                u2 = v_nbrs[k]
                if u2 == u:
                    continue
                wedges_since += 1
                wedges_total += 1
                if alive[u2]:
                    if wdg[u2] == 0:
                        nze[n_nze] = u2
                        n_nze += 1
                    wdg[u2] += 1
        for t in range(n_nze):
            u2 = nze[t]
            c = wdg[u2]
            wdg[u2] = 0
            if c >= 2:
                ns = supports[u2] - c * (c - 1) // 2
                if ns < s:
                    ns = s
                supports[u2] = ns
                if heap_n >= heap_s.shape[0]:
                    cap = 2 * heap_s.shape[0] + 16
                    grown_s = np.empty(cap, dtype=I64)
                    grown_l = np.empty(cap, dtype=I64)
                    grown_s[:heap_n] = heap_s[:heap_n]
                    grown_l[:heap_n] = heap_l[:heap_n]
                    heap_s = grown_s
                    heap_l = grown_l
                heap_n = _heap_push(heap_s, heap_l, heap_n, ns, u2)
        if threshold > 0 and wedges_since >= threshold:
            u_offs, u_nbrs, v_offs, v_nbrs = compact_csr(u_offs, u_nbrs, v_offs, v_nbrs, alive)
            wedges_since = 0
    return wedges_total


@njit(cache=True, nogil=True)
def peel_cost(us, u_offs, u_nbrs, true_v_degree):
    """Wedge cost of peeling ``us``: sum of live degrees over their neighborhoods."""
    total = 0
    for t in range(us.shape[0]):
        u = us[t]
        for j in range(u_offs[u], u_offs[u + 1]):
            total += true_v_degree[u_nbrs[j]]
    return total


@njit(cache=True, nogil=True)
def recount_cost(u_offs, u_nbrs, alive, u_degree, true_v_degree):
    """Wedge bound for recounting: sum of min(d_u, live d_v) over live edges."""
    total = 0
    n_u = u_offs.shape[0] - 1
    for u in range(n_u):
        if not alive[u]:
            continue
        du = u_degree[u]
        for j in range(u_offs[u], u_offs[u + 1]):
            dv = true_v_degree[u_nbrs[j]]
            total += du if du < dv else dv
    return total
