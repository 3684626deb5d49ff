"""Compiled search kernels.

Adjacency arrives as an int64 array of per-vertex bitmasks, which caps
the kernels at 62 vertices (no bit may reach the sign position).  All
searches are iterative with explicit stacks; the per-depth ``todo``
masks hold the not-yet-tried neighbor sets.

The hamiltonian search keeps a witness matrix M with M[u, v] = 1 once a
hamiltonian u-v path has been seen, and extends paths from a start
vertex that still has unresolved partners.  Every full-length endpoint
reached marks its pair, and five backtracking rules cut the tree, all
phrased on the subgraph H induced by the vertices off the current path:

1. H is disconnected.
2. H has at least three vertices of degree one.
3. H has exactly two degree-one vertices and neither is adjacent
   (in the whole graph) to the path's last vertex.
4. H has exactly one degree-one vertex, it is not adjacent to the last
   vertex, and its pairing with the start is already marked.
5. Every vertex of H is already marked against the start.

Rules 1..3 reject genuinely dead branches; rules 4 and 5 only skip work
whose outcome is recorded in M, so with all rules on the scan remains
exact.  The ``rules`` argument is a bitfield (bit r-1 enables rule r) so
tests can switch each rule off on its own.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ALL_RULES = 0b11111
_HUGE = 1 << 62


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True, inline="always")
def _low_index(x):
    return _popcount((x & -x) - 1)


@njit(cache=True)
def _connected_within(adj, mask):
    """Is the subgraph induced by the mask connected (empty counts as yes)?"""
    if mask == 0:
        return True
    comp = mask & -mask
    frontier = comp
    while frontier != 0:
        grown = 0
        m = frontier
        while m != 0:
            v = _low_index(m)
            m &= m - 1
            grown |= adj[v]
        grown &= mask & ~comp
        comp |= grown
        frontier = grown
    return comp == mask


@njit(cache=True)
def _prune(adj, h, last, start, M, rules):
    """Apply the five backtracking rules to the off-path set h."""
    if rules & 1:
        if not _connected_within(adj, h):
            return True
    if rules & 0b1110:
        count = 0
        w1 = -1
        w2 = -1
        m = h
        while m != 0:
            v = _low_index(m)
            m &= m - 1
            if _popcount(adj[v] & h) == 1:
                count += 1
                if count == 1:
                    w1 = v
                elif count == 2:
                    w2 = v
                else:
                    break
        if rules & 2:
            if count >= 3:
                return True
        if rules & 4:
            if count == 2 and (adj[last] >> w1) & 1 == 0 and (adj[last] >> w2) & 1 == 0:
                return True
        if rules & 8:
            if count == 1 and (adj[last] >> w1) & 1 == 0 and M[start, w1] == 1:
                return True
    if rules & 16:
        m = h
        done = True
        while m != 0:
            v = _low_index(m)
            m &= m - 1
            if M[start, v] == 0:
                done = False
                break
        if done:
            return True
    return False


@njit(cache=True)
def ham_connected_scan(n, adj, rules, M):
    """Decide hamiltonian-connectedness, filling the witness matrix M.

    Returns True iff every pair is joined by a hamiltonian path.  On a
    True answer M is symmetric and fully set off the diagonal; on False
    it holds whatever was found before the failing start was exhausted.
    """
    full = (1 << n) - 1
    path = np.empty(n, np.int64)
    todo = np.empty(n, np.int64)
    for start in range(n):
        unresolved = False
        for v in range(n):
            if v != start and M[start, v] == 0:
                unresolved = True
                break
        if not unresolved:
            continue
        path[0] = start
        onpath = 1 << start
        depth = 0
        if _prune(adj, full & ~onpath, start, start, M, rules):
            todo[0] = 0
        else:
            todo[0] = adj[start]
        while True:
            if todo[depth] != 0:
                t = todo[depth]
                v = _low_index(t)
                todo[depth] = t & (t - 1)
                depth += 1
                path[depth] = v
                onpath |= 1 << v
                if depth == n - 1:
                    M[start, v] = 1
                    M[v, start] = 1
                    onpath &= ~(1 << v)
                    depth -= 1
                    continue
                if _prune(adj, full & ~onpath, v, start, M, rules):
                    onpath &= ~(1 << v)
                    depth -= 1
                    continue
                todo[depth] = adj[v] & ~onpath
            else:
                if depth == 0:
                    break
                onpath &= ~(1 << path[depth])
                depth -= 1
        for v in range(n):
            if v != start and M[start, v] == 0:
                return False
    return True


@njit(cache=True)
def ham_path_single(n, adj, s, t, path_out):
    """Search one hamiltonian s-t path; on success fill path_out.

    The target t is only admitted at the final position, and the
    backtracking rules degenerate accordingly: a degree-one vertex of H
    other than t that is not adjacent to the last path vertex kills the
    branch, as do a disconnected H, three degree-one vertices, or two
    degree-one vertices with no adjacency to the last vertex.
    """
    full = (1 << n) - 1
    if n == 2:
        if (adj[s] >> t) & 1:
            path_out[0] = s
            path_out[1] = t
            return True
        return False
    path = np.empty(n, np.int64)
    todo = np.empty(n, np.int64)
    path[0] = s
    onpath = 1 << s
    depth = 0
    tbit = 1 << t
    todo[0] = adj[s] & ~tbit
    while True:
        if todo[depth] != 0:
            tm = todo[depth]
            v = _low_index(tm)
            todo[depth] = tm & (tm - 1)
            depth += 1
            path[depth] = v
            onpath |= 1 << v
            if depth == n - 1:
                for i in range(n):
                    path_out[i] = path[i]
                return True
            h = full & ~onpath
            dead = False
            if not _connected_within(adj, h):
                dead = True
            else:
                count = 0
                w1 = -1
                w2 = -1
                m = h
                while m != 0:
                    w = _low_index(m)
                    m &= m - 1
                    if _popcount(adj[w] & h) == 1:
                        count += 1
                        if w != t and (adj[v] >> w) & 1 == 0:
                            dead = True
                            break
                        if count == 1:
                            w1 = w
                        elif count == 2:
                            w2 = w
                        else:
                            dead = True
                            break
                if not dead and count == 2:
                    if (adj[v] >> w1) & 1 == 0 and (adj[v] >> w2) & 1 == 0:
                        dead = True
            if dead:
                onpath &= ~(1 << v)
                depth -= 1
                continue
            if depth == n - 2:
                todo[depth] = adj[v] & tbit
            else:
                todo[depth] = adj[v] & ~onpath & ~tbit
        else:
            if depth == 0:
                return False
            onpath &= ~(1 << path[depth])
            depth -= 1


@njit(cache=True)
def path_lengths_from(n, adj, start, bound, out):
    """Record, for every v, the edge counts of simple start-v paths.

    Bit L of out[v] is set when a simple path from start to v with L
    edges exists, for 1 <= L <= bound.  The walk enumerates every simple
    path of at most bound edges exactly once; out must arrive zeroed.
    """
    if bound <= 0 or n < 2:
        return
    path = np.empty(n, np.int64)
    todo = np.empty(n, np.int64)
    path[0] = start
    onpath = 1 << start
    depth = 0
    todo[0] = adj[start]
    while True:
        if todo[depth] != 0:
            t = todo[depth]
            v = _low_index(t)
            todo[depth] = t & (t - 1)
            depth += 1
            path[depth] = v
            onpath |= 1 << v
            out[v] |= 1 << depth
            if depth == bound:
                onpath &= ~(1 << v)
                depth -= 1
                continue
            todo[depth] = adj[v] & ~onpath
        else:
            if depth == 0:
                return
            onpath &= ~(1 << path[depth])
            depth -= 1


@njit(cache=True)
def cycle_lengths(n, adj):
    """Bitmask of cycle lengths: bit L set iff a simple L-cycle exists.

    Cycles are rooted at their smallest vertex; the walk from a root
    only visits larger vertices and closes edges back to the root,
    counting each cycle once per direction and deduplicating directions
    by requiring the first step to be smaller than the closing vertex.
    Stops early once every length in [3, n] has been confirmed.
    """
    found = 0
    if n < 3:
        return found
    target = 0
    for l in range(3, n + 1):
        target |= 1 << l
    path = np.empty(n, np.int64)
    todo = np.empty(n, np.int64)
    for root in range(n - 2):
        allowed = ((1 << n) - 1) >> (root + 1) << (root + 1)
        path[0] = root
        onpath = 1 << root
        depth = 0
        todo[0] = adj[root] & allowed
        while True:
            if todo[depth] != 0:
                t = todo[depth]
                v = _low_index(t)
                todo[depth] = t & (t - 1)
                depth += 1
                path[depth] = v
                onpath |= 1 << v
                if depth >= 2 and (adj[v] >> root) & 1 and path[1] < v:
                    found |= 1 << (depth + 1)
                    if found & target == target:
                        return found
                todo[depth] = adj[v] & allowed & ~onpath
            else:
                if depth == 0:
                    break
                onpath &= ~(1 << path[depth])
                depth -= 1
    return found


# ---------------------------------------------------------------------------
# canonical forms and exhaustive enumeration
#
# Labeled graphs on n <= 8 vertices are bitmasks over the upper triangle
# in column order: pair (i, j) with i < j sits at bit j*(j-1)/2 + i,
# the same order the graph6 codec uses.  The canonical form of a graph
# is the smallest relabeling under a chunk-sequence order: vertices are
# laid out position by position (classes of an iterated color refinement
# first, refined class order fixed by signature rank), each position
# contributing the adjacency bits toward earlier positions, and earlier
# positions compare first.  Equal canonical masks mean isomorphic: the
# refinement is label-independent, so both graphs minimize over
# corresponding orderings.

@njit(cache=True)
def _rank_assign(n, sig, out, buf):
    for i in range(n):
        buf[i] = sig[i]
    for i in range(1, n):
        key = buf[i]
        j = i - 1
        while j >= 0 and buf[j] > key:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = key
    u = 0
    for i in range(1, n):
        if buf[i] != buf[u]:
            u += 1
            buf[u] = buf[i]
    nu = u + 1
    for v in range(n):
        for i in range(nu):
            if buf[i] == sig[v]:
                out[v] = i
                break
    return nu


@njit(cache=True)
def canonical_form(n, adj, S):
    """Canonical triangle bitmask; S is int64 scratch of shape (10, n)."""
    if n <= 1:
        return 0
    color = S[0]
    sig = S[1]
    cnt = S[2]
    newcolor = S[3]
    buf = S[4]
    colormask = S[5]
    cls = S[6]
    perm = S[7]
    cand = S[8]
    best = S[9]

    for v in range(n):
        sig[v] = _popcount(adj[v])
    ncolors = _rank_assign(n, sig, color, buf)
    for _ in range(n):
        if ncolors == n:
            break
        for v in range(n):
            for c in range(n):
                cnt[c] = 0
            m = adj[v]
            while m != 0:
                u = _low_index(m)
                m &= m - 1
                cnt[color[u]] += 1
            acc = color[v]
            for c in range(n):
                acc = acc * (n + 1) + cnt[c]
            sig[v] = acc
        nnew = _rank_assign(n, sig, newcolor, buf)
        stable = True
        for v in range(n):
            if newcolor[v] != color[v]:
                stable = False
            color[v] = newcolor[v]
        ncolors = nnew
        if stable:
            break

    for c in range(n):
        colormask[c] = 0
    for v in range(n):
        colormask[color[v]] |= 1 << v
    p = 0
    for c in range(ncolors):
        m = colormask[c]
        while m != 0:
            m &= m - 1
            cls[p] = c
            p += 1

    for i in range(n):
        best[i] = _HUGE
    depth = 0
    used = 0
    cand[0] = colormask[cls[0]]
    while depth >= 0:
        if cand[depth] == 0:
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
            continue
        t = cand[depth]
        v = _low_index(t)
        cand[depth] = t & (t - 1)
        chunk = 0
        for q in range(depth):
            chunk = (chunk << 1) | ((adj[perm[q]] >> v) & 1)
        if chunk > best[depth]:
            continue
        if chunk < best[depth]:
            best[depth] = chunk
            for r in range(depth + 1, n):
                best[r] = _HUGE
        perm[depth] = v
        if depth == n - 1:
            continue
        used |= 1 << v
        depth += 1
        cand[depth] = colormask[cls[depth]] & ~used

    mask = 0
    base = 0
    for p in range(1, n):
        chunk = best[p]
        for q in range(p):
            mask |= ((chunk >> (p - 1 - q)) & 1) << (base + q)
        base += p
    return mask


@njit(cache=True)
def _articulation_or_disconnected(n, adj):
    """True when the graph is disconnected or has a cut vertex (n >= 2)."""
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    stack_v = np.empty(n, np.int64)
    remaining = np.empty(n, np.int64)
    disc[0] = 0
    low[0] = 0
    stack_v[0] = 0
    remaining[0] = adj[0]
    clock = 1
    sp = 0
    root_children = 0
    while sp >= 0:
        v = stack_v[sp]
        m = remaining[sp]
        if m != 0:
            w = _low_index(m)
            remaining[sp] = m & (m - 1)
            if disc[w] == -1:
                if v == 0:
                    root_children += 1
                disc[w] = clock
                low[w] = clock
                clock += 1
                sp += 1
                stack_v[sp] = w
                remaining[sp] = adj[w] & ~(1 << v)
            else:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            sp -= 1
            if sp >= 0:
                p = stack_v[sp]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return True
    if clock < n:
        return True
    return root_children >= 2


@njit(cache=True)
def _mask_connectivity_ok(n, adj, conn):
    """Check the connectivity requirement for one labeled graph (n > conn)."""
    full = (1 << n) - 1
    if conn == 0:
        return True
    if not _connected_within(adj, full):
        return False
    if conn == 1:
        return True
    if _articulation_or_disconnected(n, adj):
        return False
    if conn == 2:
        return True
    for a in range(n):
        for b in range(a + 1, n):
            if not _connected_within(adj, full & ~(1 << a) & ~(1 << b)):
                return False
    return True


@njit(cache=True)
def _table_insert(table, key):
    size_mask = len(table) - 1
    h = key * -0x61C8864680B583EB  # golden-ratio multiplier, wraps mod 2**64
    h ^= h >> 31
    idx = h & size_mask
    while True:
        k = table[idx]
        if k == key:
            return False
        if k == -1:
            table[idx] = key
            return True
        idx = (idx + 1) & size_mask


@njit(cache=True)
def enum_chunk(n, lo, hi, min_degree, conn, rowbits, table):
    """Canonicalize every labeled graph in the mask range [lo, hi).

    Masks passing the degree and connectivity filters land in the open
    addressing table (empty slots hold -1) keyed by canonical form.
    Returns the number of previously unseen canonical forms.
    """
    adj = np.zeros(n, np.int64)
    scratch = np.empty((10, n), np.int64)
    deg_floor = min_degree
    if conn > deg_floor:
        deg_floor = conn
    added = 0
    for mask in range(lo, hi):
        ok = True
        if deg_floor > 0:
            for v in range(n):
                if _popcount(mask & rowbits[v]) < deg_floor:
                    ok = False
                    break
        if not ok:
            continue
        for v in range(n):
            adj[v] = 0
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> idx) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                idx += 1
        if not _mask_connectivity_ok(n, adj, conn):
            continue
        if _table_insert(table, canonical_form(n, adj, scratch)):
            added += 1
    return added


def warm_up() -> None:
    """Run every kernel once on a toy graph so JIT costs are paid upfront."""
    adj = np.array([0b110, 0b101, 0b011], np.int64)
    M = np.zeros((3, 3), np.uint8)
    ham_connected_scan(3, adj, ALL_RULES, M)
    path = np.empty(3, np.int64)
    ham_path_single(3, adj, 0, 2, path)
    out = np.zeros(3, np.int64)
    path_lengths_from(3, adj, 0, 2, out)
    cycle_lengths(3, adj)
    scratch = np.empty((10, 3), np.int64)
    canonical_form(3, adj, scratch)
    rowbits = np.array([0b011, 0b101, 0b110], np.int64)
    table = np.full(16, -1, np.int64)
    enum_chunk(3, 0, 8, 0, 1, rowbits, table)
