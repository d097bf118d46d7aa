"""Hot integer kernels: canonical labeling and the brute-force edge-subset scan.

A graph lives in one int64 bitmask row per vertex (vertex cap 32 here;
columns of the search are packed into int64).  The same nopython-style
source runs on two paths:

* jitted by numba (default when numba imports cleanly), or
* plain Python over numpy scalars when ``CHI_PURE_NUMPY=1`` is set in the
  environment before import, or when numba is unavailable.

Both paths execute identical code, so they agree bit for bit;
``benchmarks/bench_kernels.py`` times one against the other.

Canonical form: the vertex order that MAXIMIZES the upper-triangle
adjacency bit string read column by column ((0,1), (0,2), (1,2),
(0,3), ...), which is exactly the graph6 bit order.  The search is a
prefix branch-and-bound over positions: at depth k the freshly placed
vertex contributes one column of k bits, candidates are tried in
decreasing column order, branches whose column falls below the best
known column at that depth can never reach the maximum, and a candidate
is skipped when an already-tried candidate at the same node is its
transposition twin (identical adjacency outside the pair), since
swapping the two is an automorphism fixing the placed prefix.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via CHI_PURE_NUMPY instead
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("CHI_PURE_NUMPY", "0") != "1"

KERNEL_VERTEX_CAP = 32


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _jit(fn):
    if USE_NUMBA:
        return njit(cache=True)(fn)
    return fn


@_jit
def _fill_candidates(rows, perm, used, depth, cand, ccol, ccnt, cptr):
    # Candidates = unused vertices, with the column each would contribute
    # at this depth, sorted by (column desc, vertex asc), transposition
    # twins of an earlier kept candidate dropped.
    n = rows.shape[0]
    cnt = 0
    for v in range(n):
        if (used >> v) & 1 != 0:
            continue
        col = 0
        for i in range(depth):
            col = (col << 1) | ((rows[v] >> perm[i]) & 1)
        cand[depth, cnt] = v
        ccol[depth, cnt] = col
        cnt += 1
    for i in range(1, cnt):
        cv = cand[depth, i]
        cc = ccol[depth, i]
        j = i - 1
        while j >= 0 and (
            ccol[depth, j] < cc or (ccol[depth, j] == cc and cand[depth, j] > cv)
        ):
            cand[depth, j + 1] = cand[depth, j]
            ccol[depth, j + 1] = ccol[depth, j]
            j -= 1
        cand[depth, j + 1] = cv
        ccol[depth, j + 1] = cc
    kept = 0
    for i in range(cnt):
        v = cand[depth, i]
        c = ccol[depth, i]
        dup = False
        for j in range(kept):
            w = cand[depth, j]
            if ccol[depth, j] != c:
                continue
            pairmask = ~((1 << v) | (1 << w))
            if (rows[v] & pairmask) == (rows[w] & pairmask):
                dup = True
                break
        if not dup:
            cand[depth, kept] = v
            ccol[depth, kept] = c
            kept += 1
    ccnt[depth] = kept
    cptr[depth] = 0


@_jit
def canonical_perm(rows):
    """Return perm with perm[k] = original vertex placed at position k
    in the encoding-maximizing order."""
    n = rows.shape[0]
    best_perm = np.zeros(n, np.int64)
    if n <= 1:
        return best_perm
    perm = np.zeros(n, np.int64)
    best_col = np.full(n, -1, np.int64)
    cand = np.zeros((n, n), np.int64)
    ccol = np.zeros((n, n), np.int64)
    ccnt = np.zeros(n, np.int64)
    cptr = np.zeros(n, np.int64)
    used = 0
    depth = 0
    _fill_candidates(rows, perm, used, depth, cand, ccol, ccnt, cptr)
    while depth >= 0:
        if cptr[depth] >= ccnt[depth]:
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
            continue
        idx = cptr[depth]
        cptr[depth] += 1
        v = cand[depth, idx]
        c = ccol[depth, idx]
        if c < best_col[depth]:
            # candidates are sorted by column desc: the rest are no better
            cptr[depth] = ccnt[depth]
            continue
        if c > best_col[depth]:
            best_col[depth] = c
            for j in range(depth + 1, n):
                best_col[j] = -1
        perm[depth] = v
        if depth == n - 1:
            for j in range(n):
                best_perm[j] = perm[j]
            continue
        used |= 1 << v
        depth += 1
        _fill_candidates(rows, perm, used, depth, cand, ccol, ccnt, cptr)
    return best_perm


@_jit
def connected_rows(rows):
    n = rows.shape[0]
    target = (1 << n) - 1
    seen = 1
    while True:
        nxt = seen
        for v in range(n):
            if (seen >> v) & 1 != 0:
                nxt |= rows[v]
        if nxt == seen:
            return seen == target
        seen = nxt


@_jit
def scan_chunk(n, eu, ev, state, steps, out):
    """Advance the (n+1)-subset odometer over the K_n edge list by at most
    ``steps`` subsets, keeping connected subsets whose degree sequence is
    already non-increasing in vertex order (every isomorphism class keeps
    at least one such labeling, the rest are redundant).  Survivors are
    written to ``out`` as canonical adjacency rows.  Returns
    (written, done); ``state`` is left at the next unprocessed subset.
    """
    k = n + 1
    m = eu.shape[0]
    deg = np.zeros(n, np.int64)
    rows = np.zeros(n, np.int64)
    written = 0
    done = False
    for _ in range(steps):
        for i in range(n):
            deg[i] = 0
        for t in range(k):
            e = state[t]
            deg[eu[e]] += 1
            deg[ev[e]] += 1
        ok = deg[n - 1] >= 1
        if ok:
            for i in range(n - 1):
                if deg[i] < deg[i + 1]:
                    ok = False
                    break
        if ok:
            for i in range(n):
                rows[i] = 0
            for t in range(k):
                e = state[t]
                rows[eu[e]] |= 1 << ev[e]
                rows[ev[e]] |= 1 << eu[e]
            if connected_rows(rows):
                p = canonical_perm(rows)
                for a in range(n):
                    acc = 0
                    ra = rows[p[a]]
                    for b in range(n):
                        if (ra >> p[b]) & 1 != 0:
                            acc |= 1 << b
                    out[written, a] = acc
                written += 1
        i2 = k - 1
        while i2 >= 0 and state[i2] == m - k + i2:
            i2 -= 1
        if i2 < 0:
            done = True
            break
        state[i2] += 1
        for j in range(i2 + 1, k):
            state[j] = state[j - 1] + 1
    return written, done
