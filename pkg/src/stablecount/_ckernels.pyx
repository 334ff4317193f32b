# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan kernels: (alpha, F, connected, m) for ranges of small graphs.

Labeled graphs are indexed by their graph6 bit-stream code, trees by the
base-n value of their Prufer sequence (first entry most significant).
"""

import numpy as np

from libc.stdint cimport int64_t, uint8_t, uint32_t, uint64_t


cdef extern from *:
    """
    static inline int sc_ctz(unsigned int x) { return __builtin_ctz(x); }
    static inline int sc_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int sc_ctz(unsigned int x) nogil
    int sc_popcount64(unsigned long long x) nogil


cdef int MAX_LABELED = 8
cdef int MAX_TREE = 10


cdef struct Counts:
    int64_t fib
    int alpha


cdef Counts _count(const uint32_t* adj, uint32_t mask) noexcept nogil:
    # F(G) = F(G - v) + F(G - N[v]) and alpha alongside, v = lowest vertex
    cdef Counts r, a, b
    cdef int v
    cdef uint32_t bit, nb
    if mask == 0:
        r.fib = 1
        r.alpha = 0
        return r
    v = sc_ctz(mask)
    bit = (<uint32_t>1) << v
    nb = adj[v] & mask
    a = _count(adj, mask ^ bit)
    if nb == 0:
        r.fib = 2 * a.fib
        r.alpha = a.alpha + 1
        return r
    b = _count(adj, mask & ~(nb | bit))
    r.fib = a.fib + b.fib
    r.alpha = a.alpha if a.alpha > b.alpha + 1 else b.alpha + 1
    return r


cdef bint _connected(const uint32_t* adj, int n) noexcept nogil:
    cdef uint32_t full = ((<uint32_t>1) << n) - 1
    cdef uint32_t seen = 1, frontier = 1, nxt, rest
    cdef int v
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            v = sc_ctz(rest)
            rest &= rest - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def scan_labeled(int n, uint64_t start, uint64_t stop):
    """Invariants of the labeled graphs with codes in ``[start, stop)``."""
    if n < 1 or n > MAX_LABELED:
        raise ValueError(f"labeled scan supports 1 <= n <= {MAX_LABELED}")
    cdef int total = n * (n - 1) // 2
    if stop > ((<uint64_t>1) << total) or start > stop:
        raise ValueError("code range out of bounds")
    cdef Py_ssize_t count = <Py_ssize_t>(stop - start)
    alpha_arr = np.empty(count, dtype=np.uint8)
    fib_arr = np.empty(count, dtype=np.int64)
    conn_arr = np.empty(count, dtype=np.uint8)
    m_arr = np.empty(count, dtype=np.uint8)
    cdef uint8_t[::1] alpha_out = alpha_arr
    cdef int64_t[::1] fib_out = fib_arr
    cdef uint8_t[::1] conn_out = conn_arr
    cdef uint8_t[::1] m_out = m_arr
    cdef int pi[28]
    cdef int pj[28]
    cdef uint32_t adj[8]
    cdef int i, j, k, b
    cdef Py_ssize_t idx
    cdef uint64_t code
    cdef Counts c
    # bit position b holds pair number total-1-b
    k = 0
    for j in range(1, n):
        for i in range(j):
            pi[total - 1 - k] = i
            pj[total - 1 - k] = j
            k += 1
    with nogil:
        for idx in range(count):
            code = start + <uint64_t>idx
            for i in range(n):
                adj[i] = 0
            for b in range(total):
                if (code >> b) & 1:
                    adj[pi[b]] |= (<uint32_t>1) << pj[b]
                    adj[pj[b]] |= (<uint32_t>1) << pi[b]
            c = _count(adj, ((<uint32_t>1) << n) - 1)
            fib_out[idx] = c.fib
            alpha_out[idx] = <uint8_t>c.alpha
            conn_out[idx] = _connected(adj, n)
            m_out[idx] = <uint8_t>sc_popcount64(code)
    return alpha_arr, fib_arr, conn_arr.view(np.bool_), m_arr


def scan_prufer(int n, uint64_t start, uint64_t stop):
    """Invariants of the labeled trees with Prufer indices in ``[start, stop)``."""
    if n < 2 or n > MAX_TREE:
        raise ValueError(f"Prufer scan supports 2 <= n <= {MAX_TREE}")
    cdef uint64_t limit = 1
    cdef int t
    for t in range(n - 2):
        limit *= n
    if stop > limit or start > stop:
        raise ValueError("Prufer index range out of bounds")
    cdef Py_ssize_t count = <Py_ssize_t>(stop - start)
    alpha_arr = np.empty(count, dtype=np.uint8)
    fib_arr = np.empty(count, dtype=np.int64)
    cdef uint8_t[::1] alpha_out = alpha_arr
    cdef int64_t[::1] fib_out = fib_arr
    cdef uint32_t adj[10]
    cdef int seq[8]
    cdef int deg[10]
    cdef int i, s, leaf, u, w
    cdef Py_ssize_t idx
    cdef uint64_t rem
    cdef Counts c
    with nogil:
        for idx in range(count):
            rem = start + <uint64_t>idx
            for i in range(n - 3, -1, -1):
                seq[i] = <int>(rem % <uint64_t>n)
                rem //= <uint64_t>n
            for i in range(n):
                adj[i] = 0
                deg[i] = 1
            for i in range(n - 2):
                deg[seq[i]] += 1
            for i in range(n - 2):
                s = seq[i]
                leaf = 0
                while deg[leaf] != 1:
                    leaf += 1
                adj[leaf] |= (<uint32_t>1) << s
                adj[s] |= (<uint32_t>1) << leaf
                deg[leaf] -= 1
                deg[s] -= 1
            u = -1
            w = -1
            for i in range(n):
                if deg[i] == 1:
                    if u < 0:
                        u = i
                    else:
                        w = i
            adj[u] |= (<uint32_t>1) << w
            adj[w] |= (<uint32_t>1) << u
            c = _count(adj, ((<uint32_t>1) << n) - 1)
            fib_out[idx] = c.fib
            alpha_out[idx] = <uint8_t>c.alpha
    return alpha_arr, fib_arr
