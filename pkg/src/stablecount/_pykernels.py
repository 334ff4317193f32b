"""Pure-Python (numpy) versions of the scan kernels.

Same signatures and outputs as the compiled module.  Each chunk of graphs is
handled column-wise: one boolean row per vertex subset records whether the
subset is stable in every graph of the chunk at once.
"""

from __future__ import annotations

import numpy as np

MAX_LABELED = 8
MAX_TREE = 10
_CHUNK = 1 << 15


def _counts(adj: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Stable-set count and stability number for a batch of adjacency rows."""
    rows = adj.shape[0]
    stable = np.empty((1 << n, rows), dtype=bool)
    stable[0] = True
    fib = np.ones(rows, dtype=np.int64)
    alpha = np.zeros(rows, dtype=np.uint8)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        ok = stable[rest] & ((adj[:, v] & rest) == 0)
        stable[s] = ok
        fib += ok
        size = s.bit_count()
        np.maximum(alpha, np.where(ok, size, 0).astype(np.uint8), out=alpha)
    return alpha, fib


def _connected(adj: np.ndarray, n: int) -> np.ndarray:
    seen = np.ones(adj.shape[0], dtype=adj.dtype)
    for _ in range(n - 1):
        grown = seen.copy()
        for v in range(n):
            grown |= np.where((seen >> v) & 1 == 1, adj[:, v], 0).astype(adj.dtype)
        seen = grown
    return seen == (1 << n) - 1


def _pair_positions(n: int) -> list[tuple[int, int, int]]:
    total = n * (n - 1) // 2
    out = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            out.append((total - 1 - k, i, j))
            k += 1
    return out


def scan_labeled(n: int, start: int, stop: int):
    """Invariants of the labeled graphs with codes in ``[start, stop)``."""
    if not 1 <= n <= MAX_LABELED:
        raise ValueError(f"labeled scan supports 1 <= n <= {MAX_LABELED}")
    total = n * (n - 1) // 2
    if stop > 1 << total or start > stop:
        raise ValueError("code range out of bounds")
    pairs = _pair_positions(n)
    out_alpha, out_fib, out_conn, out_m = [], [], [], []
    for lo in range(start, stop, _CHUNK):
        codes = np.arange(lo, min(stop, lo + _CHUNK), dtype=np.uint64)
        adj = np.zeros((codes.size, n), dtype=np.uint32)
        for b, i, j in pairs:
            bit = ((codes >> np.uint64(b)) & np.uint64(1)).astype(np.uint32)
            adj[:, i] |= bit << j
            adj[:, j] |= bit << i
        alpha, fib = _counts(adj, n)
        out_alpha.append(alpha)
        out_fib.append(fib)
        out_conn.append(_connected(adj, n))
        out_m.append(np.bitwise_count(codes).astype(np.uint8))
    if not out_alpha:
        empty = np.empty(0, dtype=np.uint8)
        return empty, np.empty(0, dtype=np.int64), np.empty(0, dtype=bool), empty.copy()
    return (np.concatenate(out_alpha), np.concatenate(out_fib),
            np.concatenate(out_conn), np.concatenate(out_m))


def _decode_prufer(n: int, index: np.ndarray) -> np.ndarray:
    rows = index.size
    seq = np.empty((rows, n - 2), dtype=np.int64)
    rem = index.astype(np.int64)
    for i in range(n - 3, -1, -1):
        seq[:, i] = rem % n
        rem //= n
    deg = np.ones((rows, n), dtype=np.int64)
    r = np.arange(rows)
    for i in range(n - 2):
        np.add.at(deg, (r, seq[:, i]), 1)
    adj = np.zeros((rows, n), dtype=np.uint32)
    one = np.uint32(1)
    for i in range(n - 2):
        s = seq[:, i]
        leaf = np.argmax(deg == 1, axis=1)
        adj[r, leaf] |= one << s.astype(np.uint32)
        adj[r, s] |= one << leaf.astype(np.uint32)
        deg[r, leaf] -= 1
        deg[r, s] -= 1
    ends = deg == 1
    u = np.argmax(ends, axis=1)
    w = n - 1 - np.argmax(ends[:, ::-1], axis=1)
    adj[r, u] |= one << w.astype(np.uint32)
    adj[r, w] |= one << u.astype(np.uint32)
    return adj


def scan_prufer(n: int, start: int, stop: int):
    """Invariants of the labeled trees with Prufer indices in ``[start, stop)``."""
    if not 2 <= n <= MAX_TREE:
        raise ValueError(f"Prufer scan supports 2 <= n <= {MAX_TREE}")
    if stop > n ** (n - 2) or start > stop:
        raise ValueError("Prufer index range out of bounds")
    out_alpha, out_fib = [], []
    for lo in range(start, stop, _CHUNK):
        adj = _decode_prufer(n, np.arange(lo, min(stop, lo + _CHUNK), dtype=np.int64))
        alpha, fib = _counts(adj, n)
        out_alpha.append(alpha)
        out_fib.append(fib)
    if not out_alpha:
        return np.empty(0, dtype=np.uint8), np.empty(0, dtype=np.int64)
    return np.concatenate(out_alpha), np.concatenate(out_fib)
