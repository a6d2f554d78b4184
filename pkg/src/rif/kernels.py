"""Bit-set kernels over families stored as ``(m, W)`` arrays of uint64 words.

Element ``x`` of the ground set lives in word ``x // 64`` at bit ``x % 64``
(bit 0 of word 0 is never set). Each kernel comes in two flavours: a loop
version compiled by numba when available, and a vectorised numpy version.
The module-level names without suffix dispatch to whichever backend is live.
"""

from __future__ import annotations

import numpy as np

from rif._accel import HAVE_JIT, jit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)

# rows processed per block by the numpy pairwise kernels
_BLOCK_CELLS = 1 << 22


def words_for(n: int) -> int:
    return n // 64 + 1


def encode(sets, n: int) -> np.ndarray:
    """Pack an iterable of element collections into an ``(m, W)`` uint64 array."""
    sets = list(sets)
    w = words_for(n)
    out = np.zeros((len(sets), w), dtype=np.uint64)
    for row, members in enumerate(sets):
        for x in members:
            out[row, x >> 6] |= np.uint64(1) << np.uint64(x & 63)
    return out


def decode_row(row: np.ndarray) -> tuple[int, ...]:
    out = []
    for w, word in enumerate(row.tolist()):
        base = 64 * w
        while word:
            low = word & -word
            out.append(base + low.bit_length() - 1)
            word ^= low
    return tuple(out)


# --------------------------------------------------------------------------
# loop kernels (numba-compiled when available)


if HAVE_JIT:

    @jit
    def popcount64(x):
        # SWAR popcount; the multiply wraps modulo 2^64 by design
        x = x - ((x >> _S1) & _M1)
        x = (x & _M2) + ((x >> _S2) & _M2)
        x = (x + (x >> _S4)) & _M4
        return np.int64((x * _H01) >> _S56)

else:

    def popcount64(x):
        return int(x).bit_count()


@jit
def _row_meet(a, b):
    c = 0
    for w in range(a.shape[0]):
        c += popcount64(a[w] & b[w])
    return c


@jit
def all_pairs_intersect_loop(masks):
    m = masks.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            hit = False
            for w in range(masks.shape[1]):
                if masks[i, w] & masks[j, w]:
                    hit = True
                    break
            if not hit:
                return False
    return True


@jit
def cross_intersect_loop(a, b):
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            hit = False
            for w in range(a.shape[1]):
                if a[i, w] & b[j, w]:
                    hit = True
                    break
            if not hit:
                return False
    return True


@jit
def intersection_histogram_loop(masks, k):
    """Ordered-pair counts (diagonal included) indexed by intersection size."""
    m = masks.shape[0]
    hist = np.zeros(k + 1, dtype=np.int64)
    for i in range(m):
        hist[k] += 1
        for j in range(i + 1, m):
            hist[_row_meet(masks[i], masks[j])] += 2
    return hist


@jit
def max_offdiag_meet_loop(masks):
    m = masks.shape[0]
    best = -1
    for i in range(m):
        for j in range(i + 1, m):
            c = _row_meet(masks[i], masks[j])
            if c > best:
                best = c
    return best


@jit
def meet_histogram_loop(masks, probe, k):
    hist = np.zeros(k + 1, dtype=np.int64)
    for i in range(masks.shape[0]):
        hist[_row_meet(masks[i], probe)] += 1
    return hist


@jit
def degree_counts_loop(masks, n):
    deg = np.zeros(n + 1, dtype=np.int64)
    for i in range(masks.shape[0]):
        for x in range(1, n + 1):
            if (masks[i, x >> 6] >> np.uint64(x & 63)) & _ONE:
                deg[x] += 1
    return deg


# --------------------------------------------------------------------------
# numpy kernels


def _blocks(m: int, width: int):
    step = max(1, _BLOCK_CELLS // max(1, m * width))
    for lo in range(0, m, step):
        yield lo, min(m, lo + step)


def _meet_block(masks: np.ndarray, other: np.ndarray, lo: int, hi: int) -> np.ndarray:
    return np.bitwise_count(masks[lo:hi, None, :] & other[None, :, :]).sum(axis=2, dtype=np.int64)


def all_pairs_intersect_np(masks: np.ndarray) -> bool:
    return cross_intersect_np(masks, masks)


def cross_intersect_np(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape[0] == 0 or b.shape[0] == 0:
        return True
    for lo, hi in _blocks(b.shape[0], a.shape[1]):
        if not _meet_block(a, b, lo, hi).all():
            return False
    return True


def intersection_histogram_np(masks: np.ndarray, k: int) -> np.ndarray:
    hist = np.zeros(k + 1, dtype=np.int64)
    for lo, hi in _blocks(masks.shape[0], masks.shape[1]):
        hist += np.bincount(_meet_block(masks, masks, lo, hi).ravel(), minlength=k + 1)[: k + 1]
    return hist


def max_offdiag_meet_np(masks: np.ndarray) -> int:
    m = masks.shape[0]
    best = -1
    for lo, hi in _blocks(m, masks.shape[1]):
        meet = _meet_block(masks, masks, lo, hi)
        meet[np.arange(hi - lo), np.arange(lo, hi)] = -1
        if meet.size:
            best = max(best, int(meet.max()))
    return best


def meet_histogram_np(masks: np.ndarray, probe: np.ndarray, k: int) -> np.ndarray:
    meet = np.bitwise_count(masks & probe[None, :]).sum(axis=1, dtype=np.int64)
    return np.bincount(meet, minlength=k + 1)[: k + 1].astype(np.int64)


def degree_counts_np(masks: np.ndarray, n: int) -> np.ndarray:
    if masks.shape[0] == 0:
        return np.zeros(n + 1, dtype=np.int64)
    raw = np.ascontiguousarray(masks).astype("<u8").view(np.uint8)
    bits = np.unpackbits(raw, axis=1, bitorder="little")
    return bits[:, : n + 1].sum(axis=0, dtype=np.int64)


# --------------------------------------------------------------------------
# depth-first search for a regular intersecting family of fixed size


@jit
def _lowest_bit(row):
    for w in range(row.shape[0]):
        x = row[w]
        if x:
            low = x & (~x + _ONE)
            return 64 * w + popcount64(low - _ONE)
    return -1


@jit
def _row_count(row):
    c = 0
    for w in range(row.shape[0]):
        c += popcount64(row[w])
    return c


@jit
def dfs_run(compat, elem, cand_elems, delta, target, stack, chosen, deg, state, max_nodes, floor):
    """Resumable include/exclude search over candidates in index order.

    ``stack[d]`` holds the still-open candidates at depth ``d``; the state
    vector is ``[depth, nodes]``. Members ``chosen[:floor]`` are fixed by the
    caller. Returns 1 when ``chosen[:target]`` is a solution, 0 when the
    subtree rooted at ``stack[floor]`` is exhausted and 2 when ``max_nodes``
    were spent (call again to resume).
    """
    n = elem.shape[0] - 1
    d = state[0]
    spent = 0
    while True:
        if d < floor:
            state[0] = d
            state[1] += spent
            return 0
        if spent >= max_nodes:
            state[0] = d
            state[1] += spent
            return 2
        spent += 1
        if d == target:
            state[0] = d
            state[1] += spent
            return 1
        row = stack[d]
        ok = _row_count(row) + d >= target
        if ok:
            for x in range(1, n + 1):
                if deg[x] + _row_meet(row, elem[x]) < delta:
                    ok = False
                    break
        if not ok:
            d -= 1
            if d >= floor:
                for t in range(cand_elems.shape[1]):
                    deg[cand_elems[chosen[d], t]] -= 1
            continue
        i = _lowest_bit(row)
        row[i >> 6] &= ~(_ONE << np.uint64(i & 63))
        nxt = stack[d + 1]
        for w in range(row.shape[0]):
            nxt[w] = row[w] & compat[i, w]
        chosen[d] = i
        for t in range(cand_elems.shape[1]):
            x = cand_elems[i, t]
            deg[x] += 1
            if deg[x] == delta:
                for w in range(nxt.shape[0]):
                    nxt[w] &= ~elem[x, w]
        d += 1


# --------------------------------------------------------------------------
# dispatch

if HAVE_JIT:
    all_pairs_intersect = all_pairs_intersect_loop
    cross_intersect = cross_intersect_loop
    intersection_histogram = intersection_histogram_loop
    max_offdiag_meet = max_offdiag_meet_loop
    meet_histogram = meet_histogram_loop
    degree_counts = degree_counts_loop
else:
    all_pairs_intersect = all_pairs_intersect_np
    cross_intersect = cross_intersect_np
    intersection_histogram = intersection_histogram_np
    max_offdiag_meet = max_offdiag_meet_np
    meet_histogram = meet_histogram_np
    degree_counts = degree_counts_np
