"""Hot search kernels over packed uint64 adjacency rows.

Everything here is written to run two ways: interpreted (the pure
numpy/python fallback) and compiled via numba.njit (applied in
``kernels``).  Helpers carry ``register_jitable`` so the compiled entry
points can inline them while the interpreted path stays numba-free.

Conventions: adjacency is a C-contiguous (n, nwords) uint64 array, vertex v
lives in word v >> 6 at bit v & 63.  All bit values are np.uint64; loop
counters and counts are plain ints so nothing promotes to float.
"""

from __future__ import annotations

import numpy as np

try:
    from numba.extending import register_jitable
except ImportError:  # pragma: no cover - numba is an install dependency
    def register_jitable(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap

U0 = np.uint64(0)
U1 = np.uint64(1)
U6 = np.uint64(6)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
S1 = np.uint64(1)
S2 = np.uint64(2)
S4 = np.uint64(4)
S8 = np.uint64(8)
S16 = np.uint64(16)
S32 = np.uint64(32)


@register_jitable
def _pop64(x):
    """Bit count of one uint64 word (SWAR, no overflowing ops)."""
    x = x - ((x >> S1) & M1)
    x = (x & M2) + ((x >> S2) & M2)
    x = (x + (x >> S4)) & M4
    x = x + (x >> S8)
    x = x + (x >> S16)
    x = x + (x >> S32)
    return int(x & np.uint64(127))


@register_jitable
def _get_bit(words, v):
    return ((words[v >> 6] >> np.uint64(v & 63)) & U1) != U0


@register_jitable
def _set_bit(words, v):
    words[v >> 6] |= U1 << np.uint64(v & 63)


@register_jitable
def _count_words(words, nwords):
    total = 0
    for w in range(nwords):
        total += _pop64(words[w])
    return total


@register_jitable
def _closure_inplace(adjw, n, nwords, words):
    """Drive ``words`` to the forcing fixed point; returns the forced count."""
    total = _count_words(words, nwords)
    progress = True
    while progress and total < n:
        progress = False
        for u in range(n):
            if _get_bit(words, u):
                cnt = 0
                hit_w = 0
                hit_b = U0
                for w in range(nwords):
                    x = adjw[u, w] & ~words[w]
                    if x != U0:
                        cnt += _pop64(x)
                        if cnt > 1:
                            break
                        hit_w = w
                        hit_b = x
                if cnt == 1:
                    words[hit_w] |= hit_b
                    total += 1
                    progress = True
    return total


def closure_count(adjw, n, nwords, words):
    """Public wrapper: in-place closure of ``words``, forced count returned."""
    return _closure_inplace(adjw, n, nwords, words)


@register_jitable
def _is_fort_words(adjw, n, nwords, words):
    for u in range(n):
        if not _get_bit(words, u):
            cnt = 0
            for w in range(nwords):
                x = adjw[u, w] & words[w]
                if x != U0:
                    cnt += _pop64(x)
                    if cnt > 1:
                        break
            if cnt == 1:
                return False
    return True


def zf_level(adjw, n, nwords, k, c0_lo, c0_hi):
    """Scan k-subsets with smallest element in [c0_lo, c0_hi) in lexicographic
    order for a zero forcing set.  Returns (found, explored, witness)."""
    witness = np.full(k, -1, np.int64)
    comb = np.empty(k, np.int64)
    words = np.empty(nwords, np.uint64)
    explored = 0
    for c0 in range(c0_lo, c0_hi):
        if n - c0 < k:
            continue
        for i in range(k):
            comb[i] = c0 + i
        while True:
            for w in range(nwords):
                words[w] = U0
            for i in range(k):
                _set_bit(words, comb[i])
            explored += 1
            if _closure_inplace(adjw, n, nwords, words) == n:
                for i in range(k):
                    witness[i] = comb[i]
                return 1, explored, witness
            i = k - 1
            while i >= 1 and comb[i] == n - k + i:
                i -= 1
            if i == 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return 0, explored, witness


def fort_level(adjw, n, nwords, size, c0_lo, c0_hi):
    """Scan size-subsets with smallest element in [c0_lo, c0_hi) in
    lexicographic order for a fort.  Returns (found, explored, witness)."""
    witness = np.full(size, -1, np.int64)
    comb = np.empty(size, np.int64)
    words = np.empty(nwords, np.uint64)
    explored = 0
    for c0 in range(c0_lo, c0_hi):
        if n - c0 < size:
            continue
        for i in range(size):
            comb[i] = c0 + i
        while True:
            for w in range(nwords):
                words[w] = U0
            for i in range(size):
                _set_bit(words, comb[i])
            explored += 1
            if _is_fort_words(adjw, n, nwords, words):
                for i in range(size):
                    witness[i] = comb[i]
                return 1, explored, witness
            i = size - 1
            while i >= 1 and comb[i] == n - size + i:
                i -= 1
            if i == 0:
                break
            comb[i] += 1
            for j in range(i + 1, size):
                comb[j] = comb[j - 1] + 1
    return 0, explored, witness
