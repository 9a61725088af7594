"""Naive reference oracles built on python sets and brute enumeration.

These deliberately share nothing with the package's bitset/kernel path:
adjacency is a list of sets, closures loop over sets, burning follows the
step recurrence directly, and optima come from exhaustive scans.
"""

from __future__ import annotations

from itertools import combinations, product


def neighbor_sets(g) -> list[set[int]]:
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def naive_closure(nbrs: list[set[int]], start) -> set[int]:
    forced = set(start)
    changed = True
    while changed:
        changed = False
        for u in list(forced):
            unforced = [w for w in nbrs[u] if w not in forced]
            if len(unforced) == 1:
                forced.add(unforced[0])
                changed = True
    return forced


def naive_loop_closure(nbrs: list[set[int]], start) -> set[int]:
    n = len(nbrs)
    forced = set(start)
    changed = True
    while changed:
        changed = False
        for u in list(forced):
            unforced = [w for w in nbrs[u] if w not in forced]
            if len(unforced) == 1:
                forced.add(unforced[0])
                changed = True
        for v in range(n):
            if v not in forced and nbrs[v] <= forced:
                forced.add(v)
                changed = True
    return forced


def naive_zero_forcing(nbrs: list[set[int]]) -> tuple[int, tuple[int, ...]]:
    n = len(nbrs)
    for k in range(1, n + 1):
        for cand in combinations(range(n), k):
            if len(naive_closure(nbrs, cand)) == n:
                return k, cand
    raise AssertionError("V always forces itself")


def naive_failed_zero_forcing(nbrs: list[set[int]]) -> int:
    n = len(nbrs)
    best = -1
    for k in range(n, -1, -1):
        for cand in combinations(range(n), k):
            if len(naive_closure(nbrs, cand)) != n:
                return k
    return best


def naive_is_fort(nbrs: list[set[int]], cand: set[int]) -> bool:
    if not cand:
        return False
    n = len(nbrs)
    for v in range(n):
        if v not in cand and len(nbrs[v] & cand) == 1:
            return False
    return True


def naive_min_fort(nbrs: list[set[int]]) -> int:
    n = len(nbrs)
    for k in range(1, n + 1):
        for cand in combinations(range(n), k):
            if naive_is_fort(nbrs, set(cand)):
                return k
    raise AssertionError("V is always a fort")


def _burn_rounds(nbrs: list[set[int]], sources: tuple[int, ...], rounds: int) -> set[int]:
    """The step recurrence: ignite sources[i] in round i+1, spread each round."""
    burned: set[int] = set()
    for t in range(rounds):
        spread = set(burned)
        for u in burned:
            spread |= nbrs[u]
        burned = spread
        if t < len(sources):
            burned.add(sources[t])
    return burned


def naive_burning(nbrs: list[set[int]]) -> int:
    n = len(nbrs)
    for t in range(1, n + 1):
        for seq in product(range(n), repeat=t):
            if len(_burn_rounds(nbrs, seq, t)) == n:
                return t
    raise AssertionError("connected graphs always burn")


def naive_superfluous_burning(nbrs: list[set[int]]) -> int:
    n = len(nbrs)
    for t in range(2, n + 2):
        for seq in product(range(n), repeat=t - 1):
            if len(_burn_rounds(nbrs, seq, t)) == n:
                return t
    raise AssertionError("connected graphs always burn")
