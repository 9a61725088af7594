"""Exact solvers with certificates: Z, FZ via minimum forts, b and b*.

Searches ascend through candidate sizes, enumerating lexicographically so
witnesses are the lexicographically least at the optimal size.  Budgets are
enforced at size-level granularity (a level either runs to completion or is
never started), which keeps reports byte-identical across runs and worker
counts; on exhaustion a report carries an honest (lower, upper) bracket and
never a wrong exact value.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .forcing import is_fort, is_zero_forcing_set
from .graphs import Graph, VertexSet
from .kernels import Backend, get_backend, pack_graph

__all__ = [
    "Budget",
    "SolverReport",
    "DisconnectedGraphError",
    "zero_forcing_number",
    "failed_zero_forcing_number",
    "min_fort",
    "burning_number",
    "superfluous_burning_number",
    "zf_lower_bounds",
]


class DisconnectedGraphError(ValueError):
    """Burning is only defined here for connected graphs."""


@dataclass(frozen=True)
class Budget:
    """Caps on a search: candidate evaluations and wall-clock seconds.

    ``None`` means unlimited.  Candidate caps are checked before each size
    level starts, so results do not depend on timing or worker count.
    """

    max_candidates: Optional[int] = None
    wall_seconds: Optional[float] = None

    def level_allowed(self, spent: int, level_size: int, started: float) -> bool:
        if self.max_candidates is not None and spent + level_size > self.max_candidates:
            return False
        if self.wall_seconds is not None and time.monotonic() - started > self.wall_seconds:
            return False
        return True


@dataclass
class SolverReport:
    parameter: str
    value: Optional[int]
    witness: object
    explored: int
    bounds: tuple[int, int]
    budget_exhausted: bool = False
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {
            "parameter": self.parameter,
            "value": self.value,
            "witness": self.witness,
            "explored": self.explored,
            "bounds": list(self.bounds),
            "budget_exhausted": self.budget_exhausted,
        }
        doc.update(self.extras)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _run_level(
    kernel, adjw, n: int, nwords: int, size: int, workers: int
) -> tuple[Optional[list[int]], int]:
    """One size level, chunked by smallest element when workers > 1.

    Explored counts are position-of-hit in global lexicographic order, so the
    result is identical for every worker count.
    """
    hi = n - size + 1
    if hi <= 0:
        return None, 0
    if workers <= 1:
        found, explored, witness = kernel(adjw, n, nwords, size, 0, hi)
        return (witness.tolist() if found else None), int(explored)

    explored = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [pool.submit(kernel, adjw, n, nwords, size, c0, c0 + 1) for c0 in range(hi)]
        try:
            for job in jobs:
                found, count, witness = job.result()
                explored += int(count)
                if found:
                    return witness.tolist(), explored
        finally:
            for job in jobs:
                job.cancel()
    return None, explored


def zero_forcing_number(
    g: Graph,
    budget: Budget | None = None,
    workers: int = 1,
    backend: Backend | None = None,
) -> SolverReport:
    """Exact Z(g): ascend k from the minimum-degree bound, lexicographic scan."""
    if g.n < 1:
        raise ValueError("zero forcing needs at least one vertex")
    budget = budget or Budget()
    B = backend or get_backend()
    adjw, n, nwords = pack_graph(g)
    lower = max(1, min(g.degrees()))
    upper = n
    started = time.monotonic()
    explored = 0
    for k in range(lower, n + 1):
        level_size = math.comb(n, k)
        if not budget.level_allowed(explored, level_size, started):
            return SolverReport("Z", None, None, explored, (k, upper), True)
        witness, count = _run_level(B.zf_level, adjw, n, nwords, k, workers)
        explored += count
        if witness is not None:
            ws = VertexSet.from_indices(n, witness)
            if not is_zero_forcing_set(g, ws):
                raise RuntimeError("zero forcing witness failed re-verification")
            return SolverReport("Z", k, witness, explored, (lower, upper))
    raise RuntimeError("no zero forcing set found; V itself always forces")


def min_fort(
    g: Graph,
    cap: int | None = None,
    budget: Budget | None = None,
    workers: int = 1,
    backend: Backend | None = None,
) -> SolverReport:
    """Smallest fort of size <= cap (default n), or a definitive 'none <= cap'."""
    if g.n < 1:
        raise ValueError("fort search needs at least one vertex")
    cap = g.n if cap is None else min(cap, g.n)
    budget = budget or Budget()
    B = backend or get_backend()
    adjw, n, nwords = pack_graph(g)
    started = time.monotonic()
    explored = 0
    for size in range(1, cap + 1):
        level_size = math.comb(n, size)
        if not budget.level_allowed(explored, level_size, started):
            return SolverReport("min_fort", None, None, explored, (size, n), True)
        witness, count = _run_level(B.fort_level, adjw, n, nwords, size, workers)
        explored += count
        if witness is not None:
            ws = VertexSet.from_indices(n, witness)
            if not is_fort(g, ws):
                raise RuntimeError("fort witness failed re-verification")
            return SolverReport("min_fort", size, witness, explored, (1, n))
    # V itself is always a fort, so an uncapped search cannot get here.
    return SolverReport("min_fort", None, None, explored, (cap + 1, n), False)


def failed_zero_forcing_number(
    g: Graph,
    budget: Budget | None = None,
    fort_cap: int | None = None,
    workers: int = 1,
    backend: Backend | None = None,
) -> SolverReport:
    """Exact FZ(g) = n - (minimum fort size); witness is the fort plus the
    failed starting set V minus fort."""
    fort = min_fort(g, fort_cap, budget, workers, backend)
    n = g.n
    if fort.value is not None:
        fz = n - fort.value
        failed = sorted(set(range(n)) - set(fort.witness))
        witness = {"fort": fort.witness, "failed_set": failed}
        return SolverReport("FZ", fz, witness, fort.explored, (0, n - 1),
                            extras={"min_fort_size": fort.value})
    # fort size is somewhere in (reached, n]: FZ in [0, n - reached)
    reached = fort.bounds[0]
    return SolverReport("FZ", None, None, fort.explored, (0, n - reached),
                        fort.budget_exhausted)


def zf_lower_bounds(g: Graph) -> dict:
    """Bounds report: minimum degree (used for pruning) and average degree
    (informational only; it can exceed Z on small graphs such as paths)."""
    if g.n < 1:
        raise ValueError("empty graph")
    degs = g.degrees()
    avg = Fraction(sum(degs), g.n)
    return {
        "min_degree": min(degs),
        "average_degree": float(avg),
        "average_degree_exact": f"{avg.numerator}/{avg.denominator}",
        "asserted_lower_bound": max(1, min(degs)),
        "note": "average degree is reported for information and never used to prune",
    }


# ---------------------------------------------------------------------------
# burning


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        grow = 0
        bits = frontier
        while bits:
            low = bits & -bits
            grow |= g.adj[low.bit_length() - 1]
            bits ^= low
        frontier = grow & ~seen
        seen |= frontier
        d += 1
        bits = frontier
        while bits:
            low = bits & -bits
            dist[low.bit_length() - 1] = d
            bits ^= low
    return dist


class _BurnSpace:
    """Distance balls of a connected graph, as int masks per radius."""

    def __init__(self, g: Graph):
        if g.n < 1:
            raise ValueError("burning needs at least one vertex")
        if not g.is_connected():
            raise DisconnectedGraphError(
                "burning is undefined on disconnected graphs; split into components first"
            )
        self.n = g.n
        self.full = (1 << g.n) - 1
        dists = [_bfs_distances(g, v) for v in range(g.n)]
        self.ecc = [max(row) for row in dists]
        self.radius = min(self.ecc)
        # balls[r][v] for r in 0..radius
        balls = [[1 << v for v in range(g.n)]]
        for r in range(1, self.radius + 1):
            row = []
            for v in range(g.n):
                mask = 0
                dv = dists[v]
                for u in range(g.n):
                    if dv[u] <= r:
                        mask |= 1 << u
                row.append(mask)
            balls.append(row)
        self.balls = balls
        self.max_ball = [max(b.bit_count() for b in row) for row in balls]

    def ball(self, v: int, r: int) -> int:
        if r >= len(self.balls):
            return self.full
        return self.balls[r][v]

    def max_ball_size(self, r: int) -> int:
        if r >= len(self.max_ball):
            return self.n
        return self.max_ball[r]


class _Counter:
    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


def _cover_search(
    space: _BurnSpace,
    covered: int,
    radii: tuple[int, ...],
    counter: _Counter,
) -> Optional[list[tuple[int, int]]]:
    """Find (radius, center) placements covering everything, one ball per
    radius, branching on the lowest uncovered vertex.  Deterministic."""
    if covered == space.full:
        return []
    if not radii:
        return None
    need = (space.full & ~covered).bit_count()
    if need > sum(space.max_ball_size(r) for r in radii):
        return None
    f = ((space.full & ~covered) & -(space.full & ~covered)).bit_length() - 1
    for i, r in enumerate(radii):
        rest = radii[:i] + radii[i + 1:]
        candidates = space.ball(f, r)
        bits = candidates
        while bits:
            low = bits & -bits
            x = low.bit_length() - 1
            bits ^= low
            counter.count += 1
            sub = _cover_search(space, covered | space.ball(x, r), rest, counter)
            if sub is not None:
                return [(r, x)] + sub
    return None


def _burnable(space: _BurnSpace, radii: Sequence[int], counter: _Counter) -> bool:
    return _cover_search(space, 0, tuple(sorted(radii, reverse=True)), counter) is not None


def _lex_least_sources(
    space: _BurnSpace, t: int, radii: Sequence[int], counter: _Counter
) -> list[int]:
    """Refine to the lexicographically least source sequence: fix positions
    left to right, keeping each choice only if the rest stays completable."""
    sources: list[int] = []
    covered = 0
    remaining = list(radii)
    for r in remaining:
        for x in range(space.n):
            counter.count += 1
            rest = [q for q in remaining[len(sources) + 1:]]
            sub = _cover_search(
                space, covered | space.ball(x, r), tuple(sorted(rest, reverse=True)), counter
            )
            if sub is not None:
                sources.append(x)
                covered |= space.ball(x, r)
                break
        else:
            raise RuntimeError("lexicographic refinement lost a known-burnable instance")
    return sources


def _covered_by(space: _BurnSpace, sources: Sequence[int], radii: Sequence[int]) -> list[int]:
    out = [-1] * space.n
    for v in range(space.n):
        for i, (x, r) in enumerate(zip(sources, radii)):
            if (space.ball(x, r) >> v) & 1:
                out[v] = i + 1
                break
    return out


def _burning_search(
    g: Graph,
    budget: Budget | None,
    superfluous: bool,
) -> SolverReport:
    budget = budget or Budget()
    space = _BurnSpace(g)
    n = g.n
    started = time.monotonic()
    counter = _Counter()
    upper = space.radius + 1 + (1 if superfluous else 0)
    t_lo = 2 if superfluous else 1
    param = "b_star" if superfluous else "b"
    for t in range(t_lo, upper + 1):
        radii = list(range(t - 1, 0, -1)) + ([] if superfluous else [0])
        # feasibility precheck doubles as a cheap lower bound
        if sum(space.max_ball_size(r) for r in radii) < n:
            continue
        if budget.max_candidates is not None and counter.count >= budget.max_candidates:
            return SolverReport(param, None, None, counter.count, (t, upper), True)
        if budget.wall_seconds is not None and time.monotonic() - started > budget.wall_seconds:
            return SolverReport(param, None, None, counter.count, (t, upper), True)
        if _burnable(space, radii, counter):
            sources = _lex_least_sources(space, t, radii, counter)
            covered = _covered_by(space, sources, radii)
            if -1 in covered:
                raise RuntimeError("burning witness failed coverage re-verification")
            witness = {"sources": sources, "covered_by": covered}
            extras = {"rounds": t}
            if superfluous:
                extras["final_source_superfluous"] = True
            return SolverReport(param, t, witness, counter.count, (t_lo, upper), extras=extras)
    raise RuntimeError("burning search exceeded its radius-based upper bound")


def burning_number(g: Graph, budget: Budget | None = None) -> SolverReport:
    """Exact b(g): least t with balls of radii t-1..0 covering every vertex."""
    return _burning_search(g, budget, superfluous=False)


def superfluous_burning_number(g: Graph, budget: Budget | None = None) -> SolverReport:
    """Exact b*(g): least t whose first t-1 sources already cover everything,
    making the final source redundant.  Always b or b+1."""
    return _burning_search(g, budget, superfluous=True)
