"""Zero forcing and loop zero forcing: closures, forts, replayable chronologies.

Rounds are synchronous: every force of a round is judged against the state at
the start of the round, forcers scanned in ascending index.  The fixed point
is order-independent; the chronology is the deterministic witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, VertexSet

__all__ = [
    "Force",
    "Chronology",
    "ReplayResult",
    "closure",
    "closure_set",
    "is_zero_forcing_set",
    "loop_closure",
    "is_fort",
    "replay_schedule",
    "parse_chronology",
    "emit_chronology",
]


@dataclass(frozen=True)
class Force:
    round: int
    forcer: int
    target: int


@dataclass(frozen=True)
class Chronology:
    """Ordered force records; a certificate that a closure really happened."""

    steps: tuple[Force, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def max_round(self) -> int:
        return max((f.round for f in self.steps), default=0)


def closure(g: Graph, start: VertexSet) -> tuple[VertexSet, Chronology]:
    """Fixed point of the forcing rule from ``start``, with a witnessing chronology."""
    _check_universe(g, start)
    forced = start.bits
    full = (1 << g.n) - 1
    steps: list[Force] = []
    rnd = 0
    while forced != full:
        rnd += 1
        found = 0
        bits = forced
        while bits:
            low = bits & -bits
            u = low.bit_length() - 1
            bits ^= low
            rem = g.adj[u] & ~forced
            if rem and rem & (rem - 1) == 0 and not rem & found:
                steps.append(Force(rnd, u, rem.bit_length() - 1))
                found |= rem
        if not found:
            break
        forced |= found
    return VertexSet(g.n, forced), Chronology(tuple(steps))


def closure_set(g: Graph, start: VertexSet) -> VertexSet:
    return closure(g, start)[0]


def is_zero_forcing_set(g: Graph, start: VertexSet) -> bool:
    return closure_set(g, start).bits == (1 << g.n) - 1


def loop_closure(g: Graph, start: VertexSet) -> VertexSet:
    """Fixed point of forcing plus the rule that a fully-surrounded vertex turns.

    A vertex with every neighbor forced becomes forced; isolated vertices
    qualify vacuously.  Always a superset of the plain closure.
    """
    _check_universe(g, start)
    forced = start.bits
    full = (1 << g.n) - 1
    while forced != full:
        found = 0
        bits = forced
        while bits:
            low = bits & -bits
            u = low.bit_length() - 1
            bits ^= low
            rem = g.adj[u] & ~forced
            if rem and rem & (rem - 1) == 0:
                found |= rem
        bits = full & ~forced
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            if g.adj[v] & ~forced == 0:
                found |= low
        if not found:
            break
        forced |= found
    return VertexSet(g.n, forced)


def is_fort(g: Graph, candidate: VertexSet) -> bool:
    """True iff the set is nonempty and no outside vertex sees exactly one member."""
    _check_universe(g, candidate)
    if not candidate.bits:
        return False
    outside = ((1 << g.n) - 1) & ~candidate.bits
    bits = outside
    while bits:
        low = bits & -bits
        v = low.bit_length() - 1
        bits ^= low
        if (g.adj[v] & candidate.bits).bit_count() == 1:
            return False
    return True


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    failed_step: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def replay_schedule(g: Graph, start: VertexSet, schedule: Chronology | Sequence[Force]) -> ReplayResult:
    """Execute forces in order from ``start``; legal iff each forcer is forced
    with the target as its unique unforced neighbor, ending fully forced."""
    _check_universe(g, start)
    forced = start.bits
    steps = schedule.steps if isinstance(schedule, Chronology) else tuple(schedule)
    for i, f in enumerate(steps):
        if not 0 <= f.forcer < g.n or not 0 <= f.target < g.n:
            return ReplayResult(False, i, f"force {f.forcer}->{f.target} outside the graph")
        if not (forced >> f.forcer) & 1:
            return ReplayResult(False, i, f"forcer {f.forcer} is not forced yet")
        rem = g.adj[f.forcer] & ~forced
        if rem != 1 << f.target:
            return ReplayResult(
                False, i,
                f"target {f.target} is not the unique unforced neighbor of {f.forcer}",
            )
        forced |= rem
    if forced != (1 << g.n) - 1:
        return ReplayResult(False, len(steps), "schedule ends with unforced vertices")
    return ReplayResult(True)


def parse_chronology(text: str) -> Chronology:
    """Read "round forcer target" lines."""
    steps = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"chronology line {ln!r} is not 'round forcer target'")
        steps.append(Force(int(parts[0]), int(parts[1]), int(parts[2])))
    return Chronology(tuple(steps))


def emit_chronology(ch: Chronology) -> str:
    return "".join(f"{f.round} {f.forcer} {f.target}\n" for f in ch.steps)


def _check_universe(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise ValueError(f"vertex set over {s.n} vertices used on a {g.n}-vertex graph")
