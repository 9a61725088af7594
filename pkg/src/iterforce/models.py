"""Grow clone/anticlone iterated graphs with exact lineage bookkeeping.

A growth step doubles the graph: vertex j gets a child at index |V|+j whose
neighborhood is N[j] (clone) or AN[j] (anticlone), both read off the graph
*before* the step.  A CloningPlan fixes the per-level, per-vertex choice and
covers the all-clone (ILT), all-anticlone (ILAT), per-level (ILM) and
per-vertex (IIM) regimes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .graphs import Graph, VertexSet

__all__ = [
    "CloningPlan",
    "Lineage",
    "IteratedGraph",
    "PlanError",
    "step",
    "build",
    "descendants",
    "clone_distance",
    "enumerate_plans",
    "parse_plan",
    "emit_plan",
    "level_set",
]

CLONE = "c"
ANTICLONE = "a"

_ALIASES = {"c": CLONE, "0": CLONE, "a": ANTICLONE, "1": ANTICLONE}


class PlanError(ValueError):
    pass


def _normalize_choices(choices: str) -> str:
    out = []
    for ch in choices:
        try:
            out.append(_ALIASES[ch.lower()])
        except KeyError:
            raise PlanError(f"choice character {ch!r} is not one of c/a/0/1") from None
    return "".join(out)


@dataclass(frozen=True)
class CloningPlan:
    """Per-level strings over {c, a}; level t operates on the graph before step t."""

    base_n: int
    levels: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.base_n < 0:
            raise PlanError("negative base size")
        width = self.base_n
        for t, lvl in enumerate(self.levels, start=1):
            if set(lvl) - {CLONE, ANTICLONE}:
                raise PlanError(f"level {t} contains characters outside {{c,a}}")
            if len(lvl) != width:
                raise PlanError(
                    f"level {t} has width {len(lvl)}, expected {width} "
                    f"(= base_n * 2^{t - 1})"
                )
            width *= 2

    @classmethod
    def ilt(cls, base_n: int, l: int) -> "CloningPlan":
        return cls(base_n, tuple(CLONE * (base_n << t) for t in range(l)))

    @classmethod
    def ilat(cls, base_n: int, l: int) -> "CloningPlan":
        return cls(base_n, tuple(ANTICLONE * (base_n << t) for t in range(l)))

    @classmethod
    def ilm(cls, base_n: int, pattern: str) -> "CloningPlan":
        pattern = _normalize_choices(pattern)
        return cls(base_n, tuple(ch * (base_n << t) for t, ch in enumerate(pattern)))

    @property
    def depth(self) -> int:
        return len(self.levels)

    def is_ilt(self) -> bool:
        return all(set(lvl) <= {CLONE} for lvl in self.levels)

    def is_ilat(self) -> bool:
        return all(set(lvl) <= {ANTICLONE} for lvl in self.levels)

    def is_ilm(self) -> bool:
        return all(len(set(lvl)) == 1 for lvl in self.levels)

    def mode(self) -> str:
        """Most specific regime this plan falls into."""
        if self.depth == 0 or self.is_ilt():
            return "ilt"
        if self.is_ilat():
            return "ilat"
        if self.is_ilm():
            return "ilm"
        return "iim"

    def truncated(self, t: int) -> "CloningPlan":
        return CloningPlan(self.base_n, self.levels[:t])

    def has_anticlone(self) -> bool:
        return any(ANTICLONE in lvl for lvl in self.levels)


@dataclass(frozen=True)
class Lineage:
    """Per-vertex level, parent link and creation kind (base/clone/anticlone)."""

    level: tuple[int, ...]
    parent: tuple[Optional[int], ...]
    kind: tuple[str, ...]


@dataclass(frozen=True)
class IteratedGraph:
    graph: Graph
    lineage: Lineage
    plan: CloningPlan
    base_n: int

    @classmethod
    def from_base(cls, base: Graph) -> "IteratedGraph":
        lin = Lineage(
            level=(0,) * base.n,
            parent=(None,) * base.n,
            kind=("base",) * base.n,
        )
        return cls(base, lin, CloningPlan(base.n, ()), base.n)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def depth(self) -> int:
        return self.plan.depth

    def level_of(self, v: int) -> int:
        return self.lineage.level[v]

    def size_before_step(self, t: int) -> int:
        """Vertex count of the snapshot step t operated on (t in 1..depth)."""
        return self.base_n << (t - 1)


def level_set(ig: IteratedGraph, t: int) -> VertexSet:
    """All vertices created at step t (the base graph for t = 0)."""
    n = ig.n
    if t == 0:
        return VertexSet(n, (1 << ig.base_n) - 1)
    if not 1 <= t <= ig.depth:
        raise ValueError(f"level {t} outside 0..{ig.depth}")
    lo = ig.base_n << (t - 1)
    hi = ig.base_n << t
    return VertexSet(n, ((1 << hi) - 1) & ~((1 << lo) - 1))


def step(ig: IteratedGraph, choices: str) -> IteratedGraph:
    """One growth step: vertex j begets |V|+j, a clone ('c') or anticlone ('a')."""
    choices = _normalize_choices(choices)
    g = ig.graph
    n = g.n
    if len(choices) != n:
        raise PlanError(f"step got {len(choices)} choices for {n} vertices")

    full = (1 << n) - 1
    child_nb = []
    for j in range(n):
        closed = g.adj[j] | (1 << j)
        child_nb.append(closed if choices[j] == CLONE else full & ~closed)

    rows = list(g.adj)
    for j, nb in enumerate(child_nb):
        child = n + j
        bits = nb
        while bits:
            low = bits & -bits
            rows[low.bit_length() - 1] |= 1 << child
            bits ^= low
    rows.extend(child_nb)
    new_graph = Graph(2 * n, tuple(rows))

    lin = ig.lineage
    t = ig.depth + 1
    new_lin = Lineage(
        level=lin.level + (t,) * n,
        parent=lin.parent + tuple(range(n)),
        kind=lin.kind + tuple("clone" if c == CLONE else "anticlone" for c in choices),
    )
    new_plan = CloningPlan(ig.base_n, ig.plan.levels + (choices,))
    return IteratedGraph(new_graph, new_lin, new_plan, ig.base_n)


def build(base: Graph, plan: CloningPlan) -> IteratedGraph:
    """Run every level of the plan on the base graph."""
    if plan.base_n != base.n:
        raise PlanError(f"plan is for base size {plan.base_n}, graph has {base.n}")
    ig = IteratedGraph.from_base(base)
    for t, choices in enumerate(plan.levels, start=1):
        if len(choices) != ig.n:
            raise PlanError(f"level {t} has width {len(choices)}, graph has {ig.n} vertices")
        ig = step(ig, choices)
    return ig


def descendants(ig: IteratedGraph, v: int) -> VertexSet:
    """Every vertex whose parent chain reaches v, excluding v itself."""
    n = ig.n
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range 0..{n - 1}")
    acc = 1 << v
    desc = 0
    for t in range(1, ig.depth + 1):
        size = ig.size_before_step(t)
        born = (acc & ((1 << size) - 1)) << size
        acc |= born
        desc |= born
    return VertexSet(n, desc)


def clone_distance(ig: IteratedGraph, x: int, y: int) -> int:
    """Number of levels at or after y's level holding an ancestor of x.

    Each parent hop lands in a strictly earlier level, so this equals the
    hop count from x up to y.  Raises if x is not a descendant of y.
    """
    for v in (x, y):
        if not 0 <= v < ig.n:
            raise ValueError(f"vertex {v} out of range 0..{ig.n - 1}")
    hops = 0
    cur: Optional[int] = x
    while cur is not None:
        if cur == y:
            return hops
        cur = ig.lineage.parent[cur]
        hops += 1
    raise ValueError(f"vertex {x} is not a descendant of {y}")


def _plan_count(base_n: int, l: int, mode: str) -> int:
    if mode == "ilt" or mode == "ilat":
        return 1
    if mode == "ilm":
        return 1 << l
    if mode == "iim":
        total = 1
        for t in range(l):
            total <<= base_n << t
        return total
    raise PlanError(f"unknown mode {mode!r}")


def enumerate_plans(base_n: int, l: int, mode: str, cap: int = 1 << 20) -> Iterator[CloningPlan]:
    """Exhaustive, duplicate-free plan stream in lexicographic order (c < a).

    The stream size is checked against ``cap`` up front; IIM grows as
    prod_t 2^(base_n * 2^(t-1)) so callers must keep base_n and l small.
    """
    mode = mode.lower()
    total = _plan_count(base_n, l, mode)
    if total > cap:
        raise PlanError(f"{mode} plan space for base_n={base_n}, l={l} has {total} plans, cap is {cap}")
    widths = [base_n << t for t in range(l)]
    if mode == "ilt":
        yield CloningPlan.ilt(base_n, l)
    elif mode == "ilat":
        yield CloningPlan.ilat(base_n, l)
    elif mode == "ilm":
        for pattern in product((CLONE, ANTICLONE), repeat=l):
            yield CloningPlan(base_n, tuple(ch * w for ch, w in zip(pattern, widths)))
    else:
        level_choices = [
            ["".join(bits) for bits in product((CLONE, ANTICLONE), repeat=w)]
            for w in widths
        ]
        for combo in product(*level_choices):
            yield CloningPlan(base_n, combo)


def parse_plan(text: str, base_n: int) -> CloningPlan:
    """Read a plan file: one {c,a} line per level, or a shorthand header.

    Shorthands: ``ILT l``, ``ILAT l``, ``ILM cac...`` (one letter per level).
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        return CloningPlan(base_n, ())
    head = lines[0].split()
    key = head[0].lower()
    if key in ("ilt", "ilat"):
        if len(head) != 2 or not head[1].isdigit():
            raise PlanError(f"{key.upper()} header needs a level count, got {lines[0]!r}")
        l = int(head[1])
        return CloningPlan.ilt(base_n, l) if key == "ilt" else CloningPlan.ilat(base_n, l)
    if key == "ilm":
        if len(head) != 2:
            raise PlanError(f"ILM header needs a c/a pattern, got {lines[0]!r}")
        return CloningPlan.ilm(base_n, head[1])
    return CloningPlan(base_n, tuple(_normalize_choices(ln) for ln in lines))


def emit_plan(plan: CloningPlan) -> str:
    return "\n".join(plan.levels) + ("\n" if plan.levels else "")
