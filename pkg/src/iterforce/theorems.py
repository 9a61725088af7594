"""Desk-scale mechanical checks of the clone/anticlone forcing and burning claims.

Each check builds the instance, replays the relevant explicit construction
(obstruction sets, two-stage forcing schedules, source pairs), and confronts
it with the exact solvers.  A violated verdict always carries a concrete
counterexample certificate; skipped verdicts carry the reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .forcing import (
    Chronology,
    Force,
    ReplayResult,
    closure,
    closure_set,
    is_fort,
    is_zero_forcing_set,
    loop_closure,
    replay_schedule,
)
from .graphs import Graph, VertexSet, emit_graph6
from .models import (
    CloningPlan,
    IteratedGraph,
    build,
    descendants,
    enumerate_plans,
    level_set,
)
from .solvers import (
    Budget,
    burning_number,
    min_fort,
    superfluous_burning_number,
    zero_forcing_number,
)

__all__ = [
    "InstanceResult",
    "TheoremReport",
    "fzf_minus2_conditions",
    "check_fzf_ilat_lower",
    "classify_fzf_minus2",
    "check_fzf_not_minus3",
    "check_fzf_minus4_family",
    "ilt_descendant_lift",
    "ilt_forcing_schedule",
    "check_ilt_lift",
    "check_ilat_zf_bounds",
    "check_loop_lift",
    "check_burning_bound",
    "DEFAULT_CONFIG",
    "parse_config",
    "run_verification",
    "reports_to_doc",
    "format_table",
    "overall_status",
]

VERIFIED = "verified"
VIOLATED = "violated"
SKIPPED = "skipped"


@dataclass
class InstanceResult:
    claim: str
    instance: dict
    verdict: str
    details: dict = field(default_factory=dict)


@dataclass
class TheoremReport:
    claim: str
    instances: list[InstanceResult] = field(default_factory=list)

    def counts(self) -> dict:
        out = {VERIFIED: 0, VIOLATED: 0, SKIPPED: 0}
        for inst in self.instances:
            out[inst.verdict] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts()[VIOLATED] == 0


def _instance_tag(base: Graph, l: int, **extra) -> dict:
    tag = {"base": emit_graph6(base), "base_n": base.n, "l": l}
    tag.update(extra)
    return tag


# ---------------------------------------------------------------------------
# failed zero forcing on anticlone towers


def _anticlone_obstruction_sextet(base_n: int, u: int) -> list[int]:
    """The six-vertex obstruction built from base vertex u: anticlone u at
    level 1, that at level 2, then both chains' anticlones at levels 3-5."""
    v = u + base_n           # level-1 anticlone of u
    w = v + 2 * base_n       # level-2 anticlone of v
    v3 = v + 4 * base_n
    w3 = w + 4 * base_n
    v34 = v3 + 8 * base_n
    w34 = w3 + 8 * base_n
    return [v3, w3, v34, w34, v34 + 16 * base_n, w34 + 16 * base_n]


def check_fzf_ilat_lower(
    base: Graph, l: int, budget: Budget | None = None, workers: int = 1
) -> TheoremReport:
    """FZ of an all-anticlone tower of depth >= 5 is at least n - 6: the
    explicit six-vertex set has two members inside and two outside every
    closed neighborhood, hence is a fort whose complement stalls."""
    if l < 5:
        raise ValueError(f"anticlone FZ floor needs depth >= 5, got {l}")
    report = TheoremReport("fzf-ilat-lower")
    ig = build(base, CloningPlan.ilat(base.n, l))
    g = ig.graph
    n = g.n
    per_u = []
    for u in range(base.n):
        members = _anticlone_obstruction_sextet(base.n, u)
        uset = VertexSet.from_indices(n, members)
        both_two = True
        bad_vertex = None
        for a in range(n):
            closed = g.closed_neighborhood(a)
            anti = g.anti_neighborhood(a)
            if len(closed & uset) < 2 or len(anti & uset) < 2:
                both_two = False
                bad_vertex = a
                break
        fort_ok = is_fort(g, uset)
        stalls = closure_set(g, uset.complement()).bits != (1 << n) - 1
        per_u.append(
            {
                "u": u,
                "obstruction": members,
                "both_at_least_two": both_two,
                "bad_vertex": bad_vertex,
                "is_fort": fort_ok,
                "complement_stalls": stalls,
                "ok": both_two and fort_ok and stalls,
            }
        )
    all_ok = all(entry["ok"] for entry in per_u)
    any_ok = any(entry["ok"] for entry in per_u)
    details: dict = {"per_base_vertex": per_u, "n": n}
    if not all_ok and any_ok:
        details["warning"] = "construction failed for some base vertices; exists-semantics applied"

    fort_report = min_fort(g, cap=6, budget=budget, workers=workers)
    details["min_fort_cap6"] = fort_report.to_dict()
    if fort_report.value is not None:
        details["fz"] = n - fort_report.value
        fz_ok = n - fort_report.value >= n - 6
    elif fort_report.budget_exhausted:
        # the explicit set already witnesses a fort of size 6
        fz_ok = any_ok
        details["fz_note"] = "exact fort search budget-limited; explicit set stands as witness"
    else:
        fz_ok = False

    verdict = VERIFIED if (any_ok and fz_ok) else VIOLATED
    report.instances.append(InstanceResult(report.claim, _instance_tag(base, l), verdict, details))
    return report


def _has_dominating_vertex(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return any(row | (1 << v) == full for v, row in enumerate(g.adj))


def fzf_minus2_conditions(base: Graph) -> dict:
    """The three base-graph conditions governing FZ = n - 2 on anticlone towers."""
    closed_twins = False
    for u in range(base.n):
        cu = base.adj[u] | (1 << u)
        for v in range(u + 1, base.n):
            if cu == base.adj[v] | (1 << v):
                closed_twins = True
    isolate_plus_dominator = False
    full = (1 << base.n) - 1
    for x in range(base.n):
        if base.adj[x] == 0:
            rest = full & ~(1 << x)
            for v in range(base.n):
                if v != x and (base.adj[v] | (1 << v)) & rest == rest:
                    isolate_plus_dominator = True
    is_k1 = base.n == 1
    return {
        "closed_twins": closed_twins,
        "isolate_plus_dominator": isolate_plus_dominator,
        "is_k1": is_k1,
        "any": closed_twins or isolate_plus_dominator or is_k1,
    }


def classify_fzf_minus2(base: Graph, l: int) -> TheoremReport:
    """FZ(anticlone tower) = n - 2 exactly when a base condition holds, except
    in the depth-1 degenerate case: a dominating base vertex makes its level-1
    anticlone isolated, so FZ = n - 1 there regardless of the conditions."""
    if l < 1:
        raise ValueError(f"classification needs depth >= 1, got {l}")
    report = TheoremReport("fzf-minus2")
    conditions = fzf_minus2_conditions(base)
    ig = build(base, CloningPlan.ilat(base.n, l))
    n = ig.n
    fort_report = min_fort(ig.graph, cap=2)
    fort_size = fort_report.value  # 1, 2 or None
    dominator = _has_dominating_vertex(base)
    degenerate = l == 1 and dominator

    actual_minus2 = fort_size == 2
    expected_minus2 = conditions["any"] and not degenerate
    isolate_diag_ok = (fort_size == 1) == degenerate
    refined_ok = actual_minus2 == expected_minus2 and isolate_diag_ok
    literal_ok = actual_minus2 == conditions["any"]

    details = {
        "conditions": conditions,
        "n": n,
        "min_fort_capped_at_2": fort_size,
        "fz_when_decided": None if fort_size is None else n - fort_size,
        "base_has_dominating_vertex": dominator,
        "degenerate_isolate_case": degenerate,
        "literal_biconditional_holds": literal_ok,
        "fort_witness": fort_report.witness,
    }
    if degenerate:
        details["note"] = (
            "depth-1 anticlone of a dominating vertex is isolated, giving FZ = n - 1; "
            "the classification applies outside this case"
        )
    verdict = VERIFIED if refined_ok else VIOLATED
    report.instances.append(InstanceResult(report.claim, _instance_tag(base, l), verdict, details))
    return report


def check_fzf_not_minus3(base: Graph, l: int, budget: Budget | None = None) -> TheoremReport:
    """No anticlone tower of depth >= 4 has FZ = n - 3: exhaustive fort
    search through size 3 never finds a minimum fort of exactly 3."""
    if l < 4:
        raise ValueError(f"FZ != n - 3 needs depth >= 4, got {l}")
    report = TheoremReport("fzf-not-minus3")
    ig = build(base, CloningPlan.ilat(base.n, l))
    fort_report = min_fort(ig.graph, cap=3, budget=budget)
    details = {"n": ig.n, "min_fort_capped_at_3": fort_report.to_dict()}
    if fort_report.budget_exhausted:
        verdict = SKIPPED
        details["reason"] = "budget exhausted before the size-3 level completed"
    else:
        small = fort_report.value is not None and fort_report.value <= 2
        details["fort_of_size_le2"] = small
        details["no_size3_fort_when_no_size2"] = fort_report.value != 3
        verdict = VERIFIED if fort_report.value != 3 else VIOLATED
    report.instances.append(InstanceResult(report.claim, _instance_tag(base, l), verdict, details))
    return report


def check_fzf_minus4_family(
    base: Graph, u: int, v: int, l: int, budget: Budget | None = None
) -> TheoremReport:
    """Bases with a non-adjacent pair each adjacent to everything else give
    FZ = n - 4 at every depth, witnessed by the pair plus its level-1 anticlones."""
    if l < 1:
        raise ValueError(f"depth must be >= 1, got {l}")
    full = (1 << base.n) - 1
    want = full & ~(1 << u) & ~(1 << v)
    if u == v or base.adj[u] != want or base.adj[v] != want:
        raise ValueError(
            f"pair ({u},{v}) violates the hypothesis: both must be adjacent to "
            "exactly the rest of the base"
        )
    report = TheoremReport("fzf-minus4-family")
    ig = build(base, CloningPlan.ilat(base.n, l))
    g = ig.graph
    n = g.n
    quartet = [u, v, u + base.n, v + base.n]
    fset = VertexSet.from_indices(n, quartet)
    fort_ok = is_fort(g, fset)
    complement_stalls = closure_set(g, fset.complement()).bits != (1 << n) - 1
    smaller = min_fort(g, cap=3, budget=budget)
    details = {
        "n": n,
        "quartet": quartet,
        "quartet_is_fort": fort_ok,
        "complement_is_failed_set": complement_stalls,
        "smaller_fort_search": smaller.to_dict(),
    }
    if smaller.budget_exhausted:
        verdict = SKIPPED
        details["reason"] = "budget exhausted before ruling out forts below size 4"
    else:
        exact = smaller.value is None
        details["fz"] = n - 4 if (fort_ok and exact) else None
        verdict = VERIFIED if (fort_ok and complement_stalls and exact) else VIOLATED
    report.instances.append(
        InstanceResult(report.claim, _instance_tag(base, l, pair=[u, v]), verdict, details)
    )
    return report


# ---------------------------------------------------------------------------
# zero forcing on clone towers: the descendant lift and its schedule


def _require_pure_clone(ig: IteratedGraph) -> None:
    if not ig.plan.is_ilt():
        raise ValueError("this construction needs an all-clone plan")


def ilt_descendant_lift(ig: IteratedGraph, base_set: VertexSet) -> VertexSet:
    """A set of base vertices together with all their descendants."""
    _require_pure_clone(ig)
    if base_set.n != ig.n and base_set.n != ig.base_n:
        raise ValueError("lift set must live on the base or the full graph")
    bits = base_set.bits
    if bits >> ig.base_n:
        raise ValueError("lift set must contain level-0 vertices only")
    lifted = bits
    for b in VertexSet(ig.base_n, bits):
        lifted |= descendants(ig, b).bits
    return VertexSet(ig.n, lifted)


def _mirror_base_force(base_n: int, l: int, u: int, v: int) -> list[tuple[int, int, int, int]]:
    """The two-stage mirror of one base force u -> v in a depth-l clone tower.

    Cloning at a subset S of steps sends base vertex b to index
    b + base_n * mask(S).  Stage 1 forces v's forms below the top level with
    u's top-level descendants; stage 2 forces v's top-level forms with u's
    lower forms.  Yields (forcer, target, stage, clone_distance) in order.
    """
    out = []
    if l == 0:
        return [(u, v, 1, 0)]
    full = (1 << l) - 1
    top = 1 << (l - 1)
    below = full >> 1  # masks over steps 1..l-1
    # stage 1: targets (v, T), T over steps 1..l-1, by ascending |T| then index
    stage1 = sorted(range(below + 1), key=lambda m: (m.bit_count(), m))
    for t_mask in stage1:
        forcer = u + base_n * (full ^ t_mask)
        target = v + base_n * t_mask
        out.append((forcer, target, 1, t_mask.bit_count()))
    # stage 2: targets (v, T' + top), forcers (u, steps 1..l-1 minus T')
    for t_mask in stage1:
        forcer = u + base_n * (below ^ t_mask)
        target = v + base_n * (t_mask | top)
        out.append((forcer, target, 2, t_mask.bit_count() + 1))
    return out


def ilt_forcing_schedule(
    ig: IteratedGraph, base_set: VertexSet, base_chronology: Chronology
) -> Chronology:
    """Mirror a base forcing chronology into the full clone tower.

    Every base force is expanded into its two-stage block; the result replays
    from the descendant lift of the base set and forces everything the base
    chronology forced, together with all descendants.
    """
    _require_pure_clone(ig)
    base_mask = (1 << ig.base_n) - 1
    base = Graph(ig.base_n, tuple(row & base_mask for row in ig.graph.adj[: ig.base_n]))
    bits = base_set.bits
    if bits >> ig.base_n:
        raise ValueError("starting set must contain level-0 vertices only")
    rp = replay_schedule_prefix_ok(base, VertexSet(ig.base_n, bits), base_chronology)
    if not rp:
        raise ValueError(f"base chronology is not a valid forcing sequence: {rp.reason}")
    steps = []
    rnd = 0
    for f in base_chronology:
        for forcer, target, _stage, _dist in _mirror_base_force(ig.base_n, ig.depth, f.forcer, f.target):
            rnd += 1
            steps.append(Force(rnd, forcer, target))
    return Chronology(tuple(steps))


def replay_schedule_prefix_ok(g: Graph, start: VertexSet, schedule: Chronology) -> ReplayResult:
    """Like replay_schedule but without requiring full coverage at the end."""
    forced = start.bits
    for i, f in enumerate(schedule):
        if not (forced >> f.forcer) & 1:
            return ReplayResult(False, i, f"forcer {f.forcer} is not forced yet")
        rem = g.adj[f.forcer] & ~forced
        if rem != 1 << f.target:
            return ReplayResult(
                False, i, f"target {f.target} is not the unique unforced neighbor of {f.forcer}"
            )
        forced |= rem
    return ReplayResult(True)


def check_ilt_lift(base: Graph, l: int, budget: Budget | None = None) -> TheoremReport:
    """Lift a minimum base zero forcing set through a depth-l clone tower:
    the lift forces everything, the mirrored schedule replays with its stage
    and clone-distance structure intact, and Z(tower) <= 2^l Z(base)."""
    report = TheoremReport("ilt-lift")
    z_base = zero_forcing_number(base, budget=budget)
    if z_base.value is None:
        report.instances.append(
            InstanceResult(
                report.claim,
                _instance_tag(base, l),
                SKIPPED,
                {"reason": "base zero forcing search exhausted its budget"},
            )
        )
        return report
    base_set = VertexSet.from_indices(base.n, z_base.witness)
    ig = build(base, CloningPlan.ilt(base.n, l))
    lift = ilt_descendant_lift(ig, base_set)
    lift_forces = is_zero_forcing_set(ig.graph, lift)

    _, base_chron = closure(base, base_set)
    schedule = ilt_forcing_schedule(ig, base_set, base_chron)
    replay = replay_schedule(ig.graph, lift, schedule)

    structure_ok = True
    structure_error = None
    block = 1 if l == 0 else 2 << (l - 1)
    per_force = [
        _mirror_base_force(ig.base_n, l, f.forcer, f.target) for f in base_chron
    ]
    flat = [item for blockitems in per_force for item in blockitems]
    for i, (forcer, target, stage, dist) in enumerate(flat):
        sched = schedule.steps[i]
        if (sched.forcer, sched.target) != (forcer, target):
            structure_ok = False
            structure_error = f"schedule step {i} does not match its construction"
            break
        if l >= 1:
            forcer_level = ig.level_of(forcer)
            if stage == 1 and forcer_level != l:
                structure_ok = False
                structure_error = f"stage-1 forcer {forcer} not in level {l}"
                break
            if stage == 2 and forcer_level > l - 1:
                structure_ok = False
                structure_error = f"stage-2 forcer {forcer} above level {l - 1}"
                break
    if structure_ok:
        for blockitems in per_force:
            for stage_id in (1, 2):
                dists = [d for (_, _, s, d) in blockitems if s == stage_id]
                if any(b < a for a, b in zip(dists, dists[1:])):
                    structure_ok = False
                    structure_error = f"stage {stage_id} clone distances not monotone"
                    break

    size_bound_ok = len(lift) == (1 << l) * z_base.value
    details = {
        "z_base": z_base.value,
        "base_witness": z_base.witness,
        "lift_size": len(lift),
        "lift_forces_all": lift_forces,
        "schedule_length": len(schedule),
        "replay_ok": bool(replay),
        "replay_error": replay.reason,
        "structure_ok": structure_ok,
        "structure_error": structure_error,
        "z_upper_bound": (1 << l) * z_base.value,
    }
    ok = lift_forces and bool(replay) and structure_ok and size_bound_ok
    report.instances.append(
        InstanceResult(report.claim, _instance_tag(base, l), VERIFIED if ok else VIOLATED, details)
    )
    return report


def check_ilat_zf_bounds(
    base: Graph, l: int, budget: Budget | None = None, workers: int = 1
) -> TheoremReport:
    """Anticlone towers of depth >= 2 have n/2 - 1 <= Z <= 3n/4; the explicit
    complement of level l-2 and its top-level anticlones forces in <= 2 rounds."""
    if l < 2:
        raise ValueError(f"zero forcing bounds need depth >= 2, got {l}")
    report = TheoremReport("ilat-zf-bounds")
    ig = build(base, CloningPlan.ilat(base.n, l))
    g = ig.graph
    n = g.n
    half = n // 2
    lower_bound = half - 1
    upper_bound = (3 * n) // 4

    layer = level_set(ig, l - 2)
    children = VertexSet(n, layer.bits << half)
    zset = VertexSet(n, ((1 << n) - 1) & ~(layer.bits | children.bits))
    closed, chron = closure(g, zset)
    construction_ok = closed.bits == (1 << n) - 1 and chron.max_round() <= 2

    z_report = zero_forcing_number(g, budget=budget, workers=workers)
    details = {
        "n": n,
        "bounds": [lower_bound, upper_bound],
        "construction_size": len(zset),
        "construction_rounds": chron.max_round(),
        "construction_forces_all": closed.bits == (1 << n) - 1,
        "z_report": z_report.to_dict(),
    }
    if z_report.value is not None:
        bounds_ok = lower_bound <= z_report.value <= upper_bound
        details["z_exact"] = z_report.value
        verdict = VERIFIED if (construction_ok and bounds_ok) else VIOLATED
    else:
        reached = z_report.bounds[0]
        bracket_ok = reached >= lower_bound and len(zset) <= upper_bound
        details["z_bracket"] = [reached, len(zset)]
        verdict = (
            VERIFIED
            if (construction_ok and bracket_ok)
            else (SKIPPED if construction_ok else VIOLATED)
        )
        if verdict == SKIPPED:
            details["reason"] = "budget stopped the exact search before the lower bound"
    report.instances.append(InstanceResult(report.claim, _instance_tag(base, l), verdict, details))
    return report


def check_loop_lift(base: Graph, stalled: VertexSet, l: int) -> TheoremReport:
    """A failed loop-forcing set of the base, together with every clone level,
    fails to force the clone tower."""
    report = TheoremReport("loop-lift")
    tag = _instance_tag(base, l, stalled=stalled.indices())
    full_base = (1 << base.n) - 1
    if loop_closure(base, stalled).bits == full_base:
        report.instances.append(
            InstanceResult(
                report.claim,
                tag,
                SKIPPED,
                {"reason": "precondition failed: the set loop-forces the whole base"},
            )
        )
        return report
    ig = build(base, CloningPlan.ilt(base.n, l))
    n = ig.n
    upper_levels = ((1 << n) - 1) & ~((1 << base.n) - 1)
    lifted = VertexSet(n, stalled.bits | upper_levels)
    closed = closure_set(ig.graph, lifted)
    stalls = closed.bits != (1 << n) - 1
    details = {
        "n": n,
        "lift_size": len(lifted),
        "unforced_remainder": (VertexSet(n, ((1 << n) - 1) & ~closed.bits)).indices(),
    }
    report.instances.append(
        InstanceResult(report.claim, tag, VERIFIED if stalls else VIOLATED, details)
    )
    return report


# ---------------------------------------------------------------------------
# burning


def _ball_mask(g: Graph, v: int, r: int) -> int:
    mask = 1 << v
    for _ in range(r):
        grow = mask
        bits = mask
        while bits:
            low = bits & -bits
            grow |= g.adj[low.bit_length() - 1]
            bits ^= low
        mask = grow
    return mask


def check_burning_bound(
    base: Graph,
    l: int,
    mode: str = "iim",
    budget: Budget | None = None,
    plan_cap: int = 1 << 20,
) -> TheoremReport:
    """Across every plan of the given regime: a single anticlone caps the
    burning number at 4; an anticlone in the final level caps b* at 4 with
    the parent/anticlone source pair covering all earlier levels by round 3;
    all-clone plans follow the b-or-b-plus-one case split from the base."""
    report = TheoremReport("burning-bound")
    base_connected = base.is_connected()
    base_b = burning_number(base).value if base_connected else None
    base_bstar = superfluous_burning_number(base).value if base_connected else None

    for plan in enumerate_plans(base.n, l, mode, cap=plan_cap):
        tag = _instance_tag(base, l, plan=list(plan.levels), mode=mode)
        ig = build(base, plan)
        g = ig.graph
        if not g.is_connected():
            report.instances.append(
                InstanceResult(report.claim, tag, SKIPPED, {"reason": "disconnected"})
            )
            continue
        details: dict = {
            "n": g.n,
            "note": "claims read on the iterated graph; the statement's symbol "
            "for it is an erratum",
        }
        ok = True
        if plan.has_anticlone():
            b_rep = burning_number(g, budget)
            details["b"] = b_rep.value
            details["b_sources"] = b_rep.witness["sources"] if b_rep.value else None
            if b_rep.value is None or b_rep.value > 4:
                ok = False
            final = plan.levels[-1] if plan.depth else ""
            if "a" in final:
                bs_rep = superfluous_burning_number(g, budget)
                details["b_star"] = bs_rep.value
                if bs_rep.value is None or bs_rep.value > 4:
                    ok = False
                half = g.n // 2
                lower_mask = (1 << half) - 1
                pair_ok = True
                for u, ch in enumerate(final):
                    if ch != "a":
                        continue
                    cover = _ball_mask(g, u, 2) | _ball_mask(g, u + half, 1)
                    if cover & lower_mask != lower_mask:
                        pair_ok = False
                        details["failing_source_pair"] = [u, u + half]
                        break
                details["source_pair_covers_lower_levels_by_round3"] = pair_ok
                ok = ok and pair_ok
        else:
            # all-clone plan: the case split against the base graph
            b_rep = burning_number(g, budget)
            details["b"] = b_rep.value
            expected = base_b if base_b == base_bstar else base_b + 1
            details["base_b"] = base_b
            details["base_b_star"] = base_bstar
            details["expected_b"] = expected
            ok = b_rep.value == expected
        report.instances.append(
            InstanceResult(report.claim, tag, VERIFIED if ok else VIOLATED, details)
        )
    return report


# ---------------------------------------------------------------------------
# configuration-driven runs


DEFAULT_CONFIG = """\
# claim              base  levels  options
fzf-ilat-lower       k1    5
fzf-ilat-lower       k2    5
fzf-minus2           k1    1-3
fzf-minus2           k3    1-3
fzf-minus2           c4    1-2
fzf-minus2           B_    1-2
fzf-not-minus3       k1    4
fzf-not-minus3       k2    4
fzf-not-minus3       p3    4
fzf-not-minus3       k3    4
fzf-minus4-family    c4    1-3     pair=0,2
ilt-lift             k2    1-3
ilt-lift             p3    1-2
ilt-lift             p4    1-2
ilt-lift             c4    1-2
ilat-zf-bounds       k1    2-3
ilat-zf-bounds       k2    2-3
loop-lift            k3    1       stalled=0
loop-lift            c5    2       stalled=0
burning-bound        k3    1-2     mode=iim
burning-bound        p3    1       mode=ilat
burning-bound        p4    2       mode=ilt
"""


@dataclass
class ConfigLine:
    claim: str
    base: Graph
    base_text: str
    levels: list[int]
    options: dict


def _parse_levels(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _resolve_base(token: str) -> Graph:
    from .graphs import named_graph, parse_graph6

    try:
        return named_graph(token)
    except ValueError:
        return parse_graph6(token)


def parse_config(text: str) -> list[ConfigLine]:
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) < 3:
            raise ValueError(f"config line needs claim, base and levels: {raw!r}")
        claim, base_token, level_spec = parts[0], parts[1], parts[2]
        options = {}
        for extra in parts[3:]:
            if "=" not in extra:
                raise ValueError(f"config option {extra!r} is not key=value")
            key, val = extra.split("=", 1)
            options[key] = val
        lines.append(
            ConfigLine(claim, _resolve_base(base_token), base_token, _parse_levels(level_spec), options)
        )
    return lines


def _budget_from_options(options: dict, default: Budget | None) -> Budget | None:
    if "budget" in options:
        return Budget(max_candidates=int(options["budget"]))
    return default


def run_verification(
    config_text: str | None = None,
    budget: Budget | None = None,
    workers: int = 1,
) -> list[TheoremReport]:
    """Run every configured instance family; one TheoremReport per claim."""
    config = parse_config(config_text if config_text is not None else DEFAULT_CONFIG)
    by_claim: dict[str, TheoremReport] = {}
    for line in config:
        inst_budget = _budget_from_options(line.options, budget)
        for l in line.levels:
            if line.claim == "fzf-ilat-lower":
                rep = check_fzf_ilat_lower(line.base, l, inst_budget, workers)
            elif line.claim == "fzf-minus2":
                rep = classify_fzf_minus2(line.base, l)
            elif line.claim == "fzf-not-minus3":
                rep = check_fzf_not_minus3(line.base, l, inst_budget)
            elif line.claim == "fzf-minus4-family":
                pair = line.options.get("pair")
                if pair is None:
                    u, v = _find_opposite_pair(line.base)
                else:
                    u, v = (int(x) for x in pair.split(","))
                rep = check_fzf_minus4_family(line.base, u, v, l, inst_budget)
            elif line.claim == "ilt-lift":
                rep = check_ilt_lift(line.base, l, inst_budget)
            elif line.claim == "ilat-zf-bounds":
                rep = check_ilat_zf_bounds(line.base, l, inst_budget, workers)
            elif line.claim == "loop-lift":
                idx = [int(x) for x in line.options.get("stalled", "0").split(",")]
                rep = check_loop_lift(line.base, VertexSet.from_indices(line.base.n, idx), l)
            elif line.claim == "burning-bound":
                rep = check_burning_bound(
                    line.base, l, line.options.get("mode", "iim"), inst_budget
                )
            else:
                raise ValueError(f"unknown claim id {line.claim!r}")
            agg = by_claim.setdefault(rep.claim, TheoremReport(rep.claim))
            agg.instances.extend(rep.instances)
    return list(by_claim.values())


def _find_opposite_pair(base: Graph) -> tuple[int, int]:
    full = (1 << base.n) - 1
    for u in range(base.n):
        for v in range(u + 1, base.n):
            want = full & ~(1 << u) & ~(1 << v)
            if base.adj[u] == want and base.adj[v] == want:
                return u, v
    raise ValueError("base has no pair matching the FZ = n - 4 hypothesis")


def reports_to_doc(reports: Sequence[TheoremReport]) -> dict:
    return {
        "claims": [
            {
                "claim": rep.claim,
                "counts": rep.counts(),
                "instances": [
                    {
                        "instance": inst.instance,
                        "verdict": inst.verdict,
                        "details": inst.details,
                    }
                    for inst in rep.instances
                ],
            }
            for rep in reports
        ],
        "summary": {
            "verified": sum(r.counts()[VERIFIED] for r in reports),
            "violated": sum(r.counts()[VIOLATED] for r in reports),
            "skipped": sum(r.counts()[SKIPPED] for r in reports),
        },
    }


def format_table(reports: Sequence[TheoremReport]) -> str:
    rows = [f"{'claim':24} {'verified':>9} {'violated':>9} {'skipped':>8}"]
    for rep in reports:
        c = rep.counts()
        rows.append(f"{rep.claim:24} {c[VERIFIED]:>9} {c[VIOLATED]:>9} {c[SKIPPED]:>8}")
    total = reports_to_doc(reports)["summary"]
    rows.append(
        f"{'total':24} {total['verified']:>9} {total['violated']:>9} {total['skipped']:>8}"
    )
    return "\n".join(rows) + "\n"


def overall_status(reports: Sequence[TheoremReport]) -> int:
    """0 all good, 1 a claim was violated, 3 undecided for budget reasons."""
    doc = reports_to_doc(reports)
    if doc["summary"]["violated"]:
        return 1
    budget_blocked = any(
        "budget" in str(inst.details.get("reason", ""))
        for rep in reports
        for inst in rep.instances
        if inst.verdict == SKIPPED
    )
    return 3 if budget_blocked else 0
