import random

import pytest

from iterforce.graphs import make_graph, named_graph
from iterforce.models import (
    CloningPlan,
    IteratedGraph,
    PlanError,
    build,
    clone_distance,
    descendants,
    emit_plan,
    enumerate_plans,
    level_set,
    parse_plan,
    step,
)


def random_base(rng, max_n=5):
    n = rng.randint(1, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return make_graph(n, edges)


def random_plan(rng, base_n, l):
    levels = []
    width = base_n
    for _ in range(l):
        levels.append("".join(rng.choice("ca") for _ in range(width)))
        width *= 2
    return CloningPlan(base_n, tuple(levels))


class TestStep:
    def test_clone_k2(self):
        ig = step(IteratedGraph.from_base(named_graph("k2")), "00")
        assert sorted(ig.graph.degrees()) == [2, 2, 3, 3]
        assert ig.graph.degrees() == [3, 3, 2, 2]

    def test_anticlone_k1(self):
        ig = step(IteratedGraph.from_base(named_graph("k1")), "1")
        assert ig.graph.degrees() == [0, 0]

    def test_anticlone_k2(self):
        ig = step(IteratedGraph.from_base(named_graph("k2")), "11")
        assert ig.graph.degrees() == [1, 1, 0, 0]

    def test_choices_width(self):
        with pytest.raises(PlanError, match="choices"):
            step(IteratedGraph.from_base(named_graph("k2")), "0")

    def test_clone_and_anticlone_rows_match_snapshot(self):
        rng = random.Random(23)
        for _ in range(40):
            base = random_base(rng)
            ig = IteratedGraph.from_base(base)
            for _ in range(rng.randint(1, 3)):
                before = ig.graph
                choices = "".join(rng.choice("ca") for _ in range(ig.n))
                ig = step(ig, choices)
                pre = (1 << before.n) - 1
                for j, ch in enumerate(choices):
                    row = ig.graph.adj[before.n + j] & pre
                    want = (
                        before.closed_neighborhood(j).bits
                        if ch == "c"
                        else before.anti_neighborhood(j).bits
                    )
                    assert row == want

    def test_new_level_independent(self):
        rng = random.Random(29)
        for _ in range(30):
            base = random_base(rng)
            ig = build(base, random_plan(rng, base.n, rng.randint(1, 3)))
            for t in range(1, ig.depth + 1):
                members = level_set(ig, t)
                for v in members:
                    assert (ig.graph.adj[v] & members.bits) == 0

    def test_lineage(self):
        ig = build(named_graph("k2"), CloningPlan(2, ("ca",)))
        assert ig.lineage.level == (0, 0, 1, 1)
        assert ig.lineage.parent == (None, None, 0, 1)
        assert ig.lineage.kind == ("base", "base", "clone", "anticlone")


class TestBuild:
    def test_doubling(self):
        ig = build(named_graph("k1"), CloningPlan.ilat(1, 5))
        assert ig.n == 32

    def test_prefix_property(self):
        rng = random.Random(31)
        for _ in range(20):
            base = random_base(rng, max_n=4)
            plan = random_plan(rng, base.n, 3)
            full = build(base, plan)
            for t in range(4):
                part = build(base, plan.truncated(t))
                mask = (1 << part.n) - 1
                assert tuple(r & mask for r in full.graph.adj[: part.n]) == part.graph.adj

    def test_ilt_prefix_example(self):
        full = build(named_graph("k2"), CloningPlan.ilt(2, 2))
        assert full.n == 8
        one = step(IteratedGraph.from_base(named_graph("k2")), "00")
        mask = 0b1111
        assert tuple(r & mask for r in full.graph.adj[:4]) == one.graph.adj

    def test_ilat_c4_level1_degrees(self):
        ig = build(named_graph("c4"), CloningPlan.ilat(4, 1))
        assert ig.n == 8
        assert [ig.graph.degree(v) for v in range(4, 8)] == [1, 1, 1, 1]

    def test_width_mismatch_reports_level(self):
        with pytest.raises(PlanError, match="level 2"):
            CloningPlan(2, ("cc", "ca"))

    def test_wrong_base(self):
        with pytest.raises(PlanError, match="base size"):
            build(named_graph("k3"), CloningPlan.ilt(2, 1))

    def test_ilat_degree_law(self):
        rng = random.Random(37)
        for _ in range(20):
            base = random_base(rng, max_n=4)
            l = rng.randint(1, 4)
            ig = build(base, CloningPlan.ilat(base.n, l))
            n = ig.n
            for v in range(n):
                if ig.level_of(v) <= l - 1:
                    assert ig.graph.degree(v) == n // 2 - 1
                elif l >= 2:
                    assert ig.graph.degree(v) >= n // 4


class TestDescendants:
    def test_single_level(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 1))
        assert descendants(ig, 0).indices() == [2]

    def test_two_levels(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 2))
        assert descendants(ig, 0).indices() == [2, 4, 6]

    def test_last_level_empty(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 2))
        for v in level_set(ig, 2):
            assert descendants(ig, v).indices() == []


class TestCloneDistance:
    def test_direct_child(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 2))
        assert clone_distance(ig, 2, 0) == 1

    def test_grandchild(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 2))
        assert clone_distance(ig, 6, 0) == 2

    def test_late_child_counts_once(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 3))
        # child taken at step 3 only: index 0 + 2*4
        assert clone_distance(ig, 8, 0) == 1

    def test_self(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 1))
        assert clone_distance(ig, 0, 0) == 0

    def test_not_descendant(self):
        ig = build(named_graph("k2"), CloningPlan.ilt(2, 1))
        with pytest.raises(ValueError, match="descendant"):
            clone_distance(ig, 2, 1)


class TestEnumeratePlans:
    def test_ilm_count(self):
        plans = list(enumerate_plans(1, 2, "ilm"))
        assert len(plans) == 4
        assert len({p.levels for p in plans}) == 4

    def test_iim_count_and_order(self):
        plans = list(enumerate_plans(2, 1, "iim"))
        assert [p.levels[0] for p in plans] == ["cc", "ca", "ac", "aa"]

    def test_ilat_singleton(self):
        plans = list(enumerate_plans(3, 1, "ilat"))
        assert len(plans) == 1 and plans[0].levels == ("aaa",)

    def test_cap(self):
        with pytest.raises(PlanError, match="cap"):
            list(enumerate_plans(3, 3, "iim", cap=100))

    def test_modes(self):
        assert CloningPlan.ilt(2, 2).mode() == "ilt"
        assert CloningPlan.ilat(2, 2).mode() == "ilat"
        assert CloningPlan(2, ("cc", "aaaa")).mode() == "ilm"
        assert CloningPlan(2, ("ca",)).mode() == "iim"


class TestPlanFiles:
    def test_shorthand_ilt(self):
        plan = parse_plan("ILT 3", 2)
        assert plan == CloningPlan.ilt(2, 3)

    def test_shorthand_ilat(self):
        assert parse_plan("ilat 2", 3) == CloningPlan.ilat(3, 2)

    def test_shorthand_ilm(self):
        plan = parse_plan("ILM cac", 2)
        assert plan.levels == ("cc", "aaaa", "cccccccc")

    def test_explicit_lines_roundtrip(self):
        plan = CloningPlan(2, ("ca", "acca"))
        assert parse_plan(emit_plan(plan), 2) == plan

    def test_bit_alias(self):
        assert parse_plan("01\n1100\n", 2).levels == ("ca", "aacc")

    def test_bad_width(self):
        with pytest.raises(PlanError, match="level 2"):
            parse_plan("cc\nccc\n", 2)
