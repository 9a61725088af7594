import random

from iterforce.forcing import (
    Chronology,
    Force,
    closure,
    closure_set,
    emit_chronology,
    is_fort,
    is_zero_forcing_set,
    loop_closure,
    parse_chronology,
    replay_schedule,
)
from iterforce.graphs import make_graph, named_graph, VertexSet
from iterforce.models import IteratedGraph, step

from oracles import naive_closure, naive_loop_closure, neighbor_sets


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return make_graph(n, edges)


def vs(n, *idx):
    return VertexSet.from_indices(n, idx)


class TestClosure:
    def test_path_chain(self):
        out, chron = closure(named_graph("p3"), vs(3, 0))
        assert out.indices() == [0, 1, 2]
        assert [(f.round, f.forcer, f.target) for f in chron] == [(1, 0, 1), (2, 1, 2)]

    def test_complete_stalls(self):
        out, chron = closure(named_graph("k3"), vs(3, 0))
        assert out.indices() == [0]
        assert len(chron) == 0

    def test_full_start_identity(self):
        g = named_graph("c5")
        out, chron = closure(g, VertexSet.full(5))
        assert out.bits == (1 << 5) - 1 and len(chron) == 0

    def test_empty_start(self):
        assert closure_set(named_graph("p3"), VertexSet.empty(3)).indices() == []

    def test_is_zero_forcing_set(self):
        assert is_zero_forcing_set(named_graph("p3"), vs(3, 0))
        assert is_zero_forcing_set(named_graph("k3"), vs(3, 0, 1))
        assert not is_zero_forcing_set(named_graph("k3"), vs(3, 0))

    def test_matches_naive(self):
        rng = random.Random(41)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            nbrs = neighbor_sets(g)
            start = [v for v in range(g.n) if rng.random() < 0.4]
            got = set(closure_set(g, VertexSet.from_indices(g.n, start)).indices())
            assert got == naive_closure(nbrs, start)

    def test_monotone(self):
        rng = random.Random(43)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            small = [v for v in range(g.n) if rng.random() < 0.3]
            extra = [v for v in range(g.n) if rng.random() < 0.3]
            a = VertexSet.from_indices(g.n, small)
            b = VertexSet.from_indices(g.n, small + extra)
            assert closure_set(g, a).issubset(closure_set(g, b))

    def test_idempotent(self):
        rng = random.Random(47)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            start = VertexSet.from_indices(g.n, [v for v in range(g.n) if rng.random() < 0.3])
            once = closure_set(g, start)
            assert closure_set(g, once) == once


class TestLoopClosure:
    def test_isolated_vacuous(self):
        g = step(IteratedGraph.from_base(named_graph("k1")), "1").graph
        assert loop_closure(g, VertexSet.empty(2)).indices() == [0, 1]

    def test_cycle_surrounded(self):
        assert loop_closure(named_graph("c4"), vs(4, 0, 2)).indices() == [0, 1, 2, 3]

    def test_path_equals_plain(self):
        got = loop_closure(named_graph("p3"), vs(3, 0))
        assert got == closure_set(named_graph("p3"), vs(3, 0))

    def test_superset_of_plain(self):
        rng = random.Random(53)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            start = VertexSet.from_indices(g.n, [v for v in range(g.n) if rng.random() < 0.3])
            assert closure_set(g, start).issubset(loop_closure(g, start))

    def test_matches_naive(self):
        rng = random.Random(59)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            start = [v for v in range(g.n) if rng.random() < 0.3]
            got = set(loop_closure(g, VertexSet.from_indices(g.n, start)).indices())
            assert got == naive_loop_closure(neighbor_sets(g), start)


class TestForts:
    def test_pair_in_triangle(self):
        assert is_fort(named_graph("k3"), vs(3, 1, 2))

    def test_singleton_in_triangle(self):
        assert not is_fort(named_graph("k3"), vs(3, 1))

    def test_path_endpoints(self):
        assert is_fort(named_graph("p3"), vs(3, 0, 2))

    def test_empty_is_not_fort(self):
        assert not is_fort(named_graph("p3"), VertexSet.empty(3))

    def test_obstruction_duality_exhaustive(self, atlas):
        """A start set stalls exactly when it misses some fort (all graphs
        on <= 7 vertices, every start set)."""
        for g in atlas:
            n = g.n
            full = (1 << n) - 1
            forts = [
                m
                for m in range(1, 1 << n)
                if is_fort(g, VertexSet(n, m))
            ]
            for s in range(1 << n):
                stalls = closure_set(g, VertexSet(n, s)).bits != full
                missed = any(f & s == 0 for f in forts)
                assert stalls == missed


class TestReplay:
    def test_path_schedule(self):
        g = named_graph("p3")
        assert replay_schedule(g, vs(3, 0), [Force(1, 0, 1), Force(2, 1, 2)])

    def test_unforced_forcer(self):
        r = replay_schedule(named_graph("p3"), vs(3, 0), [Force(1, 1, 2)])
        assert not r and r.failed_step == 0 and "not forced" in r.reason

    def test_triangle_pair(self):
        assert replay_schedule(named_graph("k3"), vs(3, 0, 1), [Force(1, 0, 2)])

    def test_wrong_target(self):
        r = replay_schedule(named_graph("k3"), vs(3, 0), [Force(1, 0, 1)])
        assert not r and "unique unforced" in r.reason

    def test_incomplete(self):
        r = replay_schedule(named_graph("p3"), vs(3, 0), [Force(1, 0, 1)])
        assert not r and "unforced vertices" in r.reason

    def test_chronology_soundness(self):
        rng = random.Random(61)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 9))
            start = VertexSet.from_indices(g.n, [v for v in range(g.n) if rng.random() < 0.4])
            out, chron = closure(g, start)
            if out.bits == (1 << g.n) - 1:
                assert replay_schedule(g, start, chron)

    def test_text_roundtrip(self):
        chron = Chronology((Force(1, 0, 1), Force(2, 1, 2)))
        assert parse_chronology(emit_chronology(chron)) == chron
