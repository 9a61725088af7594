import random

import pytest

from iterforce.forcing import closure_set, is_fort
from iterforce.graphs import VertexSet, make_graph, named_graph
from iterforce.models import CloningPlan, build
from iterforce.solvers import (
    Budget,
    DisconnectedGraphError,
    burning_number,
    failed_zero_forcing_number,
    min_fort,
    superfluous_burning_number,
    zero_forcing_number,
    zf_lower_bounds,
)

from oracles import (
    naive_burning,
    naive_failed_zero_forcing,
    naive_min_fort,
    naive_superfluous_burning,
    naive_zero_forcing,
    neighbor_sets,
)


class TestZeroForcing:
    def test_path(self):
        rep = zero_forcing_number(named_graph("p5"))
        assert rep.value == 1 and rep.witness == [0]

    def test_complete(self):
        assert zero_forcing_number(named_graph("k4")).value == 3

    def test_clone_step_of_k2(self):
        g = build(named_graph("k2"), CloningPlan.ilt(2, 1)).graph
        assert zero_forcing_number(g).value == 2

    def test_witness_is_lex_least(self):
        rng = random.Random(83)
        for _ in range(20):
            n = rng.randint(1, 7)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
            g = make_graph(n, edges)
            rep = zero_forcing_number(g)
            value, witness = naive_zero_forcing(neighbor_sets(g))
            assert rep.value == value
            assert tuple(rep.witness) == witness

    def test_budget_bracket(self):
        g = build(named_graph("k2"), CloningPlan.ilat(2, 3)).graph
        rep = zero_forcing_number(g, Budget(max_candidates=10))
        assert rep.budget_exhausted and rep.value is None
        true_z = zero_forcing_number(g).value
        assert rep.bounds[0] <= true_z <= rep.bounds[1]

    def test_workers_identical_report(self):
        g = build(named_graph("p3"), CloningPlan.ilat(3, 2)).graph
        one = zero_forcing_number(g, workers=1)
        two = zero_forcing_number(g, workers=2)
        assert one.to_json() == two.to_json()

    def test_bounds_enclose_value(self):
        rep = zero_forcing_number(named_graph("c5"))
        assert rep.bounds[0] <= rep.value <= rep.bounds[1]


class TestForts:
    def test_min_fort_triangle(self):
        assert min_fort(named_graph("k3"), cap=3).value == 2

    def test_min_fort_star(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        rep = min_fort(star, cap=4)
        assert rep.value == 2 and rep.witness == [1, 2]

    def test_anticlone_tower_has_small_fort(self):
        g = build(named_graph("k1"), CloningPlan.ilat(1, 5)).graph
        rep = min_fort(g, cap=6)
        assert rep.value is not None and rep.value <= 6
        assert is_fort(g, VertexSet.from_indices(g.n, rep.witness))

    def test_none_within_cap(self):
        rep = min_fort(named_graph("c5"), cap=2)
        assert rep.value is None and not rep.budget_exhausted
        assert rep.bounds == (3, 5)

    def test_fz_complete_graph(self):
        assert failed_zero_forcing_number(named_graph("k4")).value == 2

    def test_fz_path(self):
        assert failed_zero_forcing_number(named_graph("p3")).value == 1

    def test_fz_anticlone_c4(self):
        g = build(named_graph("c4"), CloningPlan.ilat(4, 1)).graph
        rep = failed_zero_forcing_number(g)
        assert rep.value == 4
        fort = VertexSet.from_indices(g.n, rep.witness["fort"])
        assert is_fort(g, fort)
        failed = VertexSet.from_indices(g.n, rep.witness["failed_set"])
        assert closure_set(g, failed).bits != (1 << g.n) - 1

    def test_fort_workers_identical_report(self):
        g = build(named_graph("c4"), CloningPlan.ilat(4, 2)).graph
        one = failed_zero_forcing_number(g, workers=1)
        two = failed_zero_forcing_number(g, workers=2)
        assert one.to_json() == two.to_json()

    def test_fz_cap_bracket(self):
        g = named_graph("c5")  # min fort is 5
        rep = failed_zero_forcing_number(g, fort_cap=2)
        assert rep.value is None
        assert rep.bounds == (0, 2)
        assert naive_failed_zero_forcing(neighbor_sets(g)) <= rep.bounds[1]


class TestBurning:
    def test_single_vertex(self):
        assert burning_number(named_graph("k1")).value == 1

    def test_path4(self):
        rep = burning_number(named_graph("p4"))
        assert rep.value == 2
        assert rep.witness["sources"] == [1, 3]

    def test_complete(self):
        assert burning_number(named_graph("k4")).value == 2

    def test_certificate_coverage(self):
        rep = burning_number(named_graph("c5"))
        t = rep.value
        covered = rep.witness["covered_by"]
        assert all(1 <= c <= t for c in covered)

    def test_superfluous_examples(self):
        assert superfluous_burning_number(named_graph("k4")).value == 2
        assert superfluous_burning_number(named_graph("p2")).value == 2
        assert superfluous_burning_number(named_graph("p4")).value == 3
        assert superfluous_burning_number(named_graph("k1")).value == 2

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            burning_number(make_graph(3, [(0, 1)]))

    def test_oracle_sample(self, connected_le7):
        rng = random.Random(89)
        for g in rng.sample(connected_le7, 40):
            nbrs = neighbor_sets(g)
            assert burning_number(g).value == naive_burning(nbrs)

    def test_b_star_within_one(self, connected_le7):
        rng = random.Random(97)
        for g in rng.sample(connected_le7, 40):
            b = burning_number(g).value
            bs = superfluous_burning_number(g).value
            assert b <= bs <= b + 1
            assert bs == naive_superfluous_burning(neighbor_sets(g))


class TestLowerBounds:
    def test_cycle(self):
        rep = zf_lower_bounds(named_graph("c5"))
        assert rep["min_degree"] == 2
        assert rep["average_degree_exact"] == "2/1"
        assert zero_forcing_number(named_graph("c5")).value == 2

    def test_path_average_exceeds_z(self):
        rep = zf_lower_bounds(named_graph("p3"))
        assert rep["average_degree_exact"] == "4/3"
        assert zero_forcing_number(named_graph("p3")).value == 1
        assert rep["average_degree"] > 1

    def test_complete(self):
        rep = zf_lower_bounds(named_graph("k4"))
        assert rep["min_degree"] == 3
        assert zero_forcing_number(named_graph("k4")).value == 3


class TestReportShape:
    def test_json_keys(self):
        doc = zero_forcing_number(named_graph("p3")).to_dict()
        for key in ("parameter", "value", "witness", "explored", "bounds", "budget_exhausted"):
            assert key in doc

    def test_oracle_sample_all_parameters(self, connected_le7):
        rng = random.Random(101)
        for g in rng.sample(connected_le7, 30):
            nbrs = neighbor_sets(g)
            assert zero_forcing_number(g).value == naive_zero_forcing(nbrs)[0]
            fz = failed_zero_forcing_number(g)
            assert fz.value == naive_failed_zero_forcing(nbrs)
            assert fz.value + min_fort(g).value == g.n
            assert min_fort(g).value == naive_min_fort(nbrs)
