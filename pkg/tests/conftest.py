from __future__ import annotations

from pathlib import Path

import pytest

from iterforce.graphs import Graph, parse_graph6
from iterforce.kernels import get_backend, pack_graph
from iterforce.graphs import named_graph

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def atlas() -> list[Graph]:
    """Every graph on 1..7 vertices (one per isomorphism class)."""
    return [parse_graph6(line) for line in (DATA / "atlas_le7.g6").read_text().split()]


@pytest.fixture(scope="session")
def connected_le7(atlas) -> list[Graph]:
    return [g for g in atlas if g.is_connected()]


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch the default backend once so JIT compilation or cache loading
    never lands inside a timed acceptance criterion."""
    backend = get_backend()
    adjw, n, nwords = pack_graph(named_graph("p3"))
    backend.zf_level(adjw, n, nwords, 1, 0, n)
    backend.fort_level(adjw, n, nwords, 1, 0, n)
    yield
