"""Exact zero forcing, failed zero forcing and graph burning on iterated
clone/anticlone network models, with certificates for every answer."""

from .forcing import (
    Chronology,
    Force,
    closure,
    closure_set,
    is_fort,
    is_zero_forcing_set,
    loop_closure,
    replay_schedule,
)
from .graphs import Graph, VertexSet, emit_graph6, make_graph, named_graph, parse_graph6
from .models import (
    CloningPlan,
    IteratedGraph,
    build,
    clone_distance,
    descendants,
    enumerate_plans,
    step,
)
from .solvers import (
    Budget,
    SolverReport,
    burning_number,
    failed_zero_forcing_number,
    min_fort,
    superfluous_burning_number,
    zero_forcing_number,
    zf_lower_bounds,
)

__version__ = "0.1.0"
