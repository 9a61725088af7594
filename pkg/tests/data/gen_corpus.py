#!/usr/bin/env python3
"""Regenerate atlas_le7.g6: every graph on 1..7 vertices, one graph6 line each.

Requires networkx (for its small-graph atlas).  The committed file is the
source of truth for the test suite; this script only exists to rebuild it.
"""

from pathlib import Path

import networkx as nx

import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from iterforce.graphs import emit_graph6, make_graph  # noqa: E402


def main() -> None:
    lines = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1:
            continue
        lines.append(emit_graph6(make_graph(n, list(g.edges()))))
    out = Path(__file__).with_name("atlas_le7.g6")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
