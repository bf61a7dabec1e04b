#!/usr/bin/env python3
"""Regenerate tests/fixtures/small_corpus.json.

The corpus is a committed, seeded set of small connected multigraphs used
by the oracle-equivalence suite: 200 random instances (at most 8 vertices
and 14 edges, some with parallel edges) plus every cycle, complete and
multipartite instance inside those bounds, plus parallel-edge bundles.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from treemodulus.generators import (  # noqa: E402
    SplitMix64,
    complete_graph,
    multipartite_graph,
    random_connected_multigraph,
)
from treemodulus.graph import MultiGraph  # noqa: E402

SEED = 20260809
RANDOM_COUNT = 200
MAX_VERTICES = 8
MAX_EDGES = 14


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def bundle_graph(k: int) -> MultiGraph:
    return MultiGraph(2, tuple((0, 1) for _ in range(k)))


def main() -> None:
    graphs = []

    def add(name: str, g: MultiGraph) -> None:
        assert g.vertex_count <= MAX_VERTICES and g.edge_count <= MAX_EDGES, name
        assert g.is_connected(), name
        graphs.append(
            {"name": name, "vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
        )

    for n in range(3, MAX_VERTICES + 1):
        add(f"cycle-{n}", cycle_graph(n))
    for n in range(3, MAX_VERTICES + 1):
        g = complete_graph(n)
        if g.edge_count <= MAX_EDGES:
            add(f"complete-{n}", g)
    for k in range(2, 5):
        g = multipartite_graph(k)
        if g.vertex_count <= MAX_VERTICES and g.edge_count <= MAX_EDGES:
            add(f"multipartite-{k}", g)
    for k in range(2, 5):
        add(f"bundle-{k}", bundle_graph(k))

    rng = SplitMix64(SEED)
    made = 0
    while made < RANDOM_COUNT:
        n = 3 + rng.below(MAX_VERTICES - 2)
        extra = rng.below(MAX_EDGES - (n - 1) + 1)
        g = random_connected_multigraph(n, extra, rng.next_u64())
        if g.edge_count > MAX_EDGES:
            continue
        add(f"random-{made:03d}", g)
        made += 1

    payload = {"seed": SEED, "graphs": graphs}
    out = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "small_corpus.json"
    out.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {len(graphs)} graphs to {out}")


if __name__ == "__main__":
    main()
