#!/usr/bin/env python3
"""Normalize a raw network file into the plain edge-list format.

Reads a Pajek (.net) or whitespace edge list (optionally weighted and/or
directed), symmetrizes it (each unordered pair kept once), drops
self-loops, and writes one "a b" line per surviving edge.  Use this to
prepare the C. elegans metabolic network fixture:

    python scripts/normalize_celegans.py celegans_metabolic.net \
        > tests/fixtures/celegans.edges

The expected result for that dataset is 453 vertices and 2025 edges.
"""

from __future__ import annotations

import sys


def normalize(lines) -> list[tuple[str, str]]:
    seen: set[frozenset[str]] = set()
    ordered: list[tuple[str, str]] = []
    in_vertices_section = False
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith(("%", "#")):
            continue
        if line.startswith("*"):
            # Pajek section markers: skip vertex declarations, keep arc/edge data
            in_vertices_section = line.lower().startswith("*vertices")
            continue
        if in_vertices_section:
            continue
        tokens = line.split()
        if len(tokens) < 2:
            continue
        a, b = tokens[0], tokens[1]
        if a == b:
            continue
        key = frozenset((a, b))
        if key in seen:
            continue
        seen.add(key)
        ordered.append((a, b))
    return ordered


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 1
    with open(sys.argv[1], encoding="utf-8", errors="replace") as handle:
        edges = normalize(handle)
    vertices = {v for pair in edges for v in pair}
    for a, b in edges:
        print(a, b)
    print(f"{len(vertices)} vertices, {len(edges)} edges", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
