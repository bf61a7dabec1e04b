"""Integer-arithmetic greedy basis computation on the graphic polymatroid.

For a target rate p/q the greedy pass keeps a per-edge integer vector that
is q times a polymatroid point, raising each edge in turn by the largest
feasible increment.  The increment subproblem (tightest constraint through
a given edge) is solved as a minimum cut on an auxiliary network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InvariantViolation
from .flow import INFINITE, FlowNetwork, dinic, min_cut
from .graph import EdgeSubset, MultiGraph, component_count, require_connected


@dataclass
class IncrementVector:
    """Per-edge non-negative integers at scale q (q times a rational point)."""

    values: list[int]
    scale: int

    def total(self) -> int:
        return sum(self.values)

    def subset_sum(self, subset) -> int:
        values = self.values
        return sum(values[e] for e in subset)

    def snapshot(self) -> tuple[int, ...]:
        return tuple(self.values)

    @classmethod
    def zeros(cls, edge_count: int, scale: int) -> "IncrementVector":
        return cls([0] * edge_count, scale)


@dataclass(frozen=True)
class BasisResult:
    """Outcome of one greedy pass.

    ``candidate`` is the complement of the accumulated tight set: the edges
    whose entry reached the cap p.  ``total`` is the vector summed over all
    edges, the quantity the threshold test reads.
    """

    vector: IncrementVector
    tight_set: EdgeSubset
    candidate: EdgeSubset
    total: int


@dataclass(frozen=True)
class IterationRecord:
    """Hook payload emitted after each edge visit (test instrumentation)."""

    edge: int
    before: tuple[int, ...]
    bound: int
    bound_set: EdgeSubset
    applied: int
    after: tuple[int, ...]


def build_aux_network(
    g: MultiGraph, x_prime: IncrementVector, j: int, q: int
) -> FlowNetwork:
    """Auxiliary capacitated network for the increment subproblem at edge j.

    Nodes are the graph vertices plus a source r and sink s.  Every graph
    edge appears with capacity x'(e); s connects to each vertex with
    capacity 2q; r connects to the endpoints of j with infinite capacity
    and to every other vertex v with capacity x' summed over the edges
    meeting v.
    """
    if x_prime.scale != q:
        raise ValueError(f"increment vector scale {x_prime.scale} != q {q}")
    n = g.vertex_count
    r = n
    s = n + 1
    values = x_prime.values
    edges: list[tuple[int, int, int | None, object]] = []
    for eid, (a, b) in enumerate(g.edges):
        edges.append((a, b, values[eid], ("edge", eid)))
    ja, jb = g.edges[j]
    for v in range(n):
        if v == ja or v == jb:
            edges.append((r, v, INFINITE, ("source", v)))
        else:
            incident = sum(values[e] for e in g.incidence[v])
            edges.append((r, v, incident, ("source", v)))
    for v in range(n):
        edges.append((s, v, 2 * q, ("sink", v)))
    return FlowNetwork(node_count=n + 2, source=r, sink=s, edges=tuple(edges))


def min_tight_increment(
    g: MultiGraph, x_prime: IncrementVector, j: int, q: int
) -> tuple[int, EdgeSubset]:
    """Largest integer increment of x' at edge j that stays inside the
    scaled polymatroid, together with a constraint set attaining it.

    Decoded from the min cut: with U the graph vertices on the source side,
    the tight set is every edge with both endpoints in U, and the increment
    is cut/2 - x'(E) - q.  Both endpoints of j always land in U, so j itself
    is in the returned set.
    """
    cut = min_cut(build_aux_network(g, x_prime, j, q))
    if cut.value % 2 != 0:
        raise InvariantViolation(f"odd cut value {cut.value}")
    u_side = cut.source_side
    tight = frozenset(
        eid for eid, (a, b) in enumerate(g.edges) if a in u_side and b in u_side
    )
    epsilon = cut.value // 2 - x_prime.total() - q
    if epsilon < 0 or j not in tight:
        raise InvariantViolation(
            f"bad subproblem decode at edge {j}: epsilon={epsilon}, tight={sorted(tight)}"
        )
    return epsilon, tight


class _SubproblemSolver:
    """Reusable min-cut workspace for one greedy pass.

    The auxiliary network's topology is fixed for a given graph, only the
    capacities follow the increment vector, so the arc structure is built
    once and each solve works on a copied capacity array.  Flow edge layout:
    [0, m) original edges, [m, m+n) source-to-vertex, [m+n, m+2n)
    sink-to-vertex; flow edge i owns arcs 2i and 2i+1.
    """

    def __init__(self, g: MultiGraph, q: int):
        n = g.vertex_count
        m = g.edge_count
        self.g = g
        self.q = q
        self.n = n
        self.m = m
        self.source = n
        self.sink = n + 1
        to: list[int] = []
        adj: list[list[int]] = [[] for _ in range(n + 2)]

        def add_arc_pair(u: int, v: int) -> None:
            a = len(to)
            to.append(v)
            to.append(u)
            adj[u].append(a)
            adj[v].append(a + 1)

        for u, v in g.edges:
            add_arc_pair(u, v)
        for v in range(n):
            add_arc_pair(self.source, v)
        for v in range(n):
            add_arc_pair(self.sink, v)
        self.to = to
        self.adj = adj
        base = [0] * len(to)
        for v in range(n):
            a = 2 * (m + n + v)
            base[a] = base[a + 1] = 2 * q
        self.base = base
        self.x_total = 0

    def raise_edge(self, edge: int, delta: int) -> None:
        """Reflect x'(edge) += delta in the capacity template."""
        if delta == 0:
            return
        base = self.base
        a = 2 * edge
        base[a] += delta
        base[a + 1] += delta
        u, v = self.g.edges[edge]
        for vertex in (u, v):
            a = 2 * (self.m + vertex)
            base[a] += delta
            base[a + 1] += delta
        self.x_total += delta

    def solve(self, j: int) -> tuple[int, EdgeSubset]:
        """Same contract as min_tight_increment for the tracked vector."""
        caps = self.base.copy()
        # strictly larger than the sum of every finite capacity
        infinite = 3 * self.x_total + 2 * self.q * self.n + 1
        ja, jb = self.g.edges[j]
        for vertex in (ja, jb):
            a = 2 * (self.m + vertex)
            caps[a] = caps[a + 1] = infinite
        value, level = dinic(self.n + 2, self.source, self.sink, self.to, self.adj, caps)
        if value % 2 != 0:
            raise InvariantViolation(f"odd cut value {value}")
        u_side = [False] * self.n
        for v in range(self.n):
            if level[v] != -1:
                u_side[v] = True
        tight = frozenset(
            eid for eid, (a, b) in enumerate(self.g.edges) if u_side[a] and u_side[b]
        )
        epsilon = value // 2 - self.x_total - self.q
        if epsilon < 0 or j not in tight:
            raise InvariantViolation(
                f"bad subproblem decode at edge {j}: epsilon={epsilon}"
            )
        return epsilon, tight


def cunningham_basis(
    g: MultiGraph,
    p: int,
    q: int,
    *,
    edge_order: Sequence[int] | None = None,
    iteration_hook: Callable[[IterationRecord], None] | None = None,
) -> BasisResult:
    """One greedy pass at target rate p/q, visiting each edge once.

    Every edge j is raised by min(subproblem increment, p - x'(j)); the
    subproblem's constraint set is accumulated into the tight set only when
    its increment is strictly smaller than the cap.  The returned total is
    independent of the visit order; the tight set need not be.
    """
    require_connected(g, nontrivial=True)
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    m = g.edge_count
    order = range(m) if edge_order is None else list(edge_order)
    if edge_order is not None and sorted(order) != list(range(m)):
        raise ValueError("edge_order must be a permutation of all edge ids")
    x = IncrementVector.zeros(m, q)
    solver = _SubproblemSolver(g, q)
    tight: set[int] = set()
    for j in order:
        before = x.snapshot() if iteration_hook else ()
        bound, bound_set = solver.solve(j)
        cap = p - x.values[j]
        if bound < cap:
            tight |= bound_set
            applied = bound
        else:
            applied = cap
        x.values[j] += applied
        solver.raise_edge(j, applied)
        if iteration_hook:
            iteration_hook(
                IterationRecord(
                    edge=j,
                    before=before,
                    bound=bound,
                    bound_set=bound_set,
                    applied=applied,
                    after=x.snapshot(),
                )
            )
    tight_frozen = frozenset(tight)
    candidate = frozenset(range(m)) - tight_frozen
    total = x.total()
    rank = g.vertex_count - component_count(g, tight_frozen)
    if x.subset_sum(tight_frozen) != q * rank:
        raise InvariantViolation("accumulated tight set is not tight at exit")
    return BasisResult(vector=x, tight_set=tight_frozen, candidate=candidate, total=total)
