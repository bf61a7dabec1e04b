"""Graph vulnerability: the largest min-overlap-to-size ratio over edge subsets.

The value is found by binary search over the finite set of ratios the
quantity can take, using the greedy basis total as the threshold oracle.
A genuine critical set is then extracted, falling back to a slightly
smaller target rate when the direct run returns nothing.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvariantViolation
from .graph import EdgeSubset, MultiGraph, bridges, require_connected, theta_of_set
from .polymatroid import BasisResult, cunningham_basis


@dataclass(frozen=True)
class ProbeRecord:
    p: int
    q: int
    basis_total: int


@dataclass(frozen=True)
class CriticalSetResult:
    theta: Fraction
    critical: EdgeSubset
    used_fallback: bool
    probes: tuple[ProbeRecord, ...]


def _candidate_pairs(vertex_count: int, edge_count: int) -> list[tuple[int, int]]:
    """Reduced (p, q) pairs of every candidate value, ascending.

    Sorting by the float quotient is exact here: distinct candidates differ
    by at least 1/edge_count^2, orders of magnitude above double rounding
    for any graph that fits in memory.
    """
    if vertex_count < 2 or edge_count < 1:
        raise ValueError("need at least 2 vertices and 1 edge")
    p_max_global = vertex_count - 1
    reduced = set()
    for q in range(1, edge_count + 1):
        for p in range(1, min(p_max_global, q) + 1):
            d = gcd(p, q)
            reduced.add((p // d, q // d))
    return sorted(reduced, key=lambda pair: pair[0] / pair[1])


def theta_candidates(vertex_count: int, edge_count: int) -> list[Fraction]:
    """All values p/q with 1 <= p <= min(vertex_count - 1, q), 1 <= q <= edge_count,
    sorted and deduplicated."""
    return [Fraction(p, q) for p, q in _candidate_pairs(vertex_count, edge_count)]


def is_theta_le(g: MultiGraph, p: int, q: int) -> bool:
    """Whether the graph vulnerability is at most p/q."""
    res = cunningham_basis(g, p, q)
    return res.total >= q * (g.vertex_count - 1)


def vulnerability(g: MultiGraph, *, upper_bound: Fraction | None = None) -> CriticalSetResult:
    """Vulnerability of the graph together with a certified critical set.

    The direct greedy run at the exact value usually yields a critical set;
    when it comes back empty (the whole edge set went tight) the run is
    repeated at p/q - 1/|E|^2, which is guaranteed to produce one.  Either
    way the returned set is re-checked against the definition.

    ``upper_bound`` narrows the candidate search to values at most the
    bound; the peeling recursion passes the parent value, which components
    provably never exceed.  A wrong bound cannot corrupt the result: the
    landing check below refuses values the threshold test does not confirm.
    """
    require_connected(g, nontrivial=True)
    n, m = g.vertex_count, g.edge_count
    probes: list[ProbeRecord] = []
    runs: dict[tuple[int, int], BasisResult] = {}

    def run(p: int, q: int) -> BasisResult:
        res = runs.get((p, q))
        if res is None:
            res = cunningham_basis(g, p, q)
            runs[(p, q)] = res
            probes.append(ProbeRecord(p, q, res.total))
        return res

    if bridges(g):
        # an edge lies in every spanning tree exactly when it is a bridge,
        # and the value is 1 exactly when such an edge exists, so the search
        # can be skipped (the extraction below is unchanged)
        theta = Fraction(1)
    else:
        pairs = _candidate_pairs(n, m)
        quotients = [p / q for p, q in pairs]
        # value never drops below (n-1)/m: prune, with exact nudges around
        # the float landing spot
        lo = bisect_left(quotients, (n - 1) / m)
        while lo < len(pairs) and pairs[lo][0] * m < (n - 1) * pairs[lo][1]:
            lo += 1
        while lo > 0 and pairs[lo - 1][0] * m >= (n - 1) * pairs[lo - 1][1]:
            lo -= 1
        hi = len(pairs) - 1
        if upper_bound is not None:
            hi = bisect_right(quotients, float(upper_bound)) - 1
            while hi + 1 < len(pairs) and Fraction(*pairs[hi + 1]) <= upper_bound:
                hi += 1
            while hi >= 0 and Fraction(*pairs[hi]) > upper_bound:
                hi -= 1
        if not 0 <= lo <= hi:
            raise InvariantViolation("candidate window is empty")
        while lo < hi:
            mid = (lo + hi) // 2
            p, q = pairs[mid]
            if run(p, q).total >= q * (n - 1):
                hi = mid
            else:
                lo = mid + 1
        theta = Fraction(*pairs[lo])

    direct = run(theta.numerator, theta.denominator)
    if direct.total < theta.denominator * (n - 1):
        raise InvariantViolation("binary search landed on a non-achievable value")
    if direct.candidate:
        critical = direct.candidate
        used_fallback = False
    else:
        p2 = theta.numerator * m * m - theta.denominator
        q2 = theta.denominator * m * m
        fallback = cunningham_basis(g, p2, q2)
        probes.append(ProbeRecord(p2, q2, fallback.total))
        critical = fallback.candidate
        used_fallback = True
        if not critical:
            raise InvariantViolation("fallback run still produced an empty set")

    if theta_of_set(g, critical) != theta:
        raise InvariantViolation(
            f"extracted set is not critical: theta({sorted(critical)}) != {theta}"
        )
    if theta < Fraction(n - 1, m) or theta > 1:
        raise InvariantViolation(f"vulnerability {theta} outside its provable range")
    return CriticalSetResult(
        theta=theta, critical=critical, used_fallback=used_fallback, probes=tuple(probes)
    )
