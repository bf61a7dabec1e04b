from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from treemodulus.errors import CapacityOverflowError, NoFiniteCutError
from treemodulus.flow import INFINITE, CutResult, FlowNetwork, min_cut


def brute_min_cut_value(net: FlowNetwork) -> int:
    """Minimum crossing capacity over all source/sink bipartitions."""
    others = [v for v in range(net.node_count) if v not in (net.source, net.sink)]
    best = None
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            side = {net.source, *extra}
            value = 0
            for u, v, cap, _tag in net.edges:
                if (u in side) != (v in side):
                    value += net.infinite_value if cap is INFINITE else cap
            if best is None or value < best:
                best = value
    return best


def test_single_edge():
    net = FlowNetwork(2, 0, 1, ((0, 1, 5, None),))
    cut = min_cut(net)
    assert cut.value == 5
    assert cut.source_side == frozenset({0})
    assert cut.cut_edges == (0,)


def test_two_parallel_paths():
    # r-a-s with caps (3,4) plus r-b-s with caps (2,2): enumeration gives 5
    net = FlowNetwork(
        4,
        0,
        1,
        ((0, 2, 3, None), (2, 1, 4, None), (0, 3, 2, None), (3, 1, 2, None)),
    )
    cut = min_cut(net)
    assert cut.value == 5
    assert cut.value == brute_min_cut_value(net)


def test_triangle_aux_network():
    # the subproblem network for a triangle with zero increments, q=3,
    # j joining a and b; enumerating bipartitions gives value 12 with the
    # endpoints of j on the source side
    q = 3
    edges = [
        (0, 1, 0, None), (1, 2, 0, None), (0, 2, 0, None),  # original edges
        (3, 0, INFINITE, None), (3, 1, INFINITE, None), (3, 2, 0, None),  # source side
        (4, 0, 2 * q, None), (4, 1, 2 * q, None), (4, 2, 2 * q, None),  # sink side
    ]
    net = FlowNetwork(5, 3, 4, tuple(edges))
    assert brute_min_cut_value(net) == 12
    cut = min_cut(net)
    assert cut.value == 12
    assert cut.source_side == frozenset({3, 0, 1})


def test_cut_result_invariants():
    net = FlowNetwork(
        4,
        0,
        3,
        ((0, 1, 3, None), (0, 2, 2, None), (1, 2, 1, None), (1, 3, 2, None), (2, 3, 3, None)),
    )
    cut = min_cut(net)
    assert cut.value == sum(net.capacity_of(e) for e in cut.cut_edges)
    assert all(net.edges[e][2] is not INFINITE for e in cut.cut_edges)
    assert net.source in cut.source_side
    assert net.sink not in cut.source_side


def test_no_finite_cut():
    net = FlowNetwork(2, 0, 1, ((0, 1, INFINITE, None),))
    with pytest.raises(NoFiniteCutError):
        min_cut(net)


def test_infinite_edges_never_cross():
    # the infinite edge forces vertex 2 onto the source side
    net = FlowNetwork(4, 0, 1, ((0, 2, INFINITE, None), (2, 1, 4, None), (0, 1, 1, None)))
    cut = min_cut(net)
    assert cut.value == 5
    assert 2 in cut.source_side


def test_capacity_overflow_rejected():
    with pytest.raises(CapacityOverflowError):
        FlowNetwork(2, 0, 1, ((0, 1, 1 << 63, None),))


def test_validations():
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 0, ())
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1, ((1, 1, 3, None),))
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1, ((0, 1, -2, None),))


def test_deterministic():
    edges = tuple((a, b, (a + 2 * b) % 5 + 1, None) for a in range(5) for b in range(a + 1, 6))
    net = FlowNetwork(6, 0, 5, edges)
    first = min_cut(net)
    second = min_cut(net)
    assert first == second


@st.composite
def small_networks(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = []
    for a, b in pairs:
        include = draw(st.integers(min_value=0, max_value=3))
        if include == 0:
            continue
        cap = draw(st.one_of(st.integers(min_value=0, max_value=20), st.just(INFINITE)))
        edges.append((a, b, cap, None))
    source = 0
    sink = n - 1
    return FlowNetwork(n, source, sink, tuple(edges))


@given(small_networks())
@settings(max_examples=200, deadline=None)
def test_matches_exhaustive_cut_enumeration(net):
    expected = brute_min_cut_value(net)
    if expected >= net.infinite_value:
        with pytest.raises(NoFiniteCutError):
            min_cut(net)
        return
    cut = min_cut(net)
    assert cut.value == expected
    assert cut.value == sum(net.capacity_of(e) for e in cut.cut_edges)
