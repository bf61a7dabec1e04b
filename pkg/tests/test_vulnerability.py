from fractions import Fraction

import sys

import pytest
from hypothesis import given, settings

import treemodulus.vulnerability  # noqa: F401 - loaded for the module handle below
from treemodulus.errors import DisconnectedGraphError
from treemodulus.graph import MultiGraph, theta_of_set
from treemodulus.oracle import brute_theta
from treemodulus.polymatroid import BasisResult, cunningham_basis
from treemodulus.vulnerability import is_theta_le, theta_candidates, vulnerability

from conftest import connected_multigraphs, graph_from_pairs

# the package re-exports the function under the same name, so fetch the
# submodule itself for monkeypatching
vuln_mod = sys.modules["treemodulus.vulnerability"]


def cycle(n):
    return graph_from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph_from_pairs(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


class TestThetaCandidates:
    def test_3_3(self):
        assert theta_candidates(3, 3) == [
            Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1),
        ]

    def test_2_1(self):
        assert theta_candidates(2, 1) == [Fraction(1)]

    def test_4_4(self):
        assert theta_candidates(4, 4) == [
            Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
            Fraction(2, 3), Fraction(3, 4), Fraction(1),
        ]

    @pytest.mark.parametrize("v,e", [(3, 3), (4, 6), (5, 7), (6, 14)])
    def test_invariants(self, v, e):
        cands = theta_candidates(v, e)
        assert all(a < b for a, b in zip(cands, cands[1:]))
        assert Fraction(v - 1, e) in cands
        assert Fraction(1) in cands
        for c in cands:
            assert 1 <= c.denominator <= e
            # some representative p/q with q <= e realises the value
            assert any(
                c == Fraction(p, q)
                for q in range(1, e + 1)
                for p in range(1, min(v - 1, q) + 1)
            )


class TestIsThetaLe:
    def test_triangle(self, triangle):
        assert is_theta_le(triangle, 2, 3)
        assert not is_theta_le(triangle, 1, 2)

    def test_tree_always_le_one(self, path4):
        assert is_theta_le(path4, 1, 1)

    def test_unreduced_fraction_accepted(self, triangle):
        assert is_theta_le(triangle, 4, 6)
        assert not is_theta_le(triangle, 2, 4)

    @pytest.mark.parametrize(
        "maker", [lambda: cycle(5), lambda: complete(4),
                  lambda: graph_from_pairs(2, [(0, 1), (0, 1)])]
    )
    def test_monotone_over_candidates(self, maker):
        g = maker()
        expected, _ = brute_theta(g)
        results = [
            is_theta_le(g, c.numerator, c.denominator)
            for c in theta_candidates(g.vertex_count, g.edge_count)
        ]
        # false ... false, true ... true with the switch exactly at theta
        assert results == sorted(results)
        cands = theta_candidates(g.vertex_count, g.edge_count)
        first_true = results.index(True)
        assert cands[first_true] == expected


class TestVulnerability:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycles(self, n):
        result = vulnerability(cycle(n))
        assert result.theta == Fraction(n - 1, n)
        assert result.critical == frozenset(range(n))
        expected, family = brute_theta(cycle(n))
        assert result.theta == expected and result.critical in family

    @pytest.mark.parametrize("n", range(3, 8))
    def test_complete_graphs(self, n):
        result = vulnerability(complete(n))
        assert result.theta == Fraction(2, n)
        assert result.critical == frozenset(range(n * (n - 1) // 2))

    def test_bridge_triangles(self, bridge_triangles):
        result = vulnerability(bridge_triangles)
        assert result.theta == 1
        assert result.critical == frozenset({3})
        _, family = brute_theta(bridge_triangles)
        assert family == [frozenset({3})]

    def test_karate(self, karate):
        result = vulnerability(karate)
        assert result.theta == 1
        assert len(result.critical) == 1
        (eid,) = result.critical
        a, b = karate.edges[eid]
        assert {karate.label_of(a), karate.label_of(b)} == {"0", "11"}

    def test_parallel_bundle(self):
        g = graph_from_pairs(2, [(0, 1)] * 4)
        result = vulnerability(g)
        assert result.theta == Fraction(1, 4)
        assert result.critical == frozenset(range(4))

    def test_probe_trace_is_recorded(self, triangle):
        result = vulnerability(triangle)
        assert result.probes
        assert any(Fraction(p.p, p.q) == Fraction(2, 3) for p in result.probes)

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError):
            vulnerability(graph_from_pairs(4, [(0, 1), (2, 3)]))

    def test_trivial_raises(self):
        with pytest.raises(DisconnectedGraphError):
            vulnerability(MultiGraph(1, ()))


class TestFallback:
    def test_forced_empty_direct_run(self, bridge_triangles, monkeypatch):
        # make the run at the exact value return an empty candidate set so
        # the slightly-smaller rerun has to produce the critical set
        g = bridge_triangles
        true_theta = brute_theta(g)[0]
        real = cunningham_basis

        def fake(graph, p, q, **kwargs):
            res = real(graph, p, q, **kwargs)
            if Fraction(p, q) == true_theta:
                return BasisResult(
                    vector=res.vector,
                    tight_set=frozenset(range(graph.edge_count)),
                    candidate=frozenset(),
                    total=res.total,
                )
            return res

        monkeypatch.setattr(vuln_mod, "cunningham_basis", fake)
        result = vuln_mod.vulnerability(g)
        assert result.used_fallback
        assert result.theta == true_theta
        assert result.critical
        assert theta_of_set(g, result.critical) == result.theta

    @pytest.mark.parametrize("v,e", [(3, 3), (4, 6), (5, 8), (6, 10)])
    def test_fallback_rate_isolates_the_value(self, v, e):
        # (p/q - 1/e^2, p/q] must contain no other candidate value
        cands = theta_candidates(v, e)
        for value in cands:
            lower = Fraction(value.numerator * e * e - value.denominator, value.denominator * e * e)
            inside = [c for c in cands if lower < c <= value]
            assert inside == [value]


@given(connected_multigraphs(max_vertices=6, max_extra=5))
@settings(max_examples=60, deadline=None)
def test_matches_brute_force(g):
    expected, family = brute_theta(g)
    result = vulnerability(g)
    assert result.theta == expected
    assert result.critical in family
    assert theta_of_set(g, result.critical) == expected
    assert Fraction(g.vertex_count - 1, g.edge_count) <= result.theta <= 1
