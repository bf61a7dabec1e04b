import pytest

from treemodulus.errors import GeneratorError
from treemodulus.generators import (
    ATTEMPT_CAP,
    SplitMix64,
    complete_graph,
    geometric_graph,
    gnp_graph,
    multipartite_graph,
    random_connected_multigraph,
)


class TestSplitMix64:
    def test_reference_vector(self):
        # first outputs of splitmix64 seeded with 0, per the published
        # reference implementation
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4
        assert rng.next_u64() == 0x06C45D188009454F

    def test_determinism(self):
        a = SplitMix64(123456789)
        b = SplitMix64(123456789)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_uniform_range(self):
        rng = SplitMix64(42)
        for _ in range(1000):
            value = rng.uniform()
            assert 0.0 <= value < 1.0

    def test_below_is_unbiased_rejection(self):
        rng = SplitMix64(7)
        draws = [rng.below(10) for _ in range(2000)]
        assert set(draws) == set(range(10))


class TestFamilies:
    def test_complete(self):
        g = complete_graph(4)
        assert g.vertex_count == 4
        assert g.edge_count == 6

    def test_multipartite_k3(self):
        g = multipartite_graph(3)
        assert g.vertex_count == 6  # parts of sizes 1, 2, 3
        assert g.edge_count == 8  # 1*2 + 2*3

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_multipartite_edge_count_formula(self, k):
        g = multipartite_graph(k)
        assert g.vertex_count == k * (k + 1) // 2
        assert g.edge_count == sum(i * (i + 1) for i in range(1, k))

    def test_multipartite_structure(self):
        g = multipartite_graph(3)
        # part boundaries: [0], [1,2], [3,4,5]; no edges inside a part
        for a, b in g.edges:
            part_a = 0 if a == 0 else (1 if a <= 2 else 2)
            part_b = 0 if b == 0 else (1 if b <= 2 else 2)
            assert abs(part_a - part_b) == 1

    def test_gnp_deterministic_and_connected(self):
        g1 = gnp_graph(50, 7)
        g2 = gnp_graph(50, 7)
        assert g1.edges == g2.edges
        assert g1.is_connected()
        assert g1.edge_count <= 50 * 49 // 2

    def test_gnp_seed_changes_sample(self):
        assert gnp_graph(30, 1).edges != gnp_graph(30, 2).edges

    def test_geometric_deterministic_and_connected(self):
        g1 = geometric_graph(40, 3)
        g2 = geometric_graph(40, 3)
        assert g1.edges == g2.edges
        assert g1.is_connected()

    def test_attempt_cap(self, monkeypatch):
        # force every coin toss to fail so no edges are ever added
        monkeypatch.setattr(SplitMix64, "uniform", lambda self: 0.999999)
        with pytest.raises(GeneratorError):
            gnp_graph(5, 1)

    def test_attempt_cap_value(self):
        assert ATTEMPT_CAP >= 1

    def test_random_connected_multigraph(self):
        g = random_connected_multigraph(6, 4, seed=99)
        assert g.vertex_count == 6
        assert g.edge_count == 9
        assert g.is_connected()
