from __future__ import annotations

from collections import Counter

import pytest

from sgfree.enumeration import (
    EnumerationReport,
    all_signed_graphs,
    complete_underlying_graphs,
    dump_reproducers,
    graph_count,
    graph_from_index,
    index_of,
    run_enumeration,
    switching_canonical,
    switching_class_representatives,
    switching_isomorphism_classes,
)
from sgfree.graph import parse_graph_text, switch, switching_equivalence_witness


class TestIndexing:
    def test_digit_order(self):
        G = graph_from_index(3, 1 + 2 * 4 + 3 * 16)
        assert G.pos == {(1, 2), (2, 3)} and G.neg == {(1, 3), (2, 3)}

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bijective(self, n):
        graphs = list(all_signed_graphs(n))
        assert len(graphs) == graph_count(n) == len(set(graphs))
        assert [index_of(G) for G in graphs] == list(range(graph_count(n)))

    def test_complete_underlying(self):
        graphs = list(complete_underlying_graphs(3))
        assert len(graphs) == 27
        assert all(G.underlying().is_complete() for G in graphs)


class TestSwitchingClasses:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_classes_partition_all_graphs(self, n):
        reps = list(switching_class_representatives(n))
        assert sum(size for _, size in reps) == graph_count(n)
        assert len({G for G, _ in reps}) == len(reps)
        by_canonical = Counter(switching_canonical(G) for G in all_signed_graphs(n))
        assert sorted(by_canonical.values()) == sorted(size for _, size in reps)
        assert all(switching_canonical(G) == G for G, _ in reps)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_canonical_is_switching_equivalent(self, n):
        for G in list(all_signed_graphs(n))[::17]:
            assert switching_equivalence_witness(G, switching_canonical(G)) is not None

    def test_canonical_is_invariant(self):
        for G in list(all_signed_graphs(3)):
            assert switching_canonical(switch(G, (-1, 1, -1))) == switching_canonical(G)

    @pytest.mark.parametrize("n, classes", [(2, 3), (3, 11), (4, 82)])
    def test_switching_isomorphism_classes(self, n, classes):
        reps = list(switching_isomorphism_classes(n))
        assert len(reps) == classes
        assert sum(size for _, size in reps) == graph_count(n)
        for (G, _), (H, _) in zip(reps, reps[1:]):
            assert switching_equivalence_witness(G, H, up_to_isomorphism=True) is None


class TestHarness:
    def test_two_vertices(self):
        report = run_enumeration(2, workers=1)
        assert (report.graphs, report.free, report.non_free) == (4, 4, 0)
        assert not report.disagreements

    def test_three_vertices(self):
        report = run_enumeration(3, workers=1)
        assert report.lines() == [
            "vertices 3",
            "graphs 64",
            "free 60",
            "non-free 4",
            "witness induced-unbalanced-cycle 4",
            "disagreements 0",
        ]

    def test_reduced_matches_labeled(self):
        full = run_enumeration(3, workers=1)
        reduced = run_enumeration(3, reduce=True, workers=1)
        assert reduced.classes == 11
        assert (reduced.graphs, reduced.free, reduced.witnesses) == (full.graphs, full.free, full.witnesses)

    def test_deterministic_across_sharding(self):
        a = run_enumeration(3, workers=1, shards=1)
        b = run_enumeration(3, workers=2, shards=5)
        assert a.lines() == b.lines()

    def test_merge(self):
        a = EnumerationReport(3, graphs=2, free=1, non_free=1, witnesses=Counter({"x": 1}), disagreements=[5])
        b = EnumerationReport(3, graphs=1, free=1, disagreements=[2])
        a.merge(b)
        assert (a.graphs, a.free, a.disagreements) == (3, 2, [5, 2])

    def test_reproducers(self, tmp_path):
        paths = dump_reproducers(3, [1 + 2 * 4 + 3 * 16], tmp_path / "out")
        assert parse_graph_text(paths[0].read_text()) == graph_from_index(3, 57)
