from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgfree.cycles import (
    BALANCED_CYCLE,
    OBSTRUCTION,
    UNBALANCED_CYCLE,
    Chord,
    ConditionWitness,
    SignedCycle,
    balanced_chordal_witness,
    enumerate_cycles,
    format_cycle,
    has_balanced_chord,
    obstruction_witness,
    parse_cycle,
    unbalanced_induced_cycle_witness,
    witness_holds,
)
from sgfree.graph import (
    OBSTRUCTION_GRAPH,
    SignedGraph,
    build_signed_graph,
    complete_signed_graph,
    relabel,
    switch,
)

from . import oracles
from .strategies import PROPERTY, graphs_with_switching, signed_graphs

UTRIANGLE = build_signed_graph(3, [(1, 2, "+"), (2, 3, "+"), (1, 3, "-")])
C4 = build_signed_graph(4, [(1, 2, "+"), (2, 3, "+"), (3, 4, "+"), (1, 4, "+")])


def cycle(text: str) -> SignedCycle:
    return parse_cycle(text)


class TestNotation:
    @pytest.mark.parametrize(
        "vertices, signs, text",
        [
            ((1, 2, 3, 4), (-1, 1, 1, 1), "[1 2] 3 4"),
            ((1, 2, 3), (1, 1, -1), "1 2 [3 1]"),
            ((1, 2, 3, 4), (-1, 1, -1, 1), "[1 2] [3 4]"),
            ((1, 2, 3, 4), (-1, -1, 1, 1), "[1 2 3] 4"),
            ((1, 2, 3), (-1, -1, -1), "[1 2 3 1]"),
            ((1, 2, 3), (1, 1, 1), "1 2 3"),
        ],
    )
    def test_format_and_parse(self, vertices, signs, text):
        C = SignedCycle(vertices, signs)
        assert format_cycle(C) == text
        assert parse_cycle(text) == C

    @pytest.mark.parametrize("text", ["[1] 2 3", "[1 2 3", "1 2] 3", "1 2 3 1", "1 2 x"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_cycle(text)

    @PROPERTY
    @given(st.integers(3, 7).flatmap(lambda k: st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k)))
    def test_round_trip(self, signs):
        C = SignedCycle(tuple(range(1, len(signs) + 1)), tuple(signs))
        assert parse_cycle(format_cycle(C)) == C

    def test_cycle_validation(self):
        with pytest.raises(ValueError):
            SignedCycle((1, 2), (1, 1))
        with pytest.raises(ValueError):
            SignedCycle((1, 2, 1), (1, 1, 1))


class TestEnumeration:
    def test_positive_triangle(self):
        T = build_signed_graph(3, [(1, 2, "+"), (2, 3, "+"), (1, 3, "+")])
        assert len(list(enumerate_cycles(T, 3, 3))) == 1

    def test_double_edge_gives_two_sign_choices(self):
        G = build_signed_graph(3, [(1, 2, "+-"), (2, 3, "+"), (1, 3, "+")])
        cycles = list(enumerate_cycles(G, 3, 3))
        assert len(cycles) == 2
        assert sorted(C.sign for C in cycles) == [-1, 1]

    def test_square(self):
        cycles = list(enumerate_cycles(C4, 3, 4))
        assert [len(C) for C in cycles] == [4]

    @pytest.mark.parametrize("bounds", [(2, 3), (4, 3), (3, 5)])
    def test_bounds(self, bounds):
        with pytest.raises(ValueError):
            list(enumerate_cycles(C4, *bounds))

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_matches_permutation_oracle(self, G):
        ours = sorted((C.vertices, C.signs) for C in enumerate_cycles(G, 3, G.n)) if G.n >= 3 else []
        theirs = sorted(oracles.all_cycles(G))
        assert ours == theirs

    @PROPERTY
    @given(signed_graphs(min_n=3, max_n=5))
    def test_order_is_deterministic(self, G):
        first = list(enumerate_cycles(G, 3, G.n))
        assert first == list(enumerate_cycles(G, 3, G.n))
        assert all(C.lies_in(G) for C in first)


class TestBalancedChord:
    def test_positive_chord(self):
        G = build_signed_graph(4, [(1, 2, "+"), (2, 3, "+"), (3, 4, "+"), (1, 4, "+"), (1, 3, "+")])
        assert has_balanced_chord(G, cycle("1 2 3 4")) == Chord(1, 3, 1)

    def test_wrong_sign_chord(self):
        # [1 2] [3 4]: the arc 1-2-3 has sign -1, so only a negative chord {1,3} splits it
        G = build_signed_graph(4, [(1, 2, "-"), (2, 3, "+"), (3, 4, "-"), (1, 4, "+"), (1, 3, "+")])
        C = cycle("[1 2] [3 4]")
        assert C.balanced
        assert has_balanced_chord(G, C) is None
        G2 = build_signed_graph(4, [(1, 2, "-"), (2, 3, "+"), (3, 4, "-"), (1, 4, "+"), (1, 3, "-")])
        assert has_balanced_chord(G2, C) == Chord(1, 3, -1)

    def test_chordless(self):
        assert has_balanced_chord(C4, cycle("1 2 3 4")) is None

    def test_preconditions(self):
        with pytest.raises(ValueError):
            has_balanced_chord(C4, cycle("[1 2] 3 4"))
        with pytest.raises(ValueError):
            has_balanced_chord(UTRIANGLE, cycle("1 2 3"))


class TestConditionI:
    def test_square(self):
        w = balanced_chordal_witness(C4)
        assert w.tag == BALANCED_CYCLE and format_cycle(w.cycle) == "1 2 3 4"

    def test_triangle_vacuous(self):
        assert balanced_chordal_witness(UTRIANGLE) is None

    def test_obstruction_graph(self):
        assert balanced_chordal_witness(OBSTRUCTION_GRAPH) is None

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_matches_oracle(self, G):
        assert (balanced_chordal_witness(G) is not None) == oracles.violates_I(G)


class TestConditionII:
    def test_triangle(self):
        w = unbalanced_induced_cycle_witness(UTRIANGLE)
        assert w.tag == UNBALANCED_CYCLE and w.vertices == (1, 2, 3)
        assert format_cycle(w.cycle) == "1 2 [3 1]"

    def test_double_edge_disqualifies(self):
        G = build_signed_graph(3, [(1, 2, "+-"), (2, 3, "+"), (1, 3, "+")])
        assert unbalanced_induced_cycle_witness(G) is None

    def test_square(self):
        G = build_signed_graph(4, [(1, 2, "+"), (2, 3, "-"), (3, 4, "+"), (1, 4, "+")])
        w = unbalanced_induced_cycle_witness(G)
        assert w.vertices == (1, 2, 3, 4)

    def test_smallest_first(self):
        # an unbalanced square containing an unbalanced triangle via a chord
        G = build_signed_graph(5, [(1, 2, "+"), (2, 3, "+"), (1, 3, "-"), (3, 4, "+"), (4, 5, "-"), (3, 5, "+")])
        assert unbalanced_induced_cycle_witness(G).vertices == (1, 2, 3)

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_matches_oracle(self, G):
        assert (unbalanced_induced_cycle_witness(G) is not None) == oracles.violates_II(G)


class TestConditionIII:
    def test_obstruction_graph(self):
        w = obstruction_witness(OBSTRUCTION_GRAPH)
        assert w.tag == OBSTRUCTION and w.vertices == (1, 2, 3, 4)
        assert w.bijection == (1, 2, 3, 4) and w.switching == (1, 1, 1, 1)

    def test_switched_obstruction_graph(self):
        G = switch(OBSTRUCTION_GRAPH, (-1, 1, 1, 1))
        w = obstruction_witness(G)
        assert w is not None
        assert switch(relabel(G, w.bijection), w.switching) == OBSTRUCTION_GRAPH
        assert witness_holds(G, w)

    def test_type_b(self):
        assert obstruction_witness(complete_signed_graph(4)) is None

    @PROPERTY
    @given(signed_graphs(min_n=4, max_n=5, states=(1, 2, 3)))
    def test_matches_oracle_dense(self, G):
        assert (obstruction_witness(G) is not None) == oracles.violates_III(G)

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_matches_oracle(self, G):
        assert (obstruction_witness(G) is not None) == oracles.violates_III(G)


class TestWitnesses:
    @PROPERTY
    @given(graphs_with_switching(max_n=5))
    def test_switching_invariance(self, case):
        G, nu = case
        H = switch(G, nu)
        for find in (balanced_chordal_witness, unbalanced_induced_cycle_witness, obstruction_witness):
            assert (find(G) is None) == (find(H) is None)

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_witnesses_reverify(self, G):
        for find in (balanced_chordal_witness, unbalanced_induced_cycle_witness, obstruction_witness):
            w = find(G)
            if w is not None:
                assert witness_holds(G, w)

    def test_forged_witnesses_fail(self):
        assert not witness_holds(C4, ConditionWitness(UNBALANCED_CYCLE, (1, 2, 3, 4)))
        assert not witness_holds(OBSTRUCTION_GRAPH, ConditionWitness(OBSTRUCTION, (1, 2, 3, 4), None, (2, 1, 3, 4), (1, 1, 1, 1)))
        assert not witness_holds(C4, ConditionWitness(BALANCED_CYCLE, (1, 2, 3, 4), cycle("[1 2] [3 4]")))
        assert not witness_holds(C4, ConditionWitness(OBSTRUCTION, (1, 2, 3, 9), None, (1, 2, 3, 4), (1, 1, 1, 1)))

    def test_edgeless(self):
        E = SignedGraph(5, frozenset(), frozenset())
        assert balanced_chordal_witness(E) is None
        assert unbalanced_induced_cycle_witness(E) is None
        assert obstruction_witness(E) is None
