from __future__ import annotations

import pytest
from hypothesis import given

from sgfree import polynomial as P
from sgfree.certificates import DivisionalChain, EliminationChain, JoinTree
from sgfree.cycles import OBSTRUCTION, UNBALANCED_CYCLE
from sgfree.freeness import (
    CONDITIONS,
    CertificateError,
    CompleteCaseReport,
    certificate_failure,
    check_conditions,
    complete_case_analysis,
    decide_freeness,
    divisional_search,
    m_class_certificate,
    verify_certificate,
)
from sgfree.graph import (
    OBSTRUCTION_GRAPH,
    SignedGraph,
    build_signed_graph,
    complete_signed_graph,
)
from sgfree.recognition import link_elimination_ordering

from . import oracles
from .strategies import PROPERTY, signed_graphs

UTRIANGLE = build_signed_graph(3, [(1, 2, "+"), (2, 3, "+"), (1, 3, "-")])
BOWTIE = build_signed_graph(3, [(1, 2, "+-"), (2, 3, "+-")])  # two K±_2 sharing vertex 2


def edgeless(n):
    return SignedGraph(n, frozenset(), frozenset())


class TestConditions:
    def test_triangle(self):
        assert check_conditions(UTRIANGLE).tag == UNBALANCED_CYCLE

    def test_obstruction_graph(self):
        assert check_conditions(OBSTRUCTION_GRAPH).tag == OBSTRUCTION

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_type_b(self, n):
        assert check_conditions(complete_signed_graph(n)) is None

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_matches_oracle(self, G):
        assert (check_conditions(G) is None) == oracles.passes_conditions(G)


class TestDecide:
    def test_superset_balanced_chordal_is_free(self):
        G = build_signed_graph(4, [(1, 2, "+-"), (2, 3, "+"), (1, 3, "+"), (3, 4, "+")])
        verdict = decide_freeness(G)
        assert verdict.free and verdict.basis == CONDITIONS

    def test_unbalanced_square(self):
        G = build_signed_graph(4, [(1, 2, "+"), (2, 3, "+"), (3, 4, "+"), (1, 4, "-")])
        verdict = decide_freeness(G)
        assert not verdict.free and verdict.certificate.tag == UNBALANCED_CYCLE

    def test_edgeless(self):
        verdict = decide_freeness(edgeless(3))
        assert verdict.free
        assert verdict.certificate == EliminationChain((3, 2, 1))

    def test_obstruction_graph(self):
        verdict = decide_freeness(OBSTRUCTION_GRAPH)
        assert not verdict.free and verdict.certificate.tag == OBSTRUCTION

    def test_missing_certificate_is_an_error(self, monkeypatch):
        monkeypatch.setattr("sgfree.freeness.m_class_certificate", lambda G: None)
        with pytest.raises(CertificateError):
            decide_freeness(edgeless(2))

    @PROPERTY
    @given(signed_graphs(max_n=5))
    def test_certificate_verifies(self, G):
        verdict = decide_freeness(G)
        assert verify_certificate(G, verdict.certificate)
        assert verdict.free == isinstance(verdict.certificate, (EliminationChain, JoinTree))


class TestMClass:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_type_b(self, n):
        assert m_class_certificate(complete_signed_graph(n)) == EliminationChain(tuple(range(n, 0, -1)))

    def test_two_doubles_sharing_a_vertex(self):
        cert = m_class_certificate(BOWTIE)
        assert isinstance(cert, EliminationChain)
        assert verify_certificate(BOWTIE, cert)

    def test_unbalanced_triangle(self):
        assert m_class_certificate(UTRIANGLE) is None

    def test_join_needed(self):
        # two triangles sharing vertex 4, each with a double edge opposite it:
        # no link elimination ordering exists, only a gluing along K±_1
        G = build_signed_graph(
            5,
            [(1, 4, "+"), (1, 5, "+-"), (2, 3, "+-"), (2, 4, "+"), (3, 4, "+"), (4, 5, "+")],
        )
        assert link_elimination_ordering(G) is None
        cert = m_class_certificate(G)
        assert cert == JoinTree((4,), EliminationChain((5, 1, 4)), EliminationChain((3, 2, 4)))
        assert verify_certificate(G, cert)
        assert divisional_search(G) is not None

    def test_forged_join_rejected(self):
        G = build_signed_graph(4, [(1, 2, "+"), (2, 3, "+"), (3, 4, "+"), (1, 4, "+"), (1, 3, "+-")])
        forged = JoinTree((1, 3), EliminationChain((1, 2, 3)), EliminationChain((1, 4)))
        assert certificate_failure(G, forged) == "root/join: not a proper decomposition"


class TestDivisional:
    def test_boolean_plane(self):
        chain = divisional_search(edgeless(2))
        assert len(chain.steps) == 2
        assert [str(s.hyperplane) for s in chain.steps] == ["x1", "x1"]

    def test_unbalanced_triangle(self):
        assert divisional_search(UTRIANGLE) is None

    def test_type_b_2(self):
        chain = divisional_search(complete_signed_graph(2))
        assert chain is not None
        assert P.divides(chain.steps[0].restricted_chi, chain.steps[0].chi)

    def test_depth_limit(self):
        assert divisional_search(complete_signed_graph(3), depth_limit=2) is None
        assert divisional_search(complete_signed_graph(3), depth_limit=3) is not None

    def test_shared_memo(self):
        memo = {}
        first = divisional_search(OBSTRUCTION_GRAPH, memo=memo)
        assert first is None and memo
        assert divisional_search(OBSTRUCTION_GRAPH, memo=memo) is None

    @PROPERTY
    @given(signed_graphs(max_n=4))
    def test_chains_verify(self, G):
        chain = divisional_search(G)
        if chain is not None:
            assert verify_certificate(G, chain)

    def test_tampered_chain_fails(self):
        chain = divisional_search(complete_signed_graph(2))
        short = DivisionalChain(chain.steps[:1])
        assert certificate_failure(complete_signed_graph(2), short).startswith("divisional")


class TestCompleteCase:
    def test_type_b(self):
        report = complete_case_analysis(complete_signed_graph(4))
        assert report == CompleteCaseReport(True, True, True, True, True)

    def test_obstruction_graph(self):
        report = complete_case_analysis(OBSTRUCTION_GRAPH)
        assert not any(vars(report).values())

    def test_positive_k4_with_double_star(self):
        edges = [(1, b, "+-") for b in (2, 3, 4)] + [(2, 3, "+"), (2, 4, "+"), (3, 4, "+")]
        report = complete_case_analysis(build_signed_graph(4, edges))
        assert report.consistent and report.free

    def test_precondition(self):
        with pytest.raises(ValueError):
            complete_case_analysis(BOWTIE)


class TestVerification:
    def test_chain_on_type_b(self):
        assert verify_certificate(complete_signed_graph(3), EliminationChain((3, 2, 1)))

    def test_chain_on_unbalanced_triangle(self):
        failure = certificate_failure(UTRIANGLE, EliminationChain((3, 2, 1)))
        assert failure == "root/chain: vertex 1 is not link simplicial"

    def test_chain_must_cover_graph(self):
        assert certificate_failure(edgeless(3), EliminationChain((2, 1))) is not None

    def test_join_path_reported(self):
        bad = JoinTree((2,), EliminationChain((1, 2)), EliminationChain((2, 3, 1)))
        assert "join" in certificate_failure(BOWTIE, bad)

    def test_unknown_certificate(self):
        assert certificate_failure(BOWTIE, object()).startswith("unknown")
