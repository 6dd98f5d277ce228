"""Deciding freeness of signed-graphic arrangements, with certificates.

The decision itself is combinatorial: the arrangement of ``G`` is free iff
``G`` is balanced chordal, has no induced unbalanced cycle and no induced
subgraph switching-isomorphic to the 4-vertex obstruction.  Free graphs are
certified constructively (link-simplicial eliminations and gluings along
complete signed graphs), non-free graphs by the violated condition.

:func:`divisional_search` is an independent oracle working on
characteristic polynomials only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import polynomial
from .arrangement import char_poly_lattice, hyperplanes_of, restrict_to_hyperplane
from .certificates import (
    Certificate,
    DivisionalChain,
    DivisionStep,
    EliminationChain,
    JoinTree,
    MCertificate,
)
from .cycles import (
    ConditionWitness,
    balanced_chordal_witness,
    obstruction_witness,
    unbalanced_induced_cycle_witness,
    witness_holds,
)
from .graph import SignedGraph, SimpleGraph, tilde_of
from .recognition import is_link_simplicial, is_threshold, link_elimination_ordering

CONDITIONS = "conditions-I-II-III"
DIVISIONAL = "divisional-chain"
ELIMINATION = "elimination-ordering"


class CertificateError(RuntimeError):
    """A graph passed the three conditions but no certificate could be built."""


class ConsistencyError(AssertionError):
    """Conditions that must coincide were computed to differ."""


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    basis: str
    certificate: Certificate


def check_conditions(G: SignedGraph) -> ConditionWitness | None:
    """First violated condition among (I), (II), (III), in that order."""
    return (
        balanced_chordal_witness(G)
        or unbalanced_induced_cycle_witness(G)
        or obstruction_witness(G)
    )


def decide_freeness(G: SignedGraph) -> FreenessVerdict:
    witness = check_conditions(G)
    if witness is not None:
        return FreenessVerdict(False, CONDITIONS, witness)
    cert = m_class_certificate(G)
    if cert is None:
        raise CertificateError(f"no construction certificate for a graph passing all conditions: {G}")
    return FreenessVerdict(True, CONDITIONS, cert)


# -- construction by eliminations and joins ------------------------------


def _is_complete_signed(G: SignedGraph, S) -> bool:
    doubles = G.doubles
    return all((a, b) in doubles for a, b in combinations(sorted(S), 2))


def _components(G: SignedGraph, U: frozenset) -> list[frozenset]:
    left = set(U)
    comps = []
    adj = {v: set() for v in U}
    for a, b in G.underlying_edges:
        if a in U and b in U:
            adj[a].add(b)
            adj[b].add(a)
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        left -= seen
        comps.append(frozenset(seen))
    return comps


def _splits(G: SignedGraph, U: frozenset):
    """``(S, V1, V2)`` with ``G[S]`` complete signed and no edges between V1 and V2.

    Smallest separators first; ``V1`` always contains the first component.
    """
    verts = sorted(U)
    for k in range(len(verts) - 1):
        for S in combinations(verts, k):
            if not _is_complete_signed(G, S):
                continue
            comps = _components(G, U - set(S))
            if len(comps) < 2:
                continue
            first, rest = comps[0], comps[1:]
            for r in range(len(rest)):
                for chosen in combinations(rest, r):
                    V1 = first.union(*chosen)
                    yield frozenset(S), V1, U - V1 - set(S)


def m_class_certificate(G: SignedGraph) -> MCertificate | None:
    """Build ``G`` from nothing by link-simplicial additions and complete-graph gluings.

    Complete search, memoized on the remaining vertex set.
    """
    memo: dict[frozenset, MCertificate | None] = {}

    def build(U: frozenset) -> MCertificate | None:
        if not U:
            return EliminationChain(())
        if U in memo:
            return memo[U]
        found = None
        for v in sorted(U):
            if is_link_simplicial(G, v, U):
                sub = build(U - {v})
                if sub is not None:
                    found = _extend(sub, v)
                    break
        if found is None:
            for S, V1, V2 in _splits(G, U):
                left = build(V1 | S)
                if left is None:
                    continue
                right = build(V2 | S)
                if right is not None:
                    found = JoinTree(tuple(sorted(S)), left, right)
                    break
        memo[U] = found
        return found

    return build(frozenset(G.vertices))


def _extend(cert: MCertificate, v: int) -> EliminationChain:
    if isinstance(cert, EliminationChain):
        return EliminationChain(cert.vertices + (v,), cert.base)
    return EliminationChain((v,), cert)


# -- divisional freeness -------------------------------------------------


def divisional_search(
    G: SignedGraph, depth_limit: int | None = None, memo: dict | None = None
) -> DivisionalChain | None:
    """Search for a chain of restrictions whose polynomials divide at every step.

    Every hyperplane is tried at every level, so absence is conclusive.
    Each restriction lowers the dimension by one, so a chain has exactly
    ``G.n`` steps and a ``depth_limit`` below that finds nothing.
    ``memo`` may be shared across calls; it maps graphs to step tuples or None.
    """
    if depth_limit is not None and depth_limit < G.n:
        return None
    if memo is None:
        memo = {}

    def search(H: SignedGraph):
        if H.n == 0:
            return ()
        if H in memo:
            return memo[H]
        chi = char_poly_lattice(H)
        result = None
        tried = set()
        for h in hyperplanes_of(H):
            R = restrict_to_hyperplane(H, h)
            if R in tried:
                continue
            tried.add(R)
            chi_r = char_poly_lattice(R)
            if polynomial.divides(chi_r, chi):
                rest = search(R)
                if rest is not None:
                    result = (DivisionStep(H, h, chi, chi_r),) + rest
                    break
        memo[H] = result
        return result

    steps = search(G)
    return None if steps is None else DivisionalChain(steps)


# -- the complete case ---------------------------------------------------


@dataclass(frozen=True)
class CompleteCaseReport:
    link_elimination_ordering: bool
    supersolvable: bool
    free: bool
    conditions: bool
    threshold_and_no_unbalanced_cycle: bool

    @property
    def consistent(self) -> bool:
        return len({
            self.link_elimination_ordering,
            self.supersolvable,
            self.free,
            self.conditions,
            self.threshold_and_no_unbalanced_cycle,
        }) == 1


def complete_case_analysis(G: SignedGraph, strict: bool = True) -> CompleteCaseReport:
    """Evaluate the five equivalent conditions for a graph with complete underlying graph.

    Supersolvability is reported as implied by the ordering and freeness as
    implied by the three conditions.  With ``strict`` a disagreement raises
    :class:`ConsistencyError`.
    """
    T = tilde_of(G)
    if not T.underlying().is_complete():
        raise ValueError("underlying graph is not complete")
    leo = link_elimination_ordering(G) is not None
    cond = check_conditions(G) is None
    thr = unbalanced_induced_cycle_witness(G) is None and is_threshold(
        _negative_part(T)
    )
    report = CompleteCaseReport(leo, leo, cond, cond, thr)
    if strict and not report.consistent:
        raise ConsistencyError(f"complete-case conditions disagree on {G}: {report}")
    return report


def _negative_part(G: SignedGraph) -> SimpleGraph:
    return SimpleGraph(G.n, G.neg)


# -- verification --------------------------------------------------------


def certificate_failure(G: SignedGraph, cert: Certificate) -> str | None:
    """``None`` if ``cert`` is valid for ``G``, else the path to the failing node."""
    if isinstance(cert, ConditionWitness):
        return None if witness_holds(G, cert) else f"witness {cert.tag}"
    if isinstance(cert, DivisionalChain):
        return _divisional_failure(G, cert)
    if isinstance(cert, (EliminationChain, JoinTree)):
        return _m_failure(G, cert, frozenset(G.vertices), "root")
    return f"unknown certificate type {type(cert).__name__}"


def verify_certificate(G: SignedGraph, cert: Certificate) -> bool:
    return certificate_failure(G, cert) is None


def _m_failure(G: SignedGraph, cert: MCertificate, U: frozenset, path: str) -> str | None:
    if isinstance(cert, EliminationChain):
        path += "/chain"
        below = cert.base.covered() if cert.base is not None else frozenset()
        vs = cert.vertices
        if len(set(vs)) != len(vs) or below & set(vs) or below | set(vs) != U:
            return f"{path}: covers the wrong vertex set"
        current = set(U)
        for v in reversed(vs):
            if not is_link_simplicial(G, v, current):
                return f"{path}: vertex {v} is not link simplicial"
            current.discard(v)
        if cert.base is not None:
            return _m_failure(G, cert.base, frozenset(current), path)
        return None
    if isinstance(cert, JoinTree):
        path += "/join"
        S = frozenset(cert.separator)
        L, R = cert.left.covered(), cert.right.covered()
        if not S <= U or L | R != U or L & R != S or L == U or R == U:
            return f"{path}: not a proper decomposition"
        if not _is_complete_signed(G, S):
            return f"{path}: separator is not a complete signed graph"
        for a, b in G.underlying_edges:
            if (a in L - S and b in R - S) or (a in R - S and b in L - S):
                return f"{path}: edge {{{a},{b}}} crosses the separator"
        return _m_failure(G, cert.left, L, path + "/left") or _m_failure(G, cert.right, R, path + "/right")
    return f"{path}: unknown node"


def _divisional_failure(G: SignedGraph, cert: DivisionalChain) -> str | None:
    current = G
    if len(cert.steps) != G.n:
        return f"divisional: {len(cert.steps)} steps for rank {G.n}"
    for k, step in enumerate(cert.steps):
        where = f"divisional/step{k}"
        if step.graph != current:
            return f"{where}: graph mismatch"
        if step.hyperplane not in hyperplanes_of(current):
            return f"{where}: hyperplane not in the arrangement"
        restricted = restrict_to_hyperplane(current, step.hyperplane)
        chi, chi_r = char_poly_lattice(current), char_poly_lattice(restricted)
        if chi != step.chi or chi_r != step.restricted_chi:
            return f"{where}: recorded polynomials are wrong"
        if not polynomial.divides(chi_r, chi):
            return f"{where}: restriction polynomial does not divide"
        current = restricted
    return None if current.n == 0 else "divisional: did not reach the empty arrangement"

