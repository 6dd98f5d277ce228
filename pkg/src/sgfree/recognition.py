"""Chordal, threshold and link-simplicial recognition.

Orderings follow the prefix convention: in ``(v_1, ..., v_n)`` each ``v_i``
is simplicial (resp. link simplicial) in the subgraph induced on
``{v_1, ..., v_i}``.  They are found by repeatedly removing a suitable
vertex, so the first vertex removed is the last one listed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import SignedGraph, SimpleGraph

PERFECT = "perfect"
LINK = "link"


@dataclass(frozen=True)
class EliminationOrdering:
    vertices: tuple[int, ...]
    kind: str

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


# -- simple graphs -------------------------------------------------------


def is_simplicial(G: SimpleGraph, v: int, within=None) -> bool:
    nb = sorted(G.neighbors(v, within))
    return all(G.has_edge(a, b) for a, b in combinations(nb, 2))


def perfect_elimination_ordering(G: SimpleGraph) -> EliminationOrdering | None:
    """Greedy removal of the smallest simplicial vertex; ``None`` iff not chordal."""
    remaining = set(G.vertices)
    removed = []
    while remaining:
        for v in sorted(remaining):
            if is_simplicial(G, v, remaining):
                break
        else:
            return None
        remaining.discard(v)
        removed.append(v)
    return EliminationOrdering(tuple(reversed(removed)), PERFECT)


def is_chordal(G: SimpleGraph) -> bool:
    return perfect_elimination_ordering(G) is not None


def degree_ordering(G: SimpleGraph) -> list[int]:
    """Vertices by non-increasing degree, ties by label."""
    return sorted(G.vertices, key=lambda v: (-G.degree(v), v))


def threshold_by_construction(G: SimpleGraph) -> bool:
    """Strip isolated or dominating vertices until nothing is left."""
    remaining = set(G.vertices)
    while len(remaining) > 1:
        for v in sorted(remaining):
            d = len(G.neighbors(v, remaining))
            if d == 0 or d == len(remaining) - 1:
                remaining.discard(v)
                break
        else:
            return False
    return True


def forbidden_threshold_subgraph(G: SimpleGraph) -> tuple[str, tuple[int, ...]] | None:
    """An induced 2K2, C4 or P4, as ``(name, vertices)``."""
    for W in combinations(G.vertices, 4):
        H = G.induced(W)
        degrees = sorted(H.degree(v) for v in H.vertices)
        if degrees == [1, 1, 1, 1]:
            return "2K2", W
        if degrees == [2, 2, 2, 2]:
            return "C4", W
        if degrees == [1, 1, 2, 2]:
            return "P4", W
    return None


def is_threshold(G: SimpleGraph) -> bool:
    built = threshold_by_construction(G)
    forbidden_free = forbidden_threshold_subgraph(G) is None
    assert built == forbidden_free, f"threshold oracles disagree on {sorted(G.edges)}"
    return built


# -- signed graphs -------------------------------------------------------


def _incident(G: SignedGraph, v: int, within=None) -> list[tuple[int, int]]:
    out = []
    for s, part in ((1, G.pos), (-1, G.neg)):
        for a, b in part:
            if a == v or b == v:
                u = b if a == v else a
                if within is None or u in within:
                    out.append((u, s))
    return out


def is_link_simplicial(G: SignedGraph, v: int, within=None) -> bool:
    """Every two incident edges with distinct far ends close to a balanced triangle.

    The closing edge for ``(v,u,e)`` and ``(v,w,f)`` must carry sign ``e*f``.
    The two copies of a double edge share their far end and impose nothing.
    ``within`` restricts to the subgraph induced on that vertex set.
    """
    if not 1 <= v <= G.n:
        raise ValueError(f"vertex {v} outside 1..{G.n}")
    inc = _incident(G, v, within)
    for (u, e), (w, f) in combinations(inc, 2):
        if u != w and not G.has_edge(u, w, e * f):
            return False
    return True


def link_elimination_ordering(G: SignedGraph) -> EliminationOrdering | None:
    """Backtracking search, memoized on the set of remaining vertices."""

    @lru_cache(maxsize=None)
    def solve(remaining: frozenset) -> tuple[int, ...] | None:
        if not remaining:
            return ()
        for v in sorted(remaining):
            if is_link_simplicial(G, v, remaining):
                rest = solve(remaining - {v})
                if rest is not None:
                    return rest + (v,)
        return None

    found = solve(frozenset(G.vertices))
    return None if found is None else EliminationOrdering(found, LINK)


def greedy_link_elimination_ordering(G: SignedGraph) -> EliminationOrdering | None:
    """Remove the smallest link-simplicial vertex each time, never backtracking."""
    remaining = set(G.vertices)
    removed = []
    while remaining:
        for v in sorted(remaining):
            if is_link_simplicial(G, v, remaining):
                break
        else:
            return None
        remaining.discard(v)
        removed.append(v)
    return EliminationOrdering(tuple(reversed(removed)), LINK)


def is_elimination_ordering(G, ordering: EliminationOrdering) -> bool:
    """Replay an ordering, checking each vertex in its prefix."""
    vs = ordering.vertices
    if sorted(vs) != list(G.vertices):
        return False
    check = is_simplicial if ordering.kind == PERFECT else is_link_simplicial
    for i in range(len(vs)):
        if not check(G, vs[i], set(vs[: i + 1])):
            return False
    return True
