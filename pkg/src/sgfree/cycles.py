"""Cycles of signed graphs and the three forbidden configurations.

Cycles are vertex sequences with a chosen sign per step; the two copies of a
double edge give two different cycles.  The witness functions here decide
(I) balanced chordality, (II) absence of induced unbalanced cycles and
(III) absence of induced copies of the 4-vertex obstruction, each returning
the first offending configuration or ``None``.

Everything is exhaustive; the practical limit is around 10 vertices.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, NamedTuple

from .graph import (
    NEG,
    OBSTRUCTION_GRAPH,
    POS,
    SignedGraph,
    SwitchingWitness,
    _induced,
    _pair,
    relabel,
    switch,
    switching_equivalence_witness,
)

BALANCED_CYCLE = "balanced-cycle-no-balanced-chord"
UNBALANCED_CYCLE = "induced-unbalanced-cycle"
OBSTRUCTION = "obstruction-induced-subgraph"
WITNESS_TAGS = (BALANCED_CYCLE, UNBALANCED_CYCLE, OBSTRUCTION)


@dataclass(frozen=True)
class SignedCycle:
    """``signs[t]`` is the sign of the edge ``{vertices[t], vertices[t+1]}`` (cyclically)."""

    vertices: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")
        if len(self.signs) != len(self.vertices):
            raise ValueError("one sign per cycle edge is required")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def sign(self) -> int:
        return math.prod(self.signs)

    @property
    def balanced(self) -> bool:
        return self.sign == POS

    def edges(self) -> list[tuple[int, int, int]]:
        k = len(self.vertices)
        return [(self.vertices[t], self.vertices[(t + 1) % k], self.signs[t]) for t in range(k)]

    def lies_in(self, G: SignedGraph) -> bool:
        return all(
            1 <= u <= G.n and 1 <= v <= G.n and G.has_edge(u, v, s) for u, v, s in self.edges()
        )

    def arc_sign(self, a: int, b: int) -> int:
        """Sign product of the forward arc from position ``a`` to position ``b``."""
        return math.prod(self.signs[a:b])

    def __str__(self) -> str:
        return format_cycle(self)


class Chord(NamedTuple):
    u: int
    v: int
    sign: int


@dataclass(frozen=True)
class ConditionWitness:
    """Evidence that one of the three conditions fails.

    ``cycle`` is set for the two cycle tags; ``vertices`` is the offending
    vertex set; the obstruction tag also records the bijection (from the
    induced subgraph's local labels onto the reference obstruction) and the
    switching that completes the match.
    """

    tag: str
    vertices: tuple[int, ...]
    cycle: SignedCycle | None = None
    bijection: tuple[int, ...] | None = None
    switching: tuple[int, ...] | None = None


# -- bracket notation ----------------------------------------------------


def format_cycle(C: SignedCycle) -> str:
    """Bracket notation: maximal runs of negative edges are enclosed in ``[...]``.

    ``[1 2] 3 4`` is the cycle 1-2-3-4-1 whose only negative edge is {1,2}.
    A negative closing edge repeats the first vertex inside the last bracket,
    e.g. ``1 2 3 [4 1]``.
    """
    k = len(C)
    positions = list(C.vertices) + [C.vertices[0]]
    last = k if C.signs[-1] == NEG else k - 1
    opens, closes = set(), set()
    t = 0
    while t < k:
        if C.signs[t] == NEG:
            a = t
            while t < k and C.signs[t] == NEG:
                t += 1
            opens.add(a)
            closes.add(t)
        else:
            t += 1
    tokens = []
    for p in range(last + 1):
        tok = str(positions[p])
        if p in opens:
            tok = "[" + tok
        if p in closes:
            tok += "]"
        tokens.append(tok)
    return " ".join(tokens)


_TOKEN = re.compile(r"\[|\]|-?\d+|\S")


def parse_cycle(text: str) -> SignedCycle:
    """Inverse of :func:`format_cycle`."""
    vertices: list[int] = []
    runs: list[tuple[int, int]] = []
    start = None
    for tok in _TOKEN.findall(text):
        if tok == "[":
            if start is not None:
                raise ValueError("nested '[' in cycle text")
            start = len(vertices)
        elif tok == "]":
            if start is None or len(vertices) - start < 2:
                raise ValueError("a bracket must enclose at least two vertices")
            runs.append((start, len(vertices) - 1))
            start = None
        elif tok.lstrip("-").isdigit():
            vertices.append(int(tok))
        else:
            raise ValueError(f"unexpected {tok!r} in cycle text")
    if start is not None:
        raise ValueError("unclosed '[' in cycle text")
    if len(vertices) > 1 and vertices[-1] == vertices[0]:
        if not runs or runs[-1][1] != len(vertices) - 1:
            raise ValueError("the first vertex may only be repeated to close a negative run")
        vertices.pop()
    signs = [POS] * len(vertices)
    for a, b in runs:
        for t in range(a, b):
            signs[t] = NEG
    return SignedCycle(tuple(vertices), tuple(signs))


# -- enumeration ---------------------------------------------------------


def _adjacency(G: SignedGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in G.vertices}
    for a, b in G.underlying_edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def vertex_cycles(G: SignedGraph, min_len: int = 3, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Cycles of the underlying graph, each once, in canonical form.

    Canonical form starts at the smallest vertex and continues towards the
    smaller of its two cycle neighbours.  Sorted by (length, vertices).
    """
    if max_len is None:
        max_len = G.n
    adj = _adjacency(G)
    found = []

    def extend(path: list[int], on_path: set[int]):
        last = path[-1]
        start = path[0]
        for w in adj[last]:
            if w == start:
                if len(path) >= max(min_len, 3) and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > start and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for s in G.vertices:
        extend([s], {s})
    found.sort(key=lambda c: (len(c), c))
    return found


def enumerate_cycles(G: SignedGraph, min_len: int = 3, max_len: int | None = None) -> Iterator[SignedCycle]:
    """Every signed cycle with ``min_len <= length <= max_len``.

    Each vertex cycle is produced once up to rotation and reflection; each
    choice of sign on its double edges is a separate cycle.
    """
    if max_len is None:
        max_len = G.n
    if not (3 <= min_len <= max_len <= G.n):
        raise ValueError(f"cycle length bounds must satisfy 3 <= {min_len} <= {max_len} <= {G.n}")
    for vs in vertex_cycles(G, min_len, max_len):
        k = len(vs)
        options = [G.signs(vs[t], vs[(t + 1) % k]) for t in range(k)]
        for signs in product(*options):
            yield SignedCycle(vs, signs)


def has_balanced_chord(G: SignedGraph, C: SignedCycle) -> Chord | None:
    """A chord of the balanced cycle ``C`` splitting it into two balanced cycles.

    For a chord between positions ``a < b`` the required sign is the sign
    product of the arc from ``a`` to ``b`` (the other arc has the same product
    because ``C`` is balanced).
    """
    k = len(C)
    if k < 4:
        raise ValueError("balanced chords are defined for cycles of length >= 4")
    if not C.balanced:
        raise ValueError("cycle is not balanced")
    vs = C.vertices
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            need = C.arc_sign(a, b)
            if G.has_edge(vs[a], vs[b], need):
                u, v = _pair(vs[a], vs[b])
                return Chord(u, v, need)
    return None


# -- the three conditions ------------------------------------------------


def balanced_chordal_witness(G: SignedGraph) -> ConditionWitness | None:
    """First balanced cycle of length >= 4 without a balanced chord, if any."""
    if G.n < 4:
        return None
    for C in enumerate_cycles(G, 4, G.n):
        if C.balanced and has_balanced_chord(G, C) is None:
            return ConditionWitness(BALANCED_CYCLE, tuple(sorted(C.vertices)), cycle=C)
    return None


def is_balanced_chordal(G: SignedGraph) -> bool:
    return balanced_chordal_witness(G) is None


def induced_unbalanced_cycle(G: SignedGraph, W) -> SignedCycle | None:
    """The cycle ``G[W]`` forms if it is exactly an unbalanced cycle of single edges."""
    W = tuple(sorted(W))
    k = len(W)
    if k < 3:
        return None
    inside = set(W)
    pos = [e for e in G.pos if e[0] in inside and e[1] in inside]
    neg = [e for e in G.neg if e[0] in inside and e[1] in inside]
    if len(pos) + len(neg) != k or set(pos) & set(neg):
        return None
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in W}
    for s, part in ((POS, pos), (NEG, neg)):
        for a, b in part:
            adj[a].append((b, s))
            adj[b].append((a, s))
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    # walk the 2-regular graph from the smallest vertex
    start = W[0]
    (n1, _), (n2, _) = sorted(adj[start])
    order, signs = [start], []
    prev, cur = start, n1
    signs.append(dict(adj[start])[n1])
    while cur != start:
        order.append(cur)
        nxt = [(w, s) for w, s in adj[cur] if w != prev]
        if len(nxt) != 1:
            return None
        prev, (cur, s) = cur, nxt[0]
        signs.append(s)
    if len(order) != k:
        return None  # disjoint union of shorter cycles
    C = SignedCycle(tuple(order), tuple(signs))
    return None if C.balanced else C


def unbalanced_induced_cycle_witness(G: SignedGraph) -> ConditionWitness | None:
    """Smallest (then lexicographically first) ``W`` with ``G[W]`` an unbalanced cycle."""
    for k in range(3, G.n + 1):
        for W in combinations(G.vertices, k):
            C = induced_unbalanced_cycle(G, W)
            if C is not None:
                return ConditionWitness(UNBALANCED_CYCLE, W, cycle=C)
    return None


def match_obstruction(G: SignedGraph, W) -> SwitchingWitness | None:
    """Switching isomorphism from ``G[W]`` (local labels) onto the obstruction."""
    W = tuple(sorted(W))
    if len(W) != 4:
        return None
    H = _induced(G, W)
    # cheap filter: 4 single edges plus a perfect matching of doubles
    if len(H.doubles) != 2 or len(H.underlying_edges) != 6:
        return None
    return switching_equivalence_witness(H, OBSTRUCTION_GRAPH, up_to_isomorphism=True)


def obstruction_witness(G: SignedGraph) -> ConditionWitness | None:
    for W in combinations(G.vertices, 4):
        m = match_obstruction(G, W)
        if m is not None:
            return ConditionWitness(OBSTRUCTION, W, bijection=m.bijection, switching=m.switching)
    return None


def witness_holds(G: SignedGraph, w: ConditionWitness) -> bool:
    """Re-check a witness against ``G`` from scratch."""
    W = tuple(sorted(w.vertices))
    if not W or W[0] < 1 or W[-1] > G.n or len(set(W)) != len(W):
        return False
    if w.tag == BALANCED_CYCLE:
        C = w.cycle
        return (
            C is not None
            and tuple(sorted(C.vertices)) == W
            and len(C) >= 4
            and C.lies_in(G)
            and C.balanced
            and has_balanced_chord(G, C) is None
        )
    if w.tag == UNBALANCED_CYCLE:
        return induced_unbalanced_cycle(G, W) is not None
    if w.tag == OBSTRUCTION:
        if len(W) != 4 or w.bijection is None or w.switching is None:
            return False
        try:
            return switch(relabel(_induced(G, W), w.bijection), w.switching) == OBSTRUCTION_GRAPH
        except ValueError:
            return False
    return False
