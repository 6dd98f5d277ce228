"""Signed graphs on the vertex set 1..n.

A signed graph is a pair of simple graphs (positive part, negative part) on a
common vertex set.  A pair present in both parts is a *double* edge.  Graphs
are immutable and hashable, so they can be used as memoization keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Mapping, NamedTuple, Sequence

POS = 1
NEG = -1

_SIGN_TAGS = {
    "pos": (POS,),
    "+": (POS,),
    "neg": (NEG,),
    "-": (NEG,),
    "double": (POS, NEG),
    "+-": (POS, NEG),
    "-+": (POS, NEG),
    POS: (POS,),
    NEG: (NEG,),
}


class GraphError(ValueError):
    """Invalid graph data (loops, out-of-range vertices, duplicates...)."""


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> frozenset:
    out = set()
    for i, j in edges:
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge {{{i},{j}}} has an endpoint outside 1..{n}")
        out.add(_pair(i, j))
    return frozenset(out)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.edges

    def neighbors(self, v: int, within=None) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        if within is not None:
            out &= set(within)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def induced(self, vertices: Iterable[int]) -> SimpleGraph:
        """Induced subgraph, relabelled 1..k by increasing original label."""
        keep = sorted(set(vertices))
        index = {v: k for k, v in enumerate(keep, 1)}
        return SimpleGraph(
            len(keep),
            frozenset((index[a], index[b]) for a, b in self.edges if a in index and b in index),
        )

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class SignedGraph:
    """Signed graph on vertices ``1..n``.

    ``pos`` and ``neg`` are frozensets of pairs ``(i, j)`` with ``i < j``.
    A pair may appear in both (a double edge).  ``n == 0`` is the null graph.
    """

    n: int
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "pos", _normalize_edges(self.n, self.pos))
        object.__setattr__(self, "neg", _normalize_edges(self.n, self.neg))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def doubles(self) -> frozenset:
        return self.pos & self.neg

    @property
    def underlying_edges(self) -> frozenset:
        return self.pos | self.neg

    @property
    def singles(self) -> frozenset:
        return self.pos ^ self.neg

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.underlying_edges)

    def signs(self, u: int, v: int) -> tuple[int, ...]:
        """Signs present on the pair {u, v}, positive first."""
        p = _pair(u, v)
        return tuple(s for s, part in ((POS, self.pos), (NEG, self.neg)) if p in part)

    def has_edge(self, u: int, v: int, sign: int | None = None) -> bool:
        p = _pair(u, v)
        if sign is None:
            return p in self.pos or p in self.neg
        return p in (self.pos if sign == POS else self.neg)

    def edges(self) -> list[tuple[int, int, int]]:
        """All signed edges as ``(i, j, sign)``, sorted."""
        out = [(i, j, POS) for i, j in self.pos] + [(i, j, NEG) for i, j in self.neg]
        out.sort(key=lambda e: (e[0], e[1], -e[2]))
        return out

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.underlying_edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        """Incidences at ``v``; a double edge counts twice."""
        return sum(1 for a, b in self.pos if v in (a, b)) + sum(
            1 for a, b in self.neg if v in (a, b)
        )

    def edge_count(self) -> int:
        return len(self.pos) + len(self.neg)

    def __str__(self) -> str:
        return format_graph_text(self).strip().replace("\n", "; ")


class SwitchingWitness(NamedTuple):
    """``bijection[v-1]`` is the image of ``v``; ``switching[w-1]`` is nu(w) on the target."""

    bijection: tuple[int, ...]
    switching: tuple[int, ...]


def build_signed_graph(n: int, edges: Iterable[tuple]) -> SignedGraph:
    """Build and validate a signed graph from ``(i, j, tag)`` triples.

    ``tag`` is one of ``pos``/``+``/``1``, ``neg``/``-``/``-1`` or
    ``double``/``+-``.  Each pair may be listed once only.

    >>> build_signed_graph(2, [(1, 2, "neg")]).neg
    frozenset({(1, 2)})
    """
    if n < 1:
        raise GraphError("vertex count must be positive")
    pos, neg, seen = set(), set(), set()
    for i, j, tag in edges:
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge {{{i},{j}}} has an endpoint outside 1..{n}")
        p = _pair(i, j)
        if p in seen:
            raise GraphError(f"pair {{{i},{j}}} listed twice")
        seen.add(p)
        try:
            signs = _SIGN_TAGS[tag]
        except (KeyError, TypeError):
            raise GraphError(f"unknown edge sign tag {tag!r}") from None
        if POS in signs:
            pos.add(p)
        if NEG in signs:
            neg.add(p)
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def complete_signed_graph(n: int) -> SignedGraph:
    """K±_n: every pair is a double edge."""
    pairs = frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return SignedGraph(n, pairs, pairs)


OBSTRUCTION_GRAPH = build_signed_graph(
    4,
    [(1, 2, "double"), (3, 4, "double"), (1, 4, "pos"), (2, 4, "pos"), (2, 3, "pos"), (1, 3, "neg")],
)


def _induced(G: SignedGraph, keep: Sequence[int]) -> SignedGraph:
    index = {v: k for k, v in enumerate(keep, 1)}

    def sub(edges):
        return frozenset((index[a], index[b]) for a, b in edges if a in index and b in index)

    return SignedGraph(len(keep), sub(G.pos), sub(G.neg))


def induced_subgraph(G: SignedGraph, W: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    """Induced subgraph on ``W`` and the relabelling ``old -> new``.

    Vertices are renumbered 1..|W| by increasing original label.
    """
    keep = sorted(set(W))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if keep[0] < 1 or keep[-1] > G.n:
        raise GraphError(f"vertex set {keep} is not a subset of 1..{G.n}")
    return _induced(G, keep), {v: k for k, v in enumerate(keep, 1)}


def delete_vertex(G: SignedGraph, v: int) -> SignedGraph:
    """G minus v, relabelled; deleting the only vertex gives the null graph."""
    return _induced(G, [u for u in G.vertices if u != v])


def _as_switching(G: SignedGraph, nu) -> tuple[int, ...]:
    if isinstance(nu, Mapping):
        missing = [v for v in G.vertices if v not in nu]
        if missing:
            raise GraphError(f"switching function undefined at {missing}")
        values = tuple(nu[v] for v in G.vertices)
    else:
        values = tuple(nu)
        if len(values) != G.n:
            raise GraphError(f"switching function has {len(values)} values, graph has {G.n} vertices")
    if any(s not in (POS, NEG) for s in values):
        raise GraphError("switching values must be +1 or -1")
    return values


def switch(G: SignedGraph, nu) -> SignedGraph:
    """Switch ``G`` by ``nu`` (a sequence indexed by vertex-1, or a mapping).

    An edge keeps its sign iff ``nu`` agrees on its endpoints.
    """
    nu = _as_switching(G, nu)
    pos, neg = set(), set()
    for i, j, s in G.edges():
        s *= nu[i - 1] * nu[j - 1]
        (pos if s == POS else neg).add((i, j))
    return SignedGraph(G.n, frozenset(pos), frozenset(neg))


def relabel(G: SignedGraph, bijection: Sequence[int]) -> SignedGraph:
    """Rename vertex ``v`` to ``bijection[v-1]``."""
    if sorted(bijection) != list(G.vertices):
        raise GraphError("relabelling is not a bijection on the vertex set")

    def image(edges):
        return frozenset(_pair(bijection[a - 1], bijection[b - 1]) for a, b in edges)

    return SignedGraph(G.n, image(G.pos), image(G.neg))


def switching_equivalence_witness(
    G: SignedGraph, H: SignedGraph, up_to_isomorphism: bool = False
) -> SwitchingWitness | None:
    """Find ``(pi, nu)`` with ``switch(relabel(G, pi), nu) == H``.

    Exhaustive over all bijections (identity only unless
    ``up_to_isomorphism``) and all 2^n switchings.
    """
    if G.n != H.n:
        raise GraphError(f"vertex counts differ ({G.n} vs {H.n})")
    n = G.n
    if (
        len(G.doubles) != len(H.doubles)
        or len(G.underlying_edges) != len(H.underlying_edges)
    ):
        return None
    bijections = permutations(range(1, n + 1)) if up_to_isomorphism else [tuple(range(1, n + 1))]
    for pi in bijections:
        R = relabel(G, pi)
        if R.doubles != H.doubles or R.underlying_edges != H.underlying_edges:
            continue
        for nu in _switchings(n):
            if switch(R, nu) == H:
                return SwitchingWitness(tuple(pi), nu)
    return None


def _switchings(n: int):
    """All 2^n switching functions, fewest flipped vertices first."""
    for k in range(n + 1):
        for flipped in combinations(range(n), k):
            nu = [POS] * n
            for v in flipped:
                nu[v] = NEG
            yield tuple(nu)


def tilde_of(G: SignedGraph) -> SignedGraph:
    """Positive part = underlying graph of ``G``; negative part = its double edges."""
    return SignedGraph(G.n, G.underlying_edges, G.doubles)


def contract_edge(G: SignedGraph, e: tuple[int, int, int]) -> SignedGraph:
    """Contract the signed edge ``e = (i, j, sign)``.

    Realises the substitution x_a = sign * x_b where ``a = min(i, j)`` is
    removed and ``b = max(i, j)`` survives.  An edge {k, a} of sign d becomes
    {k, b} of sign d * sign; the other copy of a double {a, b} turns into the
    coordinate hyperplane x_b = 0 and is dropped.  Vertices are then
    relabelled 1..n-1 by increasing original label.
    """
    i, j, sign = e
    sign = _SIGN_TAGS.get(sign, (sign,))[0]
    if i == j or not G.has_edge(i, j, sign):
        raise GraphError(f"edge {{{i},{j}}} with sign {sign:+d} is not in the graph")
    a, b = min(i, j), max(i, j)
    pos, neg = set(), set()
    for x, y, s in G.edges():
        if a in (x, y):
            k = y if x == a else x
            if k == b:
                continue
            x, y, s = k, b, s * sign
        (pos if s == POS else neg).add(_pair(x, y))
    keep = [v for v in G.vertices if v != a]
    return _induced(SignedGraph(G.n, frozenset(pos), frozenset(neg)), keep)


# -- text format ---------------------------------------------------------

_TEXT_SIGNS = {"+": "pos", "-": "neg", "+-": "double", "-+": "double"}


class GraphFormatError(GraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)


def parse_graph_text(text: str) -> SignedGraph:
    """Parse the ``vertices n`` / ``edge i j s`` format (``s`` in + - +-)."""
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        column = raw.index(tokens[0]) + 1
        head = tokens[0]
        if n is None:
            if head != "vertices" or len(tokens) != 2:
                raise GraphFormatError("expected 'vertices N'", lineno, column)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {tokens[1]!r}", lineno, raw.index(tokens[1]) + 1) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno, column)
            continue
        if head != "edge" or len(tokens) != 4:
            raise GraphFormatError("expected 'edge I J S'", lineno, column)
        try:
            i, j = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno, column) from None
        if tokens[3] not in _TEXT_SIGNS:
            raise GraphFormatError(f"bad sign {tokens[3]!r}", lineno, raw.rindex(tokens[3]) + 1)
        if i == j:
            raise GraphFormatError("loop", lineno, column)
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"vertex out of range 1..{n}", lineno, column)
        p = _pair(i, j)
        if p in seen:
            raise GraphFormatError(f"duplicate pair (first listed at line {seen[p]})", lineno, column)
        seen[p] = lineno
        edges.append((i, j, _TEXT_SIGNS[tokens[3]]))
    if n is None:
        raise GraphFormatError("missing 'vertices N' line")
    return build_signed_graph(n, edges)


def format_graph_text(G: SignedGraph) -> str:
    lines = [f"vertices {G.n}"]
    for i, j in sorted(G.underlying_edges):
        tag = "".join(t for t, part in (("+", G.pos), ("-", G.neg)) if (i, j) in part)
        lines.append(f"edge {i} {j} {tag}")
    return "\n".join(lines) + "\n"
