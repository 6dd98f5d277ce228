"""Signed-graphic arrangements and their characteristic polynomials.

The arrangement of a signed graph on ``n`` vertices lives in ``Q^n`` and
holds every coordinate hyperplane ``x_i = 0``, one ``x_i - x_j = 0`` per
positive edge and one ``x_i + x_j = 0`` per negative edge.

Two independent routes to the characteristic polynomial are provided:

* :func:`char_poly_lattice` builds the intersection lattice exactly (flats
  keyed by a reduced row echelon basis over the rationals) and sums
  ``mu(X) * t**dim(X)``;
* :func:`char_poly_finite_field` counts points of ``F_p^n`` off every
  hyperplane for ``n + 1`` odd primes and interpolates.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import polynomial
from .graph import NEG, POS, GraphError, SignedGraph, contract_edge, delete_vertex

COORDINATE = "coordinate"
DIFFERENCE = "difference"
SUM = "sum"
_KIND_ORDER = {COORDINATE: 0, DIFFERENCE: 1, SUM: 2}

DEFAULT_LATTICE_BOUND = 6


class LatticeBoundError(ValueError):
    pass


def lattice_bound() -> int:
    """Largest dimension for full lattice construction (``SGFREE_MAX_VERTICES`` overrides)."""
    value = os.environ.get("SGFREE_MAX_VERTICES")
    return int(value) if value else DEFAULT_LATTICE_BOUND


@dataclass(frozen=True)
class Hyperplane:
    """Kernel of ``x_i`` (coordinate), ``x_i - x_j`` (difference) or ``x_i + x_j`` (sum), ``i < j``."""

    kind: str
    i: int
    j: int = 0

    def normal(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.i - 1] = 1
        if self.kind == DIFFERENCE:
            v[self.j - 1] = -1
        elif self.kind == SUM:
            v[self.j - 1] = 1
        return tuple(v)

    @property
    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.i, self.j)

    def __str__(self) -> str:
        if self.kind == COORDINATE:
            return f"x{self.i}"
        op = "-" if self.kind == DIFFERENCE else "+"
        return f"x{self.i}{op}x{self.j}"

    @classmethod
    def parse(cls, text: str) -> Hyperplane:
        text = text.replace(" ", "")
        for op, kind in (("-", DIFFERENCE), ("+", SUM)):
            if op in text:
                a, b = text.split(op)
                return cls(kind, int(a.lstrip("x")), int(b.lstrip("x")))
        return cls(COORDINATE, int(text.lstrip("x")))


def hyperplanes_of(G: SignedGraph) -> list[Hyperplane]:
    hs = [Hyperplane(COORDINATE, i) for i in G.vertices]
    hs += [Hyperplane(DIFFERENCE, i, j) for i, j in G.pos]
    hs += [Hyperplane(SUM, i, j) for i, j in G.neg]
    hs.sort(key=lambda h: h.sort_key)
    return hs


# -- exact linear algebra ------------------------------------------------


def _exact(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _reduce(rows, pivots, vec) -> list:
    v = list(vec)
    for r, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, r)]
    return v


def _insert(rows, pivots, v):
    """Add the reduced nonzero vector ``v`` to an RREF basis; rows stay sorted by pivot."""
    q = next(k for k, x in enumerate(v) if x)
    c = v[q]
    if c != 1:
        v = [_exact(Fraction(x) / c) for x in v]
    v = tuple(v)
    new_rows = []
    for r in rows:
        f = r[q]
        new_rows.append(tuple(_exact(a - f * b) for a, b in zip(r, v)) if f else r)
    at = sum(1 for p in pivots if p < q)
    new_rows.insert(at, v)
    return tuple(new_rows), pivots[:at] + (q,) + pivots[at:]


def rref(vectors) -> tuple[tuple, ...]:
    """Reduced row echelon basis of the span (the canonical key of a flat)."""
    rows, pivots = (), ()
    for vec in vectors:
        v = _reduce(rows, pivots, vec)
        if any(v):
            rows, pivots = _insert(rows, pivots, v)
    return rows


@dataclass
class Flat:
    """An element of the intersection lattice.

    ``basis`` spans the normals of the hyperplanes containing the flat;
    ``hyperplanes`` indexes those hyperplanes in ``hyperplanes_of(G)``.
    """

    basis: tuple[tuple, ...]
    dim: int
    hyperplanes: frozenset
    mu: int = 0

    @property
    def rank(self) -> int:
        return len(self.basis)


def intersection_lattice(G: SignedGraph, max_dim: int | None = None) -> list[Flat]:
    """All flats with Moebius values, sorted by rank then basis.

    Flats are discovered breadth first by meeting each known flat with each
    hyperplane not containing it.
    """
    n = G.n
    bound = lattice_bound() if max_dim is None else max_dim
    if n > bound:
        raise LatticeBoundError(f"lattice construction limited to {bound} dimensions (got {n})")
    normals = [h.normal(n) for h in hyperplanes_of(G)]
    m = len(normals)

    found = {(): ((), (), 0)}
    queue = [()]
    for key in queue:
        rows, pivots, mask = found[key]
        for h in range(m):
            if mask >> h & 1:
                continue
            v = _reduce(rows, pivots, normals[h])
            rows2, pivots2 = _insert(rows, pivots, v)
            if rows2 in found:
                continue
            mask2 = mask | (1 << h)
            for g in range(m):
                if not mask2 >> g & 1 and not any(_reduce(rows2, pivots2, normals[g])):
                    mask2 |= 1 << g
            found[rows2] = (rows2, pivots2, mask2)
            queue.append(rows2)

    by_rank: dict[int, list] = {}
    for rows, _, mask in found.values():
        by_rank.setdefault(len(rows), []).append((rows, mask))
    flats = []
    lower: list[tuple[int, int]] = []  # (mask, mu) of strictly lower ranks
    for r in sorted(by_rank):
        level = []
        for rows, mask in sorted(by_rank[r]):
            mu = 1 if r == 0 else -sum(mu_y for mask_y, mu_y in lower if mask_y & ~mask == 0)
            flats.append(Flat(rows, n - r, frozenset(k for k in range(m) if mask >> k & 1), mu))
            level.append((mask, mu))
        lower.extend(level)
    return flats


def char_poly_lattice(G: SignedGraph, max_dim: int | None = None) -> tuple[int, ...]:
    bound = lattice_bound() if max_dim is None else max_dim
    if G.n > bound:
        raise LatticeBoundError(f"lattice construction limited to {bound} dimensions (got {G.n})")
    return _char_poly_lattice(G)


@lru_cache(maxsize=1 << 16)
def _char_poly_lattice(G: SignedGraph) -> tuple[int, ...]:
    coeffs = [0] * (G.n + 1)
    for X in intersection_lattice(G, max_dim=G.n):
        coeffs[X.dim] += X.mu
    return polynomial.trim(coeffs)


# -- finite-field point counting -----------------------------------------


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def counting_primes(n: int) -> list[int]:
    """The ``n + 1`` smallest odd primes exceeding ``2n``."""
    out = []
    p = 2 * n + 1
    while len(out) < n + 1:
        if p > 2 and _is_prime(p):
            out.append(p)
        p += 1
    return out


def count_points(G: SignedGraph, p: int) -> int:
    """Number of points of ``F_p^n`` on none of the hyperplanes (``p`` an odd prime).

    Uses two exact shortcuts: every constraint is homogeneous, so fixing
    ``x_1 = 1`` and multiplying by ``p - 1`` counts all points; and the last
    two coordinates are counted in closed form from their allowed-value sets.
    """
    n = G.n
    if n == 0:
        return 1
    # earlier[k] = [(j, sign)] for edges {j, k} with j < k
    earlier: dict[int, list[tuple[int, int]]] = {k: [] for k in G.vertices}
    for i, j, s in G.edges():
        earlier[j].append((i, s))
    full = (1 << p) - 2  # values 1..p-1

    def excluded(constraints):
        """Bitmasks of the values excluded by ``constraints``, and of their negatives."""
        mask = neg_mask = 0
        for j, s in constraints:
            bad = x[j] if s == POS else (-x[j]) % p
            mask |= 1 << bad
            neg_mask |= 1 << ((-bad) % p)
        return mask, neg_mask

    if n == 1:
        return p - 1
    x = {1: 1}
    a, b = n - 1, n
    pair_signs = G.signs(a, b)
    # the a-b constraint is left to the closed-form pair count
    b_outer = [(j, s) for j, s in earlier[b] if j != a]

    def tail() -> int:
        allowed_a = (1 << 1) if a == 1 else full & ~excluded(earlier[a])[0]
        mask, neg_mask = excluded(b_outer)
        allowed_b = full & ~mask
        neg_allowed_b = full & ~neg_mask  # {-v : v allowed for x_b}
        total = allowed_a.bit_count() * allowed_b.bit_count()
        if POS in pair_signs:
            total -= (allowed_a & allowed_b).bit_count()
        if NEG in pair_signs:
            total -= (allowed_a & neg_allowed_b).bit_count()
        return total

    def assign(k: int) -> int:
        if k == a:
            return tail()
        fk = excluded(earlier[k])[0]
        total = 0
        for val in range(1, p):
            if not fk >> val & 1:
                x[k] = val
                total += assign(k + 1)
        x.pop(k, None)
        return total

    return (p - 1) * assign(2) if a > 1 else (p - 1) * tail()


@lru_cache(maxsize=1 << 12)
def char_poly_finite_field(G: SignedGraph) -> tuple[int, ...]:
    """Interpolate point counts over ``n + 1`` odd primes ``> 2n``."""
    n = G.n
    points = [(p, count_points(G, p)) for p in counting_primes(n)]
    poly = polynomial.interpolate(points)
    if polynomial.degree(poly) != n or poly[-1] != 1:
        raise polynomial.InterpolationError(f"interpolated polynomial {poly} is not monic of degree {n}")
    return poly


def char_poly(G: SignedGraph, method: str = "lattice") -> tuple[int, ...]:
    """``method`` is ``lattice``, ``finite-field`` or ``both`` (which cross-checks)."""
    if method == "lattice":
        return char_poly_lattice(G)
    if method in ("finite-field", "ff"):
        return char_poly_finite_field(G)
    if method == "both":
        a = char_poly_lattice(G)
        b = char_poly_finite_field(G)
        if a != b:
            raise AssertionError(f"characteristic polynomial methods disagree on {G}: {a} vs {b}")
        return a
    raise ValueError(f"unknown method {method!r}")


# -- restriction ---------------------------------------------------------


def restrict_to_hyperplane(G: SignedGraph, H: Hyperplane) -> SignedGraph:
    """A signed graph on ``n - 1`` vertices whose arrangement is the restriction to ``H``.

    Coordinate hyperplanes delete a vertex; edge hyperplanes contract the edge.
    """
    if H not in hyperplanes_of(G):
        raise GraphError(f"hyperplane {H} is not in the arrangement")
    if H.kind == COORDINATE:
        return delete_vertex(G, H.i)
    return contract_edge(G, (H.i, H.j, POS if H.kind == DIFFERENCE else NEG))


def delete_hyperplane(G: SignedGraph, H: Hyperplane) -> SignedGraph:
    """Graph whose arrangement is ``A(G)`` minus the edge hyperplane ``H``."""
    if H.kind == COORDINATE:
        raise GraphError("coordinate hyperplanes belong to every signed-graphic arrangement")
    if H not in hyperplanes_of(G):
        raise GraphError(f"hyperplane {H} is not in the arrangement")
    pair = (H.i, H.j)
    if H.kind == DIFFERENCE:
        return SignedGraph(G.n, G.pos - {pair}, G.neg)
    return SignedGraph(G.n, G.pos, G.neg - {pair})
