"""Exact integer polynomials as coefficient tuples, lowest degree first.

``(-7, 12, -6, 1)`` is t^3 - 6t^2 + 12t - 7.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = tuple  # tuple[int, ...]


class InterpolationError(ArithmeticError):
    pass


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Sequence) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim(
        (p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)
    )


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, tuple(-c for c in q))


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        if x:
            for b, y in enumerate(q):
                out[a + b] += x * y
    return trim(out)


def from_roots(roots: Sequence[int]) -> Poly:
    """Monic polynomial prod (t - r)."""
    out: Poly = (1,)
    for r in roots:
        out = mul(out, (-r, 1))
    return out


def evaluate(p: Sequence, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def divmod_poly(q: Sequence, p: Sequence) -> tuple[Poly, Poly]:
    """Long division ``q = quotient * p + remainder`` over the rationals."""
    p = trim(p)
    if not p:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in trim(q)]
    quot = [Fraction(0)] * max(len(rem) - len(p) + 1, 0)
    lead = p[-1]
    while len(rem) >= len(p) and rem:
        shift = len(rem) - len(p)
        c = rem[-1] / lead
        quot[shift] = c
        for k, x in enumerate(p):
            rem[shift + k] -= c * x
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return _intify(quot), _intify(rem)


def _intify(coeffs) -> Poly:
    return trim(int(c) if c.denominator == 1 else c for c in coeffs)


def divides(p: Sequence, q: Sequence) -> bool:
    """True iff ``q = p * r`` for an integer polynomial ``r``."""
    quot, rem = divmod_poly(q, p)
    return not rem and all(isinstance(c, int) for c in quot)


def integer_roots(p: Sequence) -> list[int]:
    """Integer roots with multiplicity, by trial division over divisors of the constant term."""
    p = trim(p)
    roots = []
    while degree(p) > 0 and p[0] == 0:
        roots.append(0)
        p = p[1:]
    while degree(p) > 0:
        c = abs(p[0])
        for r in sorted({d for k in range(1, int(c**0.5) + 1) if c % k == 0 for d in (k, c // k)}):
            found = None
            for cand in (r, -r):
                if evaluate(p, cand) == 0:
                    found = cand
                    break
            if found is not None:
                roots.append(found)
                p, _ = divmod_poly(p, (-found, 1))
                break
        else:
            break
    return sorted(roots)


def splits_over_integers(p: Sequence) -> bool:
    return len(integer_roots(p)) == degree(p)


def interpolate(points: Sequence[tuple[int, int]]) -> Poly:
    """Unique polynomial of degree < len(points) through the points, with integer coefficients.

    Raises :class:`InterpolationError` if some coefficient is not an integer.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("interpolation nodes must be distinct")
    total = [Fraction(0)] * len(points)
    for k, (xk, yk) in enumerate(points):
        basis: list[Fraction] = [Fraction(1)]
        denom = 1
        for m, xm in enumerate(xs):
            if m == k:
                continue
            basis = [Fraction(0)] + basis
            for a in range(len(basis) - 1):
                basis[a] -= xm * basis[a + 1]
            denom *= xk - xm
        for a, c in enumerate(basis):
            total[a] += c * yk / denom
    bad = [c for c in total if c.denominator != 1]
    if bad:
        raise InterpolationError(f"non-integer coefficients {bad}")
    return trim(int(c) for c in total)


def format_poly(p: Sequence, var: str = "t") -> str:
    """Human-readable form, e.g. ``t^3 - 6*t^2 + 12*t - 7``."""
    p = trim(p)
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)


def format_coefficients(p: Sequence) -> str:
    return " ".join(str(c) for c in p)
