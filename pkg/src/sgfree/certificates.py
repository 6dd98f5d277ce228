"""Certificate records and their text form.

Text form is an indented tree, two spaces per level, one node per line::

    chain 4 3
      join 2
        chain 1 2
        chain 2 3 4

    divisional 2
      step x1 in dimension 2: chi t^2 - 4*t + 3 | restricted t - 1
      step x1 in dimension 1: chi t - 1 | restricted 1

    witness induced-unbalanced-cycle 1 2 3
      cycle 1 2 [3 1]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import polynomial
from .arrangement import Hyperplane
from .cycles import OBSTRUCTION, ConditionWitness, format_cycle, parse_cycle
from .graph import SignedGraph


@dataclass(frozen=True)
class EliminationChain:
    """Vertices in prefix order on top of an optional base.

    Each ``vertices[i]`` is link simplicial in the subgraph induced on the
    base's vertices together with ``vertices[:i+1]``.  All labels are those
    of the certified graph.
    """

    vertices: tuple[int, ...]
    base: "JoinTree | None" = None

    def covered(self) -> frozenset:
        below = self.base.covered() if self.base is not None else frozenset()
        return below | frozenset(self.vertices)


@dataclass(frozen=True)
class JoinTree:
    """Gluing of two induced subgraphs along a complete signed graph on ``separator``."""

    separator: tuple[int, ...]
    left: "MCertificate"
    right: "MCertificate"

    def covered(self) -> frozenset:
        return self.left.covered() | self.right.covered()


MCertificate = Union[EliminationChain, JoinTree]


@dataclass(frozen=True)
class DivisionStep:
    graph: SignedGraph
    hyperplane: Hyperplane
    chi: tuple[int, ...]
    restricted_chi: tuple[int, ...]


@dataclass(frozen=True)
class DivisionalChain:
    """Restrictions all the way down to the empty arrangement.

    ``steps[k].graph`` is the graph after ``k`` restrictions (in its own
    labels) and ``steps[k].hyperplane`` the hyperplane restricted to next.
    """

    steps: tuple[DivisionStep, ...]


Certificate = Union[EliminationChain, JoinTree, DivisionalChain, ConditionWitness]


def _ints(xs) -> str:
    return " ".join(map(str, xs))


def format_certificate(cert: Certificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, EliminationChain):
        lines = [f"{pad}chain {_ints(cert.vertices)}".rstrip()]
        if cert.base is not None:
            lines.append(format_certificate(cert.base, indent + 1))
        return "\n".join(lines)
    if isinstance(cert, JoinTree):
        return "\n".join(
            [
                f"{pad}join {_ints(cert.separator)}".rstrip(),
                format_certificate(cert.left, indent + 1),
                format_certificate(cert.right, indent + 1),
            ]
        )
    if isinstance(cert, DivisionalChain):
        lines = [f"{pad}divisional {len(cert.steps)}"]
        for step in cert.steps:
            lines.append(
                f"{pad}  step {step.hyperplane} in dimension {step.graph.n}:"
                f" chi {polynomial.format_poly(step.chi)}"
                f" | restricted {polynomial.format_poly(step.restricted_chi)}"
            )
        return "\n".join(lines)
    if isinstance(cert, ConditionWitness):
        lines = [f"{pad}witness {cert.tag} {_ints(cert.vertices)}"]
        if cert.cycle is not None:
            lines.append(f"{pad}  cycle {format_cycle(cert.cycle)}")
        if cert.tag == OBSTRUCTION:
            lines.append(f"{pad}  bijection {_ints(cert.bijection)}")
            lines.append(f"{pad}  switching {' '.join('+' if s > 0 else '-' for s in cert.switching)}")
        return "\n".join(lines)
    raise TypeError(f"not a certificate: {cert!r}")


def parse_certificate(text: str) -> MCertificate | ConditionWitness:
    """Read back chains, join trees and witnesses (divisional chains are display only)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    nodes = [(len(ln) - len(ln.lstrip(" ")), ln.split()) for ln in lines]
    pos = 0

    def node(level_indent: int):
        nonlocal pos
        indent, tokens = nodes[pos]
        pos += 1
        head, args = tokens[0], tokens[1:]
        if head == "chain":
            base = None
            if pos < len(nodes) and nodes[pos][0] > indent:
                base = node(nodes[pos][0])
            return EliminationChain(tuple(map(int, args)), base)
        if head == "join":
            left = node(indent + 2)
            right = node(indent + 2)
            return JoinTree(tuple(map(int, args)), left, right)
        if head == "witness":
            tag, vertices = args[0], tuple(map(int, args[1:]))
            cycle = bijection = switching = None
            while pos < len(nodes) and nodes[pos][0] > indent:
                _, sub = nodes[pos]
                pos += 1
                if sub[0] == "cycle":
                    cycle = parse_cycle(" ".join(sub[1:]))
                elif sub[0] == "bijection":
                    bijection = tuple(map(int, sub[1:]))
                elif sub[0] == "switching":
                    switching = tuple(1 if s == "+" else -1 for s in sub[1:])
            return ConditionWitness(tag, vertices, cycle, bijection, switching)
        raise ValueError(f"unknown certificate node {head!r}")

    return node(0)
