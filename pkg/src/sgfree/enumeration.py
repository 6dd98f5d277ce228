"""Exhaustive enumeration of small signed graphs and cross-oracle validation.

Labeled signed graphs on ``n`` vertices are indexed by base-4 numbers: the
pairs ``(1,2), (1,3), ..., (n-1,n)`` in lexicographic order are the digits,
least significant first, with digit 0 = no edge, 1 = positive, 2 = negative,
3 = double.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from pathlib import Path
from typing import Iterator

from .cycles import witness_holds
from .freeness import (
    check_conditions,
    divisional_search,
    m_class_certificate,
    verify_certificate,
)
from .graph import POS, SignedGraph, SimpleGraph, format_graph_text, relabel, switch


def pairs_of(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def graph_count(n: int) -> int:
    return 4 ** comb(n, 2)


def graph_from_index(n: int, index: int) -> SignedGraph:
    pos, neg = [], []
    for p in pairs_of(n):
        index, digit = divmod(index, 4)
        if digit & 1:
            pos.append(p)
        if digit & 2:
            neg.append(p)
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def index_of(G: SignedGraph) -> int:
    index = 0
    for p in reversed(pairs_of(G.n)):
        index = index * 4 + (p in G.pos) + 2 * (p in G.neg)
    return index


def all_signed_graphs(n: int) -> Iterator[SignedGraph]:
    for index in range(graph_count(n)):
        yield graph_from_index(n, index)


def all_simple_graphs(n: int) -> Iterator[SimpleGraph]:
    pairs = pairs_of(n)
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def complete_underlying_graphs(n: int) -> Iterator[SignedGraph]:
    """Signed graphs whose underlying graph is K_n (each pair +, - or double)."""
    pairs = pairs_of(n)
    for states in product((1, 2, 3), repeat=len(pairs)):
        yield SignedGraph(
            n,
            frozenset(p for p, s in zip(pairs, states) if s & 1),
            frozenset(p for p, s in zip(pairs, states) if s & 2),
        )


# -- switching classes ---------------------------------------------------


def _single_forest(n: int, singles) -> tuple[list[tuple[int, int]], int]:
    """BFS spanning forest of the single-edge graph, and its number of components."""
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in sorted(singles):
        adj[a].append(b)
        adj[b].append(a)
    seen, forest, components = set(), [], 0
    for root in range(1, n + 1):
        if root in seen:
            continue
        components += 1
        seen.add(root)
        queue = [root]
        for u in queue:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    forest.append((min(u, w), max(u, w)))
                    queue.append(w)
    return forest, components


def switching_canonical(G: SignedGraph) -> SignedGraph:
    """The member of G's switching class whose single-edge BFS forest is all positive."""
    forest, _ = _single_forest(G.n, G.singles)
    nu = {}
    adj = {v: [] for v in G.vertices}
    for a, b in forest:
        adj[a].append(b)
        adj[b].append(a)
    for root in G.vertices:
        if root in nu:
            continue
        nu[root] = POS
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in nu:
                    sign = POS if (min(u, w), max(u, w)) in G.pos else -POS
                    nu[w] = nu[u] * sign
                    stack.append(w)
    return switch(G, nu)


def switching_class_representatives(n: int) -> Iterator[tuple[SignedGraph, int]]:
    """One graph per switching class, with the class size."""
    pairs = pairs_of(n)
    for pattern in product((0, 1, 2), repeat=len(pairs)):  # none, single, double
        doubles = [p for p, s in zip(pairs, pattern) if s == 2]
        singles = [p for p, s in zip(pairs, pattern) if s == 1]
        forest, components = _single_forest(n, singles)
        in_forest = set(forest)
        free_edges = [p for p in singles if p not in in_forest]
        size = 2 ** (n - components)
        for signs in product((0, 1), repeat=len(free_edges)):
            neg_free = {p for p, s in zip(free_edges, signs) if s}
            pos = set(doubles) | {p for p in singles if p not in neg_free}
            neg = set(doubles) | neg_free
            yield SignedGraph(n, frozenset(pos), frozenset(neg)), size


def switching_isomorphism_classes(n: int) -> Iterator[tuple[SignedGraph, int]]:
    """One graph per class under relabelling and switching, with the class size."""
    seen: set[SignedGraph] = set()
    perms = list(permutations(range(1, n + 1)))
    for G, _ in switching_class_representatives(n):
        if G in seen:
            continue
        images = {switching_canonical(relabel(G, pi)) for pi in perms}
        seen |= images
        size = sum(2 ** (n - _single_forest(n, H.singles)[1]) for H in images)
        yield G, size


# -- cross-oracle harness ------------------------------------------------


@dataclass
class EnumerationReport:
    n: int
    graphs: int = 0
    classes: int = 0
    free: int = 0
    non_free: int = 0
    witnesses: Counter = field(default_factory=Counter)
    disagreements: list = field(default_factory=list)  # graph indices

    def merge(self, other: EnumerationReport) -> None:
        self.graphs += other.graphs
        self.classes += other.classes
        self.free += other.free
        self.non_free += other.non_free
        self.witnesses.update(other.witnesses)
        self.disagreements.extend(other.disagreements)

    def lines(self) -> list[str]:
        out = [f"vertices {self.n}", f"graphs {self.graphs}"]
        if self.classes:
            out.append(f"classes {self.classes}")
        out += [f"free {self.free}", f"non-free {self.non_free}"]
        for tag in sorted(self.witnesses):
            out.append(f"witness {tag} {self.witnesses[tag]}")
        out.append(f"disagreements {len(self.disagreements)}")
        return out


def examine(G: SignedGraph, memo: dict | None = None) -> tuple[bool, str | None, bool]:
    """Run all oracles on ``G``: ``(free, witness tag, agreed)``.

    Agreement means the three conditions, the construction certificate and
    the divisional chain all say the same thing, and every produced
    certificate or witness re-verifies.
    """
    witness = check_conditions(G)
    cert = m_class_certificate(G)
    chain = divisional_search(G, memo=memo)
    free = witness is None
    agreed = free == (cert is not None) == (chain is not None)
    if witness is not None:
        agreed = agreed and witness_holds(G, witness)
    if cert is not None:
        agreed = agreed and verify_certificate(G, cert)
    if chain is not None:
        agreed = agreed and verify_certificate(G, chain)
    return free, None if witness is None else witness.tag, agreed


def _run_shard(args) -> EnumerationReport:
    n, items = args
    report = EnumerationReport(n)
    memo: dict = {}
    for index, weight in items:
        G = graph_from_index(n, index)
        free, tag, agreed = examine(G, memo)
        report.graphs += weight
        report.classes += 1
        if free:
            report.free += weight
        else:
            report.non_free += weight
            report.witnesses[tag] += weight
        if not agreed:
            report.disagreements.append(index)
    return report


def run_enumeration(n: int, reduce: bool = False, workers: int | None = None, shards: int = 16) -> EnumerationReport:
    """Check every labeled graph (or every switching-isomorphism class) on ``n`` vertices."""
    if reduce:
        items = [(index_of(G), size) for G, size in switching_isomorphism_classes(n)]
    else:
        items = [(i, 1) for i in range(graph_count(n))]
    if workers is None:
        workers = min(os.cpu_count() or 1, 8)
    chunks = [(n, items[k::shards]) for k in range(shards)]
    report = EnumerationReport(n)
    if workers <= 1:
        parts = map(_run_shard, chunks)
    else:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_shard, chunks))
    for part in parts:
        report.merge(part)
    if not reduce:
        report.classes = 0
    report.disagreements.sort()
    return report


def dump_reproducers(n: int, indices, directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for index in indices:
        path = directory / f"graph_n{n}_{index}.sg"
        path.write_text(f"# enumeration index {index}\n" + format_graph_text(graph_from_index(n, index)))
        out.append(path)
    return out
