"""Exact maximum-weight clique.

Vertices are 0..m-1, adjacency rows are Python ints used as bit-sets. The search
is branch and bound with a greedy-colouring bound: a clique takes at most
one vertex per colour class, so the sum of the heaviest vertex in each class
caps what the candidates can still add.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class CliqueResult:
    weight: int
    vertices: tuple[int, ...]
    nodes: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _colour_order(cand: int, adj: Sequence[int], weights: Sequence[int]) -> list[tuple[int, int]]:
    """Return ``(vertex, bound)`` pairs, bound nondecreasing along the list."""
    out = []
    rest = cand
    total = 0
    while rest:
        avail = rest
        heaviest = 0
        members = []
        while avail:
            v = (avail & -avail).bit_length() - 1
            members.append(v)
            heaviest = max(heaviest, weights[v])
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
        total += heaviest
        out.extend((v, total) for v in members)
    return out


def max_weight_clique(weights: Sequence[int], adj: Sequence[int]) -> CliqueResult:
    m = len(weights)
    if len(adj) != m:
        raise ValueError("adjacency and weights disagree on the vertex count")
    # colouring high-degree vertices first tightens the bound on dense graphs
    order = sorted(range(m), key=lambda v: (-adj[v].bit_count(), -weights[v], v))
    pos = {v: i for i, v in enumerate(order)}
    radj = []
    for v in order:
        row = 0
        for u in _bits(adj[v]):
            row |= 1 << pos[u]
        radj.append(row)
    res = _clique_bnb([weights[v] for v in order], radj)
    return CliqueResult(res.weight, tuple(sorted(order[i] for i in res.vertices)), res.nodes)


def _clique_bnb(weights: Sequence[int], adj: Sequence[int]) -> CliqueResult:
    m = len(weights)
    best_w = 0
    best: tuple[int, ...] = ()
    nodes = 0

    def expand(cand: int, weight: int, chosen: list[int]) -> None:
        nonlocal best_w, best, nodes
        nodes += 1
        if weight > best_w:
            best_w, best = weight, tuple(chosen)
        if not cand:
            return
        order = _colour_order(cand, adj, weights)
        for v, bound in reversed(order):
            if weight + bound <= best_w:
                return
            chosen.append(v)
            expand(cand & adj[v], weight + weights[v], chosen)
            chosen.pop()
            cand &= ~(1 << v)

    expand((1 << m) - 1, 0, [])
    return CliqueResult(best_w, tuple(sorted(best)), nodes)


def brute_force_max_weight_clique(weights: Sequence[int], adj: Sequence[int]) -> int:
    """Enumerate every vertex subset; for cross-checking on small graphs."""
    m = len(weights)
    best = 0
    for mask in range(1 << m):
        vs = list(_bits(mask))
        if all(adj[a] >> b & 1 for i, a in enumerate(vs) for b in vs[i + 1 :]):
            best = max(best, sum(weights[v] for v in vs))
    return best
