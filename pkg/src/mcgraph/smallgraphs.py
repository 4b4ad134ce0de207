"""Small-graph corpora: exhaustive connected graphs and seeded random ones.

The exhaustive generator enumerates every labeled graph on ``n`` vertices,
keeps the connected ones, and dedupes them up to isomorphism by taking the
minimum edge-set bitmask over all vertex permutations (vectorized over the
whole batch with numpy).  Restricting suites to one representative per class
is sound for isomorphism-invariant quantities; relabeling spot checks are
provided separately.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from .graph import Graph, is_connected

__all__ = [
    "nonisomorphic_connected_graphs",
    "connected_corpus",
    "random_connected_graph",
    "random_permutation",
]


def _mask_connected(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    nbr = [0] * n
    rest = mask
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        u, v = pairs[i]
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= nbr[v] & ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def nonisomorphic_connected_graphs(
    n: int, max_edges: int | None = None
) -> list[Graph]:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class.

    Returned in a deterministic order (edge count, then canonical bitmask).
    Intended for n <= 7; the permutation sweep is factorial in n.
    """
    if n < 1:
        return []
    if n == 1:
        return [Graph(1, ())]
    pairs = list(combinations(range(n), 2))
    num_pairs = len(pairs)
    pair_pos = {p: i for i, p in enumerate(pairs)}

    masks = []
    for mask in range(1 << num_pairs):
        if max_edges is not None and mask.bit_count() > max_edges:
            continue
        if mask.bit_count() < n - 1:
            continue
        if _mask_connected(n, pairs, mask):
            masks.append(mask)
    arr = np.array(masks, dtype=np.int64)
    canon = arr.copy()
    for perm in permutations(range(n)):
        target = [
            pair_pos[tuple(sorted((perm[u], perm[v])))] for u, v in pairs
        ]
        permuted = np.zeros_like(arr)
        for i in range(num_pairs):
            permuted |= ((arr >> i) & 1) << target[i]
        np.minimum(canon, permuted, out=canon)
    unique = sorted(set(int(x) for x in canon), key=lambda m: (m.bit_count(), m))
    out = []
    for mask in unique:
        edges = [pairs[i] for i in range(num_pairs) if mask >> i & 1]
        out.append(Graph(n, tuple(edges)))
    return out


def connected_corpus(max_n: int, max_edges: int | None = None) -> list[Graph]:
    """Nonisomorphic connected graphs on 2..max_n vertices (nontrivial only)."""
    out: list[Graph] = []
    for n in range(2, max_n + 1):
        out.extend(nonisomorphic_connected_graphs(n, max_edges))
    return out


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """A uniformly sampled m-edge graph on n vertices, rejected until connected."""
    pairs = list(combinations(range(n), 2))
    if not (n - 1 <= m <= len(pairs)):
        raise ValueError(f"no connected graph with n={n}, m={m}")
    while True:
        edges = tuple(sorted(rng.sample(pairs, m)))
        g = Graph(n, edges)
        if is_connected(g):
            return g


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
