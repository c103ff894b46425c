"""Generators and samplers for desk-scale graph sweeps.

``iter_theorem_candidates`` streams every connected 3/2-tough 2K2-free graph
on n labeled vertices; the scan runs over edge bitmasks with cheap rejection
filters (minimum degree, connectivity, an induced-2K2 probe) before the
exponential toughness check, which keeps n = 7 in the tens of seconds.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .graph import Graph, is_connected
from .recognition import find_induced_2k2, is_t_tough

THREE_HALVES = Fraction(3, 2)


def iter_all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them), mask order."""
    pairs = list(combinations(range(n), 2))
    for emask in range(1 << len(pairs)):
        yield _graph_from_mask(n, pairs, emask)


def iter_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices, mask order."""
    for g in iter_all_graphs(n):
        if is_connected(g) and n > 0:
            yield g


def _graph_from_mask(n: int, pairs, emask: int) -> Graph:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        if (emask >> idx) & 1:
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def iter_theorem_candidates(n: int) -> Iterator[Graph]:
    """Connected, 3/2-tough, 2K2-free labeled graphs on n vertices.

    Equivalent to filtering iter_all_graphs with is_connected, is_t_tough(3/2)
    and find_induced_2k2 is None, but with mask-level fast paths: any
    non-complete 3/2-tough graph has minimum degree >= 3, so only complete
    graphs survive below that.
    """
    if n < 1:
        return
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    incidence = [0] * n
    vertex_bit = [1 << v for v in range(n)]
    for idx, (u, v) in enumerate(pairs):
        incidence[u] |= 1 << idx
        incidence[v] |= 1 << idx
    full_vertices = (1 << n) - 1
    min_edges = (3 * n + 1) // 2 if n >= 4 else 0
    for emask in range(1 << m):
        if emask.bit_count() < min_edges and emask != (1 << m) - 1:
            continue
        complete = emask == (1 << m) - 1
        if not complete and n >= 2:
            if any((emask & incidence[v]).bit_count() < 3 for v in range(n)):
                continue
        # adjacency masks for the connectivity and 2K2 probes
        adj = [0] * n
        edge_list = []
        for idx, (u, v) in enumerate(pairs):
            if (emask >> idx) & 1:
                adj[u] |= vertex_bit[v]
                adj[v] |= vertex_bit[u]
                edge_list.append((u, v))
        if not _mask_connected(adj, n, full_vertices):
            continue
        if _mask_has_induced_2k2(adj, vertex_bit, edge_list):
            continue
        g = Graph(n, tuple(frozenset(_mask_vertices(adj[v])) for v in range(n)))
        if is_t_tough(g, THREE_HALVES) is True:
            yield g


def _mask_connected(adj, n: int, full: int) -> bool:
    if n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        grown = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            grown |= adj[bit.bit_length() - 1]
        frontier = grown & ~comp
        comp |= frontier
    return comp == full


def _mask_has_induced_2k2(adj, vertex_bit, edge_list) -> bool:
    for i, (a, b) in enumerate(edge_list):
        blocked = adj[a] | adj[b] | vertex_bit[a] | vertex_bit[b]
        for c, d in edge_list[i + 1 :]:
            if not blocked & vertex_bit[c] and not blocked & vertex_bit[d]:
                return True
    return False


def _mask_vertices(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) with the given generator."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Rejection-sample G(n, p) until connected."""
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g) and n > 0:
            return g


def random_split_graph(n: int, clique_size: int, p: float, rng: random.Random) -> Graph:
    """A clique on the first vertices plus independent vertices attached randomly.

    Split graphs are 2K2-free, which makes them useful samplers for that class;
    every independent vertex gets at least one clique neighbor.
    """
    edges = [(u, v) for u, v in combinations(range(clique_size), 2)]
    for x in range(clique_size, n):
        attached = [w for w in range(clique_size) if rng.random() < p]
        if not attached:
            attached = [rng.randrange(clique_size)]
        edges.extend((w, x) for w in attached)
    return Graph.from_edges(n, edges)


def sample_is_theorem_candidate(g: Graph) -> bool:
    """The reference filter: connected, 3/2-tough, 2K2-free."""
    return (
        g.n > 0
        and is_connected(g)
        and find_induced_2k2(g) is None
        and is_t_tough(g, THREE_HALVES) is True
    )
