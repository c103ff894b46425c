"""Immutable simple-graph values and the basic queries everything else builds on.

Vertices are dense integer labels ``0..n-1``.  Edges are canonical ``(u, v)``
tuples with ``u < v``.  Exact nonnegative ratios are ``fractions.Fraction``
values, with ``INFINITY`` as the distinguished value for complete graphs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import OutOfRangeLabel, SelfLoop

INFINITY = float("inf")

#: Exact ratio or INFINITY.
Toughness = Fraction | float


def edge(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge: smaller label first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph, immutable after construction.

    Adjacency is stored both as per-vertex frozensets and as per-vertex
    bitmasks; the masks back the enumerative algorithms.
    """

    __slots__ = ("n", "_adj", "_masks")

    def __init__(self, n: int, adjacency: tuple[frozenset[int], ...]):
        self.n = n
        self._adj = adjacency
        self._masks = tuple(
            sum(1 << w for w in nbrs) for nbrs in adjacency
        )

    # -- construction -------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ``n`` vertices from (deduplicated) label pairs."""
        if n < 0:
            raise OutOfRangeLabel(f"vertex count {n} is negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n) or not (0 <= v < n):
                raise OutOfRangeLabel(f"edge ({u}, {v}) outside 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in nbrs))

    # -- queries -------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def adjacency_mask(self, v: int) -> int:
        return self._masks[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as canonical pairs, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self._adj)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- modified copies ----------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv added (no-op copy if already present)."""
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj = list(self._adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv removed (no-op copy if absent)."""
        adj = list(self._adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph(self.n, tuple(adj))


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``.

    Returns sorted vertex lists, ordered by smallest member; the block count
    realizes c(G - S).
    """
    removed_mask = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise OutOfRangeLabel(f"removed vertex {v} outside 0..{g.n - 1}")
        removed_mask |= 1 << v
    blocks = []
    pool = ((1 << g.n) - 1) & ~removed_mask
    masks = g._masks
    while pool:
        seed = pool & -pool
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                grown |= masks[bit.bit_length() - 1]
            frontier = grown & pool & ~comp
            comp |= frontier
        pool &= ~comp
        blocks.append(_mask_to_list(comp))
    return blocks


def component_count(g: Graph, removed_mask: int) -> int:
    """Number of components of g minus the masked vertex set (fast path)."""
    pool = ((1 << g.n) - 1) & ~removed_mask
    masks = g._masks
    count = 0
    while pool:
        count += 1
        comp = pool & -pool
        frontier = comp
        while frontier:
            grown = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                grown |= masks[bit.bit_length() - 1]
            frontier = grown & pool & ~comp
            comp |= frontier
        pool &= ~comp
    return count


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (the empty graph counts)."""
    return len(components(g)) <= 1


def induced(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep``, relabeled 0..|keep|-1.

    Returns the new graph and the label map: new label ``i`` corresponds to
    the old label ``map[i]``.
    """
    old = tuple(sorted(set(keep)))
    for v in old:
        if not 0 <= v < g.n:
            raise OutOfRangeLabel(f"kept vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(old)}
    adj = tuple(
        frozenset(index[w] for w in g.neighbors(v) if w in index) for v in old
    )
    return Graph(len(old), adj), old


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


def iter_mask(mask: int) -> Iterator[int]:
    """Vertices of a bitmask in increasing order."""
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1
