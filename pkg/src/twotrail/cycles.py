"""Exact longest-cycle search, cycle orientation utilities, dominating cycles.

The search is two-phase: a layered subset DP establishes the maximum cycle
length (and which minimum vertices can realize it), then a canonical DFS
yields maximum-length cycles lazily in lexicographic order of their canonical
vertex sequences.  The first cycle yielded is therefore deterministic, and
``find_dominating_longest_cycle`` scans the stream for a dominating one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import LemmaViolation, NoCycle, SizeLimitExceeded, VertexNotOnCycle
from .graph import Graph, edge

CYCLE_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class OrientedCycle:
    """A cycle as a vertex sequence with a fixed forward orientation.

    Canonical form: the sequence starts at the cycle's smallest vertex and its
    second element is the smaller of that vertex's two cycle-neighbors.
    """

    order: tuple[int, ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.order) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.order)) != len(self.order):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.order)})

    @staticmethod
    def in_graph(g: Graph, order: tuple[int, ...]) -> "OrientedCycle":
        """Validated constructor: every consecutive pair must be an edge of g."""
        c = OrientedCycle(tuple(order))
        m = len(c.order)
        for i in range(m):
            u, v = c.order[i], c.order[(i + 1) % m]
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
        return c

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.order)

    def successor(self, v: int) -> int:
        if v not in self._pos:
            raise VertexNotOnCycle(f"vertex {v} is not on the cycle")
        return self.order[(self._pos[v] + 1) % len(self.order)]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        m = len(self.order)
        return frozenset(edge(self.order[i], self.order[(i + 1) % m]) for i in range(m))

    def spans(self, g: Graph) -> bool:
        return len(self.order) == g.n


def cyclic_distance(c: OrientedCycle, u: int, v: int) -> int:
    """Length of the shorter arc between u and v along the cycle."""
    if u not in c:
        raise VertexNotOnCycle(f"vertex {u} is not on the cycle")
    if v not in c:
        raise VertexNotOnCycle(f"vertex {v} is not on the cycle")
    m = len(c)
    d = abs(c._pos[u] - c._pos[v])
    return min(d, m - d)


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeLimitExceeded(
            f"{g.n} vertices exceeds the cycle-search limit {limit}"
        )


def _max_cycle_lengths(g: Graph) -> dict[int, int]:
    """For each start s, the longest cycle whose minimum vertex is s.

    Layered DP over (vertex subset, reachable endpoints) for paths from s
    using only vertices > s; a state closes into a cycle when an endpoint is
    adjacent to s.  Only starts that achieve the overall maximum matter to
    the callers.
    """
    n = g.n
    masks = g._masks
    best: dict[int, int] = {}
    overall = 0
    for s in range(n):
        if n - s < 3 or n - s < overall:
            # too few labels >= s to tie the incumbent (or form a cycle)
            continue
        allowed = 0
        for v in range(s + 1, n):
            allowed |= 1 << v
        s_bit = 1 << s
        adj_s = masks[s]
        layer: dict[int, int] = {}
        for v_bit_source in _bits(adj_s & allowed):
            layer[s_bit | v_bit_source] = layer.get(s_bit | v_bit_source, 0) | v_bit_source
        size = 2
        best_here = 0
        while layer:
            if size >= 3:
                for mask, ends in layer.items():
                    if ends & adj_s:
                        best_here = size
                        break
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                free = allowed & ~mask
                for v_bit in _bits(ends):
                    ext = masks[v_bit.bit_length() - 1] & free
                    for w_bit in _bits(ext):
                        key = mask | w_bit
                        nxt[key] = nxt.get(key, 0) | w_bit
            layer = nxt
            size += 1
        if best_here:
            best[s] = best_here
            overall = max(overall, best_here)
    return best


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit


def iter_longest_cycles(g: Graph, *, limit: int = CYCLE_VERTEX_LIMIT) -> Iterator[OrientedCycle]:
    """All maximum-length cycles, lazily, in canonical lexicographic order.

    Yields nothing when g is acyclic.  Canonical sequences starting at smaller
    vertices come first, and within a start the DFS extends by increasing
    neighbor, so sequences appear in lexicographic order.
    """
    _check_limit(g, limit)
    lengths = _max_cycle_lengths(g)
    if not lengths:
        return
    target = max(lengths.values())
    masks = g._masks
    for s in sorted(lengths):
        if lengths[s] != target:
            continue
        adj_s = masks[s]
        allowed = 0
        for v in range(s + 1, g.n):
            allowed |= 1 << v
        path = [s]
        used = 1 << s

        def extend() -> Iterator[OrientedCycle]:
            nonlocal used
            end = path[-1]
            if len(path) == target:
                if (adj_s >> end) & 1 and path[1] < path[-1]:
                    yield OrientedCycle(tuple(path))
                return
            # reachability prune: the rest of the cycle must sit in the
            # unused vertices reachable from the endpoint, and return to s
            free = allowed & ~used
            reach = masks[end] & free
            grown = reach
            while grown:
                step = 0
                for b in _bits(grown):
                    step |= masks[b.bit_length() - 1]
                grown = step & free & ~reach
                reach |= grown
            if len(path) + reach.bit_count() < target:
                return
            if not (adj_s & (reach | (1 << end))):
                return
            for w_bit in _bits(masks[end] & free):
                w = w_bit.bit_length() - 1
                path.append(w)
                used |= w_bit
                yield from extend()
                path.pop()
                used &= ~w_bit

        yield from extend()


def find_longest_cycle(g: Graph, *, limit: int = CYCLE_VERTEX_LIMIT) -> OrientedCycle | None:
    """A maximum-length cycle (canonical, lex-first), or None when acyclic."""
    for c in iter_longest_cycles(g, limit=limit):
        return c
    return None


def is_dominating(g: Graph, c: OrientedCycle) -> bool:
    """True iff removing the cycle's vertices leaves an edgeless graph."""
    on_cycle = c.vertex_set()
    for v in range(g.n):
        if v in on_cycle:
            continue
        for w in g.neighbors(v):
            if w not in on_cycle:
                return False
    return True


def find_dominating_longest_cycle(
    g: Graph, *, limit: int = CYCLE_VERTEX_LIMIT
) -> OrientedCycle:
    """First dominating cycle in the maximum-length cycle stream.

    Raises NoCycle when g is acyclic.  Raises LemmaViolation (carrying every
    maximum-length cycle) when none dominates, which certifies the input was
    not 2K2-free: a 2K2-free graph with a cycle always has a dominating
    longest cycle.
    """
    seen = []
    for c in iter_longest_cycles(g, limit=limit):
        if is_dominating(g, c):
            return c
        seen.append(c)
    if not seen:
        raise NoCycle("the graph is acyclic")
    raise LemmaViolation(g, seen)
