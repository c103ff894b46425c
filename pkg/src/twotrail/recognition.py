"""Exact recognition of the two input hypotheses, with witnesses.

``find_induced_2k2`` decides 2K2-freeness; ``toughness_exact`` and
``is_t_tough`` decide t-toughness by cutset enumeration.  Both return
certificates that can be replayed against the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import EmptyGraph, SizeLimitExceeded
from .graph import INFINITY, Graph, Toughness, component_count

TOUGHNESS_VERTEX_LIMIT = 24


@dataclass(frozen=True)
class TwoK2Witness:
    """Four vertices inducing exactly the two edges ab and cd."""

    a: int
    b: int
    c: int
    d: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def verify(self, g: Graph) -> bool:
        a, b, c, d = self.vertices()
        if len({a, b, c, d}) != 4:
            return False
        return (
            g.has_edge(a, b)
            and g.has_edge(c, d)
            and not g.has_edge(a, c)
            and not g.has_edge(a, d)
            and not g.has_edge(b, c)
            and not g.has_edge(b, d)
        )


@dataclass(frozen=True)
class ToughnessCut:
    """A cutset S with c(G - S) >= 2 and its exact ratio |S| / c(G - S)."""

    cutset: tuple[int, ...]
    component_count: int
    ratio: Fraction

    def verify(self, g: Graph) -> bool:
        mask = 0
        for v in self.cutset:
            if not 0 <= v < g.n:
                return False
            mask |= 1 << v
        c = component_count(g, mask)
        return (
            c == self.component_count
            and c >= 2
            and self.ratio == Fraction(len(self.cutset), c)
        )


def find_induced_2k2(g: Graph) -> TwoK2Witness | None:
    """First induced pair of independent edges in lexicographic edge-pair order.

    Returns None exactly when g is 2K2-free.
    """
    edge_list = g.edges()
    for i, (a, b) in enumerate(edge_list):
        blocked = g.adjacency_mask(a) | g.adjacency_mask(b) | (1 << a) | (1 << b)
        for c, d in edge_list[i + 1 :]:
            if not (blocked >> c) & 1 and not (blocked >> d) & 1:
                return TwoK2Witness(a, b, c, d)
    return None


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeLimitExceeded(
            f"{g.n} vertices exceeds the cutset-enumeration limit {limit}"
        )


def toughness_exact(
    g: Graph, *, limit: int = TOUGHNESS_VERTEX_LIMIT, prune: bool = True
) -> tuple[Toughness, ToughnessCut | None]:
    """Exact toughness with an achieving cut.

    Complete graphs (including K1 and the empty graph) give (INFINITY, None).
    Disconnected graphs give ratio 0 via S = {}.  Enumeration is by increasing
    cutset size, then lexicographic; the first cut achieving the final minimum
    is returned.  ``prune`` skips sizes s once s/(n-s) can no longer beat the
    incumbent (every cut of size s has at most n-s components); pass False for
    the unpruned full enumeration.
    """
    _check_limit(g, limit)
    if g.is_complete():
        return INFINITY, None
    n = g.n
    best_ratio: Fraction | None = None
    best_cut: ToughnessCut | None = None
    for size in range(0, n - 1):
        if prune and best_ratio is not None and Fraction(size, n - size) >= best_ratio:
            break
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            c = component_count(g, mask)
            if c < 2:
                continue
            ratio = Fraction(size, c)
            if best_ratio is None or ratio < best_ratio:
                best_ratio = ratio
                best_cut = ToughnessCut(combo, c, ratio)
    assert best_cut is not None and best_ratio is not None  # non-complete
    return best_ratio, best_cut


def is_t_tough(
    g: Graph, t: Fraction, *, limit: int = TOUGHNESS_VERTEX_LIMIT
) -> ToughnessCut | bool:
    """True iff |S| >= t * c(G - S) for every cutset S, else a violating cut.

    Short-circuits on the first violation in (increasing |S|, lexicographic)
    order.
    """
    _check_limit(g, limit)
    n = g.n
    for size in range(0, max(n - 1, 0)):
        # a violation of size s needs s < t * c <= t * (n - s)
        if size >= t * (n - size):
            break
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            c = component_count(g, mask)
            if c >= 2 and size < t * c:
                return ToughnessCut(combo, c, Fraction(size, c))
    return True
