"""Spanning 2-trail construction over a dominating longest cycle.

A spanning 2-trail is kept in its Eulerian-subgraph form: a spanning connected
edge subset with every degree even, positive, and at most 4.  The builder
covers the cycle's exterior with a degree-(2, <=2) subgraph, drives the cover
to a swap fixpoint, merges its path components into one, and closes the result
into a trail; every structural guarantee it leans on is re-checked at runtime,
so a failed run always carries a checkable witness that the input was not
3/2-tough or not 2K2-free (or names an internal assertion).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .cover import BipartiteInstance, CoverSubgraph, DeficientSet, build_cover, decompose_two_regular
from .cycles import (
    CYCLE_VERTEX_LIMIT,
    OrientedCycle,
    cyclic_distance,
    find_dominating_longest_cycle,
    is_dominating,
)
from .errors import LemmaViolation, NoCycle, NotDominating, SizeLimitExceeded
from .graph import Graph, component_count, components, edge
from .recognition import ToughnessCut, TwoK2Witness, find_induced_2k2

ORACLE_VERTEX_LIMIT = 12
ORACLE_EDGE_LIMIT = 28

THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class TwoTrail:
    """Spanning connected subgraph with all degrees even, positive, <= 4."""

    edges: frozenset[tuple[int, int]]

    def degrees(self, g: Graph) -> dict[int, int]:
        table = {v: 0 for v in range(g.n)}
        for u, v in self.edges:
            table[u] += 1
            table[v] += 1
        return table


@dataclass(frozen=True)
class TrailCheck:
    """Outcome of verify_2trail: ok, or the violated condition + witness."""

    ok: bool
    reason: str | None = None
    witness: object = None


class FailureTag(enum.Enum):
    """Pipeline stage whose structural guarantee failed."""

    NOT_ENOUGH_VERTICES = "NotEnoughVertices"
    NO_CYCLE = "NoCycle"
    CLAIM_A_A = "ClaimA_a"
    CLAIM_A_C = "ClaimA_c"
    CLAIM_B_B = "ClaimB_b"
    CLAIM_C_NO_DISTANT_PAIR = "ClaimC_NoDistantPair"
    CASE2_NO_CHORD = "Case2_NoChord"
    CASE2_TOUGHNESS_STRUCTURE = "Case2_ToughnessStructure"
    LEMMA_VIOLATION = "LemmaViolation"
    COVER_DEFICIENT = "CoverDeficient"


@dataclass(frozen=True)
class ConsecutiveNeighborsWitness:
    """An exterior vertex adjacent to two consecutive cycle vertices.

    Impossible next to a genuinely longest cycle (the cycle could be extended
    through the exterior vertex), so this marks an internal inconsistency.
    """

    exterior: int
    on_cycle: int
    successor: int

    def verify(self, g: Graph) -> bool:
        return (
            g.has_edge(self.exterior, self.on_cycle)
            and g.has_edge(self.exterior, self.successor)
            and g.has_edge(self.on_cycle, self.successor)
        )


@dataclass(frozen=True)
class AdjacentSuccessorsWitness:
    """Two cycle neighbors of an exterior vertex whose successors are adjacent.

    Also impossible next to a genuinely longest cycle; the successor relation
    itself is not re-checkable from the graph alone.
    """

    exterior: int
    first: int
    second: int
    first_successor: int
    second_successor: int

    def verify(self, g: Graph) -> bool:
        return (
            g.has_edge(self.exterior, self.first)
            and g.has_edge(self.exterior, self.second)
            and g.has_edge(self.first_successor, self.second_successor)
        )


@dataclass(frozen=True)
class BuildFailure:
    """Why no trail was built, with a polynomial-time checkable witness.

    The witness is a ToughnessCut (ratio < 3/2) or a TwoK2Witness whenever the
    failure certifies a hypothesis violation; the Claim-A tags carry the local
    facts that contradict the claimed cycle structure.
    """

    tag: FailureTag
    witness: object = None
    detail: str = ""

    def verify(self, g: Graph) -> bool:
        """Replay the witness against the graph."""
        w = self.witness
        if isinstance(w, ToughnessCut):
            return w.verify(g) and w.ratio < THREE_HALVES
        if isinstance(w, TwoK2Witness):
            return w.verify(g)
        if isinstance(w, (ConsecutiveNeighborsWitness, AdjacentSuccessorsWitness)):
            return w.verify(g)
        if self.tag is FailureTag.NOT_ENOUGH_VERTICES:
            return g.n < 3
        return False


class TrailBuildError(Exception):
    """Internal signal carrying a BuildFailure up to find_spanning_2trail."""

    def __init__(self, failure: BuildFailure):
        super().__init__(f"{failure.tag.value}: {failure.detail}")
        self.failure = failure


@dataclass(frozen=True)
class CoverDecomposition:
    """A cover of the cycle exterior, split into path and cycle components.

    Path sequences alternate cycle-vertex / exterior-vertex and have both
    ends on the cycle; ``paths[i][0]`` / ``paths[i][-1]`` are the ends and
    ``paths[i][1]`` / ``paths[i][-2]`` their exterior neighbors (equal for a
    length-2 path).
    """

    instance: BipartiteInstance
    edges: frozenset
    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.paths)

    def cycle_union_vertices(self) -> frozenset[int]:
        return frozenset(v for seq in self.cycles for v in seq)

    def cover_vertices(self) -> frozenset[int]:
        return frozenset(v for seq in self.paths + self.cycles for v in seq)

    def canonical_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(edge(x, y) for x, y in self.edges)


@dataclass(frozen=True)
class MergedPath:
    """All path components of a cover concatenated into one path.

    ``ends`` are the two remaining endpoints; ``end_inner`` maps each of them
    to its exterior neighbor along the path (used for 2K2 witnesses).
    """

    edges: frozenset[tuple[int, int]]
    ends: tuple[int, int]
    end_inner: dict = field(compare=False)
    connectors: tuple[tuple[int, int], ...] = ()


# -- verification ------------------------------------------------------


def verify_2trail(g: Graph, trail_edges: Iterable[tuple[int, int]]) -> TrailCheck:
    """Accept iff the edge set is a spanning 2-trail of g."""
    chosen = {edge(u, v) for u, v in trail_edges}
    for u, v in chosen:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return TrailCheck(False, "not an edge of the graph", (u, v))
    degree = {v: 0 for v in range(g.n)}
    for u, v in chosen:
        degree[u] += 1
        degree[v] += 1
    for v in range(g.n):
        if degree[v] == 0:
            return TrailCheck(False, "uncovered vertex", v)
        if degree[v] % 2 == 1:
            return TrailCheck(False, "odd degree", v)
        if degree[v] > 4:
            return TrailCheck(False, "degree exceeds 4", v)
    if g.n > 0:
        seen = {0}
        adjacency: dict[int, list[int]] = {v: [] for v in range(g.n)}
        for u, v in chosen:
            adjacency[u].append(v)
            adjacency[v].append(u)
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != g.n:
            missing = min(set(range(g.n)) - seen)
            return TrailCheck(False, "not connected", missing)
    return TrailCheck(True)


def _checked_trail(g: Graph, edges: Iterable[tuple[int, int]]) -> TwoTrail:
    trail = TwoTrail(frozenset(edge(u, v) for u, v in edges))
    check = verify_2trail(g, trail.edges)
    assert check.ok, f"assembled trail failed verification: {check.reason} at {check.witness}"
    return trail


# -- pipeline stages ---------------------------------------------------


def exterior_bipartite(g: Graph, c: OrientedCycle) -> BipartiteInstance:
    """The instance with X = exterior vertices, Y = cycle vertices, edges E(X, Y).

    Requires c to be dominating in g, so X is independent.
    """
    if not is_dominating(g, c):
        raise NotDominating("the cycle does not dominate the graph")
    on_cycle = c.vertex_set()
    xs = tuple(v for v in range(g.n) if v not in on_cycle)
    pairs = frozenset(
        (x, y) for x in xs for y in g.neighbors(x) if y in on_cycle
    )
    return BipartiteInstance(xs, tuple(sorted(on_cycle)), pairs)


def _decompose(inst: BipartiteInstance, edges: frozenset) -> CoverDecomposition:
    paths, cycles = decompose_two_regular(edges)
    xs = set(inst.x_side)
    for seq in paths:
        assert len(seq) % 2 == 1 and seq[0] not in xs and seq[-1] not in xs, (
            "path component does not run between cycle vertices"
        )
    return CoverDecomposition(inst, edges, tuple(paths), tuple(cycles))


def minimize_components(g: Graph, c: OrientedCycle, h: CoverSubgraph) -> CoverDecomposition:
    """Drive the cover to the end-swap fixpoint, merging path components.

    Whenever the exterior neighbor of one path's end is adjacent (in g) to an
    end of another path, the end edge is re-attached there, merging the two
    paths.  At the fixpoint no such adjacency remains, which is exactly the
    property the later merge step relies on.
    """
    edges = set(h.edges)
    while True:
        decomp = _decompose(h.instance, frozenset(edges))
        swap = _find_end_swap(g, decomp.paths)
        if swap is None:
            return decomp
        drop, add = swap
        edges.discard(drop)
        edges.discard((drop[1], drop[0]))
        edges.add(add)


def _find_end_swap(g: Graph, paths):
    for i, own in enumerate(paths):
        for (own_end, own_inner) in ((own[0], own[1]), (own[-1], own[-2])):
            for j, other in enumerate(paths):
                if i == j:
                    continue
                for other_end in (other[0], other[-1]):
                    if g.has_edge(own_inner, other_end):
                        # cover edges are (exterior, cycle-vertex) pairs
                        return (own_inner, own_end), (own_inner, other_end)
    return None


def merge_paths(g: Graph, c: OrientedCycle, decomp: CoverDecomposition) -> MergedPath:
    """Concatenate all path components into one path outside the cycle's edges.

    At each step the first endpoint pairing (current-end x new-end, in fixed
    order) at cyclic distance >= 2 is joined; the connecting edge must exist
    in g, else the two end edges exhibit an induced 2K2.
    """
    paths = decomp.paths
    assert decomp.p >= 1, "merge_paths needs at least one path component"
    first = paths[0]
    merged_edges = set(_seq_edges(first))
    end_a, end_b = first[0], first[-1]
    inner = {first[0]: first[1], first[-1]: first[-2]}
    connectors: list[tuple[int, int]] = []
    for seq in paths[1:]:
        new_a, new_b = seq[0], seq[-1]
        new_inner = {seq[0]: seq[1], seq[-1]: seq[-2]}
        pairings = [(end_a, new_a), (end_a, new_b), (end_b, new_a), (end_b, new_b)]
        chosen = None
        for w, z in pairings:
            if cyclic_distance(c, w, z) >= 2:
                chosen = (w, z)
                break
        if chosen is None:
            raise TrailBuildError(
                BuildFailure(
                    FailureTag.CLAIM_C_NO_DISTANT_PAIR,
                    witness=(end_a, end_b, new_a, new_b),
                    detail="all four endpoint pairings sit at cyclic distance <= 1",
                )
            )
        w, z = chosen
        if not g.has_edge(w, z):
            raise TrailBuildError(
                BuildFailure(
                    FailureTag.CLAIM_B_B,
                    witness=_checked_2k2(g, inner[w], w, new_inner[z], z),
                    detail=f"path ends {w} and {z} are non-adjacent",
                )
            )
        connectors.append(edge(w, z))
        merged_edges.update(_seq_edges(seq))
        merged_edges.add(edge(w, z))
        survivor_old = end_b if w == end_a else end_a
        survivor_new = new_b if z == new_a else new_a
        inner = {survivor_old: inner[survivor_old], survivor_new: new_inner[survivor_new]}
        end_a, end_b = survivor_old, survivor_new
    return MergedPath(frozenset(merged_edges), (end_a, end_b), inner, tuple(connectors))


def _seq_edges(seq):
    return (edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def _checked_2k2(g: Graph, a: int, b: int, c: int, d: int) -> TwoK2Witness:
    witness = TwoK2Witness(a, b, c, d)
    assert witness.verify(g), f"constructed 2K2 witness {witness} does not replay"
    return witness


def assemble_case1(
    g: Graph,
    c: OrientedCycle,
    decomp: CoverDecomposition,
    merged: MergedPath,
    telemetry: Counter | None = None,
) -> TwoTrail:
    """Close the merged path into a trail together with the cycle components.

    The closing edge between the merged path's two ends is removed when it
    lies on the cycle and added otherwise; either way every degree stays even
    and at most 4.
    """
    if telemetry is not None:
        telemetry["case1"] += 1
    w1, w2 = merged.ends
    if not g.has_edge(w1, w2):
        raise TrailBuildError(
            BuildFailure(
                FailureTag.CLAIM_B_B,
                witness=_checked_2k2(g, merged.end_inner[w1], w1, merged.end_inner[w2], w2),
                detail=f"merged-path ends {w1} and {w2} are non-adjacent",
            )
        )
    closing = edge(w1, w2)
    trail_edges = set(c.edge_set())
    trail_edges.update(edge(x, y) for seq in decomp.cycles for x, y in _pairs(seq, closed=True))
    trail_edges.update(merged.edges)
    if closing in c.edge_set():
        trail_edges.discard(closing)
    else:
        trail_edges.add(closing)
    return _checked_trail(g, trail_edges)


def _pairs(seq, *, closed: bool):
    for i in range(len(seq) - 1):
        yield seq[i], seq[i + 1]
    if closed:
        yield seq[-1], seq[0]


def assemble_case2(
    g: Graph,
    c: OrientedCycle,
    decomp: CoverDecomposition,
    telemetry: Counter | None = None,
    _depth: int = 0,
) -> TwoTrail:
    """Single-path covers: the four-branch decision tree.

    (i) long path: re-hang one end edge, or use the chord between the ends.
    (ii) 3-vertex path with distant ends: route through a successor.
    (iii) 3-vertex path with close ends but a spare neighbor: re-root the path
    at two distant neighbors and apply (ii).
    (iv) otherwise: open one cover cycle into a path and fall back to the
    merge machinery, or certify a toughness violation when that is impossible.
    """
    telemetry = telemetry if telemetry is not None else Counter()
    assert decomp.p == 1, "assemble_case2 needs exactly one path component"
    seq = decomp.paths[0]
    u_end, v_end = seq[0], seq[-1]
    u_inner, v_inner = seq[1], seq[-2]
    base = set(c.edge_set()) | set(decomp.canonical_edges())

    if len(seq) >= 4:
        telemetry["case2_i"] += 1
        if g.has_edge(u_inner, v_end):
            base.discard(edge(u_inner, u_end))
            base.add(edge(u_inner, v_end))
        elif g.has_edge(v_inner, u_end):
            base.discard(edge(v_inner, v_end))
            base.add(edge(v_inner, u_end))
        elif g.has_edge(u_end, v_end):
            if edge(u_end, v_end) in c.edge_set():
                base.discard(edge(u_end, v_end))
            else:
                base.add(edge(u_end, v_end))
        else:
            raise TrailBuildError(
                BuildFailure(
                    FailureTag.CASE2_NO_CHORD,
                    witness=_checked_2k2(g, u_inner, u_end, v_inner, v_end),
                    detail="no chord among the path's end edges",
                )
            )
        return _checked_trail(g, base)

    # 3-vertex path: one exterior vertex hung on two cycle vertices
    center = u_inner
    if cyclic_distance(c, u_end, v_end) >= 3:
        return _close_distant_pair(g, c, frozenset(base), center, u_end, v_end, telemetry)

    cover_vertices = decomp.cover_vertices()
    d_vertices = decomp.cycle_union_vertices()
    spare = sorted(set(g.neighbors(center)) - set(cover_vertices))
    if spare:
        telemetry["case2_iii"] += 1
        candidates = sorted(set(g.neighbors(center)) - set(d_vertices))
        pair = None
        for a, b in combinations(candidates, 2):
            if cyclic_distance(c, a, b) >= 3:
                pair = (a, b)
                break
        assert pair is not None, (
            "no distant neighbor pair despite a >=7-cycle with pairwise "
            "non-consecutive neighbors"
        )
        new_a, new_b = pair
        rerooted = set(c.edge_set())
        rerooted.update(edge(x, y) for s in decomp.cycles for x, y in _pairs(s, closed=True))
        rerooted.add(edge(center, new_a))
        rerooted.add(edge(center, new_b))
        return _close_distant_pair(g, c, frozenset(rerooted), center, new_a, new_b, telemetry)

    # every neighbor of the center outside its own path lies in the cover cycles
    exterior = set(decomp.instance.x_side)
    rewire = None
    for x in sorted(exterior & set(d_vertices)):
        outside = sorted(set(g.neighbors(x)) - set(cover_vertices))
        if outside:
            rewire = (x, outside[0])
            break
    if rewire is None:
        cut_set = sorted({y for x in exterior for y in g.neighbors(x)})
        raise TrailBuildError(
            BuildFailure(
                FailureTag.CASE2_TOUGHNESS_STRUCTURE,
                witness=_checked_cut(g, cut_set),
                detail="every exterior vertex sees only the cover",
            )
        )
    telemetry["case2_iv"] += 1
    x_pivot, new_end = rewire
    # the pivot sits on a cover cycle, so it has exactly two cover neighbors
    d_neighbors = sorted(
        (b if a == x_pivot else a) for (a, b) in decomp.edges if x_pivot in (a, b)
    )
    assert len(d_neighbors) == 2
    drop_to = d_neighbors[0]
    new_edges = set(decomp.edges)
    new_edges.discard((x_pivot, drop_to))
    new_edges.discard((drop_to, x_pivot))
    new_edges.add((x_pivot, new_end))
    rewired = CoverSubgraph(decomp.instance, frozenset(new_edges))
    rewired.validate()
    return _dispatch(g, c, rewired, telemetry, _depth + 1)


def _close_distant_pair(
    g: Graph,
    c: OrientedCycle,
    base: frozenset,
    center: int,
    u_end: int,
    v_end: int,
    telemetry: Counter,
) -> TwoTrail:
    """Branch (ii): ends at cyclic distance >= 3 around a 3-vertex path."""
    telemetry["case2_ii"] += 1
    u_next, v_next = c.successor(u_end), c.successor(v_end)
    if g.has_edge(u_next, v_next):
        raise TrailBuildError(
            BuildFailure(
                FailureTag.CLAIM_A_A,
                witness=AdjacentSuccessorsWitness(center, u_end, v_end, u_next, v_next),
                detail=(
                    "successors of two neighbors of an exterior vertex are "
                    "adjacent, contradicting a longest cycle"
                ),
            )
        )
    trail_edges = set(base)
    if g.has_edge(u_end, v_next):
        trail_edges.add(edge(u_end, v_next))
        trail_edges.discard(edge(v_end, v_next))
    elif g.has_edge(v_end, u_next):
        trail_edges.add(edge(v_end, u_next))
        trail_edges.discard(edge(u_end, u_next))
    elif g.has_edge(u_end, v_end):
        trail_edges.add(edge(u_end, v_end))
    else:
        raise TrailBuildError(
            BuildFailure(
                FailureTag.CASE2_NO_CHORD,
                witness=_checked_2k2(g, u_end, u_next, v_end, v_next),
                detail="no chord among the two successor edges",
            )
        )
    return _checked_trail(g, trail_edges)


def _checked_cut(g: Graph, cut_set) -> ToughnessCut:
    mask = 0
    for v in cut_set:
        mask |= 1 << v
    count = component_count(g, mask)
    cut = ToughnessCut(tuple(cut_set), count, Fraction(len(cut_set), count))
    assert cut.verify(g) and cut.ratio < THREE_HALVES, (
        f"constructed cut {cut_set} does not witness a toughness violation"
    )
    return cut


def _dispatch(
    g: Graph,
    c: OrientedCycle,
    cover: CoverSubgraph,
    telemetry: Counter,
    depth: int = 0,
) -> TwoTrail:
    """Minimize the cover, then route by the number of path components."""
    assert depth <= 4, "cover dispatch failed to terminate"
    decomp = minimize_components(g, c, cover)
    if decomp.p == 0:
        telemetry["p0"] += 1
        trail_edges = set(c.edge_set())
        trail_edges.update(decomp.canonical_edges())
        return _checked_trail(g, trail_edges)
    if decomp.p == 1:
        return assemble_case2(g, c, decomp, telemetry, depth)
    merged = merge_paths(g, c, decomp)
    return assemble_case1(g, c, decomp, merged, telemetry)


# -- the full pipeline -------------------------------------------------


def find_spanning_2trail(
    g: Graph,
    *,
    cycle_limit: int = CYCLE_VERTEX_LIMIT,
    telemetry: Counter | None = None,
) -> TwoTrail | BuildFailure:
    """Build a spanning 2-trail, or fail with a checkable witness.

    Succeeds on every 3/2-tough 2K2-free graph with at least 3 vertices (and
    on many inputs beyond); hypotheses are discovered, not assumed, so a
    BuildFailure pinpoints the stage and carries the violation it uncovered.
    Every returned trail has passed verify_2trail.
    """
    telemetry = telemetry if telemetry is not None else Counter()
    if g.n < 3:
        return BuildFailure(
            FailureTag.NOT_ENOUGH_VERTICES,
            witness=None,
            detail=f"{g.n} vertices; a 2-trail needs at least 3",
        )
    try:
        cycle = find_dominating_longest_cycle(g, limit=cycle_limit)
    except NoCycle:
        return BuildFailure(
            FailureTag.NO_CYCLE,
            witness=_acyclic_cut(g),
            detail="the graph is acyclic",
        )
    except LemmaViolation as exc:
        witness = find_induced_2k2(g)
        assert witness is not None, (
            "no longest cycle dominates, yet the graph is 2K2-free"
        )
        return BuildFailure(
            FailureTag.LEMMA_VIOLATION,
            witness=witness,
            detail=f"none of {len(exc.cycles)} longest cycles dominates",
        )
    if cycle.spans(g):
        telemetry["spanning_cycle"] += 1
        return _checked_trail(g, cycle.edge_set())

    exterior = sorted(set(range(g.n)) - cycle.vertex_set())
    if len(cycle) < 7:
        x = exterior[0]
        return BuildFailure(
            FailureTag.CLAIM_A_C,
            witness=_checked_cut(g, sorted(g.neighbors(x))),
            detail=f"non-spanning dominating cycle has only {len(cycle)} vertices",
        )
    for x in exterior:
        for y in sorted(g.neighbors(x)):
            y_next = cycle.successor(y)
            if y_next in g.neighbors(x):
                return BuildFailure(
                    FailureTag.CLAIM_A_A,
                    witness=ConsecutiveNeighborsWitness(x, y, y_next),
                    detail="an exterior vertex sees two consecutive cycle vertices",
                )

    inst = exterior_bipartite(g, cycle)
    cover = build_cover(inst)
    if isinstance(cover, DeficientSet):
        cut_set = sorted({y for x in cover.vertices for y in g.neighbors(x)})
        return BuildFailure(
            FailureTag.COVER_DEFICIENT,
            witness=_checked_cut(g, cut_set),
            detail=(
                f"exterior set {list(cover.vertices)} has a neighborhood "
                "smaller than 3/2 its size"
            ),
        )
    try:
        return _dispatch(g, cycle, cover, telemetry)
    except TrailBuildError as exc:
        return exc.failure


def _acyclic_cut(g: Graph) -> ToughnessCut:
    """A toughness violation for an acyclic graph on >= 3 vertices."""
    blocks = components(g)
    if len(blocks) >= 2:
        return ToughnessCut((), len(blocks), Fraction(0))
    internal = next(v for v in range(g.n) if g.degree(v) >= 2)
    return _checked_cut(g, [internal])


# -- independent existence oracle --------------------------------------


def oracle_exists_2trail(
    g: Graph,
    *,
    vertex_limit: int = ORACLE_VERTEX_LIMIT,
    edge_limit: int = ORACLE_EDGE_LIMIT,
) -> tuple[bool, TwoTrail | None]:
    """Does any spanning 2-trail exist?  Backtracking, independent of the builder.

    Vertices are processed in (degree, label) order; each picks the incident
    edge set toward later vertices that completes its degree to 2 or 4.
    Prunes on the degree cap and on components that close before spanning.
    """
    if g.n > vertex_limit and g.edge_count > edge_limit:
        raise SizeLimitExceeded(
            f"{g.n} vertices / {g.edge_count} edges exceeds the oracle limits "
            f"({vertex_limit} vertices or {edge_limit} edges)"
        )
    n = g.n
    if n == 0:
        return True, TwoTrail(frozenset())
    order = sorted(range(n), key=lambda v: (g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    later = {v: sorted((w for w in g.neighbors(v) if rank[w] > rank[v])) for v in order}
    degree = [0] * n
    chosen: list[tuple[int, int]] = []
    parent = list(range(n))
    comp_max_rank = list(rank[v] for v in range(n))  # indexed by root
    comp_size = [1] * n
    union_log: list[tuple[int, int, int]] = []

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra == rb:
            union_log.append((-1, -1, -1))
            return
        if comp_size[ra] < comp_size[rb]:
            ra, rb = rb, ra
        union_log.append((rb, ra, comp_max_rank[ra]))
        parent[rb] = ra
        comp_size[ra] += comp_size[rb]
        comp_max_rank[ra] = max(comp_max_rank[ra], comp_max_rank[rb])

    def undo() -> None:
        rb, ra, old_max = union_log.pop()
        if rb == -1:
            return
        parent[rb] = rb
        comp_size[ra] -= comp_size[rb]
        comp_max_rank[ra] = old_max

    def search(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        pool = [w for w in later[v] if degree[w] < 4]
        have = degree[v]
        for target in (2, 4):
            need = target - have
            if need < 0 or need > len(pool):
                continue
            for combo in combinations(pool, need):
                for w in combo:
                    degree[w] += 1
                    degree[v] += 1
                    chosen.append((v, w))
                    union(v, w)
                root = find(v)
                closed = comp_max_rank[root] <= i
                if not closed or comp_size[root] == n:
                    if search(i + 1):
                        return True
                for _ in combo:
                    undo()
                    chosen.pop()
                for w in combo:
                    degree[w] -= 1
                    degree[v] -= 1
        return False

    if search(0):
        return True, TwoTrail(frozenset(edge(u, v) for u, v in chosen))
    return False, None
