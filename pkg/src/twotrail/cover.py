"""Covers of the X side of a bipartite instance by degree-(2, <=2) subgraphs.

A cover here is an edge subset H with d_H(x) = 2 for every x in X and
d_H(y) <= 2 for every y in Y; its components are paths with both ends in Y
and even cycles.  ``build_cover`` constructs one via a vertex-replication
trick and Hall's theorem, with an exact degree-constrained search as the
completeness fallback, and returns a deficient set (|N(S)| < 3/2 |S|)
exactly when no cover exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable

from .errors import MalformedInstance, NonPositiveK

Vertex = Hashable


@dataclass(frozen=True)
class BipartiteInstance:
    """Two disjoint vertex sides plus (x, y) edges."""

    x_side: tuple
    y_side: tuple
    edges: frozenset

    @staticmethod
    def make(
        x_side: Iterable[Vertex],
        y_side: Iterable[Vertex],
        edges: Iterable[tuple[Vertex, Vertex]],
    ) -> "BipartiteInstance":
        xs = tuple(sorted(set(x_side)))
        ys = tuple(sorted(set(y_side)))
        if set(xs) & set(ys):
            raise MalformedInstance("the two sides intersect")
        edge_set = frozenset(edges)
        xset, yset = set(xs), set(ys)
        for x, y in edge_set:
            if x not in xset or y not in yset:
                raise MalformedInstance(f"edge ({x!r}, {y!r}) does not cross the sides")
        return BipartiteInstance(xs, ys, edge_set)

    def x_neighbors(self, x: Vertex) -> list:
        return sorted(y for (a, y) in self.edges if a == x)

    def y_neighbors(self, y: Vertex) -> list:
        return sorted(x for (x, b) in self.edges if b == y)

    def neighborhood(self, xs: Iterable[Vertex]) -> set:
        wanted = set(xs)
        return {y for (x, y) in self.edges if x in wanted}

    def without_y(self, y: Vertex) -> "BipartiteInstance":
        """The instance with one Y-vertex (and its edges) deleted."""
        return BipartiteInstance(
            self.x_side,
            tuple(v for v in self.y_side if v != y),
            frozenset(e for e in self.edges if e[1] != y),
        )


@dataclass(frozen=True)
class DeficientSet:
    """S subset of X with |N(S)| < (3/2) |S|."""

    vertices: tuple

    def verify(self, inst: BipartiteInstance) -> bool:
        s = set(self.vertices)
        if not s or not s <= set(inst.x_side):
            return False
        return Fraction(len(inst.neighborhood(s))) < Fraction(3, 2) * len(s)


@dataclass(frozen=True)
class CoverSubgraph:
    """An edge subset with every X-degree exactly 2 and every Y-degree <= 2."""

    instance: BipartiteInstance
    edges: frozenset

    def x_degree(self, x: Vertex) -> int:
        return sum(1 for (a, _) in self.edges if a == x)

    def y_degree(self, y: Vertex) -> int:
        return sum(1 for (_, b) in self.edges if b == y)

    def validate(self) -> None:
        if not self.edges <= self.instance.edges:
            raise MalformedInstance("cover uses edges outside the instance")
        for x in self.instance.x_side:
            if self.x_degree(x) != 2:
                raise MalformedInstance(f"X-vertex {x!r} has degree != 2")
        for y in self.instance.y_side:
            if self.y_degree(y) > 2:
                raise MalformedInstance(f"Y-vertex {y!r} has degree > 2")

    def components(self) -> tuple[list[tuple], list[tuple]]:
        """Decompose into (paths, cycles) as vertex sequences.

        Paths run between their two degree-1 ends, starting at the smaller;
        cycles start at their smallest vertex, toward its smaller neighbor.
        """
        return decompose_two_regular(self.edges)


@dataclass(frozen=True)
class Expansion:
    """Replicated instance: 3 copies per X-vertex, 2 per Y-vertex."""

    instance: BipartiteInstance
    projection: dict

    def pull_back(self, copies: Iterable) -> tuple:
        return tuple(sorted({self.projection[c] for c in copies}))


@dataclass
class MatchingResult:
    """Maximum matching plus, when the side is not saturated, a Hall violator."""

    matching: dict
    deficient: tuple | None


def expand(inst: BipartiteInstance) -> Expansion:
    """Replace each x by 3 copies, each y by 2, each edge by all copy pairs."""
    projection: dict = {}
    x_copies = []
    for x in inst.x_side:
        for i in range(3):
            projection[(x, i)] = x
            x_copies.append((x, i))
    y_copies = []
    for y in inst.y_side:
        for j in range(2):
            projection[(y, j)] = y
            y_copies.append((y, j))
    edges = frozenset(
        ((x, i), (y, j))
        for (x, y) in inst.edges
        for i in range(3)
        for j in range(2)
    )
    return Expansion(BipartiteInstance(tuple(x_copies), tuple(y_copies), edges), projection)


def max_matching(bip: BipartiteInstance, side: str = "x") -> MatchingResult:
    """Maximum matching by augmenting paths, saturating ``side`` if possible.

    When some side-vertex stays unmatched, the alternating-reachability set of
    the first unmatched vertex is returned as the Hall violator (its
    neighborhood is one smaller than itself).
    """
    if side == "x":
        left, nbrs = bip.x_side, bip.x_neighbors
    elif side == "y":
        left, nbrs = bip.y_side, bip.y_neighbors
    else:
        raise ValueError(f"side must be 'x' or 'y', not {side!r}")
    adjacency = {u: nbrs(u) for u in left}
    partner_left: dict = {}
    partner_right: dict = {}

    def try_augment(u, visited: set) -> bool:
        for w in adjacency[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in partner_right or try_augment(partner_right[w], visited):
                partner_left[u] = w
                partner_right[w] = u
                return True
        return False

    for u in left:
        try_augment(u, set())

    unmatched = [u for u in left if u not in partner_left]
    if not unmatched:
        return MatchingResult(dict(partner_left), None)

    # Koenig-style certificate: alternating reachability from every unmatched
    # vertex; the neighborhood is smaller by the number of unmatched seeds.
    reached = set(unmatched)
    frontier = list(unmatched)
    while frontier:
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                mate = partner_right.get(w)
                if mate is not None and mate not in reached:
                    reached.add(mate)
                    nxt.append(mate)
        frontier = nxt
    return MatchingResult(dict(partner_left), tuple(sorted(reached)))


def _degree_constrained_cover(inst: BipartiteInstance) -> frozenset | None:
    """Exact search for a cover: two distinct Y-slots per X, Y-capacity 2.

    Unit-capacity augmenting paths on the residual graph; returns None exactly
    when no cover exists.
    """
    used: set = set()
    load = {y: 0 for y in inst.y_side}
    adjacency = {x: inst.x_neighbors(x) for x in inst.x_side}

    def place(x, visited_y: set) -> bool:
        for y in adjacency[x]:
            if (x, y) in used or y in visited_y:
                continue
            visited_y.add(y)
            if load[y] < 2:
                used.add((x, y))
                load[y] += 1
                return True
            for x2 in sorted(a for (a, b) in used if b == y):
                used.discard((x2, y))
                if place(x2, visited_y):
                    used.add((x, y))
                    return True
                used.add((x2, y))
        return False

    for x in inst.x_side:
        for _ in range(2):
            if not place(x, set()):
                return None
    return frozenset(used)


def build_cover(inst: BipartiteInstance) -> CoverSubgraph | DeficientSet:
    """Construct a cover of X, or certify that none exists.

    The replication-and-matching route runs first; when it saturates, the
    projected matching is trimmed (each X-vertex of projected degree 3 loses
    its lexicographically largest incident edge).  When Hall fails there, the
    exact degree-constrained search still decides existence, and only a
    genuinely cover-free instance yields the DeficientSet pulled back from the
    Hall certificate.
    """
    exp = expand(inst)
    result = max_matching(exp.instance, side="x")
    if result.deficient is None:
        projected: dict = {}
        for x_copy, y_copy in result.matching.items():
            x, y = exp.projection[x_copy], exp.projection[y_copy]
            projected.setdefault(x, set()).add(y)
        chosen = set()
        for x in inst.x_side:
            ys = projected[x]
            if len(ys) == 3:
                ys = ys - {max(ys)}
            chosen.update((x, y) for y in ys)
        cover = CoverSubgraph(inst, frozenset(chosen))
        cover.validate()
        return cover

    direct = _degree_constrained_cover(inst)
    if direct is not None:
        cover = CoverSubgraph(inst, direct)
        cover.validate()
        return cover

    deficient = DeficientSet(_minimize_deficient(inst, exp.pull_back(result.deficient)))
    assert deficient.verify(inst), "Hall certificate did not pull back deficient"
    return deficient


def _minimize_deficient(inst: BipartiteInstance, vertices: tuple) -> tuple:
    """Greedily shrink a deficient set while it stays deficient."""

    def is_deficient(subset) -> bool:
        return subset and 2 * len(inst.neighborhood(subset)) < 3 * len(subset)

    kept = list(vertices)
    for v in sorted(vertices):
        trial = [u for u in kept if u != v]
        if is_deficient(trial):
            kept = trial
    return tuple(kept)


def tightness_family(k: int) -> BipartiteInstance:
    """The family showing the 3/2 expansion constant cannot be lowered.

    |X| = 2k matched bijectively into Y1 (|Y1| = 2k), plus Y2 (|Y2| = k)
    joined completely to X.  The full instance admits a cover; deleting any
    single Y-vertex leaves none.
    """
    if k < 1:
        raise NonPositiveK(f"family parameter must be >= 1, got {k}")
    xs = tuple(range(2 * k))
    y1 = tuple(range(2 * k, 4 * k))
    y2 = tuple(range(4 * k, 5 * k))
    edges = {(i, 2 * k + i) for i in xs}
    edges.update((x, y) for x in xs for y in y2)
    return BipartiteInstance(xs, y1 + y2, frozenset(edges))


def decompose_two_regular(edges: Iterable[tuple]) -> tuple[list[tuple], list[tuple]]:
    """Split an edge set with all degrees <= 2 into paths and cycles.

    Returns vertex sequences: paths from their smaller end, cycles rotated to
    start at their smallest vertex toward its smaller neighbor.  Components
    are ordered by their first vertex.
    """
    adjacency: dict = {}
    for a, b in edges:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    for v, nbrs in adjacency.items():
        if len(nbrs) > 2:
            raise MalformedInstance(f"vertex {v!r} has degree {len(nbrs)} > 2")
        nbrs.sort()
    seen: set = set()
    paths: list[tuple] = []
    cycles: list[tuple] = []

    def walk(start, first):
        seq = [start, first]
        seen.update((start, first))
        prev, cur = start, first
        while True:
            nxt = [w for w in adjacency[cur] if w != prev]
            if not nxt:
                return seq, False
            step = nxt[0]
            if step == start:
                return seq, True
            seq.append(step)
            seen.add(step)
            prev, cur = cur, step

    for v in sorted(adjacency):
        if v in seen or len(adjacency[v]) != 1:
            continue
        seq, _ = walk(v, adjacency[v][0])
        paths.append(tuple(seq))
    for v in sorted(adjacency):
        if v in seen:
            continue
        seq, closed = walk(v, adjacency[v][0])
        assert closed, "leftover component is not a cycle"
        cycles.append(tuple(seq))
    return paths, cycles


def exhaustive_cover_search(inst: BipartiteInstance) -> frozenset | None:
    """Reference search: try every way to give each X-vertex two neighbors.

    Backtracking over per-X 2-subsets with Y-capacity bookkeeping; exhaustive
    over the same space as all edge subsets satisfying the degree contract.
    Intended for small oracles and cross-checks, not the pipeline.
    """
    xs = inst.x_side
    load = {y: 0 for y in inst.y_side}
    picked: list[tuple] = []

    def go(i: int) -> frozenset | None:
        if i == len(xs):
            return frozenset(picked)
        x = xs[i]
        nbrs = inst.x_neighbors(x)
        for pair in combinations(nbrs, 2):
            if load[pair[0]] >= 2 or load[pair[1]] >= 2:
                continue
            for y in pair:
                load[y] += 1
                picked.append((x, y))
            found = go(i + 1)
            if found is not None:
                return found
            for y in pair:
                load[y] -= 1
                picked.pop()
        return None

    return go(0)
