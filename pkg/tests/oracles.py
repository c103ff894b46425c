"""Brute-force reference implementations the tests check the library against.

Everything here is written naively and independently of the library's
algorithms: full enumeration, no pruning, no shared helpers beyond the Graph
accessors.
"""

from fractions import Fraction
from itertools import combinations

from twotrail import INFINITY, Graph


def brute_find_2k2(g: Graph):
    """Scan all 4-subsets for an induced pair of independent edges."""
    for quad in combinations(range(g.n), 4):
        sub = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
        if len(sub) != 2:
            continue
        (a, b), (c, d) = sub
        if len({a, b, c, d}) == 4:
            return quad
    return None


def brute_toughness(g: Graph):
    """Minimum |S| / c(G - S) over every subset, by flat enumeration."""
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return INFINITY
    best = None
    for size in range(g.n + 1):
        for cut in combinations(range(g.n), size):
            c = _component_count(g, set(cut))
            if c < 2:
                continue
            ratio = Fraction(size, c)
            if best is None or ratio < best:
                best = ratio
    return best


def _component_count(g: Graph, removed: set) -> int:
    todo = set(range(g.n)) - removed
    count = 0
    while todo:
        count += 1
        stack = [todo.pop()]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in todo:
                    todo.remove(w)
                    stack.append(w)
    return count


def brute_longest_cycle_length(g: Graph) -> int:
    """Maximum simple-cycle length by exhaustive path extension (0 if acyclic)."""
    best = 0

    def extend(start, path, on_path):
        nonlocal best
        tip = path[-1]
        for w in g.neighbors(tip):
            if w == start and len(path) >= 3:
                best = max(best, len(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                path.pop()
                on_path.remove(w)

    for s in range(g.n):
        extend(s, [s], {s})
    return best


def brute_cover_exists(x_side, y_side, edges) -> bool:
    """Is there an edge subset with every X-degree 2 and every Y-degree <= 2?

    Plain per-X enumeration of 2-subsets of neighbors with Y-load tracking,
    covering the same space as all edge subsets meeting the degree contract.
    """
    adjacency = {x: sorted(y for (a, y) in edges if a == x) for x in x_side}
    load = {y: 0 for y in y_side}

    def go(i):
        if i == len(x_side):
            return True
        x = x_side[i]
        for pair in combinations(adjacency[x], 2):
            if load[pair[0]] >= 2 or load[pair[1]] >= 2:
                continue
            for y in pair:
                load[y] += 1
            if go(i + 1):
                return True
            for y in pair:
                load[y] -= 1
        return False

    return go(0)
