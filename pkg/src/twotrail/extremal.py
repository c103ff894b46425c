"""The extremal family: toughness approaching 5/4 with no spanning 2-trail.

For n >= 2 the instance glues a 4n-clique, 4n independent vertices matched
into the clique, and an (n-1)-clique joined to everything else.  Its exact
toughness is (5n-2)/(4n), and a double-counting certificate rules out any
spanning subgraph with minimum degree 2 and maximum degree 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInstance, NTooSmall
from .graph import Graph, component_count
from .recognition import ToughnessCut


@dataclass(frozen=True)
class ExtremalInstance:
    """The graph plus its three-part vertex partition and the matching."""

    n: int
    graph: Graph
    q1: tuple[int, ...]
    q2: tuple[int, ...]
    q3: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NoTrailCertificate:
    """Counting certificate: the middle part needs more edges than the hub allows.

    Every vertex of ``q2`` must send at least one trail edge into ``q3``
    (``required`` in total), but ``q3`` can absorb at most ``budget`` = 4|q3|.
    """

    required: int
    budget: int
    q2: tuple[int, ...]
    q3: tuple[int, ...]


def build_extremal(n: int) -> ExtremalInstance:
    """The family member for n >= 2: 9n-1 vertices, labeled Q1, Q2, Q3 in order."""
    if n < 2:
        raise NTooSmall(f"family parameter must be >= 2, got {n}")
    q1 = tuple(range(4 * n))
    q2 = tuple(range(4 * n, 8 * n))
    q3 = tuple(range(8 * n, 9 * n - 1))
    edges: list[tuple[int, int]] = []
    for i in q1:
        for j in q1:
            if i < j:
                edges.append((i, j))
    for i in q3:
        for j in q3:
            if i < j:
                edges.append((i, j))
    for h in q3:
        for v in q1 + q2:
            edges.append((h, v))
    matching = tuple((i, 4 * n + i) for i in range(4 * n))
    edges.extend(matching)
    return ExtremalInstance(n, Graph.from_edges(9 * n - 1, edges), q1, q2, q3, matching)


def extremal_toughness_value(n: int) -> Fraction:
    """Exact toughness (5n-2)/(4n) of the family member, by the reduced search.

    Cuts worth considering contain all of Q3 and avoid Q2; with r clique
    vertices removed the ratio is (n-1+r)/(r+1), decreasing in r, against
    (5n-1)/(4n) for removing the whole clique.
    """
    if n < 2:
        raise NTooSmall(f"family parameter must be >= 2, got {n}")
    partial = Fraction(n - 1 + (4 * n - 1), 4 * n)  # r = 4n - 1 minimizes
    whole_clique = Fraction(n - 1 + 4 * n, 4 * n)
    return min(partial, whole_clique)


def structured_toughness(inst: ExtremalInstance) -> tuple[Fraction, ToughnessCut]:
    """Toughness of the instance over the reduced cut space, with the cut.

    Minimizes (n-1+r)/(r+1) over r in [1, 4n-1] explicitly, compares against
    the whole-clique cut, and re-checks the winning cut's component count
    against the actual graph.
    """
    n = inst.n
    best = min(Fraction(n - 1 + r, r + 1) for r in range(1, 4 * n))
    whole = Fraction(n - 1 + 4 * n, 4 * n)
    if whole < best:
        cut_set = inst.q3 + inst.q1
        expect_components = 4 * n
        best = whole
    else:
        # (n-1+r)/(r+1) is non-increasing in r, so r = 4n-1 achieves the minimum
        best_r = 4 * n - 1
        assert Fraction(n - 1 + best_r, best_r + 1) == best
        cut_set = inst.q3 + inst.q1[:best_r]
        expect_components = best_r + 1
    mask = 0
    for v in cut_set:
        mask |= 1 << v
    count = component_count(inst.graph, mask)
    if count != expect_components:
        raise MalformedInstance(
            f"cut leaves {count} components, expected {expect_components}"
        )
    cut = ToughnessCut(tuple(sorted(cut_set)), count, Fraction(len(cut_set), count))
    assert cut.ratio == best
    return best, cut


def no_trail_certificate(inst: ExtremalInstance) -> NoTrailCertificate:
    """Emit the counting certificate, verifying its structural premises.

    Each Q2 vertex must have exactly one neighbor in Q1 (its matched partner)
    and all remaining neighbors in Q3.
    """
    g = inst.graph
    q1, q3 = set(inst.q1), set(inst.q3)
    for v in inst.q2:
        nbrs = g.neighbors(v)
        if len(nbrs & q1) != 1:
            raise MalformedInstance(f"vertex {v} has {len(nbrs & q1)} neighbors in Q1")
        if not (nbrs - q1) <= q3:
            raise MalformedInstance(f"vertex {v} has neighbors outside Q1 and Q3")
    n = inst.n
    return NoTrailCertificate(4 * n, 4 * (n - 1), inst.q2, inst.q3)


def check_certificate(g: Graph, cert: NoTrailCertificate) -> bool:
    """True iff the certificate's facts hold in g and rule out a 2-trail.

    The facts: the two sets are disjoint and in range, required = |Q2| and
    budget = 4|Q3|, every Q2 vertex has at most one neighbor outside Q3, Q2 is
    independent, and required > budget.  Together they imply no spanning
    subgraph with minimum degree 2 and maximum degree 4 exists.
    """
    q2, q3 = set(cert.q2), set(cert.q3)
    if not all(0 <= v < g.n for v in q2 | q3) or q2 & q3:
        return False
    if cert.required != len(q2) or cert.budget != 4 * len(q3):
        return False
    for v in cert.q2:
        if len(g.neighbors(v) - q3) > 1:
            return False
        if g.neighbors(v) & q2:
            return False
    return cert.required > cert.budget
