import random
from fractions import Fraction

import pytest

from twotrail import (
    BipartiteInstance,
    CoverSubgraph,
    DeficientSet,
    NonPositiveK,
    build_cover,
    expand,
    max_matching,
    tightness_family,
)
from twotrail.cover import decompose_two_regular, exhaustive_cover_search

from oracles import brute_cover_exists


def make(xs, ys, edges):
    return BipartiteInstance.make(xs, ys, edges)


class TestExpand:
    def test_single_edge(self):
        exp = expand(make([0], [1], [(0, 1)]))
        assert len(exp.instance.x_side) == 3
        assert len(exp.instance.y_side) == 2
        assert len(exp.instance.edges) == 6

    def test_empty(self):
        exp = expand(make([], [], []))
        assert exp.instance.x_side == () and exp.instance.edges == frozenset()

    def test_one_x_two_y(self):
        exp = expand(make([0], [1, 2], [(0, 1), (0, 2)]))
        assert len(exp.instance.x_side) + len(exp.instance.y_side) == 7
        assert len(exp.instance.edges) == 12

    def test_projection_round_trip(self):
        inst = make([0, 1], [2, 3], [(0, 2), (1, 3)])
        exp = expand(inst)
        assert exp.pull_back(exp.instance.x_side) == (0, 1)


class TestMaxMatching:
    def test_two_disjoint_edges(self):
        res = max_matching(make([0, 1], [2, 3], [(0, 2), (1, 3)]))
        assert res.deficient is None
        assert res.matching == {0: 2, 1: 3}

    def test_hall_violation(self):
        res = max_matching(make([0, 1, 2], [3], [(0, 3), (1, 3), (2, 3)]))
        assert len(res.matching) == 1
        assert res.deficient == (0, 1, 2)

    def test_tightness_expansion_saturates(self):
        exp = expand(tightness_family(1))
        res = max_matching(exp.instance)
        assert res.deficient is None
        assert len(res.matching) == len(exp.instance.x_side)

    def test_violator_is_deficient_in_hall_sense(self):
        inst = make([0, 1, 2], [3, 4], [(0, 3), (1, 3), (1, 4), (2, 4)])
        res = max_matching(inst)
        assert res.deficient is not None
        assert len(inst.neighborhood(res.deficient)) < len(res.deficient)


class TestBuildCover:
    def test_trim_rule(self):
        cover = build_cover(make([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)]))
        assert isinstance(cover, CoverSubgraph)
        assert sorted(cover.edges) == [(0, 1), (0, 2)]

    def test_tightness_k1(self):
        cover = build_cover(tightness_family(1))
        assert isinstance(cover, CoverSubgraph)
        cover.validate()

    def test_tightness_k1_minus_first_matched(self):
        fam = tightness_family(1)
        res = build_cover(fam.without_y(2))  # label 2 is x0's matched partner
        assert isinstance(res, DeficientSet)
        assert res.vertices == (0,)

    def test_cover_exists_despite_hall_failure(self):
        # complete 2x2: the 3/2 expansion fails, yet all four edges are a cover
        inst = make([0, 1], [2, 3], [(0, 2), (0, 3), (1, 2), (1, 3)])
        cover = build_cover(inst)
        assert isinstance(cover, CoverSubgraph)
        assert cover.edges == inst.edges

    def test_failure_is_exactly_deficient(self):
        inst = make([0, 1], [2, 3], [(0, 2), (1, 3)])
        res = build_cover(inst)
        assert isinstance(res, DeficientSet)
        s = set(res.vertices)
        assert len(inst.neighborhood(s)) < Fraction(3, 2) * len(s)

    def test_random_against_oracles(self):
        rng = random.Random(2024)
        successes = failures = 0
        for _ in range(200):
            nx, ny = rng.randrange(1, 5), rng.randrange(1, 6)
            xs = tuple(range(nx))
            ys = tuple(range(10, 10 + ny))
            edges = frozenset(
                (x, y) for x in xs for y in ys if rng.random() < rng.choice((0.3, 0.6, 0.9))
            )
            inst = make(xs, ys, edges)
            res = build_cover(inst)
            exists = brute_cover_exists(xs, ys, edges)
            if isinstance(res, CoverSubgraph):
                successes += 1
                res.validate()
                assert exists
                assert exhaustive_cover_search(inst) is not None
            else:
                failures += 1
                assert not exists
                assert exhaustive_cover_search(inst) is None
                assert res.verify(inst)
        assert successes and failures


class TestTightnessFamily:
    @pytest.mark.parametrize("k,vertices,edges", [(1, 5, 4), (2, 10, 12)])
    def test_shape(self, k, vertices, edges):
        fam = tightness_family(k)
        assert len(fam.x_side) + len(fam.y_side) == vertices
        assert len(fam.edges) == edges

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveK):
            tightness_family(0)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_single_deletions_destroy_cover(self, k):
        fam = tightness_family(k)
        assert isinstance(build_cover(fam), CoverSubgraph)
        for y in fam.y_side:
            res = build_cover(fam.without_y(y))
            assert isinstance(res, DeficientSet)
            assert res.verify(fam.without_y(y))

    def test_weaker_expansion_still_holds_after_deletion(self):
        # deleting a Y-vertex of the k-family leaves |N(S)| >= (3k-1)/(2k) |S|
        for k in (1, 2, 3):
            fam = tightness_family(k)
            bound = Fraction(3 * k - 1, 2 * k)
            for y in fam.y_side:
                reduced = fam.without_y(y)
                for size in range(1, len(reduced.x_side) + 1):
                    from itertools import combinations

                    for s in combinations(reduced.x_side, size):
                        assert len(reduced.neighborhood(s)) >= bound * size


class TestDecomposition:
    def test_paths_and_cycles(self):
        paths, cycles = decompose_two_regular(
            {(0, 10), (10, 1), (2, 11), (11, 3), (3, 12), (12, 2)}
        )
        assert paths == [(0, 10, 1)]
        assert cycles == [(2, 11, 3, 12)]

    def test_cover_components_alternate(self):
        fam = tightness_family(2)
        cover = build_cover(fam)
        paths, cycles = cover.components()
        xs = set(fam.x_side)
        for seq in paths:
            assert seq[0] not in xs and seq[-1] not in xs
            assert len(seq) % 2 == 1
        for seq in cycles:
            assert len(seq) % 2 == 0
        covered = {v for seq in paths + cycles for v in seq if v in xs}
        assert covered == xs
