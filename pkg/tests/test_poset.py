import pytest

from latcount.poset import (
    CycleDetected,
    LabelOutOfRange,
    NotALattice,
    NotComparable,
    RedundantCover,
    as_lattice,
    build_poset,
    chain,
    classify_elements,
    contains_crown,
    dual,
    is_dismantlable,
    maximal_chains_in_interval,
    meet_join,
    nullity,
)
from latcount.reduction import f1, f3, f4, m2

CUBE_COVERS = [
    (0, 1), (0, 2), (0, 3),
    (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6),
    (4, 7), (5, 7), (6, 7),
]


def cube():
    return as_lattice(build_poset(8, CUBE_COVERS))


class TestBuildPoset:
    def test_singleton(self):
        p = build_poset(1, [])
        assert p.n == 1 and p.covers == ()

    def test_diamond(self):
        p = build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert len(p.covers) == 4

    def test_redundant_cover_rejected(self):
        with pytest.raises(RedundantCover):
            build_poset(3, [(0, 1), (1, 2), (0, 2)])

    def test_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(3, [(0, 1), (1, 2), (2, 0)])

    def test_label_out_of_range(self):
        with pytest.raises(LabelOutOfRange):
            build_poset(2, [(0, 2)])


class TestAsLattice:
    def test_chain(self):
        l = chain(3)
        assert (l.bottom, l.top) == (0, 2)

    def test_diamond_is_lattice(self):
        assert m2().n == 4

    def test_v_poset_rejected(self):
        # one bottom, two maximal elements: the maximal pair has no join
        with pytest.raises(NotALattice) as exc:
            as_lattice(build_poset(4, [(0, 1), (1, 2), (1, 3)]))
        assert exc.value.kind == "join"


class TestMeetJoin:
    def test_comparable_pair(self):
        l = chain(4)
        assert meet_join(l, 1, 3) == (1, 3)

    def test_diamond_middles_are_complements(self):
        l = m2()
        assert meet_join(l, 1, 2) == (0, 3)

    def test_f1_upper_pair(self):
        # the two upper covers of the middle reducible element meet there
        # and join at the top
        l = f1()
        assert meet_join(l, 2, 3) == (1, 5)


class TestClassify:
    def test_chain_has_no_reducibles(self):
        cls = classify_elements(chain(5))
        assert cls.red == frozenset()
        assert cls.irr_star == frozenset({1, 2, 3})

    def test_diamond_bounds_reducible(self):
        cls = classify_elements(m2())
        assert cls.red == frozenset({0, 3})

    def test_f1_split(self):
        cls = classify_elements(f1())
        assert cls.red == frozenset({0, 1, 5})
        assert len(cls.irr) == 3

    def test_red_and_irr_partition(self):
        for l in (chain(4), m2(), f1(), f3(), cube()):
            cls = classify_elements(l)
            assert cls.red | cls.irr == frozenset(range(l.n))
            assert not cls.red & cls.irr
            assert cls.irr_star <= cls.irr

    def test_reducible_count_never_one(self):
        # oracle invariant at tiny scale: 0 reducibles means chain, never 1
        from itertools import combinations

        from latcount.oracle import all_lattices

        for n in range(1, 7):
            for lat in all_lattices(n).values():
                r = len(classify_elements(lat).red)
                assert r != 1
                total_order = all(
                    lat.le(x, y) or lat.le(y, x)
                    for x, y in combinations(range(n), 2)
                )
                assert (r == 0) == total_order

    def test_dual_preserves_red_set(self):
        for l in (m2(), f1(), f3(), f4()):
            d = as_lattice(dual(l.digraph))
            assert classify_elements(d).red == classify_elements(l).red


class TestNullity:
    def test_chain_is_tree(self):
        assert nullity(chain(6).digraph) == 0

    def test_diamond(self):
        assert nullity(m2().digraph) == 1

    def test_f4(self):
        # direct edge count: 10 covers, 8 vertices, connected
        assert len(f4().covers) == 10
        assert nullity(f4().digraph) == 3

    def test_lattice_cover_graph_is_connected(self):
        for l in (chain(4), m2(), f1(), f3(), f4(), cube()):
            assert nullity(l.digraph) == len(l.covers) - l.n + 1


class TestDismantlableAndCrown:
    def test_chain(self):
        assert is_dismantlable(chain(5))
        assert not contains_crown(chain(5))

    def test_f3(self):
        assert is_dismantlable(f3())
        assert not contains_crown(f1())

    def test_cube(self):
        c = cube()
        assert not is_dismantlable(c)
        assert contains_crown(c)


class TestMaximalChains:
    def test_chain_single(self):
        l = chain(4)
        assert maximal_chains_in_interval(l, 0, 3) == [(0, 1, 2, 3)]

    def test_diamond_two(self):
        assert len(maximal_chains_in_interval(m2(), 0, 3)) == 2

    def test_f1_upper_interval(self):
        chains = maximal_chains_in_interval(f1(), 1, 5)
        assert sorted(chains) == [(1, 2, 5), (1, 3, 5)]

    def test_incomparable_rejected(self):
        with pytest.raises(NotComparable):
            maximal_chains_in_interval(m2(), 1, 2)
