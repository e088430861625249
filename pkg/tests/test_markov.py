"""Pattern-linear maps, covering graphs, and germ dynamics."""

from fractions import Fraction

import pytest

from overrot import (
    DivergentPatternError,
    Germ,
    Pattern,
    PatternError,
    fixed_point,
    flip,
    fundamental_loop,
    fundamental_loop_pprime,
    germ_map,
    markov_graph,
    p_linear,
    stefan,
)
from overrot.verify import enumerate_patterns


class TestPLinearMap:
    def test_interpolates_the_pattern(self):
        p = Pattern((2, 3, 1))
        f = p_linear(p)
        assert [f(i) for i in (1, 2, 3)] == [2, 3, 1]

    def test_evaluates_between_points(self):
        f = p_linear(Pattern((2, 3, 1)))
        assert f(Fraction(3, 2)) == Fraction(5, 2)
        assert f(Fraction(5, 2)) == 2

    def test_rejects_points_outside_the_domain(self):
        f = p_linear(Pattern((2, 1)))
        with pytest.raises(ValueError):
            f(0)
        with pytest.raises(ValueError):
            f(5)

    def test_pieces(self):
        f = p_linear(Pattern((2, 3, 1)))
        assert f.piece(1) == (1, 1)
        assert f.piece(2) == (-2, 7)
        with pytest.raises(ValueError):
            f.piece(3)

    def test_fixed_points(self):
        f = p_linear(Pattern((2, 3, 1)))
        assert f.fixed_points() == [Fraction(7, 3)]

    def test_fixed_point_of_degenerate_period_one(self):
        f = p_linear(Pattern((1,)))
        assert f(1) == 1
        assert f.fixed_points() == [Fraction(1)]


class TestMarkovGraph:
    def test_three_cycle(self):
        g = markov_graph(Pattern((2, 3, 1)))
        assert g.num_vertices == 2
        assert g.successors(1) == (2,)
        assert g.successors(2) == (1, 2)

    def test_period_two(self):
        g = markov_graph(Pattern((2, 1)))
        assert g.num_vertices == 1
        assert g.has_edge(1, 1)

    def test_rejects_period_one(self):
        with pytest.raises(PatternError):
            markov_graph(Pattern((1,)))

    def test_flip_reverses_vertex_labels(self):
        for images in ((2, 3, 1), (3, 5, 4, 2, 1), (4, 3, 5, 6, 1, 2)):
            p = Pattern(images)
            n = p.period
            g = markov_graph(p)
            h = markov_graph(flip(p))
            for i in range(1, n):
                for k in range(1, n):
                    assert g.has_edge(i, k) == h.has_edge(n - i, n - k)

    def test_every_vertex_has_a_successor(self):
        for n in range(2, 7):
            for p in enumerate_patterns(n):
                g = markov_graph(p)
                for i in range(1, g.num_vertices + 1):
                    assert g.successors(i)


class TestFixedPoint:
    def test_examples(self):
        assert fixed_point(Pattern((2, 3, 1))) == (Fraction(7, 3), 2)
        assert fixed_point(Pattern((2, 1))) == (Fraction(3, 2), 1)
        assert fixed_point(stefan(5)) == (Fraction(10, 3), 3)
        assert fixed_point(stefan(7)) == (Fraction(13, 3), 4)

    def test_divergent_pattern_has_no_distinguished_fixed_point(self):
        with pytest.raises(DivergentPatternError):
            fixed_point(Pattern((3, 1, 4, 2)))

    def test_fixed_point_is_interior_and_fixed(self):
        for n in range(2, 7):
            for p in enumerate_patterns(n):
                try:
                    a, i = fixed_point(p)
                except DivergentPatternError:
                    continue
                assert i < a < i + 1
                assert p_linear(p)(a) == a


class TestGerms:
    def test_germ_map_follows_orientation(self):
        p = Pattern((2, 3, 1))
        assert germ_map(p, Germ(1, "R")) == Germ(2, "R")
        assert germ_map(p, Germ(2, "R")) == Germ(3, "L")
        assert germ_map(p, Germ(3, "L")) == Germ(1, "R")

    def test_rejects_out_of_range(self):
        p = Pattern((2, 3, 1))
        with pytest.raises(ValueError):
            germ_map(p, Germ(4, "L"))
        with pytest.raises(ValueError):
            germ_map(p, Germ(1, "x"))

    def test_fundamental_loop_of_three_cycle(self):
        germs, intervals = fundamental_loop(Pattern((2, 3, 1)))
        assert germs == (Germ(1, "R"), Germ(2, "R"), Germ(3, "L"))
        assert intervals == (1, 2, 2)

    def test_fundamental_loop_closes_and_spans(self):
        for n in range(2, 7):
            for p in enumerate_patterns(n):
                germs, intervals = fundamental_loop(p)
                assert len(germs) == n
                assert germs[0] == Germ(1, "R")
                assert germ_map(p, germs[-1]) == Germ(1, "R")
                assert 1 in intervals and (n - 1) in intervals


class TestRefinedLoop:
    def test_examples(self):
        assert fundamental_loop_pprime(Pattern((2, 3, 1))) == ("J1", "Il", "Ir")
        assert fundamental_loop_pprime(Pattern((2, 1))) == ("Il", "Ir")
        assert fundamental_loop_pprime(stefan(5)) == ("J1", "Il", "Ir", "J2", "J4")

    def test_divergent_is_rejected(self):
        with pytest.raises(DivergentPatternError):
            fundamental_loop_pprime(Pattern((3, 1, 4, 2)))

    def test_germs_pointing_at_the_fixed_point_stay_pointed_at_it(self):
        # for spiral patterns the germ toward the fixed point maps to a germ
        # toward the fixed point: onesided orbits spiral around it
        for n in (3, 5, 7):
            p = stefan(n)
            a, _ = fixed_point(p)
            for point in range(1, n + 1):
                for side in ("L", "R"):
                    toward = (side == "R") == (point < a)
                    if not toward:
                        continue
                    image = germ_map(p, Germ(point, side))
                    assert (image.side == "R") == (image.point < a)
