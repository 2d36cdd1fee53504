from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gauss_words, realizable_words, symmetry_images
from oracles import brute_count
from subchord.census import c4_configurations
from subchord.pattern import (
    CROSS,
    H,
    HH,
    III,
    NAMED,
    TRIPLE,
    Pattern,
    PatternCounts,
    count_named,
    count_pattern,
    count_small,
    graph_counts,
)
from subchord.word import GaussWord, connected_sum, word

TREFOIL = word("1 2 3 1 2 3")
FIGURE_EIGHT = word("1 2 3 4 2 1 4 3")


def test_builtins_are_canonical():
    assert CROSS.letters == (1, 2, 1, 2)
    assert TRIPLE.letters == (1, 2, 3, 1, 2, 3)
    assert [p.size for p in NAMED] == [2, 3, 3, 4, 4]
    assert Pattern.of("x", "B A B A") == Pattern("x", CROSS.letters)


class TestCountPattern:
    def test_examples(self):
        assert count_pattern(TREFOIL, CROSS) == 3
        assert count_pattern(FIGURE_EIGHT, H) == 4
        for p in NAMED:
            assert count_pattern(GaussWord(()), p) == 0

    @settings(max_examples=80)
    @given(gauss_words(6))
    def test_matches_independent_matcher(self, w):
        for p in NAMED:
            assert count_pattern(w, p) == brute_count(w.letters, p.letters)

    @given(st.data())
    def test_symmetry_invariant(self, data):
        w = data.draw(gauss_words(6))
        image = data.draw(symmetry_images(w))
        assert count_named(image) == count_named(w)

    def test_arbitrary_pattern(self):
        nested = Pattern.of("nested", "A B B A")
        assert count_pattern(word("1 2 2 1"), nested) == 1
        assert count_pattern(TREFOIL, nested) == 0


class TestNamed:
    def test_examples(self):
        assert count_named(TREFOIL) == PatternCounts(3, 1, 0, 0, 0)
        assert count_named(word("1 2 3 4 5 1 2 3 4 5")) == PatternCounts(10, 10, 0, 0, 0)
        assert count_named(FIGURE_EIGHT) == PatternCounts(4, 0, 4, 0, 1)

    def test_small_counts_agree(self):
        c = count_named(FIGURE_EIGHT)
        s = count_small(FIGURE_EIGHT)
        assert (s.cross, s.triple, s.h) == (c.cross, c.triple, c.h)
        assert (s.iii, s.hh) == (0, 0)

    @given(gauss_words(7))
    def test_bounds(self, w):
        c = count_named(w)
        n = w.n
        assert c.cross <= comb(n, 2)
        assert c.triple <= comb(n, 3) and c.h <= comb(n, 3)
        assert c.iii <= comb(n, 4) and c.hh <= comb(n, 4)
        assert c.triple <= c.cross * max(n - 2, 0)

    def test_serialization(self):
        c = count_named(FIGURE_EIGHT)
        assert c.as_dict() == {"cross": 4, "triple": 0, "h": 4, "iii": 0, "hh": 1}
        assert PatternCounts.from_dict(c.as_dict()) == c
        assert c + c - c == c


class TestGraphCounts:
    def test_examples(self):
        assert graph_counts(TREFOIL) == PatternCounts(3, 1, 0, 0, 0)
        assert graph_counts(word("1 2 2 1")) == PatternCounts()
        assert graph_counts(FIGURE_EIGHT) == PatternCounts(4, 0, 4, 0, 1)

    def test_four_chord_shapes_unique(self):
        groups = c4_configurations()
        assert groups["C4"] == {HH.letters}
        assert groups["K13"] == {III.letters}

    @given(gauss_words(7))
    def test_equal_to_configuration_counts(self, w):
        assert graph_counts(w) == count_named(w)


@settings(max_examples=60)
@given(realizable_words(6), realizable_words(6))
def test_additive_on_connected_sums(a, b):
    assert count_named(connected_sum(a, b)) == count_named(a) + count_named(b)


@pytest.mark.parametrize("i", range(1, 6))
def test_torus_counts_by_brute_force(i):
    m = 2 * i + 1
    letters = tuple(range(1, m + 1)) * 2
    assert brute_count(letters, CROSS.letters) == comb(m, 2)
    assert brute_count(letters, TRIPLE.letters) == comb(m, 3)
