"""Tests for diagrams, the columnwise order, and lower-set enumeration.

Oracle for the lower sets: filter all size-k subsets through subset_leq,
independently of the constrained search the implementation uses.
"""

import random
from itertools import combinations, product

import pytest

from keypoly.diagram import (
    Diagram,
    diagram_leq,
    enumerate_lower_diagrams,
    lower_subsets,
    monomial_of_diagram,
    skyline,
    subset_leq,
)
from keypoly.polynomial import exponent_vectors, key_polynomial


def lower_subsets_oracle(s, n):
    return [r for r in combinations(range(1, n + 1), len(tuple(s))) if subset_leq(r, s)]


def random_diagram(rng, n):
    return Diagram.make(n, [[r for r in range(1, n + 1) if rng.random() < 0.5] for _ in range(n)])


class TestDiagram:
    def test_make_sorts_and_dedupes(self):
        d = Diagram.make(3, [[3, 1, 1], [], [2]])
        assert d.columns == ((1, 3), (), (2,))

    def test_rejects_out_of_range_rows(self):
        with pytest.raises(ValueError):
            Diagram.make(2, [[3], []])

    def test_rejects_wrong_column_count(self):
        with pytest.raises(ValueError):
            Diagram.make(2, [[1]])

    def test_json_round_trip(self):
        d = skyline((1, 2, 0, 1))
        assert d.to_json_dict() == {"n": 4, "columns": [[1, 2, 4], [2], [], []]}
        assert Diagram.from_json_dict(d.to_json_dict()) == d


class TestSkyline:
    def test_worked_example(self):
        assert skyline((1, 2, 0, 1)).columns == ((1, 2, 4), (2,), (), ())

    def test_empty(self):
        assert skyline((0, 0, 0)).columns == ((), (), ())

    def test_left_justified(self):
        d = skyline((3, 1, 2))
        assert d.columns == ((1, 2, 3), (1, 3), (1,))
        assert d.box_count() == 6

    def test_part_exceeding_grid(self):
        with pytest.raises(ValueError):
            skyline((4, 0, 0))


class TestSubsetLeq:
    def test_examples(self):
        assert subset_leq({1, 3}, {2, 3})
        assert not subset_leq({1, 2}, {1})
        assert not subset_leq({2, 4}, {1, 4})

    def test_reflexive(self):
        assert subset_leq({2, 4}, {2, 4})


class TestDiagramLeq:
    def test_examples(self):
        d = skyline((1, 2, 0, 1))
        assert diagram_leq(d, d)
        c1 = Diagram.make(2, [[1], [1]])
        d1 = Diagram.make(2, [[2], [1]])
        assert diagram_leq(c1, d1)
        c2 = Diagram.make(2, [[2], [1]])
        d2 = Diagram.make(2, [[1], [2]])
        assert not diagram_leq(c2, d2)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            diagram_leq(Diagram.make(2, [[], []]), Diagram.make(3, [[], [], []]))

    def test_partial_order_on_random_diagrams(self):
        rng = random.Random(99)
        pool = [random_diagram(rng, 4) for _ in range(40)]
        for a in pool:
            assert diagram_leq(a, a)
        for a in pool:
            for b in pool:
                if diagram_leq(a, b) and diagram_leq(b, a):
                    assert a == b
                for c in pool:
                    if diagram_leq(a, b) and diagram_leq(b, c):
                        assert diagram_leq(a, c)


class TestLowerSets:
    def test_lower_subsets_match_filter_oracle(self):
        for n in range(1, 6):
            subsets = [()] + [s for k in range(1, n + 1) for s in combinations(range(1, n + 1), k)]
            for s in subsets:
                assert lower_subsets(s, n) == lower_subsets_oracle(s, n)

    def test_lower_subsets_of_124(self):
        assert lower_subsets((1, 2, 4), 4) == [(1, 2, 3), (1, 2, 4)]

    def test_lower_diagram_count_for_1201(self):
        # per-column lower sets have sizes 2, 2, 1, 1
        d = skyline((1, 2, 0, 1))
        lower = list(enumerate_lower_diagrams(d))
        assert len(lower) == 4

    def test_single_box_column(self):
        d = skyline((0, 1))
        cs = {c.columns for c in enumerate_lower_diagrams(d)}
        assert cs == {((1,), ()), ((2,), ())}

    def test_all_empty_diagram(self):
        d = Diagram.make(3, [[], [], []])
        assert list(enumerate_lower_diagrams(d)) == [d]

    def test_no_duplicates_and_all_below(self):
        rng = random.Random(7)
        for _ in range(20):
            d = random_diagram(rng, 4)
            lower = list(enumerate_lower_diagrams(d))
            assert len(lower) == len(set(lower))
            assert all(diagram_leq(c, d) for c in lower)

    def test_matches_global_filter_oracle(self):
        # brute force: all diagrams with matching column sizes, filtered
        rng = random.Random(8)
        for _ in range(10):
            d = random_diagram(rng, 3)
            everything = [
                Diagram(3, cols)
                for cols in product(
                    *[list(combinations(range(1, 4), len(col))) for col in d.columns]
                )
            ]
            expected = {c for c in everything if diagram_leq(c, d)}
            assert set(enumerate_lower_diagrams(d)) == expected


class TestMonomialOfDiagram:
    def test_examples(self):
        assert monomial_of_diagram(skyline((1, 2, 0, 1))) == (1, 2, 0, 1)
        assert monomial_of_diagram(Diagram.make(3, [[], [], []])) == (0, 0, 0)
        assert monomial_of_diagram(Diagram.make(3, [[1], [1], [1]])) == (3, 0, 0)

    def test_skyline_weight_is_alpha(self):
        for n in range(1, 5):
            for alpha in product(range(n + 1), repeat=n):
                assert monomial_of_diagram(skyline(alpha)) == alpha


class TestLowerDiagramMonomials:
    def test_match_key_exponents_exhaustively(self):
        for n in range(1, 5):
            for alpha in product(range(min(n, 4) + 1), repeat=n):
                got = {monomial_of_diagram(c) for c in enumerate_lower_diagrams(skyline(alpha))}
                assert got == exponent_vectors(key_polynomial(alpha)), alpha
