import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from plumbkit import PreconditionError, SearchBudgetExceeded
from plumbkit.dinv import char_square, closest_point, d_invariant, d_table, maximizer
from plumbkit.graph import WeightedGraph, blow_down_leaf
from plumbkit.lattice import IntersectionForm, SpinCClass, enumerate_spinc, intersection_form

from oracles import cofactor_inverse, coset_key, exhaustive_dtable
from strategies import forests
from test_graph import chain
from test_lattice import e8_form, form


def values(g):
    return sorted(d_table(g).values())


def test_char_square_examples():
    assert char_square(form([2]), (0,)) == 0
    assert char_square(form([2]), (2,)) == -2
    assert char_square(form([2, 1], [1, 2]), (2, 2)) == Fraction(-8, 3)
    with pytest.raises(PreconditionError):
        char_square(form([2]), (1,))
    with pytest.raises(PreconditionError):
        char_square(form([0]), (0,))


@given(forests(max_vertices=5, max_weight=6))
def test_char_square_matches_cofactor_inverse(g):
    f = intersection_form(g)
    inv = cofactor_inverse(f.rows())
    k = [w % 2 + 2 * ((i * 7) % 3 - 1) for i, w in enumerate(g.weights.values())]
    expected = -sum(k[i] * inv[i][j] * k[j] for i in range(len(k)) for j in range(len(k)))
    assert char_square(f, k) == expected


def test_d_examples():
    assert d_table(WeightedGraph()).values() == [0]
    assert d_table(WeightedGraph((("a", 1),))).values() == [0]
    t = d_table(WeightedGraph((("a", 2),)))
    assert t.entries == {SpinCClass((0,)): Fraction(1, 4), SpinCClass((2,)): Fraction(-1, 4)}
    assert d_table(WeightedGraph((("a", 3),))).values() == [Fraction(1, 6), Fraction(-1, 2), Fraction(1, 6)]
    assert values(chain(2, 2)) == [Fraction(-1, 6), Fraction(-1, 6), Fraction(1, 2)]


def test_e8_is_accepted_when_definite():
    t = d_table(e8_form())
    assert t.values() == [2]


def test_indefinite_and_degenerate_rejected():
    with pytest.raises(PreconditionError):
        d_table(form([-1, 1], [1, 2]))
    with pytest.raises(PreconditionError):
        d_table(form([0]))


def test_budget_is_explicit():
    g = chain(7, 2, 2, 2, 2, 9)
    with pytest.raises(SearchBudgetExceeded) as exc:
        d_table(g, budget=3)
    assert exc.value.budget == 3


def test_reversed_orientation_negates():
    t = d_table(chain(2, 3))
    r = t.reversed()
    assert r.orientation == "plumbing"
    assert r.values() == [-v for v in t.values()]
    assert r.reversed() == t


def test_lines_format():
    assert d_table(WeightedGraph((("a", 2),))).lines() == ["spinc=(0) d=1/4", "spinc=(2) d=-1/4"]


@given(forests(max_vertices=4, max_weight=6))
@settings(max_examples=60, deadline=None)
def test_matches_exhaustive_oracle(g):
    f = intersection_form(g)
    mine = {coset_key(f.rows(), s.representative): v for s, v in d_table(f).entries.items()}
    assert mine == exhaustive_dtable(f.rows())


@given(forests(max_vertices=7, max_weight=7))
@settings(max_examples=40, deadline=None)
def test_coset_representative_independence(g):
    f = intersection_form(g)
    rng = random.Random(len(g))
    n = len(f)
    for s in enumerate_spinc(f)[:4]:
        d0 = d_invariant(f, s)
        x = [rng.randint(-5, 5) for _ in range(n)]
        k = [a + 2 * sum(f.matrix[i][j] * x[j] for j in range(n)) for i, a in enumerate(s.representative)]
        best = maximizer(f, s)
        assert (char_square(f, best) + n) / 4 == d0
        # the maximiser from a shifted representative has the same square
        shifted = maximizer(f, SpinCClass(tuple(k)))
        assert char_square(f, shifted) == char_square(f, best)


@given(forests(max_vertices=6, max_weight=6))
@settings(max_examples=40, deadline=None)
def test_blow_down_preserves_values(g):
    for v in g.leaves():
        if g.weight(v) == 1:
            assert values(blow_down_leaf(g, v)) == values(g)


@given(forests(max_vertices=6, max_weight=7))
@settings(max_examples=40, deadline=None)
def test_denominators_divide_det(g):
    f = intersection_form(g)
    for v in d_table(f).values():
        assert (4 * v - len(f)).denominator in {q for q in range(1, f.det + 1) if f.det % q == 0}


def test_closest_point_simple_lattice():
    f = IntersectionForm(((1, 0), (0, 1)))
    x, val = closest_point(f, [Fraction(2, 5), Fraction(-7, 5)])
    assert x == [0, -1] and val == Fraction(4, 25) + Fraction(4, 25)
