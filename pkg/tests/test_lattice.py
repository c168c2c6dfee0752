from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from plumbkit import PreconditionError
from plumbkit.graph import WeightedGraph, blow_down_leaf
from plumbkit.lattice import (
    IntersectionForm,
    canonical_class,
    conjugate,
    enumerate_spinc,
    formal_degree,
    homology_summary,
    intersection_form,
    is_characteristic,
    is_positive_definite,
)

from oracles import coset_key, laplace_det
from strategies import forests
from test_graph import chain


def form(*rows):
    return IntersectionForm(tuple(map(tuple, rows)))


def e8_form():
    g = WeightedGraph(
        tuple((v, 2) for v in "c a1 a2 b1 b2 b3 b4 d1".split()),
        (("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("c", "d1")),
    )
    return intersection_form(g)


def test_intersection_form_examples():
    assert intersection_form(WeightedGraph((("a", 2),))).matrix == ((2,),)
    assert intersection_form(chain(2, 2)).matrix == ((2, 1), (1, 2))
    assert intersection_form(WeightedGraph()).matrix == ()


def test_form_rejects_asymmetric():
    with pytest.raises(ValueError):
        form([1, 2], [0, 1])


def test_homology_examples():
    h = homology_summary(form([2]))
    assert (h.det, h.b1, h.torsion_orders, h.h1_order) == (2, 0, (2,), 2)
    h = homology_summary(form([2, 1], [1, 2]))
    assert (h.det, h.h1_order) == (3, 3)
    h = homology_summary(form([0]))
    assert (h.det, h.b1, h.h1_order) == (0, 1, None)
    h = homology_summary(intersection_form(WeightedGraph()))
    assert (h.det, h.b1, h.h1_order) == (1, 0, 1)


def test_definiteness_examples():
    assert is_positive_definite(form([2]))
    assert not is_positive_definite(form([0]))
    f = e8_form()
    assert is_positive_definite(f)
    assert f.det == laplace_det(f.rows()) == 1


@given(forests())
def test_valid_forests_are_positive_definite(g):
    f = intersection_form(g)
    assert is_positive_definite(f)
    assert f.det == laplace_det(f.rows()) if len(g) <= 6 else f.det > 0


@given(forests())
def test_torsion_product_is_h1(g):
    h = homology_summary(intersection_form(g))
    total = 1
    for t in h.torsion_orders:
        total *= t
    assert h.b1 == 0 and total == h.h1_order == abs(h.det)


@given(forests())
def test_blow_down_preserves_det(g):
    for v in g.leaves():
        if g.weight(v) == 1:
            assert abs(intersection_form(blow_down_leaf(g, v)).det) == abs(intersection_form(g).det)


def test_spinc_examples():
    assert [s.representative for s in enumerate_spinc(form([2]))] == [(0,), (2,)]
    assert [s.representative for s in enumerate_spinc(form([3]))] == [(1,), (3,), (5,)]
    assert [s.representative for s in enumerate_spinc(intersection_form(WeightedGraph()))] == [()]
    with pytest.raises(PreconditionError):
        enumerate_spinc(form([0]))


@given(forests(max_vertices=5, max_weight=5))
def test_spinc_classes_are_distinct_cosets(g):
    f = intersection_form(g)
    classes = enumerate_spinc(f)
    assert len(classes) == abs(f.det)
    assert all(is_characteristic(f, s.representative) for s in classes)
    keys = {coset_key(f.rows(), s.representative) for s in classes}
    assert len(keys) == len(classes)
    assert {conjugate(f, s) for s in classes} == set(classes)


def test_canonical_class_is_coset_invariant():
    f = form([2, 1, 0], [1, 3, 1], [0, 1, 2])
    k = (0, 1, 2)
    base = canonical_class(f, k)
    for x in product(range(-2, 3), repeat=3):
        shifted = [a + 2 * sum(f.matrix[i][j] * x[j] for j in range(3)) for i, a in enumerate(k)]
        assert canonical_class(f, shifted) == base


def test_non_characteristic_rejected():
    with pytest.raises(PreconditionError):
        canonical_class(form([2]), (1,))


def test_formal_degree():
    assert formal_degree(0, 24, -16) == 0
    assert formal_degree(0, 4, 0) == -2
    assert formal_degree(-4, 4, 0) == -3
    assert formal_degree(Fraction(1, 3), 0, 0) == Fraction(1, 12)
