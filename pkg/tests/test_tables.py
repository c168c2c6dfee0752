from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plumbkit import PreconditionError
from plumbkit.tables import TABLES, hfp_rank, orientation_reverse, parse_label, rank_function

gradings = st.integers(-20, 20).map(lambda n: F(n, 2))


def test_examples():
    assert hfp_rank((1, 1, 1), 2) == 1
    assert hfp_rank((-1, 1, 1), 0) == 2
    assert hfp_rank((1, 1, 1), 1) == 0


def test_permuted_labels():
    assert hfp_rank((1, 0, 1), F(5, 2)) == 1
    assert hfp_rank((1, -1, 1), 0) == 2
    assert hfp_rank((0, 1, -1), F(-1, 2)) == 2
    with pytest.raises(PreconditionError):
        hfp_rank((-1, -1, -1), 0)


@pytest.mark.parametrize(
    "label, k, rank",
    [
        ((1, 1, 1), 2, 1), ((1, 1, 1), 8, 1), ((1, 1, 1), 0, 0), ((1, 1, 1), 3, 0), ((1, 1, 1), F(5, 2), 0),
        ((0, 1, 1), F(5, 2), 1), ((0, 1, 1), F(9, 2), 1), ((0, 1, 1), F(-3, 2), 0), ((0, 1, 1), F(1, 2), 0),
        # 3/2 meets the bound but not the residue
        ((0, 1, 1), F(3, 2), 0), ((0, 1, 1), F(7, 2), 0),
        ((0, 1, 1), 2, 0),
        ((-1, 1, 1), 0, 2), ((-1, 1, 1), 2, 1), ((-1, 1, 1), 6, 1), ((-1, 1, 1), -2, 0), ((-1, 1, 1), 1, 0),
        ((-1, 0, 1), F(-1, 2), 2), ((-1, 0, 1), F(1, 2), 1), ((-1, 0, 1), F(3, 2), 1),
        ((-1, 0, 1), F(-3, 2), 0), ((-1, 0, 1), 1, 0),
    ],
)
def test_printed_cases(label, k, rank):
    assert hfp_rank(label, k) == rank


def test_clause_count_and_u_action():
    assert sum(len(t.clauses) for t in TABLES.values()) == 10
    assert [TABLES[k].u_action_surjective for k in [(1, 1, 1), (0, 1, 1), (-1, 1, 1), (-1, 0, 1)]] == [
        True, True, False, False
    ]


@given(st.sampled_from(sorted(TABLES)), gradings)
def test_period_two_above_threshold(label, k):
    if k >= 1:
        assert hfp_rank(label, k) == hfp_rank(label, k + 2)


@given(st.sampled_from(sorted(TABLES)), gradings, gradings)
def test_support_in_one_residue_class(label, k1, k2):
    if hfp_rank(label, k1) and hfp_rank(label, k2):
        assert (k1 - k2).denominator == 1


@given(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_orientation_reverse_involution(label):
    assert orientation_reverse(*orientation_reverse(*label)) == label


def test_orientation_reverse_examples():
    assert orientation_reverse(1, 1, 1) == (-1, -1, -1)
    assert orientation_reverse(0, 1, 1) == (0, -1, -1)


def test_parse_label():
    assert parse_label("1,1,1") == (1, 1, 1)
    assert parse_label("{-1,0,1}") == (-1, 0, 1)
    with pytest.raises(ValueError):
        parse_label("1,1")
    assert rank_function("0,1,1".split(",")).label == (0, 1, 1)
