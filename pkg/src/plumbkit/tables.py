"""Graded HF+ ranks of the Borromean surgeries M{p,q,r}, stored as data.

Only the four tabulated manifolds are covered; labels are accepted in any
coordinate order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import PreconditionError

Label = tuple[int, int, int]


def _even(k: Fraction) -> bool:
    return k.denominator == 1 and k.numerator % 2 == 0


def _half_mod_two(k: Fraction) -> bool:
    return (k - Fraction(1, 2)) % 2 == 0


def _half_integer(k: Fraction) -> bool:
    return k.denominator == 2


@dataclass(frozen=True)
class Clause:
    """One printed case: ``rank`` wherever ``test`` holds."""

    text: str
    rank: int
    test: Callable[[Fraction], bool]


@dataclass(frozen=True)
class GradedRankFunction:
    label: Label
    clauses: tuple[Clause, ...]
    u_action_surjective: bool

    def rank(self, k) -> int:
        k = Fraction(k)
        for c in self.clauses:
            if c.test(k):
                return c.rank
        raise AssertionError("clauses are exhaustive")


def _otherwise(k: Fraction) -> bool:
    return True


TABLES: dict[Label, GradedRankFunction] = {
    (1, 1, 1): GradedRankFunction(
        (1, 1, 1),
        (
            Clause("Z if k is even and k >= 2", 1, lambda k: _even(k) and k >= 2),
            Clause("0 otherwise", 0, _otherwise),
        ),
        True,
    ),
    (0, 1, 1): GradedRankFunction(
        (0, 1, 1),
        (
            Clause("Z if k = 1/2 (mod 2) and k >= 3/2", 1, lambda k: _half_mod_two(k) and k >= Fraction(3, 2)),
            Clause("0 otherwise", 0, _otherwise),
        ),
        True,
    ),
    (-1, 1, 1): GradedRankFunction(
        (-1, 1, 1),
        (
            Clause("Z+Z if k = 0", 2, lambda k: k == 0),
            Clause("Z if k is even and k > 0", 1, lambda k: _even(k) and k > 0),
            Clause("0 otherwise", 0, _otherwise),
        ),
        False,
    ),
    (-1, 0, 1): GradedRankFunction(
        (-1, 0, 1),
        (
            Clause("Z if k = 1/2 (mod Z) and k >= 1/2", 1, lambda k: _half_integer(k) and k >= Fraction(1, 2)),
            Clause("Z+Z if k = -1/2", 2, lambda k: k == Fraction(-1, 2)),
            Clause("0 otherwise", 0, _otherwise),
        ),
        False,
    ),
}


def normalize_label(label) -> Label:
    p, q, r = (int(x) for x in label)
    key = tuple(sorted((p, q, r)))
    if key not in TABLES:
        raise PreconditionError(f"M{{{p},{q},{r}}} is not tabulated")
    return key


def rank_function(label) -> GradedRankFunction:
    return TABLES[normalize_label(label)]


def hfp_rank(label, k) -> int:
    return rank_function(label).rank(k)


def orientation_reverse(p: int, q: int, r: int) -> Label:
    """``-M{p,q,r} = M{-p,-q,-r}``."""
    return (-p, -q, -r)


def parse_label(text: str) -> Label:
    parts = text.replace("{", "").replace("}", "").split(",")
    if len(parts) != 3:
        raise ValueError(f"label {text!r} must be three comma-separated integers")
    return tuple(int(x) for x in parts)  # type: ignore[return-value]
