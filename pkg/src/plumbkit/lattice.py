"""Intersection lattice of a plumbing and its Spin^c cosets.

Sign convention: the matrix carries the graph weights on its diagonal, so it
is positive definite for the graphs of interest; the negative-definite
plumbed four-manifold is represented by its negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import prod

from . import intlinalg as la
from .errors import PreconditionError
from .graph import WeightedGraph


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple[tuple[int, ...], ...]
    ids: tuple[str, ...] = ()

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if not self.ids:
            object.__setattr__(self, "ids", tuple(str(i) for i in range(len(m))))
        n = len(m)
        if any(len(row) != n for row in m) or len(self.ids) != n:
            raise ValueError("intersection form must be square and match its labels")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise ValueError("intersection form must be symmetric")

    def __len__(self) -> int:
        return len(self.matrix)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    @cached_property
    def det(self) -> int:
        return la.det(self.matrix)

    @cached_property
    def hermite_2m(self) -> la.Matrix:
        """Column Hermite form of ``2M``; the diagonal bounds the coset box."""
        if self.det == 0:
            raise PreconditionError("degenerate intersection form (det = 0)")
        return la.hermite_lower([[2 * x for x in row] for row in self.matrix])

    @cached_property
    def inverse(self) -> list[list[Fraction]]:
        if self.det == 0:
            raise PreconditionError("degenerate intersection form (det = 0)")
        return la.inverse_rational(self.matrix)

    @cached_property
    def adjugate(self) -> list[list[int]]:
        """``det(M) M^{-1}``, exact integers."""
        return [[int(x * self.det) for x in row] for row in self.inverse]

    @cached_property
    def ldl(self) -> tuple[list[list[Fraction]], list[Fraction]]:
        return la.ldl(self.matrix)

    def pair(self, x, y) -> int:
        return sum(xi * mij * yj for xi, row in zip(x, self.matrix) for mij, yj in zip(row, y))


def intersection_form(g: WeightedGraph) -> IntersectionForm:
    ix = g.index
    n = len(g)
    m = [[0] * n for _ in range(n)]
    for v, w in g.vertices:
        m[ix[v]][ix[v]] = w
    for u, v in g.edges:
        m[ix[u]][ix[v]] = m[ix[v]][ix[u]] = 1
    return IntersectionForm(tuple(map(tuple, m)), g.ids)


@dataclass(frozen=True)
class HomologySummary:
    """|H_1| data of the boundary three-manifold, read off from Smith form."""

    det: int
    b1: int
    torsion_orders: tuple[int, ...]

    @property
    def h1_order(self) -> int | None:
        return abs(self.det) if self.b1 == 0 else None


def homology_summary(f: IntersectionForm) -> HomologySummary:
    diag = la.smith_diagonal(f.matrix)
    b1 = sum(1 for d in diag if d == 0)
    torsion = tuple(d for d in diag if d > 1)
    det = f.det
    if b1 == 0:
        assert prod(torsion) == abs(det)
    return HomologySummary(det, b1, torsion)


def is_positive_definite(f: IntersectionForm) -> bool:
    """Sylvester's criterion with exact integer minors."""
    return all(m > 0 for m in la.leading_minors(f.matrix))


def is_characteristic(f: IntersectionForm, k) -> bool:
    return len(k) == len(f) and all((ki - f.matrix[i][i]) % 2 == 0 for i, ki in enumerate(k))


@dataclass(frozen=True, order=True)
class SpinCClass:
    """Coset ``K + 2M Z^n`` of characteristic vectors, held by its canonical
    representative (the one inside the Hermite box of ``2M``)."""

    representative: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.representative)) + ")"


def canonical_class(f: IntersectionForm, k) -> SpinCClass:
    if not is_characteristic(f, k):
        raise PreconditionError(f"{tuple(k)} is not characteristic")
    return SpinCClass(la.reduce_mod_lattice(k, f.hermite_2m))


def enumerate_spinc(f: IntersectionForm) -> list[SpinCClass]:
    """All ``|det M|`` classes, sorted by canonical representative.

    The Hermite box of ``2M`` is a fundamental domain, so its characteristic
    points are exactly one representative per class.
    """
    h = f.hermite_2m
    ranges = [
        range(f.matrix[i][i] % 2, h[i][i], 2)
        for i in range(len(f))
    ]
    out = [SpinCClass(tuple(k)) for k in product(*ranges)]
    assert len(out) == abs(f.det)
    return sorted(out)


def conjugate(f: IntersectionForm, s: SpinCClass) -> SpinCClass:
    return canonical_class(f, [-x for x in s.representative])


def formal_degree(c1_square, chi: int, sign: int) -> Fraction:
    """Grading shift ``(c1^2 - 2 chi - 3 sigma) / 4``."""
    return (Fraction(c1_square) - 2 * chi - 3 * sign) / 4
