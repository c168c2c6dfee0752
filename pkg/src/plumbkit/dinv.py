"""Correction terms of plumbed rational homology spheres.

For the negative-definite plumbing ``-W(G, m)`` (form ``-M``) with boundary
``-Y(G, m)``, the correction term of a Spin^c structure is the maximum of
``(K^2 + |G|) / 4`` over its coset of characteristic vectors, where
``K^2 = -K^T M^{-1} K``. Writing ``K = K0 + 2 M x`` turns this into the
integer minimisation of ``x^T M x + K0^T x``, solved here by exact
branch-and-bound (Schnorr-Euchner enumeration on the rational LDL^T
factorisation of ``M``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import intlinalg as la
from .errors import PreconditionError, SearchBudgetExceeded
from .graph import WeightedGraph
from .lattice import (
    IntersectionForm,
    SpinCClass,
    conjugate,
    enumerate_spinc,
    intersection_form,
    is_characteristic,
    is_positive_definite,
)

DEFAULT_BUDGET = 1_000_000


def char_square(f: IntersectionForm, k) -> Fraction:
    """``K^2`` in the negative-definite form ``-M``."""
    if f.det == 0:
        raise PreconditionError("degenerate intersection form (det = 0)")
    if not is_characteristic(f, k):
        raise PreconditionError(f"{tuple(k)} is not characteristic")
    ak = la.matvec(f.adjugate, list(k))
    return Fraction(-sum(a * b for a, b in zip(k, ak)), f.det)


def _require_definite(f: IntersectionForm) -> None:
    if f.det == 0:
        raise PreconditionError("degenerate intersection form (det = 0)")
    if not is_positive_definite(f):
        raise PreconditionError("intersection form is not definite")


def _scaled_ldl(f: IntersectionForm):
    """``M = L D L^T`` cleared of denominators: ``(S * L, S, lcm(D) * D, lcm(D))``."""
    cached = f.__dict__.get("_scaled_ldl")
    if cached is None:
        mu, d = f.ldl
        n = len(f)
        s = lcm(1, *(mu[i][k].denominator for k in range(n) for i in range(k + 1, n)))
        ds = lcm(*(q.denominator for q in d))
        mu_int = [[int(mu[i][k] * s) for k in range(n)] for i in range(n)]
        cached = (mu_int, s, [int(q * ds) for q in d], ds)
        f.__dict__["_scaled_ldl"] = cached
    return cached


def closest_point(f: IntersectionForm, target, budget: int = DEFAULT_BUDGET):
    """Integer ``x`` minimising ``(x - t)^T M (x - t)``; returns ``(x, value)``.

    Depth-first enumeration from the last coordinate down, visiting each
    coordinate's candidates outward from its conditional centre and pruning
    against the best value found so far. Everything is cleared to common
    denominators up front so the search itself runs on integers.
    """
    n = len(f)
    if n == 0:
        return [], Fraction(0)
    mu, s, w, ds = _scaled_ldl(f)
    target = [Fraction(t) for t in target]
    q = lcm(*(t.denominator for t in target))
    tn = [int(t * q) for t in target]
    scale = q * s
    # scaled conditional centre: c_k = a_k - sum_{i>k} q mu[i][k] x_i
    a = [s * tn[k] + sum(mu[i][k] * tn[i] for i in range(k + 1, n)) for k in range(n)]
    qmu = [[q * v for v in row] for row in mu]
    # value = sum_k w[k] * (scale * x_k - c_k)^2 / (ds * scale^2)
    best_x: list[int] | None = None
    best: int | None = None
    nodes = 0
    x = [0] * n

    def visit(k: int, partial: int) -> None:
        nonlocal best, best_x, nodes
        if k < 0:
            if best is None or partial < best:
                best, best_x = partial, list(x)
            return
        c = a[k] - sum(qmu[i][k] * x[i] for i in range(k + 1, n))
        lo = c // scale
        if 2 * (c - lo * scale) > scale:
            sides = ((lo + 1, 1), (lo, -1))
        else:
            sides = ((lo, -1), (lo + 1, 1))
        wk = w[k]
        for start, step in sides:
            xi = start
            while True:
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(budget)
                val = partial + wk * (scale * xi - c) ** 2
                if best is not None and val >= best:
                    break
                x[k] = xi
                visit(k - 1, val)
                xi += step
        x[k] = 0

    visit(n - 1, 0)
    return best_x, Fraction(best, ds * scale * scale)


def maximizer(f: IntersectionForm, s: SpinCClass, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """A characteristic vector in the class of ``s`` with the largest ``K^2``."""
    _require_definite(f)
    k0 = list(s.representative)
    if not is_characteristic(f, k0):
        raise PreconditionError(f"{tuple(k0)} is not characteristic")
    t = [Fraction(-v, 2 * f.det) for v in la.matvec(f.adjugate, k0)]
    x, _ = closest_point(f, t, budget)
    mx = la.matvec(f.matrix, x)
    return tuple(a + 2 * b for a, b in zip(k0, mx))


def d_invariant(f: IntersectionForm, s: SpinCClass, budget: int = DEFAULT_BUDGET) -> Fraction:
    k = maximizer(f, s, budget)
    return (char_square(f, k) + len(f)) / 4


@dataclass(frozen=True)
class DInvariantTable:
    entries: dict[SpinCClass, Fraction]
    graph_size: int
    orientation: str = "minus-plumbing"

    def __len__(self) -> int:
        return len(self.entries)

    def values(self) -> list[Fraction]:
        return [self.entries[s] for s in sorted(self.entries)]

    def reversed(self) -> "DInvariantTable":
        """Values for the opposite orientation of the boundary."""
        flip = "plumbing" if self.orientation == "minus-plumbing" else "minus-plumbing"
        return DInvariantTable({s: -v for s, v in self.entries.items()}, self.graph_size, flip)

    def lines(self) -> list[str]:
        return [f"spinc={s} d={self.entries[s]}" for s in sorted(self.entries)]


def d_table(g: WeightedGraph | IntersectionForm, budget: int = DEFAULT_BUDGET) -> DInvariantTable:
    f = g if isinstance(g, IntersectionForm) else intersection_form(g)
    _require_definite(f)
    entries = {s: d_invariant(f, s, budget) for s in enumerate_spinc(f)}
    for s, v in entries.items():
        assert entries[conjugate(f, s)] == v
    return DInvariantTable(entries, len(f))
