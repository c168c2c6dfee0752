"""Rank of HF-hat for plumbings on forests with m(v) >= d(v).

The rank is computed by the leaf recursion of the surgery exact triangle,
never by taking a determinant; the determinant is only used afterwards as a
consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import PreconditionError
from .graph import WeightedGraph, blow_down_leaf, canonical_form, components, validate
from .lattice import homology_summary, intersection_form

LeafChooser = Callable[[Sequence[str]], str]


@dataclass(frozen=True)
class RankResult:
    rank: int | None  # None unless b1 == 0
    qhs_rank: int  # product over the components with a strict vertex
    b1: int
    hfp_red_vanishes: bool = True
    free: bool = True


def rank_recursion_triple(g1: WeightedGraph, leaf: str) -> tuple[WeightedGraph, WeightedGraph]:
    """``(g2, g3)``: ``g1`` with the leaf deleted, and with its weight raised by one."""
    if leaf not in g1.weights or g1.degree(leaf) != 1:
        raise PreconditionError(f"{leaf!r} is not a leaf")
    return g1.without(leaf), g1.with_weight(leaf, g1.weight(leaf) + 1)


def _smallest(ids: Sequence[str]) -> str:
    return min(ids)


def _connected_rank(g: WeightedGraph, memo: dict, choose: LeafChooser) -> int:
    key = canonical_form(g)
    if key in memo:
        return memo[key]
    if len(g) == 0:
        r = 1
    elif len(g) == 1:
        # lens space L(m, 1); m >= 1 because the vertex is strict
        r = g.vertices[0][1]
    else:
        leaves = g.leaves()
        ones = [v for v in leaves if g.weight(v) == 1]
        if ones:
            r = _connected_rank(blow_down_leaf(g, choose(ones)), memo, choose)
        else:
            # every leaf has weight >= 2, so lowering one of them leaves
            # another strict leaf in place
            v = choose(leaves)
            lowered = g.with_weight(v, g.weight(v) - 1)
            r = _connected_rank(lowered, memo, choose) + _connected_rank(g.without(v), memo, choose)
    memo[key] = r
    return r


def hfhat_rank(g: WeightedGraph, choose: LeafChooser = _smallest, check: bool = True) -> RankResult:
    """HF-hat rank of the plumbed boundary of ``g``.

    Components where every vertex has ``m(v) == d(v)`` blow down to
    S^2 x S^1 and contribute to ``b1`` only. ``choose`` picks which leaf
    the recursion reduces next; the answer does not depend on it.
    """
    rep = validate(g)
    if not rep.is_forest:
        raise PreconditionError("graph is not a forest")
    if rep.violations:
        raise PreconditionError("m(v) < d(v) at " + ", ".join(rep.violations))
    memo: dict = {}
    rank, b1 = 1, 0
    for comp in components(g):
        if all(comp.slack(v) == 0 for v in comp.ids):
            b1 += 1
            r = None
        else:
            r = _connected_rank(comp, memo, choose)
            rank *= r
        if check:
            hs = homology_summary(intersection_form(comp))
            if (r is None) != (hs.b1 == 1) or hs.b1 > 1 or (r is not None and r != abs(hs.det)):
                raise RuntimeError(f"rank recursion disagrees with homology on {comp}: rank={r}, {hs}")
    return RankResult(rank if b1 == 0 else None, rank, b1)
