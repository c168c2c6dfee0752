"""Reference computations that share no code path with the library.

They are slow and only meant for small inputs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt

import numpy as np

from plumbkit.graph import WeightedGraph


def laplace_det(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * laplace_det(minor)
    return total


def determinantal_invariants(m) -> list[int]:
    """Invariant factors via gcds of k x k minors (nonzero ones only)."""
    rows, cols = len(m), len(m[0]) if m else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, laplace_det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


def adjugate(m) -> list[list[int]]:
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * laplace_det(minor)
    return adj


def cofactor_inverse(m) -> list[list[Fraction]]:
    d = laplace_det(m)
    return [[Fraction(x, d) for x in row] for row in adjugate(m)]


def box_bound(m) -> int:
    """Every coset's optimum lies in ``|K_v| <= B``.

    Some coset element has ``y = M^{-1} K`` in ``[-1, 1]^n``, so the optimum
    has ``K^T M^{-1} K <= sum |M_ij|``; and ``K^T M^{-1} K >= |K|_inf^2 / G``
    with ``G`` the largest absolute row sum (a bound on the top eigenvalue).
    """
    s = sum(abs(x) for row in m for x in row)
    g = max(sum(abs(x) for x in row) for row in m)
    return isqrt(s * g)


def exhaustive_dtable(m) -> dict[tuple[int, ...], Fraction]:
    """Max of ``(K^2 + n)/4`` per coset, by scanning every characteristic
    vector in the a priori box.

    Keys identify the coset by ``adj(M) K mod 2 det``, which vanishes exactly
    on ``2 M Z^n``.
    """
    n = len(m)
    if n == 0:
        return {(): Fraction(0)}
    det = laplace_det(m)
    assert det > 0
    adj = np.array(adjugate(m), dtype=np.int64)
    b = box_bound(m)
    ax = np.arange(-b - 1, b + 2)
    axes = [ax[(ax - m[i][i]) % 2 == 0] for i in range(n)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    ak = grid @ adj.T
    q = np.einsum("ij,ij->i", grid, ak)  # det * K^T M^{-1} K
    keys = ak % (2 * det)
    order = np.lexsort((q, *keys.T[::-1]))
    keys, q = keys[order], q[order]
    first = np.ones(len(q), dtype=bool)
    first[1:] = np.any(keys[1:] != keys[:-1], axis=1)
    best = dict(zip(map(tuple, keys[first].tolist()), q[first].tolist()))
    assert len(best) == det, "every coset must meet the box"
    return {k: (Fraction(-v, det) + n) / 4 for k, v in best.items()}


def coset_key(m, k) -> tuple[int, ...]:
    det = laplace_det(m)
    adj = adjugate(m)
    return tuple(sum(a * x for a, x in zip(row, k)) % (2 * det) for row in adj)


def random_forest(rng: random.Random, max_vertices: int = 12, max_weight: int = 10, strict: bool = True) -> WeightedGraph:
    """Random forest with ``d(v) <= m(v) <= max_weight``; with ``strict``
    every component has a vertex where the inequality is strict."""
    while True:
        n = rng.randint(1, max_vertices)
        parent: list[int | None] = [None]
        for i in range(1, n):
            parent.append(None if rng.random() < 0.15 else rng.randrange(i))
        edges = [(str(p), str(i)) for i, p in enumerate(parent) if p is not None]
        deg = [0] * n
        for u, v in edges:
            deg[int(u)] += 1
            deg[int(v)] += 1
        if max(deg) > max_weight:
            continue
        weights = [rng.randint(d, min(max_weight, d + rng.choice([0, 0, 1, 2, 5]))) for d in deg]
        g = WeightedGraph(tuple((str(i), w) for i, w in enumerate(weights)), tuple(edges))
        if strict and not _every_component_strict(g):
            continue
        order = list(range(n))
        rng.shuffle(order)
        # shuffle declaration order so nothing depends on it
        return WeightedGraph(tuple(g.vertices[i] for i in order), tuple(rng.sample(edges, len(edges))))


def _every_component_strict(g: WeightedGraph) -> bool:
    from plumbkit.graph import components

    return all(any(c.slack(v) > 0 for v in c.ids) for c in components(g))


FOREST_SHAPES: list[tuple[int, list[tuple[int, int]]]] = [
    (1, []),
    (2, []), (2, [(0, 1)]),
    (3, []), (3, [(0, 1)]), (3, [(0, 1), (1, 2)]),
    (4, []), (4, [(0, 1)]), (4, [(0, 1), (2, 3)]), (4, [(0, 1), (1, 2)]),
    (4, [(0, 1), (1, 2), (2, 3)]), (4, [(0, 1), (0, 2), (0, 3)]),
]


def small_valid_graphs(max_weight: int = 5):
    """Every forest shape on at most four vertices with every weighting
    ``d(v) <= m(v) <= max_weight`` that has a strict vertex per component."""
    for n, edges in FOREST_SHAPES:
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for ws in product(*(range(d, max_weight + 1) for d in deg)):
            g = WeightedGraph(
                tuple((f"v{i}", w) for i, w in enumerate(ws)),
                tuple((f"v{u}", f"v{v}") for u, v in edges),
            )
            if _every_component_strict(g):
                yield g
