"""Weighted plumbing graphs: parsing, hypothesis checks, leaf reductions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InputSyntaxError, PreconditionError


@dataclass(frozen=True)
class WeightedGraph:
    """A simple undirected graph with an integer weight on each vertex.

    ``vertices`` is a tuple of ``(id, weight)`` pairs in declaration order,
    which fixes the row order of every matrix built from the graph. ``edges``
    holds ``(u, v)`` pairs, also in declaration order.
    """

    vertices: tuple[tuple[str, int], ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((str(v), int(w)) for v, w in self.vertices))
        object.__setattr__(self, "edges", tuple((str(u), str(v)) for u, v in self.edges))
        adj: dict[str, list[str]] = {}
        for v, _ in self.vertices:
            if v in adj:
                raise InputSyntaxError(f"duplicate vertex id {v!r}")
            adj[v] = []
        seen = set()
        for u, v in self.edges:
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise InputSyntaxError(f"edge refers to undeclared vertex {missing!r}")
            if u == v:
                raise InputSyntaxError(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise InputSyntaxError(f"repeated edge {u!r}-{v!r}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", {v: tuple(ns) for v, ns in adj.items()})

    @classmethod
    def from_weights(cls, weights: dict[str, int] | Iterable[tuple[str, int]], edges=()) -> "WeightedGraph":
        items = weights.items() if isinstance(weights, dict) else weights
        return cls(tuple(items), tuple(edges))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def weights(self) -> dict[str, int]:
        return dict(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, (v, _) in enumerate(self.vertices)}

    def weight(self, v: str) -> int:
        return self.weights[v]

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def slack(self, v: str) -> int:
        return self.weight(v) - self.degree(v)

    def is_leaf(self, v: str) -> bool:
        return self.degree(v) == 1

    def leaves(self) -> list[str]:
        return [v for v in self.ids if self.degree(v) == 1]

    def with_weight(self, v: str, w: int) -> "WeightedGraph":
        self.weights[v]  # KeyError for unknown ids
        return WeightedGraph(tuple((u, w if u == v else x) for u, x in self.vertices), self.edges)

    def without(self, v: str) -> "WeightedGraph":
        self.weights[v]
        return WeightedGraph(
            tuple(p for p in self.vertices if p[0] != v),
            tuple(e for e in self.edges if v not in e),
        )

    def induced(self, keep: Iterable[str]) -> "WeightedGraph":
        keep = set(keep)
        return WeightedGraph(
            tuple(p for p in self.vertices if p[0] in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def to_text(self) -> str:
        lines = [f"v {v} {w}" for v, w in self.vertices]
        lines += [f"e {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + ("\n" if lines else "")


def parse_graph(text: str) -> WeightedGraph:
    """Parse the line format ``v <id> <weight>`` / ``e <id> <id>``.

    ``#`` starts a comment; blank lines are skipped. Vertices must be declared
    before any edge that mentions them.
    """
    vertices: list[tuple[str, int]] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen_edges: set[frozenset] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "v":
            if len(tok) != 3:
                raise InputSyntaxError("expected 'v <id> <weight>'", lineno)
            try:
                w = int(tok[2])
            except ValueError:
                raise InputSyntaxError(f"weight {tok[2]!r} is not an integer", lineno) from None
            if tok[1] in declared:
                raise InputSyntaxError(f"duplicate vertex id {tok[1]!r}", lineno)
            declared.add(tok[1])
            vertices.append((tok[1], w))
        elif tok[0] == "e":
            if len(tok) != 3:
                raise InputSyntaxError("expected 'e <id> <id>'", lineno)
            u, v = tok[1], tok[2]
            for x in (u, v):
                if x not in declared:
                    raise InputSyntaxError(f"edge refers to undeclared vertex {x!r}", lineno)
            if u == v:
                raise InputSyntaxError(f"self-loop at {u!r}", lineno)
            if frozenset((u, v)) in seen_edges:
                raise InputSyntaxError(f"repeated edge {u!r}-{v!r}", lineno)
            seen_edges.add(frozenset((u, v)))
            edges.append((u, v))
        else:
            raise InputSyntaxError(f"unknown record type {tok[0]!r}", lineno)
    return WeightedGraph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class ValidationReport:
    is_forest: bool
    slack: tuple[tuple[str, int], ...]
    components: tuple[frozenset, ...]
    each_component_has_strict_vertex: bool

    @property
    def violations(self) -> list[str]:
        return [v for v, s in self.slack if s < 0]

    @property
    def hypotheses_hold(self) -> bool:
        """Forest with ``m(v) >= d(v)`` everywhere."""
        return self.is_forest and not self.violations

    @property
    def rational_sphere(self) -> bool:
        return self.hypotheses_hold and self.each_component_has_strict_vertex


def _component_sets(g: WeightedGraph) -> list[frozenset]:
    seen: set[str] = set()
    out = []
    for start in g.ids:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _has_cycle(g: WeightedGraph) -> bool:
    parent: dict[str, str | None] = {}
    for start in g.ids:
        if start in parent:
            continue
        parent[start] = None
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y == parent[x]:
                    continue
                if y in parent:
                    return True
                parent[y] = x
                stack.append(y)
    return False


def validate(g: WeightedGraph) -> ValidationReport:
    comps = _component_sets(g)
    forest = len(g.edges) == len(g) - len(comps) and not _has_cycle(g)
    slack = tuple((v, g.slack(v)) for v in g.ids)
    strict = all(any(g.slack(v) > 0 for v in c) for c in comps)
    return ValidationReport(forest, slack, tuple(comps), strict)


def components(g: WeightedGraph) -> list[WeightedGraph]:
    return [g.induced(c) for c in _component_sets(g)]


def blow_down_leaf(g: WeightedGraph, v: str) -> WeightedGraph:
    """Delete a weight-1 leaf and lower its neighbour's weight by one."""
    if v not in g.weights:
        raise PreconditionError(f"unknown vertex {v!r}")
    if g.degree(v) != 1:
        raise PreconditionError(f"{v!r} is not a leaf (degree {g.degree(v)})")
    if g.weight(v) != 1:
        raise PreconditionError(f"leaf {v!r} has weight {g.weight(v)}, blow-down needs 1")
    (u,) = g.neighbors(v)
    h = g.without(v)
    return h.with_weight(u, h.weight(u) - 1)


def _centers(g: WeightedGraph, comp: frozenset) -> list[str]:
    deg = {v: sum(1 for u in g.neighbors(v) if u in comp) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in g.neighbors(v):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: WeightedGraph, root: str) -> tuple:
    # iterative post-order so deep chains do not hit the recursion limit
    order = []
    parent = {root: None}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in g.neighbors(x):
            if y != parent[x]:
                parent[y] = x
                stack.append(y)
    codes: dict[str, tuple] = {}
    for x in reversed(order):
        kids = sorted(codes[y] for y in g.neighbors(x) if y != parent[x])
        codes[x] = (g.weight(x), tuple(kids))
    return codes[root]


def canonical_form(g: WeightedGraph) -> tuple:
    """Isomorphism invariant of a weighted forest (equal iff isomorphic).

    Each tree is encoded from its centre (the smaller code wins for a
    bicentred tree); the forest code is the sorted tuple of tree codes.
    """
    if not validate(g).is_forest:
        raise PreconditionError("canonical form is only defined for forests")
    trees = []
    for comp in _component_sets(g):
        trees.append(min(_rooted_code(g, c) for c in _centers(g, comp)))
    return tuple(sorted(trees))
