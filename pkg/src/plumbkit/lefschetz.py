"""Homological calculus for Lefschetz fibrations over the disk.

Curves on the genus-g fibre are modelled by their classes in
``H_1 = Z^{2g}`` with basis ``a_1, b_1, ..., a_g, b_g`` and pairing
``a_i . b_i = +1``. A right-handed Dehn twist about ``c`` acts by the
transvection ``x -> x + (x.c) c``.

Words of twists are composed left to right: the first twist in the tuple is
applied first. With that reading the Hurwitz move
``(a, b) -> (b, D_b(a))`` preserves the total monodromy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from . import intlinalg as la
from .errors import InputSyntaxError, PreconditionError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SurfaceBasis:
    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise PreconditionError("fibre genus must be positive")

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for i in range(1, self.genus + 1) for s in (f"a{i}", f"b{i}"))

    def pairing_matrix(self) -> la.Matrix:
        j = [[0] * self.dim for _ in range(self.dim)]
        for i in range(self.genus):
            j[2 * i][2 * i + 1] = 1
            j[2 * i + 1][2 * i] = -1
        return j

    def a(self, i: int) -> Vector:
        return self.unit(2 * (i - 1))

    def b(self, i: int) -> Vector:
        return self.unit(2 * (i - 1) + 1)

    def unit(self, k: int) -> Vector:
        return tuple(int(j == k) for j in range(self.dim))

    def zero(self) -> Vector:
        return (0,) * self.dim


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection ``x . y`` in the standard symplectic basis."""
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


def add(*vs: Sequence[int]) -> Vector:
    return tuple(map(sum, zip(*vs)))


def scale(c: int, v: Sequence[int]) -> Vector:
    return tuple(c * x for x in v)


def twist(c: Sequence[int], x: Sequence[int], power: int = 1) -> Vector:
    """Image of ``x`` under ``D_c ** power``."""
    return add(x, scale(power * pairing(x, c), c))


@dataclass(frozen=True)
class MonodromyWord:
    surface: SurfaceBasis
    twists: tuple[Vector, ...] = ()

    def __post_init__(self):
        tw = tuple(tuple(int(x) for x in c) for c in self.twists)
        object.__setattr__(self, "twists", tw)
        for c in tw:
            if len(c) != self.surface.dim:
                raise InputSyntaxError(f"class {c} has length {len(c)}, expected {self.surface.dim}")

    def __len__(self) -> int:
        return len(self.twists)

    def to_text(self) -> str:
        lines = [f"g {self.surface.genus}"]
        lines += ["t " + " ".join(map(str, c)) for c in self.twists]
        return "\n".join(lines) + "\n"


def twist_action(s: SurfaceBasis, c: Sequence[int]) -> la.Matrix:
    """Matrix of ``D_c`` on ``H_1`` acting on column vectors."""
    if len(c) != s.dim:
        raise PreconditionError(f"class {tuple(c)} does not live on genus {s.genus}")
    cols = [twist(c, s.unit(k)) for k in range(s.dim)]
    return la.transpose(cols)


def word_action(w: MonodromyWord) -> la.Matrix:
    m = la.identity(w.surface.dim)
    for c in w.twists:
        # later twists act after earlier ones
        m = la.matmul(twist_action(w.surface, c), m)
    return m


def is_symplectic(a: Sequence[Sequence[int]], s: SurfaceBasis) -> bool:
    j = s.pairing_matrix()
    return la.matmul(la.matmul(la.transpose(a), j), a) == j


class Direction(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def hurwitz_move(w: MonodromyWord, i: int, direction: Direction | str = Direction.RIGHT) -> MonodromyWord:
    """Elementary Hurwitz move at positions ``i, i+1`` (1-based).

    ``right``: ``(a, b) -> (b, D_b(a))``; ``left`` is its inverse,
    ``(a, b) -> (D_a^{-1}(b), a)``.
    """
    n = len(w)
    if not 1 <= i < n:
        raise PreconditionError(f"Hurwitz index {i} out of range 1..{n - 1}")
    direction = Direction(direction)
    t = list(w.twists)
    a, b = t[i - 1], t[i]
    if direction is Direction.RIGHT:
        t[i - 1], t[i] = b, twist(b, a)
    else:
        t[i - 1], t[i] = twist(a, b, -1), a
    return MonodromyWord(w.surface, tuple(t))


@dataclass(frozen=True)
class FibrationHomology:
    """``H_2(W) = Z[F] + ker(Z^n -> H_1(F))``; index 0 is the fibre class."""

    h2_rank: int
    kernel_basis: tuple[Vector, ...]
    fiber_class_index: int = 0


def _positive_lead(v: Sequence[int]) -> Vector:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def fibration_homology(w: MonodromyWord) -> FibrationHomology:
    cols = w.twists
    n = len(cols)
    if n == 0:
        return FibrationHomology(1, ())
    a = [[c[r] for c in cols] for r in range(w.surface.dim)]
    ker = tuple(_positive_lead(v) for v in la.integer_kernel(a, n))
    return FibrationHomology(1 + len(ker), ker)


@dataclass(frozen=True)
class CappedSurface:
    """Invariants of a fibre subsurface capped off by Lefschetz thimbles.

    ``c1_eval`` obeys ``c1_eval + self_int = 2 - 2 genus``.
    """

    genus: int
    boundary_count: int
    self_int: int
    c1_eval: int
    zero_boundary: bool = False  # some boundary class is null-homologous

    def __post_init__(self):
        if self.boundary_count < 1:
            raise PreconditionError("a capped surface needs at least one boundary curve")
        if self.genus < 0:
            raise PreconditionError(f"negative genus {self.genus}")
        assert self.self_int == -self.boundary_count
        assert self.c1_eval + self.self_int == 2 - 2 * self.genus


def _capped(genus: int, m: int, zero_boundary: bool = False) -> CappedSurface:
    return CappedSurface(genus, m, -m, 2 - 2 * genus + m, zero_boundary)


def cap_subsurface(genus: int, boundary: Sequence[Sequence[int]]) -> CappedSurface:
    """Invariants assigned to a hypothesised subsurface with the given
    boundary classes. Zero total class is necessary for such a subsurface to
    exist but is not sufficient; only the homological condition is checked."""
    boundary = [tuple(c) for c in boundary]
    if not boundary:
        raise PreconditionError("a capped surface needs at least one boundary curve")
    if any(len(c) != len(boundary[0]) for c in boundary):
        raise PreconditionError("boundary classes have mixed lengths")
    total = add(*boundary)
    if any(total):
        raise PreconditionError(f"boundary classes sum to {total}, not zero")
    return _capped(genus, len(boundary), any(not any(c) for c in boundary))


@dataclass(frozen=True)
class CapSplitting:
    """``[F] = [P1] + [P2]`` with classes written in the basis ``([F], [P1])``."""

    fiber_genus: int
    p1: CappedSurface
    p2: CappedSurface
    form: tuple[tuple[int, int], tuple[int, int]] = field(repr=False)

    fiber = (1, 0)
    p1_class = (0, 1)
    p2_class = (1, -1)

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.form[i][j] * y[j] for i in range(2) for j in range(2))


def complement_cap(fiber_genus: int, p1: CappedSurface) -> CappedSurface:
    """Capped complement ``F - P1`` of a capped surface in a genus-g fibre."""
    return split_fiber(fiber_genus, p1).p2


def split_fiber(fiber_genus: int, p1: CappedSurface) -> CapSplitting:
    m = p1.boundary_count
    g2 = fiber_genus - p1.genus - m + 1
    if g2 < 0:
        raise PreconditionError(
            f"complement would have genus {g2} (g={fiber_genus}, g1={p1.genus}, m={m})"
        )
    # F.F = 0, F.P1 = 0, P1.P1 = -m
    form = ((0, 0), (0, -m))
    return CapSplitting(fiber_genus, p1, _capped(g2, m), form)


class Verdict(str, Enum):
    CANONICAL_COMPATIBLE = "canonical_compatible"
    ADJUNCTION_VIOLATING = "adjunction_violating"
    INDETERMINATE = "indeterminate"


def adjunction_screen(c1_eval: int, self_int: int, genus: int) -> Verdict:
    """Classify ``<c1, S> - S.S`` against ``2 - 2g`` and ``-2g``."""
    excess = c1_eval - self_int
    if excess == 2 - 2 * genus:
        return Verdict.CANONICAL_COMPATIBLE
    if excess <= -2 * genus:
        return Verdict.ADJUNCTION_VIOLATING
    return Verdict.INDETERMINATE


def humphries_system(g: int) -> dict[str, Vector]:
    """Homology classes of the monoid generators ``A1..A(g+1), B1..Bg, D, E``.

    ``A_i = a_i`` for ``i <= g``; the ``B_i`` are chosen so that
    ``A1, B1, A2, B2, ..., Ag, Bg, E`` is a chain (consecutive classes meet
    once, all others are disjoint), which is what makes the ``E(2g)`` word
    act trivially. ``A(g+1)``, ``E`` and ``D`` are forced by
    ``A2 + ... + A(g+1) = 0``, ``E + A(g+1) + A1 = 0`` and ``A1 + A2 + D = 0``.
    """
    if g < 2:
        raise PreconditionError("the generating system needs genus >= 2")
    s = SurfaceBasis(g)
    out: dict[str, Vector] = {}
    for i in range(1, g + 1):
        out[f"A{i}"] = s.a(i)
    for i in range(1, g + 1):
        if i == g:
            out[f"B{i}"] = s.b(g)
        elif i == 1:
            out[f"B{i}"] = add(s.b(1), s.b(2))
        else:
            out[f"B{i}"] = add(s.b(i), scale(-1, s.b(i + 1)))
    out[f"A{g + 1}"] = scale(-1, add(s.zero(), *(s.a(i) for i in range(2, g + 1))))
    out["E"] = scale(-1, add(out[f"A{g + 1}"], out["A1"]))
    out["D"] = scale(-1, add(out["A1"], out["A2"]))
    return out


def e2g_half(g: int) -> list[str]:
    names = []
    for i in range(1, g + 1):
        names += [f"A{i}", f"B{i}"]
    names += ["E", "E"]
    for i in range(1, g + 1):
        j = g - i + 1
        names += [f"B{j}", f"A{j}"]
    return names


def e2g_names(g: int) -> list[str]:
    return e2g_half(g) * 4


def e2g_word(g: int) -> MonodromyWord:
    gens = humphries_system(g)
    return MonodromyWord(SurfaceBasis(g), tuple(gens[n] for n in e2g_names(g)))


class AuditFlag(str, Enum):
    ZERO = "zero_class_possibly_trivial_or_separating"
    NONZERO = "nonzero_class"


def minimality_audit(w: MonodromyWord) -> list[tuple[int, AuditFlag]]:
    """Flag null-homologous vanishing cycles (1-based positions).

    Homology cannot tell a curve bounding a disk from an essential separating
    curve, so a zero class is only a warning.
    """
    return [(i, AuditFlag.ZERO if not any(c) else AuditFlag.NONZERO) for i, c in enumerate(w.twists, 1)]


def parse_word(text: str) -> MonodromyWord:
    """Parse ``g <genus>`` followed by ``t <2g ints>`` lines or generator names."""
    genus = None
    twists: list[Vector] = []
    gens: dict[str, Vector] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if genus is None:
            if tok[0] != "g" or len(tok) != 2:
                raise InputSyntaxError("expected header 'g <genus>'", lineno)
            try:
                genus = int(tok[1])
            except ValueError:
                raise InputSyntaxError(f"genus {tok[1]!r} is not an integer", lineno) from None
            if genus < 1:
                raise InputSyntaxError("genus must be positive", lineno)
            gens = humphries_system(genus) if genus >= 2 else {}
            continue
        if tok[0] == "t":
            if len(tok) != 1 + 2 * genus:
                raise InputSyntaxError(f"expected {2 * genus} integers after 't'", lineno)
            try:
                twists.append(tuple(int(x) for x in tok[1:]))
            except ValueError:
                raise InputSyntaxError("non-integer class coordinate", lineno) from None
            continue
        for name in tok:
            if name not in gens:
                raise InputSyntaxError(f"unknown generator {name!r}", lineno)
            twists.append(gens[name])
    if genus is None:
        raise InputSyntaxError("missing 'g <genus>' header")
    return MonodromyWord(SurfaceBasis(genus), tuple(twists))


def word_from_names(g: int, names: Iterable[str]) -> MonodromyWord:
    gens = humphries_system(g)
    return MonodromyWord(SurfaceBasis(g), tuple(gens[n] for n in names))
