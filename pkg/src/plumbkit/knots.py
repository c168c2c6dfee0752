"""Alexander polynomials of (2, 2g+1) torus knots and HF+ ranks of their
zero-surgeries in non-torsion Spin^c structures."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError


@dataclass(frozen=True)
class SymmetricLaurent:
    """``a_0 + sum_{i>=1} a_i (T^i + T^-i)``, stored as ``(a_0, ..., a_g)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("top coefficient must be nonzero")

    @property
    def genus(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        i = abs(i)
        return self.coeffs[i] if i <= self.genus else 0

    def __call__(self, t) -> object:
        return self.coeffs[0] + sum(a * (t**i + t ** (-i)) for i, a in enumerate(self.coeffs) if i)

    def at_one(self) -> int:
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])


def torus_knot_alexander(g: int) -> SymmetricLaurent:
    """Normalised so that the top coefficient is +1 and Delta(1) = 1."""
    if g < 1:
        raise PreconditionError("genus must be at least 1")
    return SymmetricLaurent(tuple((-1) ** (g - i) for i in range(g + 1)))


def hfp_rank_zero_surgery(g: int, i: int) -> int:
    """Rank of HF+ of zero-surgery on T(2, 2g+1) where ``<c1, [F]> = 2i``."""
    if i == 0:
        raise PreconditionError("i = 0 is the torsion Spin^c structure")
    delta = torus_knot_alexander(g)
    k = abs(i)
    r = sum(j * delta.coeff(k + j) for j in range(1, g - k + 1))
    assert r >= 0
    return r
