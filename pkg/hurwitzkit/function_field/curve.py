"""Hyperelliptic curves y^2 = f(x) of odd degree and reduced divisors on them."""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Sequence, Tuple

from ..core.errors import ValidationError
from .field import FiniteField
from .polynomials import Poly, PolyRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MumfordDivisor:
    """A reduced divisor class (u, v): u monic, deg v < deg u, u | v^2 - f.

    The identity is (1, 0).
    """
    u: Tuple[int, ...]
    v: Tuple[int, ...] = ()

    @property
    def weight(self) -> int:
        return len(self.u) - 1

    @property
    def is_identity(self) -> bool:
        return self.u == (1,)

    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.u, self.v)

    def __repr__(self) -> str:
        return f"MumfordDivisor(u={list(self.u)}, v={list(self.v)})"


@dataclass
class HyperellipticCurve:
    """y^2 = f(x) over F_q with f squarefree of odd degree 2g + 1."""
    field: FiniteField
    f: Tuple[int, ...]
    ring: PolyRing = dataclass_field(init=False, repr=False)

    def __post_init__(self):
        self.f = tuple(PolyRing.strip(self.f))
        self.ring = PolyRing(self.field)
        if self.degree < 1 or self.degree % 2 == 0:
            raise ValidationError(f"f must have odd degree, got degree {self.degree}")
        if not self.ring.is_squarefree(list(self.f)):
            raise ValidationError(f"f = {list(self.f)} is not squarefree")

    @property
    def degree(self) -> int:
        return len(self.f) - 1

    @property
    def genus(self) -> int:
        return (self.degree - 1) // 2

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def identity(self) -> MumfordDivisor:
        return MumfordDivisor((1,), ())

    def divisor(self, u: Sequence[int], v: Sequence[int]) -> MumfordDivisor:
        """Validate and wrap a Mumford pair."""
        R = self.ring
        u, v = R.strip(u), R.strip(v)
        if not u or u[0] != 1:
            raise ValidationError(f"u = {u} must be monic")
        if len(v) >= len(u):
            raise ValidationError(f"deg v must be below deg u, got u={u}, v={v}")
        if R.deg(u) > self.genus:
            raise ValidationError(f"deg u = {R.deg(u)} exceeds the genus {self.genus}")
        if R.rem(R.sub(R.mul(v, v), list(self.f)), u):
            raise ValidationError(f"u does not divide v^2 - f for u={u}, v={v}")
        return MumfordDivisor(tuple(u), tuple(v))

    def is_valid(self, d: MumfordDivisor) -> bool:
        try:
            self.divisor(d.u, d.v)
        except ValidationError:
            return False
        return True

    def point(self, x: int, y: int) -> MumfordDivisor:
        """The class of P - infinity for an affine point P = (x, y)."""
        return self.divisor([1, self.field.neg(x)], [y] if y else [])

    def affine_points(self):
        """All affine F_q-points (x, y)."""
        F = self.field
        out = []
        for x in range(F.order):
            fx = self.ring.evaluate(list(self.f), x)
            for y in range(F.order):
                if F.mul(y, y) == fx:
                    out.append((x, y))
        return out
