"""Polynomials over finite fields and the squarefree families of odd degree.

A polynomial is a list of element codes, highest degree first, with no
leading zeros; the zero polynomial is the empty list.
"""

import itertools
import logging
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_diff, gf_gcd

from ..core.errors import ArithmeticCheckError, ValidationError
from .field import FiniteField, finite_field

logger = logging.getLogger(__name__)

Poly = List[int]


class PolyRing:
    """F[x] for a table-driven finite field F."""

    def __init__(self, field: FiniteField):
        self.F = field

    @staticmethod
    def strip(a: Sequence[int]) -> Poly:
        i = 0
        while i < len(a) and a[i] == 0:
            i += 1
        return list(a[i:])

    @staticmethod
    def deg(a: Poly) -> int:
        return len(a) - 1

    def add(self, a: Poly, b: Poly) -> Poly:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        off = len(a) - len(b)
        for i, c in enumerate(b):
            out[off + i] = self.F.add(out[off + i], c)
        return self.strip(out)

    def neg(self, a: Poly) -> Poly:
        return [self.F.neg(c) for c in a]

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.add(a, self.neg(b))

    def scale(self, a: Poly, c: int) -> Poly:
        if c == 0:
            return []
        return [self.F.mul(x, c) for x in a]

    def mul(self, a: Poly, b: Poly) -> Poly:
        if not a or not b:
            return []
        F = self.F
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self.strip(out)

    def divmod(self, a: Poly, b: Poly) -> Tuple[Poly, Poly]:
        if not b:
            raise ValidationError("Polynomial division by zero")
        F = self.F
        rem = list(a)
        if len(rem) < len(b):
            return [], self.strip(rem)
        inv_lead = F.inv(b[0])
        quot = [0] * (len(rem) - len(b) + 1)
        for i in range(len(quot)):
            c = F.mul(rem[i], inv_lead)
            quot[i] = c
            if c:
                for j, y in enumerate(b):
                    rem[i + j] = F.sub(rem[i + j], F.mul(c, y))
        return self.strip(quot), self.strip(rem[len(quot):])

    def rem(self, a: Poly, b: Poly) -> Poly:
        return self.divmod(a, b)[1]

    def exact_quo(self, a: Poly, b: Poly) -> Poly:
        q, r = self.divmod(a, b)
        if r:
            raise ValidationError("Polynomial division is not exact")
        return q

    def monic(self, a: Poly) -> Poly:
        if not a or a[0] == 1:
            return list(a)
        return self.scale(a, self.F.inv(a[0]))

    def gcd(self, a: Poly, b: Poly) -> Poly:
        while b:
            a, b = b, self.rem(a, b)
        return self.monic(a)

    def xgcd(self, a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
        """(g, s, t) with g = s a + t b and g monic (or zero)."""
        r0, r1 = list(a), list(b)
        s0, s1 = [1], []
        t0, t1 = [], [1]
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if not r0:
            return [], [], []
        inv = self.F.inv(r0[0])
        return self.scale(r0, inv), self.scale(s0, inv), self.scale(t0, inv)

    def derivative(self, a: Poly) -> Poly:
        n = self.deg(a)
        return self.strip([self.F.mul(self.F.from_int(n - i), c) for i, c in enumerate(a[:-1])])

    def is_squarefree(self, a: Poly) -> bool:
        if self.F.is_prime:
            p = self.F.p
            f = [ZZ(c) for c in a]
            return len(gf_gcd(f, gf_diff(f, p, ZZ), p, ZZ)) == 1
        return self.deg(self.gcd(a, self.derivative(a))) == 0

    def evaluate(self, a: Poly, x: int) -> int:
        val = 0
        for c in a:
            val = self.F.add(self.F.mul(val, x), c)
        return val


def monic_polynomials(field: FiniteField, n: int) -> Iterator[Poly]:
    """Monic polynomials of degree n in lexicographic order of coefficients."""
    for tail in itertools.product(range(field.order), repeat=n):
        yield [1, *tail]


class SquarefreeFamily(NamedTuple):
    """Odd-degree models y^2 = f: monic f, then c0 f for the least nonsquare c0."""
    q: int
    n: int
    c0: int
    polynomials: List[Tuple[Poly, bool]]

    @property
    def count(self) -> int:
        return len(self.polynomials)

    def curves(self) -> Iterator[Tuple[int, Poly, bool]]:
        """(curve id, f, twisted) in enumeration order."""
        for curve_id, (f, twisted) in enumerate(self.polynomials):
            yield curve_id, f, twisted


def expected_squarefree_count(q: int, n: int) -> int:
    """Monic squarefree polynomials of degree n: 1, q, then q^n - q^(n-1)."""
    if n == 0:
        return 1
    if n == 1:
        return q
    return q ** n - q ** (n - 1)


def enumerate_sf(q: int, n: int, leading: str = "monic") -> SquarefreeFamily:
    """Squarefree polynomials of degree n over F_q by an exhaustive gcd test.

    With ``leading="both"`` the twists c0 f follow the full monic list,
    giving 2(q^n - q^(n-1)) curves.
    """
    if leading not in ("monic", "both"):
        raise ValidationError(f"leading must be 'monic' or 'both', got {leading!r}")
    if n < 0:
        raise ValidationError(f"Degree must be nonnegative, got {n}")
    field = finite_field(q)
    ring = PolyRing(field)
    monic = [f for f in monic_polynomials(field, n) if n < 2 or ring.is_squarefree(f)]
    expected = expected_squarefree_count(q, n)
    if len(monic) != expected:
        raise ArithmeticCheckError(f"Found {len(monic)} squarefree polynomials, expected {expected}",
                                   {"q": q, "n": n})
    polys = [(f, False) for f in monic]
    c0 = field.least_nonsquare
    if leading == "both":
        polys += [(ring.scale(f, c0), True) for f in monic]
    logger.info(f"{len(polys)} squarefree polynomials of degree {n} over F_{q}")
    return SquarefreeFamily(q, n, c0, polys)
