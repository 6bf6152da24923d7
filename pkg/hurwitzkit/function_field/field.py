"""Finite fields of odd order given by arithmetic tables.

Elements are integer codes. In F_p the code is the residue; an extension
of degree k over a base field B encodes c_0 + c_1 t + ... as
sum c_j |B|^j, so base elements keep their codes and the prime field sits
at codes 0 .. p - 1 in every field of the tower.
"""

import itertools
import logging
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..core.errors import BudgetExceededError, ValidationError

logger = logging.getLogger(__name__)

TABLE_LIMIT = 4096


class FiniteField:
    """F_q with add/mul tables, built as F_p or as an extension of a smaller field."""

    def __init__(self, p: int, base: Optional["FiniteField"] = None, modulus: Sequence[int] = None):
        if not isprime(p) or p == 2:
            raise ValidationError(f"Characteristic must be an odd prime, got {p}")
        self.p = p
        self.base = base
        self.modulus = tuple(modulus) if modulus is not None else None
        self.degree = 1 if base is None else len(self.modulus) - 1
        self.order = p if base is None else base.order ** self.degree
        if self.order > TABLE_LIMIT:
            raise BudgetExceededError(f"Field of order {self.order} exceeds the table limit {TABLE_LIMIT}")
        self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField({self.order})"

    @property
    def q(self) -> int:
        return self.order

    @property
    def is_prime(self) -> bool:
        return self.base is None

    def _build_tables(self) -> None:
        q = self.order
        codes = np.arange(q, dtype=np.int64)
        if self.base is None:
            self.add_table = (codes[:, None] + codes[None, :]) % q
            self.mul_table = (codes[:, None] * codes[None, :]) % q
        else:
            digits = [self._digits(c) for c in range(q)]
            self.add_table = np.empty((q, q), dtype=np.int64)
            self.mul_table = np.empty((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    s = self._encode([self.base.add(x, y) for x, y in zip(digits[a], digits[b])])
                    m = self._encode(self._poly_mulmod(digits[a], digits[b]))
                    self.add_table[a, b] = self.add_table[b, a] = s
                    self.mul_table[a, b] = self.mul_table[b, a] = m
        self.neg_table = np.argmin(self.add_table, axis=1)
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        self.inv_table = inv
        self._add = self.add_table.tolist()
        self._mul = self.mul_table.tolist()
        self._neg = self.neg_table.tolist()
        self._inv = self.inv_table.tolist()

    def _digits(self, code: int) -> List[int]:
        out = []
        for _ in range(self.degree):
            code, d = divmod(code, self.base.order)
            out.append(d)
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.base.order + d
        return code

    def _poly_mulmod(self, a: List[int], b: List[int]) -> List[int]:
        """Product of low-to-high digit vectors reduced by the monic modulus."""
        B = self.base
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        k = self.degree
        mod_low = list(reversed(self.modulus))  # low to high, monic
        for top in range(len(prod) - 1, k - 1, -1):
            c = prod[top]
            if c:
                for j in range(k + 1):
                    prod[top - k + j] = B.sub(prod[top - k + j], B.mul(c, mod_low[j]))
        return prod[:k]

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValidationError("Zero has no inverse")
        return self._inv[a]

    def from_int(self, n: int) -> int:
        """The image of an integer in the prime field."""
        return n % self.p

    def power(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    @cached_property
    def squares(self) -> np.ndarray:
        return np.unique(self.mul_table.diagonal())

    @cached_property
    def chi_table(self) -> np.ndarray:
        """Quadratic character: 0 at 0, 1 on nonzero squares, -1 otherwise."""
        chi = -np.ones(self.order, dtype=np.int64)
        chi[self.squares] = 1
        chi[0] = 0
        return chi

    def chi(self, a: int) -> int:
        return int(self.chi_table[a])

    @cached_property
    def least_nonsquare(self) -> int:
        return int(np.flatnonzero(self.chi_table == -1)[0])

    def roots(self, coeffs: Sequence[int]) -> np.ndarray:
        """Elements where a polynomial (coefficients high to low) vanishes."""
        return np.flatnonzero(self.evaluate(coeffs, np.arange(self.order, dtype=np.int64)) == 0)

    def evaluate(self, coeffs: Sequence[int], points: np.ndarray) -> np.ndarray:
        """Horner evaluation at an array of element codes."""
        val = np.zeros(len(points), dtype=np.int64)
        for c in coeffs:
            val = self.add_table[self.mul_table[val, points], c]
        return val

    def spot_check(self, samples: int = 64, seed: int = 0) -> bool:
        """Associativity and distributivity on random triples."""
        rng = np.random.default_rng(seed)
        for a, b, c in rng.integers(0, self.order, size=(samples, 3)).tolist():
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                return False
        return all(self.mul(a, self.inv(a)) == 1 for a in range(1, self.order))

    def extension(self, k: int) -> "FiniteField":
        """F_(q^k) over this field, with the least irreducible monic modulus."""
        if k == 1:
            return self
        return _extension(self, k)


def _is_irreducible(base: FiniteField, coeffs: Sequence[int]) -> bool:
    if base.is_prime:
        return bool(gf_irreducible_p([ZZ(c) for c in coeffs], base.p, ZZ))
    if len(coeffs) - 1 > 3:
        raise ValidationError("Irreducibility over a non-prime field is only decided up to degree 3")
    return len(base.roots(coeffs)) == 0


def irreducible_modulus(base: FiniteField, k: int) -> tuple:
    """The lexicographically least monic irreducible of degree k over the base (high to low)."""
    for tail in itertools.product(range(base.order), repeat=k):
        coeffs = (1,) + tail
        if tail[-1] != 0 and _is_irreducible(base, coeffs):
            return coeffs
    raise ValidationError(f"No irreducible of degree {k} over F_{base.order}")


@lru_cache(maxsize=None)
def _extension(base: FiniteField, k: int) -> FiniteField:
    return FiniteField(base.p, base=base, modulus=irreducible_modulus(base, k))


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    """F_q for an odd prime power q."""
    factors = factorint(q)
    if len(factors) != 1:
        raise ValidationError(f"q = {q} is not a prime power")
    (p, k), = factors.items()
    prime_field = FiniteField(p)
    field = prime_field.extension(k)
    logger.debug(f"Built F_{q}" + (f" with modulus {field.modulus}" if field.modulus else ""))
    return field
