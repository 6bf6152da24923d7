"""The graded ring R of braid orbits under concatenation."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from ..core.errors import ValidationError
from ..groups.group import ConjClass, Group
from ..linalg.sparse import SparseIntMatrix, SparseMatrix
from .action import ClassAction
from .orbits import OrbitTable, enumerate_orbits

logger = logging.getLogger(__name__)


@dataclass
class RingElement:
    """A homogeneous element of R: orbit id -> rational coefficient in one degree."""

    degree: int
    coeffs: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {o: Fraction(c) for o, c in self.coeffs.items() if c}

    def __add__(self, other: "RingElement") -> "RingElement":
        if other.degree != self.degree:
            raise ValidationError("Adding elements of different degree")
        out = dict(self.coeffs)
        for o, c in other.coeffs.items():
            out[o] = out.get(o, 0) + c
        return RingElement(self.degree, out)

    def scaled(self, factor) -> "RingElement":
        return RingElement(self.degree, {o: c * factor for o, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs


class ComponentRing:
    """R = Q[S] for (G, c), realized on orbit bases degree by degree.

    Orbit tables are built on first use and cached.
    """

    def __init__(self, group: Group, cls: ConjClass, max_states: Optional[int] = None):
        self.group = group
        self.cls = cls
        self.action = ClassAction(group, cls)
        self.k = self.action.k
        self.max_states = max_states
        self._tables: Dict[int, OrbitTable] = {}

    def table(self, n: int) -> OrbitTable:
        if n not in self._tables:
            self._tables[n] = enumerate_orbits(self.group, self.cls, n, self.max_states, self.action)
        return self._tables[n]

    def dim(self, n: int) -> int:
        return len(self.table(n))

    def basis(self, n: int, orbit_id: int) -> RingElement:
        return RingElement(n, {orbit_id: 1})

    def generator(self, g: int) -> RingElement:
        """r_g in degree 1."""
        return RingElement(1, {self.table(1).lookup((g,)): 1})

    def orbit_multiply(self, a: int, m: int, b: int, n: int) -> int:
        """Orbit of the concatenation of representatives of a (degree m) and b (degree n)."""
        if not (0 <= a < self.dim(m) and 0 <= b < self.dim(n)):
            raise ValidationError(f"Orbit ids out of range: {a} in degree {m}, {b} in degree {n}")
        code = int(self.table(m).canonical[a]) * self.k ** n + int(self.table(n).canonical[b])
        return int(self.table(m + n).labels[code])

    def multiply(self, x: RingElement, y: RingElement) -> RingElement:
        out: Dict[int, Fraction] = {}
        for a, ca in x.coeffs.items():
            for b, cb in y.coeffs.items():
                o = self.orbit_multiply(a, x.degree, b, y.degree)
                out[o] = out.get(o, 0) + ca * cb
        return RingElement(x.degree + y.degree, out)

    def power_of_generator(self, g: int, exponent: int) -> RingElement:
        """r_g^exponent as the orbit of the constant tuple (g, ..., g)."""
        return RingElement(exponent, {self.table(exponent).lookup((g,) * exponent): 1})

    def u_element(self, D: int) -> RingElement:
        """U_D = sum over g in c of r_g^(D |g|)."""
        length = D * self.cls.class_order
        u = RingElement(length)
        for g in self.cls.members:
            u = u + self.power_of_generator(g, length)
        return u

    def _products(self, a: int, d: int, m: int, left: bool) -> np.ndarray:
        """Orbit ids of a * s (left) or s * a (right) for every orbit s of degree m."""
        canon_a = int(self.table(d).canonical[a])
        canon_m = self.table(m).canonical
        if left:
            codes = canon_a * self.k ** m + canon_m
        else:
            codes = canon_m * self.k ** d + canon_a
        return self.table(m + d).labels[codes]

    def multiplication_matrix(self, x: RingElement, m: int, left: bool = True) -> SparseMatrix:
        """Matrix of s -> x*s (or s*x) from R_m to R_{m + deg x} on orbit bases."""
        rows, cols = self.dim(m + x.degree), self.dim(m)
        entries: Dict = {}
        for a, coeff in x.coeffs.items():
            images = self._products(a, x.degree, m, left)
            for s, o in enumerate(images.tolist()):
                entries[(o, s)] = entries.get((o, s), 0) + coeff
        cleaned = {k: (int(v) if v.denominator == 1 else v) for k, v in entries.items() if v}
        if all(isinstance(v, int) for v in cleaned.values()):
            return SparseIntMatrix(rows, cols, cleaned)
        return SparseMatrix(rows, cols, cleaned)

    def left_action(self, g: int, m: int) -> SparseMatrix:
        """r_g * - : R_m -> R_{m+1}."""
        return self.multiplication_matrix(self.generator(g), m, left=True)

    def right_action(self, g: int, m: int) -> SparseMatrix:
        """- * r_g : R_m -> R_{m+1}."""
        return self.multiplication_matrix(self.generator(g), m, left=False)

    def check_well_defined(self, m: int, n: int, samples: int = 32, seed: int = 0) -> bool:
        """Concatenating random members of two orbits lands in the product orbit."""
        rng = np.random.Generator(np.random.Philox(seed))
        tm, tn, tmn = self.table(m), self.table(n), self.table(m + n)
        for _ in range(samples):
            x = int(rng.integers(0, len(tm.labels)))
            y = int(rng.integers(0, len(tn.labels)))
            expected = self.orbit_multiply(int(tm.labels[x]), m, int(tn.labels[y]), n)
            if int(tmn.labels[x * self.k ** n + y]) != expected:
                return False
        return True


def central_check(ring: ComponentRing, u: RingElement, n_max: int) -> bool:
    """True iff U s = s U for every orbit s of degree at most n_max - deg U."""
    for m in range(0, n_max - u.degree + 1):
        left = ring.multiplication_matrix(u, m, left=True)
        right = ring.multiplication_matrix(u, m, left=False)
        if left != right:
            logger.info(f"Element of degree {u.degree} fails to commute in degree {m}")
            return False
    return True
