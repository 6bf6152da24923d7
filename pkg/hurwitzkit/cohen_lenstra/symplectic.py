"""Brute-force orbits of the symplectic group on Frobenius-fixed surjections.

V = (Z/l^e)^(2g) carries the form w(x, y) = x^T J y with J = [[0, I], [-I, 0]].
A surjection f: V -> A lies in O when f F = f for some F with
w(Fx, Fy) = q w(x, y); every such F is F0 S with S symplectic and
F0 = diag(q I, I).
"""

import itertools
import logging
from functools import cached_property
from math import gcd
from typing import Dict, List, NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from ..core.config import get_config
from ..core.errors import BudgetExceededError, ComputationError, ValidationError
from ..models.abelian import AbelianLGroupType

logger = logging.getLogger(__name__)


def symplectic_group_order(g: int, l: int, e: int) -> int:
    """|Sp_2g(Z/l^e)| = l^((e-1) g (2g+1)) * l^(g^2) * prod_{i=1..g} (l^(2i) - 1)."""
    order = l ** ((e - 1) * g * (2 * g + 1)) * l ** (g * g)
    for i in range(1, g + 1):
        order *= l ** (2 * i) - 1
    return order


class SymplecticSpace:
    """(Z/l^e)^(2g) with the standard alternating form."""

    def __init__(self, l: int, e: int, g: int):
        if g < 1 or e < 1:
            raise ValidationError(f"Need g >= 1 and e >= 1, got g={g}, e={e}")
        self.l, self.e, self.g = l, e, g
        self.modulus = l ** e
        self.dim = 2 * g
        eye = np.eye(g, dtype=np.int64)
        zero = np.zeros((g, g), dtype=np.int64)
        self.form = np.block([[zero, eye], [-eye, zero]]) % self.modulus

    def pairing(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(x @ self.form @ y) % self.modulus

    def is_symplectic(self, m: np.ndarray) -> bool:
        return np.array_equal((m.T @ self.form @ m) % self.modulus, self.form)

    def multiplier_matrix(self, q: int) -> np.ndarray:
        """F0 = diag(q on the first half, 1 on the second), with multiplier q."""
        diag = np.array([q] * self.g + [1] * self.g, dtype=np.int64) % self.modulus
        return np.diag(diag)

    def transvection(self, v: np.ndarray) -> np.ndarray:
        """x -> x + w(v, x) v."""
        return (np.eye(self.dim, dtype=np.int64) + np.outer(v, v @ self.form)) % self.modulus

    @cached_property
    def generators(self) -> List[np.ndarray]:
        """Transvections in vectors of weight at most 2 with entries +-1."""
        gens = []
        for i in range(self.dim):
            v = np.zeros(self.dim, dtype=np.int64)
            v[i] = 1
            gens.append(self.transvection(v))
        for i, j in itertools.combinations(range(self.dim), 2):
            for sign in (1, -1):
                v = np.zeros(self.dim, dtype=np.int64)
                v[i], v[j] = 1, sign % self.modulus
                gens.append(self.transvection(v))
        return gens

    def _keys(self, mats: np.ndarray) -> np.ndarray:
        weights = self.modulus ** np.arange(self.dim * self.dim - 1, -1, -1, dtype=np.int64)
        return mats.reshape(len(mats), -1) @ weights

    def enumerate_group(self) -> np.ndarray:
        """All of Sp_2g(Z/l^e) by closure under the generators, checked against the order formula."""
        expected = symplectic_group_order(self.g, self.l, self.e)
        budget = get_config().limits.symplectic_budget
        if expected > budget:
            raise BudgetExceededError(f"|Sp| = {expected} exceeds the symplectic budget {budget}",
                                      {"g": self.g, "l": self.l, "e": self.e})
        if self.modulus ** (self.dim * self.dim) >= 2 ** 63:
            raise BudgetExceededError("Matrix keys do not fit in 64 bits", {"g": self.g, "modulus": self.modulus})
        gens = np.stack(self.generators)
        identity = np.eye(self.dim, dtype=np.int64)[None]
        elements = [identity]
        known = self._keys(identity)
        frontier = identity
        while len(frontier):
            products = (frontier[:, None] @ gens[None]).reshape(-1, self.dim, self.dim) % self.modulus
            keys, first = np.unique(self._keys(products), return_index=True)
            fresh = ~np.isin(keys, known)
            frontier = products[first[fresh]]
            known = np.union1d(known, keys[fresh])
            elements.append(frontier)
            if len(known) > expected:
                break
        group = np.concatenate(elements)
        if len(group) != expected:
            raise ComputationError(f"Transvection closure has {len(group)} elements, expected {expected}",
                                   {"g": self.g, "l": self.l, "e": self.e})
        logger.debug(f"Enumerated Sp_{self.dim}(Z/{self.modulus}) of order {expected}")
        return group


def surjections(space: SymplecticSpace, A: AbelianLGroupType) -> np.ndarray:
    """All surjections V -> A as (rank A) x 2g integer matrices, row j taken mod l^a_j."""
    if A.l != space.l:
        raise ValidationError(f"A is an abelian {A.l}-group but V is over Z/{space.l}^{space.e}")
    if any(a > space.e for a in A.partition):
        return np.zeros((0, A.rank, space.dim), dtype=np.int64)
    r = A.rank
    if r == 0:
        return np.zeros((1, 0, space.dim), dtype=np.int64)
    row_choices = [list(itertools.product(range(space.l ** a), repeat=space.dim)) for a in A.partition]
    field = GF(space.l)
    out = []
    for rows in itertools.product(*row_choices):
        m = np.array(rows, dtype=np.int64)
        reduced = DomainMatrix([[field(int(x)) for x in row] for row in (m % space.l).tolist()],
                               m.shape, field)
        if reduced.rank() == r:
            out.append(m)
    return np.array(out, dtype=np.int64).reshape(len(out), r, space.dim)


class SymplecticOrbitResult(NamedTuple):
    orbit_count: int
    transitive: bool
    nonempty: bool
    surjections: int
    fixed: int
    group_order: int


def symplectic_orbit_check(g: int, l: int, e: int, A: AbelianLGroupType, q_residue: int) -> SymplecticOrbitResult:
    """Sp-orbits on the surjections V -> A fixed by some element of multiplier q."""
    if gcd(q_residue * (q_residue - 1), l) != 1:
        raise ValidationError(f"q = {q_residue} must satisfy gcd(q(q-1), {l}) = 1")
    space = SymplecticSpace(l, e, g)
    group = space.enumerate_group()
    surj = surjections(space, A)
    moduli = np.array([l ** a for a in A.partition], dtype=np.int64)[:, None]
    f0 = space.multiplier_matrix(q_residue)

    def reduce(maps: np.ndarray) -> np.ndarray:
        return maps % moduli if len(moduli) else maps

    fixed_mask = np.zeros(len(surj), dtype=bool)
    for i, f in enumerate(surj):
        moved = reduce((f @ f0) @ group)
        fixed_mask[i] = bool(np.any(np.all(moved == f[None], axis=(1, 2))))
    orbit_set = surj[fixed_mask]
    nonempty = len(orbit_set) > 0
    if not nonempty:
        logger.info(f"No surjection onto {A.label()} is fixed by a multiplier-{q_residue} similitude")
        return SymplecticOrbitResult(0, False, False, len(surj), 0, len(group))

    index: Dict[bytes, int] = {m.tobytes(): i for i, m in enumerate(orbit_set)}
    sources, targets = [], []
    for gen in space.generators:
        moved = reduce(orbit_set @ gen)
        for i, m in enumerate(moved):
            j = index.get(m.tobytes())
            if j is None:
                raise ComputationError("The fixed set is not stable under Sp", {"A": A.label()})
            sources.append(i)
            targets.append(j)
    size = len(orbit_set)
    graph = csr_matrix((np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(size, size))
    count, _ = connected_components(graph, directed=True, connection="weak")
    logger.info(f"{size} fixed surjections onto {A.label()} form {count} Sp-orbit(s)")
    return SymplecticOrbitResult(int(count), count == 1, True, len(surj), size, len(group))
