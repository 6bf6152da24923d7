"""Braid orbits on c^n: the components of Hurwitz spaces."""

import logging
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..core.config import get_config
from ..core.errors import BudgetExceededError, ValidationError
from ..groups.group import ConjClass, Group, generated_subgroup
from ..models.orbit import OrbitRecord
from .action import ClassAction, nielsen_multiset

logger = logging.getLogger(__name__)


class OrbitTable:
    """Orbit decomposition of c^n under B_n, numbered by canonical representative.

    ``labels[code]`` is the orbit id of a tuple code; ``canonical[i]`` the
    least code in orbit i. Tables are read-only after construction.
    """

    def __init__(self, action: ClassAction, n: int, labels: np.ndarray, canonical: np.ndarray):
        self.action = action
        self.group = action.group
        self.cls = action.cls
        self.n = n
        self.labels = labels
        self.canonical = canonical
        self.sizes = np.bincount(labels, minlength=len(canonical)).astype(np.int64)
        self.boundary = action.boundaries(canonical, n)
        self.labels.setflags(write=False)
        self.canonical.setflags(write=False)

    def __len__(self) -> int:
        return len(self.canonical)

    def __repr__(self) -> str:
        return f"OrbitTable(n={self.n}, orbits={len(self)})"

    def lookup(self, t: Tuple[int, ...]) -> int:
        """Orbit id of a tuple of element indices."""
        if len(t) != self.n:
            raise ValidationError(f"Tuple of length {len(t)} in a degree-{self.n} table")
        return int(self.labels[self.action.encode(t)])

    def representative(self, orbit_id: int) -> Tuple[int, ...]:
        return self.action.decode(int(self.canonical[orbit_id]), self.n)

    @cached_property
    def monodromy(self) -> List[frozenset]:
        """Global monodromy subgroup of every orbit."""
        cache: Dict[int, frozenset] = {}
        out = []
        members = self.cls.members
        for mask in self.action.digit_masks(self.canonical, self.n).tolist():
            if mask not in cache:
                used = [members[i] for i in range(len(members)) if mask >> i & 1]
                cache[mask] = generated_subgroup(self.group, used)
            out.append(cache[mask])
        return out

    @cached_property
    def monodromy_ids(self) -> np.ndarray:
        subgroups = self.group.subgroup_list
        return np.array([subgroups.id_of(h) for h in self.monodromy], dtype=np.int64)

    @cached_property
    def generating(self) -> np.ndarray:
        """Boolean mask of orbits whose entries generate G."""
        return np.array([len(h) == self.group.order for h in self.monodromy], dtype=bool)

    @cached_property
    def nielsen_ids(self) -> np.ndarray:
        """Id of each orbit's class multiset, numbered in sorted multiset order."""
        multisets = [nielsen_multiset(self.group, self.representative(i)) for i in range(len(self))]
        numbering = {m: k for k, m in enumerate(sorted(set(multisets)))}
        return np.array([numbering[m] for m in multisets], dtype=np.int64)

    @property
    def generating_count(self) -> int:
        """|S_n(G)|."""
        return int(self.generating.sum())

    def records(self) -> List[OrbitRecord]:
        ids = self.monodromy_ids
        nielsen = self.nielsen_ids
        return [
            OrbitRecord(
                n=self.n,
                orbit_id=i,
                size=int(self.sizes[i]),
                boundary=int(self.boundary[i]),
                monodromy_subgroup_id=int(ids[i]),
                nielsen_id=int(nielsen[i]),
                canonical_rep=self.representative(i),
            )
            for i in range(len(self))
        ]

    def members(self, orbit_id: int) -> np.ndarray:
        return np.flatnonzero(self.labels == orbit_id)

    def spot_check(self, samples: int = 64, seed: int = 0) -> bool:
        """Check on random tuples that invariants agree with their orbit's."""
        if self.n == 0:
            return True
        rng = np.random.Generator(np.random.Philox(seed))
        codes = rng.integers(0, len(self.labels), size=samples)
        orbit = self.labels[codes]
        if not np.array_equal(self.action.boundaries(codes, self.n), self.boundary[orbit]):
            return False
        masks = self.action.digit_masks(codes, self.n)
        members = self.cls.members
        for mask, o in zip(masks.tolist(), orbit.tolist()):
            used = [members[i] for i in range(len(members)) if mask >> i & 1]
            if generated_subgroup(self.group, used) != self.monodromy[o]:
                return False
        return True


def state_count(cls: ConjClass, n: int) -> int:
    return len(cls) ** n


def check_budget(cls: ConjClass, n: int, max_states: int = None) -> None:
    budget = max_states if max_states is not None else get_config().limits.max_states
    if state_count(cls, n) > budget:
        raise BudgetExceededError(
            f"|c|^n = {state_count(cls, n)} exceeds the state budget {budget}",
            {"|c|": len(cls), "n": n},
        )


def enumerate_orbits(group: Group, cls: ConjClass, n: int, max_states: int = None,
                     action: ClassAction = None) -> OrbitTable:
    """Decompose c^n into braid orbits.

    Orbits are the weak components of the graph with edges x -> sigma_j(x);
    each orbit is labelled by its least code and orbits are numbered in
    increasing order of that code.
    """
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    check_budget(cls, n, max_states)
    action = action or ClassAction(group, cls)
    size = state_count(cls, n)
    codes = np.arange(size, dtype=np.int64)

    if n <= 1:
        labels = codes.copy()
        table = OrbitTable(action, n, labels, codes.copy())
        logger.debug(f"Degree {n}: {len(table)} orbits")
        return table

    sources = np.tile(codes, n - 1)
    targets = np.concatenate([action.sigma(codes, n, j) for j in range(1, n)])
    graph = csr_matrix((np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(size, size))
    count, components = connected_components(graph, directed=True, connection="weak")

    least = np.full(count, size, dtype=np.int64)
    np.minimum.at(least, components, codes)
    order = np.argsort(least, kind="stable")
    renumber = np.empty(count, dtype=np.int64)
    renumber[order] = np.arange(count)
    table = OrbitTable(action, n, renumber[components], least[order])
    logger.debug(f"Degree {n}: {len(table)} orbits on {size} tuples")
    return table


def prescribed_prefix_check(table: OrbitTable) -> Tuple[bool, List[int]]:
    """Every generating orbit has members starting with each g in c.

    Returns the verdict and the generating orbits that miss some first entry.
    """
    if table.n == 0:
        return True, []
    k = table.action.k
    first = np.arange(len(table.labels), dtype=np.int64) // k ** (table.n - 1)
    pairs = np.unique(table.labels * k + first)
    seen = np.bincount(pairs // k, minlength=len(table))
    failing = [int(o) for o in np.flatnonzero(table.generating & (seen < k))]
    return not failing, failing
