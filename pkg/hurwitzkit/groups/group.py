"""Finite groups materialized as multiplication tables.

Products compose left to right: ``mul[a][b]`` is the element "a then b",
so for permutations ``(a*b)[x] = b[a[x]]``. Conjugation is
``g^h = h^-1 g h``.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import SizeLimitError, ValidationError
from .permutation import is_permutation, pad, to_cycles

logger = logging.getLogger(__name__)

_KEY_LIMIT = 2 ** 62


class Group:
    """A finite permutation group with a full multiplication table.

    Element 0 is the identity; elements are ordered breadth-first from the
    identity, each layer sorted by the lexicographic order of the image
    arrays.
    """

    def __init__(self, permutations: np.ndarray, generator_indices: Sequence[int], name: str = ""):
        self.permutations = permutations
        self.generator_indices = list(generator_indices)
        self.name = name
        self.order = len(permutations)
        self.degree = permutations.shape[1]
        self._base = _choose_base(permutations)
        keys = self._keys(permutations)
        self._sorter = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sorter]
        self.mul = self._build_table()
        self.inv = np.argmax(self.mul == 0, axis=1).astype(np.int64)
        self.order_of = self._element_orders()
        self.permutations.setflags(write=False)
        self.mul.setflags(write=False)

    def __repr__(self) -> str:
        return f"Group({self.name or 'anonymous'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def _keys(self, perms: np.ndarray) -> np.ndarray:
        keys = np.zeros(len(perms), dtype=np.int64)
        for col in self._base:
            keys = keys * self.degree + perms[:, col]
        return keys

    def _lookup_keys(self, keys: np.ndarray) -> np.ndarray:
        pos = np.minimum(np.searchsorted(self._sorted_keys, keys), self.order - 1)
        return self._sorter[pos]

    def _build_table(self) -> np.ndarray:
        perms = self.permutations
        base = np.array(self._base, dtype=np.int64)
        table = np.empty((self.order, self.order), dtype=np.int64)
        for a in range(self.order):
            # row a holds a*b for all b: image of x is perms[b][perms[a][x]]
            images = perms[:, perms[a][base]] if len(base) else np.zeros((self.order, 0), dtype=np.int64)
            keys = np.zeros(self.order, dtype=np.int64)
            for i in range(images.shape[1]):
                keys = keys * self.degree + images[:, i]
            table[a] = self._lookup_keys(keys)
        return table

    def _element_orders(self) -> np.ndarray:
        idx = np.arange(self.order)
        orders = np.zeros(self.order, dtype=np.int64)
        power = idx.copy()
        k = 1
        while (orders == 0).any():
            orders[(power == 0) & (orders == 0)] = k
            power = self.mul[power, idx]
            k += 1
        return orders

    def index_of(self, perm: Sequence[int]) -> int:
        """Element index of a permutation, raising if it is not in the group."""
        arr = pad(perm, self.degree)
        if len(arr) != self.degree or not is_permutation(arr):
            raise ValidationError(f"Not a permutation of degree {self.degree}: {list(perm)}")
        idx = int(self._lookup_keys(self._keys(arr[None, :]))[0])
        if not np.array_equal(self.permutations[idx], arr):
            raise ValidationError(f"Permutation {to_cycles(arr)} is not an element of {self!r}")
        return idx

    def product(self, *elements: int) -> int:
        acc = 0
        for e in elements:
            acc = int(self.mul[acc, e])
        return acc

    def conjugate(self, g: int, h: int) -> int:
        """g^h = h^-1 g h."""
        return int(self.mul[self.mul[self.inv[h], g], h])

    def power(self, g: int, k: int) -> int:
        k %= int(self.order_of[g])
        acc = 0
        for _ in range(k):
            acc = int(self.mul[acc, g])
        return acc

    def label(self, g: int) -> str:
        return to_cycles(self.permutations[g])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def conjugacy_classes(self) -> List["ConjClass"]:
        """All classes, ordered by least member."""
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for g in range(self.order):
            if not seen[g]:
                cls = conjugacy_class(self, g)
                seen[list(cls.members)] = True
                classes.append(cls)
        return classes

    @cached_property
    def subgroup_list(self) -> "SubgroupList":
        return subgroups(self)


def _choose_base(perms: np.ndarray) -> List[int]:
    """Greedy list of points whose images separate all elements."""
    n, d = perms.shape
    base: List[int] = []
    keys = np.zeros(n, dtype=np.int64)
    distinct = 1
    while distinct < n:
        best_col, best_count = None, distinct
        for col in range(d):
            if col in base:
                continue
            count = len(np.unique(keys * d + perms[:, col]))
            if count > best_count:
                best_col, best_count = col, count
        if best_col is None:
            raise ValidationError("Duplicate permutations in group closure")
        base.append(best_col)
        if d ** len(base) >= _KEY_LIMIT:
            raise SizeLimitError("Permutation degree too large for table keys", {"degree": d})
        keys = keys * d + perms[:, best_col]
        distinct = best_count
    return base


def build_group(generator_permutations: Iterable[Sequence[int]], name: str = "",
                size_cap: Optional[int] = None) -> Group:
    """Close a set of permutations under composition."""
    cap = size_cap if size_cap is not None else get_config().limits.group_size_cap
    gens = [np.asarray(g, dtype=np.int64) for g in generator_permutations]
    degree = max([len(g) for g in gens] + [1])
    gens = [pad(g, degree) for g in gens]
    for g in gens:
        if not is_permutation(g):
            raise ValidationError(f"Generator is not a permutation: {g.tolist()}")

    identity = tuple(range(degree))
    seen: Dict[Tuple[int, ...], int] = {identity: 0}
    ordered: List[Tuple[int, ...]] = [identity]
    layer = [identity]
    while layer:
        fresh = set()
        for x in layer:
            xa = np.array(x)
            for g in gens:
                # x then g
                y = tuple(int(v) for v in g[xa])
                if y not in seen and y not in fresh:
                    fresh.add(y)
        layer = sorted(fresh)
        for y in layer:
            seen[y] = len(ordered)
            ordered.append(y)
        if len(ordered) > cap:
            raise SizeLimitError(f"Group closure exceeds size cap {cap}", {"name": name or "anonymous"})

    perms = np.array(ordered, dtype=np.int64).reshape(len(ordered), degree)
    generator_indices = [seen[tuple(int(v) for v in g)] for g in gens]
    group = Group(perms, generator_indices, name=name)
    logger.debug(f"Built group {name or 'anonymous'} of order {group.order}")
    return group


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class c of a group."""

    group: Group = field(compare=False, repr=False)
    members: Tuple[int, ...]
    class_order: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self._positions

    @cached_property
    def _positions(self) -> Dict[int, int]:
        return {g: i for i, g in enumerate(self.members)}

    def position(self, g: int) -> int:
        """Index of a member inside the sorted member list."""
        return self._positions[g]

    @cached_property
    def member_array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)


def conjugacy_class(group: Group, element: int) -> ConjClass:
    """The conjugation orbit of an element, sorted."""
    if not 0 <= element < group.order:
        raise ValidationError(f"Element index {element} out of range for {group!r}")
    every = np.arange(group.order)
    orbit = group.mul[group.mul[group.inv, element], every]
    members = tuple(sorted(set(int(x) for x in orbit)))
    return ConjClass(group=group, members=members, class_order=int(group.order_of[element]))


def generated_subgroup(group: Group, generators: Iterable[int]) -> FrozenSet[int]:
    """Elements of the subgroup generated by the given elements."""
    gens = np.array(sorted(set(int(g) for g in generators)), dtype=np.int64)
    members = np.zeros(group.order, dtype=bool)
    members[0] = True
    if len(gens) == 0:
        return frozenset([0])
    frontier = np.array([0], dtype=np.int64)
    while len(frontier):
        products = np.unique(group.mul[np.ix_(frontier, gens)])
        frontier = products[~members[products]]
        members[frontier] = True
    return frozenset(int(x) for x in np.flatnonzero(members))


@dataclass(frozen=True)
class SubgroupList:
    """Every subgroup of a group, sorted by (order, elements)."""

    subgroups: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    @cached_property
    def _ids(self) -> Dict[FrozenSet[int], int]:
        return {frozenset(h): i for i, h in enumerate(self.subgroups)}

    def id_of(self, elements: Iterable[int]) -> int:
        return self._ids[frozenset(elements)]


def subgroups(group: Group) -> SubgroupList:
    """All subgroups by layered closure: cyclic subgroups, then joins to a fixpoint."""
    cap = get_config().limits.group_size_cap
    if group.order > cap:
        raise SizeLimitError(f"Group order {group.order} exceeds cap {cap}")

    cyclic = {generated_subgroup(group, [g]) for g in range(group.order)}
    found = set(cyclic)
    layer = set(cyclic)
    while layer:
        fresh = set()
        for h in layer:
            for c in cyclic:
                if c <= h:
                    continue
                joined = generated_subgroup(group, h | c)
                if joined not in found:
                    fresh.add(joined)
        found |= fresh
        layer = fresh
    ordered = sorted((tuple(sorted(h)) for h in found), key=lambda h: (len(h), h))
    logger.debug(f"{group!r} has {len(ordered)} subgroups")
    return SubgroupList(tuple(ordered))
