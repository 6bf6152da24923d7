"""The presentation complex of B_n with coefficients in the permutation module on c^n.

Cells are indexed slot-major: a cell of C_1 is (sigma_i, x) at global index
(i - 1) * S + x and a cell of C_2 is (relator r, x) at r * S + x, where S is
the number of states.
"""

import logging
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..braids.action import ClassAction
from ..braids.orbits import check_budget, state_count
from ..core.errors import ChainMapError, ValidationError
from ..groups.group import ConjClass, Group
from ..linalg.sparse import SparseMatrix, from_arrays

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def braid_relators(n: int) -> List[Word]:
    """Relators of the Artin presentation as words of signed generator indices.

    The braid relators s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1 come
    first, then the commutators s_i s_j s_i^-1 s_j^-1 with j - i >= 2.
    """
    rels = [(i, i + 1, i, -(i + 1), -i, -(i + 1)) for i in range(1, n - 1)]
    rels += [(i, j, -i, -j) for i in range(1, n - 1) for j in range(i + 2, n)]
    return rels


def relator_count(n: int) -> int:
    if n < 2:
        return 0
    return (n - 2) + (n - 2) * (n - 3) // 2


def shift_word(word: Word, d: int) -> Word:
    """The image of a word under sigma_i -> sigma_{i+d}."""
    return tuple(s + d if s > 0 else s - d for s in word)


def conjugation_table(action: ClassAction) -> np.ndarray:
    """table[h, p] = class position of h^-1 g_p h."""
    group = action.group
    members = action.cls.member_array
    table = np.empty((group.order, action.k), dtype=np.int64)
    for h in range(group.order):
        table[h] = action.position[group.mul[group.mul[group.inv[h], members], h]]
    return table


def conjugate_codes(action: ClassAction, n: int, codes: np.ndarray, h: int,
                    table: np.ndarray = None) -> np.ndarray:
    """Codes of the tuples conjugated entrywise by h."""
    table = conjugation_table(action) if table is None else table
    out = np.zeros(len(codes), dtype=np.int64)
    for i in range(1, n + 1):
        out = out * action.k + table[h][action.digit(codes, n, i)]
    return out


class StateSpace:
    """Tuples in c^n, or their classes under simultaneous conjugation by G.

    States are numbered by increasing code; in the quotient a class is
    represented by its least code.
    """

    def __init__(self, action: ClassAction, n: int, quotient: bool = False,
                 max_states: Optional[int] = None):
        check_budget(action.cls, n, max_states)
        self.action = action
        self.n = n
        self.quotient = quotient
        all_codes = np.arange(state_count(action.cls, n), dtype=np.int64)
        if quotient:
            table = conjugation_table(action)
            canon = all_codes.copy()
            for h in range(action.group.order):
                np.minimum(canon, conjugate_codes(action, n, all_codes, h, table), out=canon)
            self._canon = canon
            self.codes = np.unique(canon)
        else:
            self._canon = None
            self.codes = all_codes

    def __len__(self) -> int:
        return len(self.codes)

    def canonical(self, codes: np.ndarray) -> np.ndarray:
        return codes if self._canon is None else self._canon[codes]

    def index_of(self, codes: np.ndarray) -> np.ndarray:
        """State indices of (canonical) codes."""
        idx = np.searchsorted(self.codes, codes)
        if np.any(idx >= len(self.codes)) or np.any(self.codes[np.minimum(idx, len(self.codes) - 1)] != codes):
            raise ValidationError("Code is not a state of this space")
        return idx

    def step(self, idx: np.ndarray, i: int, sign: int) -> np.ndarray:
        """State indices after sigma_i^sign."""
        moved = self.action.sigma(self.codes[idx], self.n, i, sign)
        return self.index_of(self.canonical(moved))

    @cached_property
    def labels(self) -> np.ndarray:
        """Braid orbit of each state, numbered by least member."""
        size = len(self)
        states = np.arange(size, dtype=np.int64)
        if self.n <= 1:
            return states
        sources = np.tile(states, self.n - 1)
        targets = np.concatenate([self.step(states, i, 1) for i in range(1, self.n)])
        graph = csr_matrix((np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(size, size))
        count, comps = connected_components(graph, directed=True, connection="weak")
        least = np.full(count, size, dtype=np.int64)
        np.minimum.at(least, comps, states)
        renumber = np.empty(count, dtype=np.int64)
        renumber[np.argsort(least, kind="stable")] = np.arange(count)
        return renumber[comps]


class _Entries(NamedTuple):
    row_state: np.ndarray
    row_slot: np.ndarray
    col_state: np.ndarray
    col_slot: np.ndarray
    values: np.ndarray


class CellBlock(NamedTuple):
    """The part of the complex over one braid orbit."""
    label: int
    states: np.ndarray
    d1: SparseMatrix
    d2: SparseMatrix


class PresentationComplex:
    """C_0 <- C_1 <- C_2 for B_n acting on a state space.

    d_1(sigma_i, x) = [sigma_i x] - [x]; d_2 sends (relator, x) to the Fox
    derivative of the relator read left to right from x.
    """

    def __init__(self, space: StateSpace, split: bool = True):
        if space.n < 2:
            raise ValidationError(f"The presentation complex needs n >= 2, got {space.n}")
        self.space = space
        self.n = space.n
        self.relators = braid_relators(space.n)
        self.split = split
        S = len(space)
        self.dims = (S, (self.n - 1) * S, len(self.relators) * S)

    def __repr__(self) -> str:
        return f"PresentationComplex(n={self.n}, dims={self.dims}, quotient={self.space.quotient})"

    @property
    def slots(self) -> Tuple[int, int, int]:
        return (1, self.n - 1, len(self.relators))

    @cached_property
    def _d1_entries(self) -> _Entries:
        S = len(self.space)
        states = np.arange(S, dtype=np.int64)
        parts = []
        for i in range(1, self.n):
            img = self.space.step(states, i, 1)
            slot = np.full(S, i - 1, dtype=np.int64)
            parts.append((img, states, slot, np.ones(S, dtype=np.int64)))
            parts.append((states, states, slot, -np.ones(S, dtype=np.int64)))
        row_state = np.concatenate([p[0] for p in parts])
        return _Entries(row_state, np.zeros_like(row_state),
                        np.concatenate([p[1] for p in parts]),
                        np.concatenate([p[2] for p in parts]),
                        np.concatenate([p[3] for p in parts]))

    @cached_property
    def _d2_entries(self) -> _Entries:
        S = len(self.space)
        states = np.arange(S, dtype=np.int64)
        rows, row_slots, cols, col_slots, vals = [], [], [], [], []
        for r, rel in enumerate(self.relators):
            y = states
            for letter in rel:
                i = abs(letter)
                if letter > 0:
                    edge, sign = y, 1
                    y = self.space.step(y, i, 1)
                else:
                    y = self.space.step(y, i, -1)
                    edge, sign = y, -1
                rows.append(edge)
                row_slots.append(np.full(S, i - 1, dtype=np.int64))
                cols.append(states)
                col_slots.append(np.full(S, r, dtype=np.int64))
                vals.append(np.full(S, sign, dtype=np.int64))
            if not np.array_equal(y, states):
                raise ChainMapError("Relator does not act trivially on states", {"relator": rel, "n": self.n})
        if not rows:
            empty = np.zeros(0, dtype=np.int64)
            return _Entries(empty, empty, empty, empty, empty)
        return _Entries(*(np.concatenate(a) for a in (rows, row_slots, cols, col_slots, vals)))

    def _global(self, entries: _Entries, row_degree: int) -> SparseMatrix:
        S = len(self.space)
        return from_arrays(
            self.dims[row_degree], self.dims[row_degree + 1],
            entries.row_slot * S + entries.row_state, entries.col_slot * S + entries.col_state,
            entries.values,
        )

    @cached_property
    def d1(self) -> SparseMatrix:
        return self._global(self._d1_entries, 0)

    @cached_property
    def d2(self) -> SparseMatrix:
        return self._global(self._d2_entries, 1)

    def differential(self, p: int) -> SparseMatrix:
        if p == 1:
            return self.d1
        if p == 2:
            return self.d2
        raise ValidationError(f"No differential d_{p} in a 2-complex")

    @cached_property
    def block_labels(self) -> np.ndarray:
        if self.split:
            return self.space.labels
        return np.zeros(len(self.space), dtype=np.int64)

    @cached_property
    def blocks(self) -> List[CellBlock]:
        """The complex split over braid orbits, with block-local cell numbering."""
        labels = self.block_labels
        count = int(labels.max()) + 1 if len(labels) else 0
        order = np.argsort(labels, kind="stable")
        starts = np.searchsorted(labels[order], np.arange(count + 1))
        local = np.empty(len(labels), dtype=np.int64)
        members = []
        for b in range(count):
            states = order[starts[b]:starts[b + 1]]
            local[states] = np.arange(len(states))
            members.append(states)
        d1_parts = self._split(self._d1_entries, labels, local, members, 0)
        d2_parts = self._split(self._d2_entries, labels, local, members, 1)
        return [CellBlock(b, members[b], d1_parts[b], d2_parts[b]) for b in range(count)]

    def _split(self, entries: _Entries, labels, local, members, row_degree: int) -> List[SparseMatrix]:
        row_slots, col_slots = self.slots[row_degree], self.slots[row_degree + 1]
        owner = labels[entries.col_state]
        if np.any(labels[entries.row_state] != owner):
            raise ChainMapError("A braid orbit block is not closed under the differential", {"n": self.n})
        order = np.argsort(owner, kind="stable")
        starts = np.searchsorted(owner[order], np.arange(len(members) + 1))
        out = []
        for b, states in enumerate(members):
            sel = order[starts[b]:starts[b + 1]]
            s = len(states)
            out.append(from_arrays(
                row_slots * s, col_slots * s,
                entries.row_slot[sel] * s + local[entries.row_state[sel]],
                entries.col_slot[sel] * s + local[entries.col_state[sel]],
                entries.values[sel],
            ))
        return out

    def cell_index(self, block: CellBlock, p: int) -> np.ndarray:
        """Global C_p index of each block-local C_p cell."""
        S = len(self.space)
        return np.concatenate([slot * S + block.states for slot in range(self.slots[p])])

    def cell_blocks(self, p: int) -> np.ndarray:
        """Block index of each global C_p cell."""
        return np.tile(self.block_labels, self.slots[p])

    def check(self) -> None:
        if not (self.d1 @ self.d2).is_zero():
            raise ChainMapError("d_1 d_2 != 0 in the presentation complex", {"n": self.n})


def fox_complex(group: Group, cls: ConjClass, n: int, quotient_by_G: bool = False,
                max_states: Optional[int] = None, split: bool = True,
                action: ClassAction = None) -> PresentationComplex:
    """The presentation complex of B_n with coefficients in Q[c^n] (or Q[c^n / G])."""
    if n < 2:
        raise ValidationError(f"fox_complex needs n >= 2, got {n}")
    action = action or ClassAction(group, cls)
    space = StateSpace(action, n, quotient=quotient_by_G, max_states=max_states)
    cplx = PresentationComplex(space, split=split)
    logger.debug(f"Presentation complex for n={n}: dims {cplx.dims}, {relator_count(n)} relators")
    return cplx


def prefix_chain_maps(source: PresentationComplex, target: PresentationComplex,
                      prefixes: Sequence[Tuple[int, int]], length: int) -> Tuple[SparseMatrix, ...]:
    """Chain maps C_p(source) -> C_p(target), p = 0, 1, 2, from prefix concatenation.

    ``prefixes`` are (coefficient, code) pairs for tuples of the given
    length; a cell over x goes to the sum of the cells over (u, x) and
    sigma_i is shifted to sigma_{i+length}.
    """
    if target.n != source.n + length:
        raise ValidationError(f"Target has n={target.n}, expected {source.n + length}")
    S = len(source.space)
    states = np.arange(S, dtype=np.int64)
    scale = source.space.action.k ** source.n
    images = []
    for coeff, code in prefixes:
        joined = code * scale + source.space.codes
        images.append((coeff, target.space.index_of(target.space.canonical(joined))))

    relator_index: Dict[Word, int] = {w: r for r, w in enumerate(target.relators)}
    slot_maps = [
        [0],
        [i - 1 + length for i in range(1, source.n)],
        [relator_index[shift_word(w, length)] for w in source.relators],
    ]
    maps = []
    for p in range(3):
        S_t = len(target.space)
        rows, cols, vals = [], [], []
        for slot, t_slot in enumerate(slot_maps[p]):
            for coeff, idx in images:
                rows.append(t_slot * S_t + idx)
                cols.append(slot * S + states)
                vals.append(np.full(S, coeff, dtype=np.int64))
        maps.append(_assemble(target.dims[p], source.dims[p], rows, cols, vals))
    return tuple(maps)


def conjugation_chain_maps(cplx: PresentationComplex, elements: Sequence[int]) -> Tuple[SparseMatrix, ...]:
    """Sum over h in ``elements`` of the cellular maps induced by conjugating tuples by h."""
    if cplx.space.quotient:
        raise ValidationError("Conjugation acts trivially on the G-quotient")
    action = cplx.space.action
    table = conjugation_table(action)
    S = len(cplx.space)
    states = np.arange(S, dtype=np.int64)
    images = [cplx.space.index_of(conjugate_codes(action, cplx.n, cplx.space.codes, h, table))
              for h in elements]
    maps = []
    for p in range(3):
        rows, cols, vals = [], [], []
        for slot in range(cplx.slots[p]):
            for idx in images:
                rows.append(slot * S + idx)
                cols.append(slot * S + states)
                vals.append(np.ones(S, dtype=np.int64))
        maps.append(_assemble(cplx.dims[p], cplx.dims[p], rows, cols, vals))
    return tuple(maps)


def _assemble(rows: int, cols: int, r, c, v) -> SparseMatrix:
    if not r:
        return SparseMatrix(rows, cols)
    return from_arrays(rows, cols, np.concatenate(r), np.concatenate(c), np.concatenate(v))


def check_chain_map(source: PresentationComplex, target: PresentationComplex,
                    maps: Sequence[SparseMatrix]) -> None:
    """Raise ChainMapError unless d f = f d in both degrees."""
    f0, f1, f2 = maps
    if target.d1 @ f1 != f0 @ source.d1:
        raise ChainMapError("d_1 f_1 != f_0 d_1", {"source_n": source.n, "target_n": target.n})
    if target.d2 @ f2 != f1 @ source.d2:
        raise ChainMapError("d_2 f_2 != f_1 d_2", {"source_n": source.n, "target_n": target.n})
