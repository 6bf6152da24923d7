"""The braid group action on tuples of group elements.

sigma_j sends (..., g_j, g_{j+1}, ...) to (..., g_j g_{j+1} g_j^-1, g_j, ...);
its inverse sends (..., x, y, ...) to (..., y, y^-1 x y, ...).
"""

from typing import Sequence, Tuple

import numpy as np

from ..core.errors import ValidationError
from ..groups.group import ConjClass, Group, generated_subgroup


def braid_act(group: Group, j: int, sign: int, t: Sequence[int]) -> Tuple[int, ...]:
    """Apply sigma_j (sign +1) or its inverse (sign -1) to a tuple of element indices."""
    n = len(t)
    if not 1 <= j <= n - 1:
        raise ValidationError(f"Strand index {j} out of range for n = {n}")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {sign}")
    out = list(t)
    a, b = t[j - 1], t[j]
    if sign == 1:
        out[j - 1], out[j] = group.product(a, b, int(group.inv[a])), a
    else:
        out[j - 1], out[j] = b, group.conjugate(a, b)
    return tuple(out)


def boundary(group: Group, t: Sequence[int]) -> int:
    """Boundary monodromy g_1 g_2 ... g_n."""
    return group.product(*t)


def global_monodromy(group: Group, t: Sequence[int]) -> frozenset:
    """The subgroup generated by the entries."""
    return generated_subgroup(group, t)


def nielsen_multiset(group: Group, t: Sequence[int]) -> Tuple[int, ...]:
    """Sorted least members of the classes of the entries."""
    least = {}
    for cls in group.conjugacy_classes:
        for g in cls.members:
            least[g] = cls.members[0]
    return tuple(sorted(least[g] for g in t))


class ClassAction:
    """Braid generators acting on base-|c| codes of tuples in c^n.

    Digit positions are most significant first, so numeric order on codes
    is lexicographic order on tuples of class positions.
    """

    def __init__(self, group: Group, cls: ConjClass):
        self.group = group
        self.cls = cls
        self.k = len(cls)
        members = cls.member_array
        pos = np.full(group.order, -1, dtype=np.int64)
        pos[members] = np.arange(self.k)
        # conj[a, b] = position of g_a g_b g_a^-1, conj_inv[a, b] = position of g_a^-1 g_b g_a
        prod_ab = group.mul[np.ix_(members, members)]
        self.conj = pos[group.mul[prod_ab, group.inv[members][:, None]]]
        inv_ab = group.mul[np.ix_(group.inv[members], members)]
        self.conj_inv = pos[group.mul[inv_ab, members[:, None]]]
        self.position = pos

    def weights(self, n: int) -> np.ndarray:
        return self.k ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def digit(self, codes: np.ndarray, n: int, i: int) -> np.ndarray:
        """Digit at 1-based position i."""
        return (codes // self.k ** (n - i)) % self.k

    def sigma(self, codes: np.ndarray, n: int, j: int, sign: int = 1) -> np.ndarray:
        """Vectorized sigma_j^sign on an array of codes."""
        wa, wb = self.k ** (n - j), self.k ** (n - j - 1)
        a = (codes // wa) % self.k
        b = (codes // wb) % self.k
        if sign == 1:
            new_a, new_b = self.conj[a, b], a
        else:
            new_a, new_b = b, self.conj_inv[b, a]
        return codes + (new_a - a) * wa + (new_b - b) * wb

    def encode(self, t: Sequence[int]) -> int:
        """Code of a tuple of element indices."""
        code = 0
        for g in t:
            p = int(self.position[g])
            if p < 0:
                raise ValidationError(f"Element {g} is not in the conjugacy class")
            code = code * self.k + p
        return code

    def decode(self, code: int, n: int) -> Tuple[int, ...]:
        """Tuple of element indices for a code."""
        digits = []
        for _ in range(n):
            code, d = divmod(code, self.k)
            digits.append(self.cls.members[d])
        return tuple(reversed(digits))

    def boundaries(self, codes: np.ndarray, n: int) -> np.ndarray:
        members = self.cls.member_array
        prod = np.zeros(len(codes), dtype=np.int64)
        for i in range(1, n + 1):
            prod = self.group.mul[prod, members[self.digit(codes, n, i)]]
        return prod

    def digit_masks(self, codes: np.ndarray, n: int) -> np.ndarray:
        """Bitmask of class positions occurring in each tuple (|c| <= 62)."""
        mask = np.zeros(len(codes), dtype=np.int64)
        for i in range(1, n + 1):
            mask |= np.left_shift(np.int64(1), self.digit(codes, n, i))
        return mask
