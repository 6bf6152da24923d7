"""Permutation parsing for group specifications."""

import re
from typing import List, Sequence

import numpy as np
from sympy.combinatorics import Permutation

from ..core.errors import ValidationError

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int = 0) -> np.ndarray:
    """Parse 1-based cycle notation such as ``(1 2)(3 4 5)`` into an image array.

    The returned array is 0-based: ``perm[x]`` is the image of point ``x``.
    ``()`` or an empty string is the identity.
    """
    text = text.strip()
    if text in ("", "()", "e", "id"):
        return np.arange(max(degree, 1), dtype=np.int64)

    stripped = _CYCLE.sub("", text).strip()
    if stripped:
        raise ValidationError(f"Invalid cycle notation: {text!r}")

    cycles: List[List[int]] = []
    for body in _CYCLE.findall(text):
        points = [p for p in re.split(r"[\s,]+", body.strip()) if p]
        try:
            cycle = [int(p) - 1 for p in points]
        except ValueError:
            raise ValidationError(f"Non-integer point in cycle {body!r}")
        if any(p < 0 for p in cycle):
            raise ValidationError(f"Points are numbered from 1: {text!r}")
        if len(set(cycle)) != len(cycle):
            raise ValidationError(f"Repeated point in cycle {body!r}")
        if cycle:
            cycles.append(cycle)

    size = max([degree] + [max(c) + 1 for c in cycles])
    perm = Permutation(cycles, size=size) if cycles else Permutation(size - 1)
    return np.array(perm.array_form, dtype=np.int64)


def pad(perm: Sequence[int], degree: int) -> np.ndarray:
    """Extend a permutation by fixed points up to ``degree``."""
    arr = np.asarray(perm, dtype=np.int64)
    if len(arr) >= degree:
        return arr
    return np.concatenate([arr, np.arange(len(arr), degree, dtype=np.int64)])


def is_permutation(perm: Sequence[int]) -> bool:
    arr = np.asarray(perm)
    return arr.ndim == 1 and np.array_equal(np.sort(arr), np.arange(len(arr)))


def to_cycles(perm: Sequence[int]) -> str:
    """Format an image array back into 1-based cycle notation."""
    cyclic = Permutation(list(int(x) for x in perm)).cyclic_form
    if not cyclic:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyclic)
