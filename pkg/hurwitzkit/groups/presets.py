"""Named groups and the plain-text group specification format.

A specification is one line per directive::

    perm: (1 2)
    perm: (1 2 3)

or a single ``preset:`` line naming one of S3, S4, S5, A4, D5, Z2, Z4 or
``dihedral(l; e1,e2,...)`` for A⋊Z/2 with A = ⊕ Z/l^ei acting on itself by
translations and negation.
"""

import itertools
import re
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from ..core.errors import ValidationError
from .group import ConjClass, Group, build_group, conjugacy_class
from .permutation import parse_cycles
from .properties import involution_classes


def _symmetric(n: int) -> List[np.ndarray]:
    return [parse_cycles("(1 2)", n), parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n)]


PRESETS: Dict[str, Callable[[], List[np.ndarray]]] = {
    "S3": lambda: _symmetric(3),
    "S4": lambda: _symmetric(4),
    "S5": lambda: _symmetric(5),
    "A4": lambda: [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)],
    "D5": lambda: [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)],
    "Z2": lambda: [parse_cycles("(1 2)", 2)],
    "Z4": lambda: [parse_cycles("(1 2 3 4)", 4)],
}

_DIHEDRAL = re.compile(r"^dihedral\(\s*(\d+)\s*;\s*([\d,\s]*)\)$")


def dihedral_generators(l: int, partition: Sequence[int]) -> List[np.ndarray]:
    """Permutations of A = ⊕ Z/l^ei generating A⋊Z/2 (translations and x -> -x)."""
    moduli = [l ** e for e in partition]
    points = list(itertools.product(*[range(m) for m in moduli])) or [()]
    index = {p: i for i, p in enumerate(points)}

    def as_perm(fn) -> np.ndarray:
        return np.array([index[fn(p)] for p in points], dtype=np.int64)

    gens = []
    for axis, m in enumerate(moduli):
        gens.append(as_perm(lambda p, a=axis, m=m: tuple((x + 1) % m if i == a else x for i, x in enumerate(p))))
    gens.append(as_perm(lambda p: tuple((-x) % m for x, m in zip(p, moduli))))
    return gens


def preset_group(name: str) -> Group:
    """Build a preset group by name."""
    key = name.strip()
    if key in PRESETS:
        return build_group(PRESETS[key](), name=key)
    match = _DIHEDRAL.match(key)
    if match:
        l = int(match.group(1))
        parts = [int(p) for p in re.split(r"[,\s]+", match.group(2).strip()) if p]
        if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
            raise ValidationError(f"Partition must be positive and non-increasing: {parts}")
        return build_group(dihedral_generators(l, parts), name=key)
    raise ValidationError(f"Unknown preset {name!r}; expected one of {', '.join(PRESETS)} or dihedral(l; e1,...)")


def parse_group_spec(text: str) -> Group:
    """Parse the ``perm:`` / ``preset:`` text format."""
    perms = []
    preset = None
    for raw in re.split(r"[\n;]+(?![^()]*\))", text):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValidationError(f"Expected 'perm:' or 'preset:' directive, got {line!r}")
        key, value = (s.strip() for s in line.split(":", 1))
        if key == "perm":
            perms.append(parse_cycles(value))
        elif key == "preset":
            if preset is not None:
                raise ValidationError("Only one preset line is allowed")
            preset = value
        else:
            raise ValidationError(f"Unknown group directive {key!r}")
    if preset is not None:
        if perms:
            raise ValidationError("A group spec uses either perm lines or one preset, not both")
        return preset_group(preset)
    return build_group(perms, name="perm")


def load_group(spec: str) -> Group:
    """Resolve a CLI --group value: a file path, spec text, or a bare preset name."""
    path = Path(spec)
    if path.exists() and path.is_file():
        return parse_group_spec(path.read_text(encoding="utf-8"))
    if ":" in spec:
        return parse_group_spec(spec)
    return preset_group(spec)


def resolve_class(group: Group, class_rep: str) -> ConjClass:
    """Resolve a CLI --class-rep value.

    Accepts cycle notation for a representative, ``#k`` for element index k,
    or ``involution`` when the group has exactly one class of involutions.
    """
    rep = class_rep.strip()
    if rep == "involution":
        classes = involution_classes(group)
        if len(classes) != 1:
            raise ValidationError(f"{group!r} has {len(classes)} involution classes; give a representative")
        return classes[0]
    if rep.startswith("#"):
        try:
            return conjugacy_class(group, int(rep[1:]))
        except ValueError:
            raise ValidationError(f"Bad element index {rep!r}")
    return conjugacy_class(group, group.index_of(parse_cycles(rep, group.degree)))


def load_pair(group_spec: str, class_rep: str) -> Tuple[Group, ConjClass]:
    group = load_group(group_spec)
    return group, resolve_class(group, class_rep)
