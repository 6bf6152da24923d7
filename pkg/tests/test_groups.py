import numpy as np
import pytest

from hurwitzkit.core.errors import ValidationError
from hurwitzkit.groups import (
    build_group,
    generated_subgroup,
    involution_classes,
    is_nonsplitting,
    is_rational_class,
    load_group,
    load_pair,
    parse_cycles,
    parse_group_spec,
    preset_group,
    resolve_class,
    subgroups,
)


@pytest.mark.parametrize("name,order", [("S3", 6), ("S4", 24), ("A4", 12), ("D5", 10), ("Z4", 4)])
def test_preset_orders(name, order):
    assert preset_group(name).order == order


def test_dihedral_preset():
    group = load_group("dihedral(3; 2)")
    assert group.order == 18


def test_unknown_preset():
    with pytest.raises(ValidationError):
        preset_group("S99")


def test_parse_cycles():
    assert list(parse_cycles("(1 2 3)", 3)) == [1, 2, 0]
    assert list(parse_cycles("()", 2)) == [0, 1]


@pytest.mark.parametrize("text", ["(1 1)", "(0 1)", "1 2", "(1 a)"])
def test_parse_cycles_rejects(text):
    with pytest.raises(ValidationError):
        parse_cycles(text, 3)


def test_group_spec_text():
    group = parse_group_spec("perm: (1 2 3)\nperm: (1 2)\n")
    assert group.order == 6
    assert not group.is_abelian


def test_identity_and_inverses(s3_pair):
    group, _ = s3_pair
    assert np.array_equal(group.permutations[0], np.arange(group.degree))
    for g in range(group.order):
        assert group.product(g, int(group.inv[g])) == 0


def test_conjugate_is_right_action(s3_pair):
    group, _ = s3_pair
    for g in range(group.order):
        for h in range(group.order):
            assert group.conjugate(g, h) == group.product(int(group.inv[h]), g, h)


def test_transposition_class(s3_pair):
    group, cls = s3_pair
    assert len(cls) == 3
    assert cls.class_order == 2
    for g in cls.members:
        assert g in cls


def test_class_by_index(s3_pair):
    group, cls = s3_pair
    assert resolve_class(group, f"#{cls.members[0]}").members == cls.members


def test_involution_needs_unique_class():
    group = preset_group("S4")
    with pytest.raises(ValidationError):
        resolve_class(group, "involution")


@pytest.mark.parametrize("spec,rep,ok", [
    ("S3", "(1 2)", True),
    ("dihedral(3; 2)", "involution", True),
    ("A4", "(1 2 3)", True),
    ("S4", "(1 2)", False),
])
def test_nonsplitting(spec, rep, ok):
    group, cls = load_pair(spec, rep)
    verdict = is_nonsplitting(group, cls)
    assert verdict.ok is ok
    if not ok:
        assert verdict.witness is not None


def test_rational_classes():
    assert is_rational_class(*load_pair("S3", "(1 2)"))
    assert not is_rational_class(*load_pair("A4", "(1 2 3)"))


@pytest.mark.parametrize("spec,count", [("S3", 6), ("Z4", 3), ("Z2", 2), ("A4", 10)])
def test_subgroup_counts(spec, count):
    assert len(subgroups(load_group(spec))) == count


def test_trivial_group():
    group = build_group([])
    assert group.order == 1
    assert len(group.subgroup_list) == 1
    assert [c.members for c in group.conjugacy_classes] == [(0,)]


def test_subgroups_are_closed(s3_pair):
    group, _ = s3_pair
    found = group.subgroup_list
    assert found.subgroups[0] == (0,)
    assert found.subgroups[-1] == tuple(range(group.order))
    for h in found:
        assert 0 in h
        members = set(h)
        assert all(int(group.mul[a, b]) in members for a in h for b in h)
        assert all(int(group.inv[a]) in members for a in h)
        assert found.id_of(h) == found.subgroups.index(h)


@pytest.mark.parametrize("spec", ["S3", "A4", "D5", "dihedral(3; 2)"])
def test_multiplication_is_associative(spec):
    group = load_group(spec)
    m = group.mul
    idx = np.arange(group.order)
    left = m[m[:, :, None], idx[None, None, :]]
    right = m[idx[:, None, None], m[None, :, :]]
    assert np.array_equal(left, right)


@pytest.mark.parametrize("spec", ["S4", "dihedral(3; 1,1)"])
def test_conjugation_preserves_order(spec):
    group = load_group(spec)
    for cls in group.conjugacy_classes:
        assert {int(group.order_of[g]) for g in cls.members} == {cls.class_order}
        for g in cls.members:
            for h in range(group.order):
                assert group.conjugate(g, h) in cls


@pytest.mark.parametrize("spec", ["dihedral(5; 1)", "dihedral(3; 2)", "D5"])
def test_dihedral_involutions_nonsplitting(spec):
    group = load_group(spec)
    classes = involution_classes(group)
    assert len(classes) == 1
    verdict = is_nonsplitting(group, classes[0])
    assert verdict.ok
    assert verdict.witness is None


@pytest.mark.parametrize("spec,rep", [
    ("S3", "(1 2)"), ("A4", "(1 2 3)"), ("S4", "(1 2)"), ("S4", "(1 2)(3 4)"), ("dihedral(3; 1)", "involution"),
])
def test_nonsplitting_implies_generating(spec, rep):
    group, cls = load_pair(spec, rep)
    verdict = is_nonsplitting(group, cls)
    if verdict.ok:
        assert len(generated_subgroup(group, cls.members)) == group.order
    else:
        assert verdict.witness.reason in ("not-generating", "split")
