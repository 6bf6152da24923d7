import itertools

import numpy as np
import pytest

from hurwitzkit.braids import (
    ClassAction,
    ComponentRing,
    braid_act,
    boundary,
    central_check,
    components_stable,
    enumerate_orbits,
    find_stabilizer_U,
    nielsen_multiset,
    prescribed_prefix_check,
    zero_tail_start,
)
from hurwitzkit.core.errors import BudgetExceededError, ValidationError
from hurwitzkit.groups import load_pair


def test_sigma_and_inverse(s3_pair):
    group, cls = s3_pair
    for t in itertools.product(cls.members, repeat=3):
        for j in (1, 2):
            moved = braid_act(group, j, 1, t)
            assert braid_act(group, j, -1, moved) == t
            assert boundary(group, moved) == boundary(group, t)


def test_braid_act_rejects_bad_strand(s3_pair):
    group, cls = s3_pair
    with pytest.raises(ValidationError):
        braid_act(group, 2, 1, cls.members[:2])


def test_vectorized_sigma_matches_tuples(s3_pair):
    group, cls = s3_pair
    action = ClassAction(group, cls)
    codes = np.arange(len(cls) ** 3)
    for j in (1, 2):
        moved = action.sigma(codes, 3, j)
        for code, new in zip(codes.tolist(), moved.tolist()):
            assert action.decode(new, 3) == braid_act(group, j, 1, action.decode(code, 3))


@pytest.mark.parametrize("n,count", [(0, 1), (1, 3), (2, 5)])
def test_s3_orbit_counts(s3_pair, n, count):
    table = enumerate_orbits(*s3_pair, n)
    assert len(table) == count
    assert int(table.sizes.sum()) == 3 ** n


def test_s3_degree_two_orbits(s3_pair):
    table = enumerate_orbits(*s3_pair, 2)
    assert sorted(table.sizes.tolist()) == [1, 1, 1, 3, 3]
    assert table.generating_count == 2
    ok, missing = prescribed_prefix_check(table)
    assert ok and missing == []


def test_nielsen_ids_follow_class_multisets(s3_pair):
    group, cls = s3_pair
    table = enumerate_orbits(group, cls, 3)
    records = table.records()
    multisets = {nielsen_multiset(group, r.canonical_rep) for r in records}
    assert len(multisets) == 1
    assert [r.nielsen_id for r in records] == [0] * len(table)
    other = next(c for c in group.conjugacy_classes if c.members[0] not in cls.members)
    mixed = (cls.members[0], other.members[0])
    assert nielsen_multiset(group, mixed) != nielsen_multiset(group, (cls.members[0],) * 2)


def test_orbit_labels_are_braid_invariant(s3_pair):
    group, cls = s3_pair
    table = enumerate_orbits(group, cls, 4)
    action = table.action
    codes = np.arange(len(cls) ** 4)
    for j in (1, 2, 3):
        assert np.array_equal(table.labels[action.sigma(codes, 4, j)], table.labels)
    assert table.spot_check(samples=32, seed=3)


def test_orbits_numbered_by_least_code(s3_pair):
    table = enumerate_orbits(*s3_pair, 3)
    assert list(table.canonical) == sorted(table.canonical)
    for orbit_id in range(len(table)):
        assert table.members(orbit_id).min() == table.canonical[orbit_id]


def test_state_budget(s3_pair):
    with pytest.raises(BudgetExceededError):
        enumerate_orbits(*s3_pair, 5, max_states=100)


def test_budget_from_config(s3_pair, config):
    config.limits.max_states = 10
    with pytest.raises(BudgetExceededError):
        enumerate_orbits(*s3_pair, 3)


def test_ring_relation(s3_pair):
    group, cls = s3_pair
    ring = ComponentRing(group, cls)
    for g, h in itertools.product(cls.members, repeat=2):
        conj = group.product(g, h, int(group.inv[g]))
        left = ring.multiply(ring.generator(g), ring.generator(h))
        right = ring.multiply(ring.generator(conj), ring.generator(g))
        assert left == right


def test_u_element_is_central(s3_pair):
    ring = ComponentRing(*s3_pair)
    u = ring.u_element(1)
    assert u.degree == 2
    assert central_check(ring, u, 6)


def test_abelian_ring_is_polynomial(z2_pair):
    ring = ComponentRing(*z2_pair)
    assert [ring.dim(n) for n in range(6)] == [1] * 6


def test_zero_tail_start():
    assert zero_tail_start([3, 2, 0, 0]) == 2
    assert zero_tail_start([1, 0, 1]) is None
    assert zero_tail_start([0, 0]) == 0


def test_stabilizer_refuses_splitting_pair():
    with pytest.raises(ValidationError):
        find_stabilizer_U(*load_pair("S4", "(1 2)"), d_max=2, n_max=4)


@pytest.mark.slow
def test_s3_components_stabilize(s3_pair):
    descriptor = find_stabilizer_U(*s3_pair, d_max=4, n_max=8)
    assert descriptor.found
    assert descriptor.D <= 4
    assert components_stable(descriptor)
