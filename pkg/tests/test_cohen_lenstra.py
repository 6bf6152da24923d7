from fractions import Fraction

import pytest

from hurwitzkit.cohen_lenstra import (
    aut_order,
    aut_order_closed_form,
    beta_constant,
    brute_force_aut,
    brute_force_counts,
    draw_cokernel,
    enhom_bound_check,
    eta,
    find_failing_s,
    groups_up_to,
    hom_count,
    make_rng,
    moment_estimate,
    moments_from_groups,
    mu_mass,
    partitions_of,
    prescribed_s,
    sample_batch,
    sur_count,
    symplectic_group_order,
    symplectic_orbit_check,
    trivial_mass_readings,
    truncated_moment_identity,
)
from hurwitzkit.core.errors import ValidationError
from hurwitzkit.models import AbelianLGroupType


def group(*partition, l=3):
    return AbelianLGroupType(l=l, partition=partition)


def test_labels():
    assert group(2, 1).label() == "Z/9xZ/3"
    assert group().label() == "1"
    assert group(2, 1).key() == "2.1"
    assert group(2, 1).order == 27


def test_partition_must_be_non_increasing():
    with pytest.raises(ValueError):
        group(1, 2)


def test_partitions():
    assert len(partitions_of(4)) == 5
    assert len(groups_up_to(3, 2)) == 4


@pytest.mark.parametrize("partition,order", [((1, 1), 48), ((2,), 6), ((2, 1), 108), ((1,), 2), ((), 1)])
def test_aut_order(partition, order):
    A = group(*partition)
    assert aut_order(A) == order
    assert aut_order_closed_form(A) == order


def test_aut_order_brute_force():
    assert brute_force_aut(group(2, 1)) == 108


def test_hom_and_sur_counts():
    assert hom_count(group(2), group(1)) == 3
    assert sur_count(group(2), group(1)) == 2
    assert sur_count(group(1, 1), group(1)) == 8
    assert sur_count(group(1), group(2)) == 0


@pytest.mark.parametrize("B,A", [((2,), (1,)), ((1, 1), (1,)), ((2, 1), (1, 1)), ((2, 1), (2,))])
def test_counts_match_brute_force(B, A):
    hom, sur = brute_force_counts(group(*B), group(*A))
    assert hom == hom_count(group(*B), group(*A))
    assert sur == sur_count(group(*B), group(*A))


def test_trivial_mass():
    assert mu_mass(group()).value == pytest.approx(0.560126, abs=1e-6)
    assert eta(3).error < 1e-12
    readings = trivial_mass_readings(3)
    assert readings["prod(1-l^-i)"] == pytest.approx(0.560126, abs=1e-6)
    assert readings["1-prod(1-l^-i)"] == pytest.approx(0.439874, abs=1e-6)


def test_mass_of_cyclic_group():
    assert mu_mass(group(1)).value == pytest.approx(0.560126 / 2, abs=1e-6)


def test_beta_constant():
    assert beta_constant(3).value == pytest.approx(0.7853, abs=1e-3)


def test_truncated_moment_identity():
    identity = truncated_moment_identity(group(1), 3 ** 6)
    assert 0.98 < identity.value < 1.0 + 1e-9
    assert identity.beta_partial <= identity.beta_limit + 1e-9


def test_moment_cap_must_be_power():
    with pytest.raises(ValidationError):
        truncated_moment_identity(group(1), 100)


def test_prescribed_s():
    assert prescribed_s(group(1), Fraction(1, 2)) == 2


def test_enhom_bound():
    result = enhom_bound_check(group(1), Fraction(1, 2), 3 ** 5)
    assert result.holds
    assert result.s == 2
    assert result.c_A == 9
    assert result.checked > 0


def test_enhom_bound_fails_below_prescription():
    result = enhom_bound_check(group(1), Fraction(1, 2), 3 ** 5, s=1)
    assert not result.holds
    assert result.counterexample == (2,)
    assert find_failing_s(group(1), Fraction(1, 2), 3 ** 5) == (1, (2,))


def test_rng_streams_are_reproducible():
    a = make_rng(5, 2).integers(0, 1000, size=8)
    b = make_rng(5, 2).integers(0, 1000, size=8)
    c = make_rng(5, 3).integers(0, 1000, size=8)
    assert a.tolist() == b.tolist()
    assert a.tolist() != c.tolist()


def test_draw_cokernel_rejects_empty_matrix():
    with pytest.raises(ValidationError):
        draw_cokernel(0, 3, 4, make_rng(0))


def test_sample_batch_is_deterministic():
    first = sample_batch(4, 3, 200, seed=11)
    second = sample_batch(4, 3, 200, seed=11)
    assert first.groups == second.groups
    assert len(first.groups) == 200
    assert sum(first.masses().values()) == pytest.approx(1.0)


def test_trivial_moment():
    estimate = moment_estimate(group(), 6, 10, rng_seed=0)
    assert (estimate.mean, estimate.stderr) == (1.0, 0.0)


def test_moments_from_known_groups():
    estimate = moments_from_groups(group(1), [(), (1,), (1, 1)])
    assert estimate.mean == pytest.approx((0 + 2 + 8) / 3)


@pytest.mark.slow
def test_cokernel_statistics():
    batch = sample_batch(8, 3, 4000, seed=0, e_cap=4)
    assert batch.masses().get((), 0.0) == pytest.approx(0.560126, abs=0.04)
    estimate = moments_from_groups(group(1), batch.groups)
    assert abs(estimate.mean - 1) <= 4 * estimate.stderr + 0.02


@pytest.mark.slow
def test_sampler_independent_of_jobs():
    samples = 10_000 + 17
    assert sample_batch(5, 3, samples, 3, jobs=1).groups == sample_batch(5, 3, samples, 3, jobs=2).groups


def test_symplectic_group_orders():
    assert symplectic_group_order(1, 3, 1) == 24
    assert symplectic_group_order(2, 3, 1) == 51840


def test_symplectic_orbit_genus_one():
    result = symplectic_orbit_check(1, 3, 1, group(1), 2)
    assert result.group_order == 24
    assert result.surjections == 8
    assert result.nonempty and result.transitive
    assert result.fixed == 8


def test_symplectic_fixed_set_empty():
    # every surjection onto (Z/3)^2 is an isomorphism, never fixed by a multiplier-2 map
    result = symplectic_orbit_check(1, 3, 1, group(1, 1), 2)
    assert not result.nonempty
    assert result.surjections == 48


def test_symplectic_multiplier_must_be_admissible():
    with pytest.raises(ValidationError):
        symplectic_orbit_check(1, 3, 1, group(1), 1)


@pytest.mark.slow
def test_symplectic_orbit_genus_two():
    result = symplectic_orbit_check(2, 3, 1, group(1), 2)
    assert result.group_order == 51840
    assert result.nonempty and result.transitive
