import itertools

import pytest

from hurwitzkit.cohen_lenstra import make_rng
from hurwitzkit.core.errors import ValidationError
from hurwitzkit.function_field import (
    HyperellipticCurve,
    cantor_add,
    check_annihilation,
    cl_census,
    enumerate_sf,
    expected_squarefree_count,
    finite_field,
    jacobian_order,
    l_part_structure,
    l_power,
    negate,
    partition_from_torsion,
    random_divisor,
    scalar_mul,
    weil_interval,
)
from hurwitzkit.function_field import validate_census
from hurwitzkit.models import AbelianLGroupType

Z3 = AbelianLGroupType(l=3, partition=(1,))


def test_prime_field():
    field = finite_field(7)
    assert field.order == 7
    assert field.least_nonsquare == 3
    assert field.spot_check()


def test_extension_field():
    field = finite_field(9)
    assert field.order == 9
    assert not field.is_prime
    assert field.spot_check(samples=128)
    assert len(field.squares) == 5


@pytest.mark.parametrize("q", [6, 2, 8])
def test_field_rejects(q):
    with pytest.raises(ValidationError):
        finite_field(q)


@pytest.mark.parametrize("q,n,count", [(3, 2, 6), (5, 3, 100), (7, 3, 294), (3, 1, 3), (5, 0, 1)])
def test_squarefree_counts(q, n, count):
    assert enumerate_sf(q, n).count == count
    assert expected_squarefree_count(q, n) == count


def test_family_with_twists():
    family = enumerate_sf(7, 3, leading="both")
    assert family.count == 588
    assert family.c0 == 3
    ids = [curve_id for curve_id, _, _ in family.curves()]
    assert ids == list(range(588))
    assert family.polynomials[294] == ([3 * c % 7 for c in family.polynomials[0][0]], True)


def test_family_rejects_leading():
    with pytest.raises(ValidationError):
        enumerate_sf(5, 3, leading="any")


def test_curve_rejects_even_degree():
    with pytest.raises(ValidationError):
        HyperellipticCurve(finite_field(5), (1, 0, 1))


def test_curve_rejects_repeated_root():
    with pytest.raises(ValidationError):
        HyperellipticCurve(finite_field(5), (1, 0, 0, 0))


def test_affine_points(curve_f5):
    assert curve_f5.genus == 1
    assert curve_f5.affine_points() == [(0, 0), (2, 0), (3, 0)]


def test_zeta_data(curve_f5):
    zeta = jacobian_order(curve_f5)
    assert zeta.counts == [4]
    assert zeta.coefficients == [1, -2, 5]
    assert zeta.h == 4
    assert zeta.verified_degree == 2
    low, high = weil_interval(5, 1)
    assert low <= zeta.h <= high


def test_cantor_on_two_torsion(curve_f5):
    P, Q, R = (curve_f5.point(x, 0) for x in (0, 2, 3))
    assert cantor_add(P, Q, curve_f5) == R
    assert cantor_add(P, P, curve_f5).is_identity
    assert cantor_add(P, curve_f5.identity, curve_f5) == P


def chord_tangent(P, Q, a, p):
    """Affine addition on y^2 = x^3 + a x + b over F_p; None is the point at infinity."""
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def test_cantor_matches_chord_tangent():
    p, a, b = 7, 2, 3
    curve = HyperellipticCurve(finite_field(p), (1, 0, a, b))
    points = [None] + curve.affine_points()

    def divisor(P):
        return curve.identity if P is None else curve.point(*P)

    for P, Q in itertools.product(points, repeat=2):
        assert cantor_add(divisor(P), divisor(Q), curve) == divisor(chord_tangent(P, Q, a, p))
    assert len(points) == jacobian_order(curve).h


@pytest.fixture(scope="module")
def genus_two_curve():
    f, _ = enumerate_sf(5, 5).polynomials[0]
    return HyperellipticCurve(finite_field(5), tuple(f))


def test_group_law_genus_two(genus_two_curve):
    curve = genus_two_curve
    rng = make_rng(0, 1)
    for _ in range(10):
        a, b, c = (random_divisor(curve, rng) for _ in range(3))
        assert curve.is_valid(cantor_add(a, b, curve))
        assert cantor_add(a, b, curve) == cantor_add(b, a, curve)
        assert cantor_add(cantor_add(a, b, curve), c, curve) == cantor_add(a, cantor_add(b, c, curve), curve)
        assert cantor_add(a, negate(a, curve), curve).is_identity


def test_jacobian_order_annihilates(genus_two_curve):
    zeta = jacobian_order(genus_two_curve)
    assert genus_two_curve.genus == 2
    assert zeta.verified_degree == 3
    check_annihilation(genus_two_curve, zeta.h, make_rng(0, 2), 10)
    D = random_divisor(genus_two_curve, make_rng(0, 3))
    assert scalar_mul(zeta.h + 1, D, genus_two_curve) == D


def test_l_power():
    assert l_power(12, 3) == 3
    assert l_power(4, 3) == 1
    assert l_power(54, 3) == 27


def test_partition_from_torsion():
    assert partition_from_torsion(3, [9, 27]) == (2, 1)
    assert partition_from_torsion(3, [3, 9]) == (2,)
    assert partition_from_torsion(3, [9]) == (1, 1)


def test_trivial_l_part(curve_f5):
    assert l_part_structure(curve_f5, 3, 4).is_trivial


def test_cyclic_l_part():
    # y^2 = x^3 + 1 over F_5 has six points
    curve = HyperellipticCurve(finite_field(5), (1, 0, 0, 1))
    h = jacobian_order(curve).h
    assert h == 6
    assert l_part_structure(curve, 3, h, make_rng(0)).partition == (1,)


def test_l_part_needs_l_prime_to_q(curve_f5):
    with pytest.raises(ValidationError):
        l_part_structure(curve_f5, 5, 4)


def test_census_validation():
    assert validate_census(5, 3, 3, [Z3]) == []
    assert len(validate_census(7, 3, 3, [Z3])) == 1
    with pytest.raises(ValidationError):
        validate_census(5, 4, 3, [Z3])
    with pytest.raises(ValidationError):
        validate_census(5, 3, 3, [])
    with pytest.raises(ValidationError):
        validate_census(5, 3, 5, [AbelianLGroupType(l=5, partition=(1,))])
    with pytest.raises(ValidationError):
        validate_census(5, 3, 3, [AbelianLGroupType(l=7, partition=(1,))])
    with pytest.raises(ValidationError, match="prime power"):
        validate_census(15, 3, 7, [AbelianLGroupType(l=7, partition=(1,))])


def test_census_genus_one():
    records, summary = cl_census(5, 3, 3, [Z3], seed=1)
    assert summary.curves == 200
    assert summary.failures == 0
    assert summary.warnings == []
    assert [r.curve_id for r in records] == list(range(200))
    for monic, twist in zip(records[:100], records[100:]):
        # a curve and its quadratic twist together have 2q + 2 points
        assert monic.h + twist.h == 12
        assert twist.twisted and not monic.twisted
    for r in records:
        assert r.l_part.order == l_power(r.h, 3)
        assert r.m_A[Z3.label()] in (0, 2)
    assert sum(summary.l_part_distribution.values()) == pytest.approx(1.0)
    assert 0.0 <= summary.tv_distance_to_mu <= 1.0
    assert summary.slack == pytest.approx(3.0 / 5 ** 0.5)


@pytest.mark.slow
def test_census_independent_of_jobs(config):
    config.census.chunk_size = 50
    serial, _ = cl_census(5, 3, 3, [Z3], seed=7, jobs=1)
    parallel, _ = cl_census(5, 3, 3, [Z3], seed=7, jobs=2)
    assert [r.model_dump() for r in serial] == [r.model_dump() for r in parallel]
