import pytest

from hurwitzkit.core.errors import BudgetExceededError, ValidationError
from hurwitzkit.hurwitz import (
    betti,
    betti_all,
    braid_relators,
    cell_bound,
    fox_complex,
    homology_module,
    relator_count,
    stability_report,
)
from hurwitzkit.models import StabilizerDescriptor


@pytest.mark.parametrize("n,count", [(2, 0), (3, 1), (4, 3), (5, 6)])
def test_relator_count(n, count):
    assert relator_count(n) == count
    assert len(braid_relators(n)) == count


def test_fox_complex_needs_two_points(s3_pair):
    with pytest.raises(ValidationError):
        fox_complex(*s3_pair, 1)


def test_fox_complex_is_a_complex(s3_pair):
    cplx = fox_complex(*s3_pair, 3)
    cplx.check()
    assert cplx.dims[0] == 27
    assert cplx.dims[1] == 2 * 27


def test_s3_two_points(s3_pair):
    # five components, each a connected cover of the configuration space of two points
    result = betti_all(*s3_pair, 2)
    assert (result.b0, result.b1) == (5, 5)


def test_discrete_degrees(s3_pair):
    result = betti_all(*s3_pair, 1)
    assert (result.b0, result.b1) == (3, 0)


def test_abelian_pair_is_configuration_space(z2_pair):
    for n in (2, 3, 4):
        assert betti(*z2_pair, n, 0) == 1
        assert betti(*z2_pair, n, 1) == 1


def test_quotient_by_group(s3_pair):
    assert betti(*s3_pair, 2, 0, quotient_by_G=True) == 2


def test_betti_degree_range(s3_pair):
    with pytest.raises(ValidationError):
        betti(*s3_pair, 2, 2)


def test_cell_bound(s3_pair):
    group, _ = s3_pair
    assert cell_bound(group, 2) == 144


def test_stability_window_starts_at_two(s3_pair):
    with pytest.raises(ValidationError):
        stability_report(*s3_pair, 0, 1, 3)


def test_stability_report_abelian(z2_pair):
    descriptor = StabilizerDescriptor(found=True, D=1, deg_U=2, verified_range=(0, 4), quotient_dims=[1, 1, 0])
    report = stability_report(*z2_pair, 1, 2, 4, descriptor=descriptor)
    assert report.n_values == [2, 3, 4]
    assert report.betti == [1, 1, 1]
    assert report.orbit_counts == [1, 1, 1]
    assert report.u_map_ranks[0] in (0, 1)
    assert report.u_map_ranks[1:] == [None, None]


def test_homology_module_budget(s3_pair, config):
    with pytest.raises(BudgetExceededError):
        homology_module(*s3_pair, config.limits.homology_module_n_max + 1)


@pytest.mark.slow
def test_s3_stability_report(s3_pair):
    report = stability_report(*s3_pair, 0, 2, 5)
    assert report.betti == report.orbit_counts
    assert report.betti[0] == 5
