import pytest

from hurwitzkit.braids import ComponentRing
from hurwitzkit.core.errors import ValidationError
from hurwitzkit.koszul import (
    GradedModule,
    build_k_complex,
    h0_matches,
    h0_quotient_dims,
    homotopy_check,
    k_homology,
    words,
)


@pytest.fixture
def s3_ring(s3_pair):
    return ComponentRing(*s3_pair)


def test_words():
    assert words(2, 0) == [()]
    assert len(words(3, 2)) == 9


def test_ring_module_relation(s3_ring):
    R = GradedModule.from_ring(s3_ring, 4)
    assert R.dims[:3] == [1, 3, 5]
    R.check_relation()


def test_free_module(s3_ring):
    R = GradedModule.from_ring(s3_ring, 3)
    F = R.free(2)
    assert F.tag == "R^2"
    assert F.dims == [2 * d for d in R.dims]
    F.check_relation()


def test_free_module_needs_copies(s3_ring):
    with pytest.raises(ValidationError):
        GradedModule.from_ring(s3_ring, 2).free(0)


@pytest.mark.parametrize("n", range(5))
def test_k_complex_is_a_complex(s3_ring, n):
    cplx = build_k_complex(GradedModule.from_ring(s3_ring, 4), n)
    cplx.check()
    assert cplx.terms[0] == s3_ring.dim(n)


def test_k_complex_beyond_module_data(s3_ring):
    with pytest.raises(ValidationError):
        build_k_complex(GradedModule.from_ring(s3_ring, 2), 3)


def test_homotopy_identity(s3_ring):
    R = GradedModule.from_ring(s3_ring, 4)
    for n in range(3):
        for q in range(n + 1):
            for g in s3_ring.cls.members:
                assert homotopy_check(s3_ring, g, n, q, module=R)


def test_homotopy_rejects_outside_class(s3_ring):
    with pytest.raises(ValidationError):
        homotopy_check(s3_ring, 0, 1, 0)


def test_abelian_k_homology(z2_pair):
    R = GradedModule.from_ring(ComponentRing(*z2_pair), 4)
    report = k_homology(R, 4)
    assert report.h0_quotient_dims == [1, 0, 0, 0, 0]
    assert report.dims[1] == [0, 0]
    assert report.dims[2] == [0, 0, 1]
    assert h0_matches(report)


def test_h0_matches_quotient(s3_ring):
    R = GradedModule.from_ring(s3_ring, 4)
    report = k_homology(R, 4)
    assert h0_matches(report)
    assert h0_quotient_dims(R, 4)[0] == 1
    assert len(report.rows()) == sum(n + 1 for n in range(5))
