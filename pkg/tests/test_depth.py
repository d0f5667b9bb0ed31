"""Depth engine: Koszul-homology depth, the Hochster-formula oracle,
dimension filtration factors, sequential Cohen-Macaulayness."""
import pytest
from hypothesis import given, settings

from stanleydec import (
    DomainError,
    cyclic_module,
    depth_of_quotient,
    ideal_dimension,
    intersect,
    koszul_depth,
    minimal_generators,
    parse_ideal,
    prime,
    quotient_module,
    radical,
    ring,
)
from stanleydec.depth import (
    dimension_filtration_factors,
    hochster_depth_squarefree,
    is_sequentially_cm,
    module_dimension,
)
from stanleydec.polarize import full_polarization

from conftest import proper_ideals


def test_depth_of_prime_quotients():
    rc = ring(4)
    for k in range(1, 5):
        P = prime(rc, range(k)).to_ideal()
        assert depth_of_quotient(P) == 4 - k


def test_depth_of_complete_intersection():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x^2, y^3]", rc)  # regular sequence: depth = dim = 1
    assert depth_of_quotient(I) == 1
    assert ideal_dimension(I) == 1


def test_depth_zero_when_max_ideal_associated():
    rc = ring(2, ("x", "y"))
    I = parse_ideal("[x^2, x*y]", rc)  # (x) cap (x^2, y): embedded (x, y)
    assert depth_of_quotient(I) == 0


@given(proper_ideals(max_n=4))
@settings(max_examples=50, deadline=None)
def test_depth_bounded_by_dimension(I):
    report = koszul_depth(cyclic_module(I))
    assert 0 <= report.depth <= report.dim <= I.ring.n
    assert report.dim == ideal_dimension(I)
    assert report.is_cm == (report.depth == report.dim)


@given(proper_ideals(max_n=4, max_degree=2))
@settings(max_examples=40, deadline=None)
def test_koszul_matches_hochster_on_squarefree(I):
    R = radical(I)
    assert depth_of_quotient(R) == hochster_depth_squarefree(R)


@given(proper_ideals(max_n=3))
@settings(max_examples=40, deadline=None)
def test_polarization_depth_identity(I):
    pol, _ = full_polarization(I)
    added = pol.ring.n - I.ring.n
    assert hochster_depth_squarefree(pol) - added == depth_of_quotient(I)


def test_module_depth_of_cm_pair():
    rc = ring(3, ("x1", "x2", "x3"))
    U = intersect(parse_ideal("[x1, x3^2]", rc), parse_ideal("[x2, x3]", rc))
    I = parse_ideal("[x1*x2]", rc)
    report = koszul_depth(quotient_module(U, I))
    assert (report.depth, report.dim) == (2, 2)


def test_module_dimension_rejects_zero_module():
    rc = ring(2)
    I = parse_ideal("[x1]", rc)
    with pytest.raises(DomainError):
        module_dimension(quotient_module(I, I))


@given(proper_ideals(max_n=4))
@settings(max_examples=40, deadline=None)
def test_dimension_filtration_factors_shape(I):
    factors = dimension_filtration_factors(I)
    dims = [k for k, _ in factors]
    assert dims == sorted(dims)
    for k, factor in factors:
        assert not factor.is_zero()
        assert module_dimension(factor) == k


@given(proper_ideals(max_n=4))
@settings(max_examples=40, deadline=None)
def test_sequentially_cm_consistent_with_reports(I):
    flag, reports = is_sequentially_cm(I)
    assert flag == all(r.is_cm for r in reports)


def test_cm_implies_sequentially_cm():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x*y, x*z, y*z]", rc)  # squarefree, CM of dim 1
    flag, _ = is_sequentially_cm(I)
    assert flag
