"""Prime filtrations: verification, builders, and the certified search."""
import pytest
from hypothesis import given, settings

from stanleydec import (
    CertificationError,
    NotSequentiallyCM,
    PreconditionError,
    PrimeFiltration,
    build_clean_cm2,
    build_clean_dim1,
    build_composition_series,
    build_free_block,
    build_pretty_clean_n5,
    build_principal_peel,
    colon_ideal,
    cyclic_module,
    intersect,
    koszul_depth,
    minimal_primes,
    parse_ideal,
    prime,
    principal,
    quotient_module,
    ring,
    search_prime_filtration,
    select_cm2_prime,
    unit_ideal,
    verify_filtration,
)
from stanleydec.depth import is_sequentially_cm
from stanleydec.filtration import Step

from conftest import seeded_ideal


def test_verify_rejects_bad_colon():
    rc = ring(2, ("x", "y"))
    I = parse_ideal("[x^2, y]", rc)
    # claim the wrong prime for the single missing monomial x
    F = PrimeFiltration(cyclic_module(I),
                        (((1, 0), prime(rc, [0])), ((0, 0), prime(rc, [0, 1]))))
    assert not verify_filtration(F).valid


def test_composition_series_of_finite_length_module():
    rc = ring(2, ("x", "y"))
    I = parse_ideal("[x^2, x*y, y^2]", rc)
    F = build_composition_series(cyclic_module(I))
    v = verify_filtration(F)
    assert v.valid
    assert len(F.steps) == 3  # 1, x, y
    assert all(P.dim() == 0 for _, P in F.steps)
    assert v.fdepth == 0


def test_free_block_over_prime():
    rc = ring(3, ("x", "y", "z"))
    J = parse_ideal("[x]", rc)
    I = parse_ideal("[x^2, x*y]", rc)  # J/I = x K[z] is free over S/(x, y)
    F = build_free_block(quotient_module(J, I), prime(rc, [0, 1]))
    v = verify_filtration(F)
    assert v.valid and v.clean
    assert [m for m, _ in F.steps] == [(1, 0, 0)]


def test_clean_dim1_builder():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x*y, x*z, y*z]", rc)  # three dim-1 minimal primes
    F = build_clean_dim1(cyclic_module(I))
    v = verify_filtration(F)
    assert v.valid and v.clean and v.fdepth == 1


def test_clean_cm2_golden_pair():
    rc = ring(3, ("x1", "x2", "x3"))
    U = intersect(parse_ideal("[x1, x3^2]", rc), parse_ideal("[x2, x3]", rc))
    I = parse_ideal("[x1*x2]", rc)
    F = build_clean_cm2(U, I)
    v = verify_filtration(F)
    assert v.valid and v.clean and v.fdepth == 2


def test_clean_cm2_non_reduced_golden_pair():
    rc = ring(3, ("x1", "x2", "x3"))
    U = intersect(parse_ideal("[x1, x3^2]", rc), parse_ideal("[x2^2, x3]", rc))
    I = parse_ideal("[x1^2*x2^2]", rc)
    F = build_clean_cm2(U, I)
    v = verify_filtration(F)
    assert v.valid and v.clean and v.fdepth == 2


def test_clean_cm2_handles_non_free_coprimary_pair():
    # CM pair with primary denominator where the block is coprimary but
    # not annihilated by its prime (two stacked strands)
    rc = ring(5)
    J = parse_ideal("[x5, x2, x1^2]", rc)
    I = parse_ideal("[x5^2, x2, x1^2]", rc)
    F = build_clean_cm2(J, I)
    v = verify_filtration(F)
    assert v.valid and v.clean and v.fdepth == 2


def test_select_cm2_prime_on_golden():
    rc = ring(3, ("x1", "x2", "x3"))
    U = intersect(parse_ideal("[x1, x3^2]", rc), parse_ideal("[x2, x3]", rc))
    I = parse_ideal("[x1*x2]", rc)
    p = select_cm2_prime(U, I)
    assert p.vars == (0,)  # (x1) certifies; (x2) does not per the example


def test_select_cm2_prime_checks_preconditions():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x]", rc)  # dim 2 prime, but U below has dim-2 primes
    with pytest.raises(PreconditionError):
        select_cm2_prime(parse_ideal("[y]", rc), I)


def test_principal_peel():
    rc = ring(3, ("x", "y", "z"))
    M = quotient_module(unit_ideal(rc), parse_ideal("[x^2*y]", rc))
    F = build_principal_peel(M)
    v = verify_filtration(F)
    assert v.valid
    assert v.fdepth == 2  # every step prime is principal


def test_search_finds_clean_filtration():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x*y, x*z]", rc)
    M = cyclic_module(I)
    F = search_prime_filtration(M, allowed=minimal_primes(colon_ideal(I, unit_ideal(rc))))
    v = verify_filtration(F)
    assert v.valid and v.clean


def test_search_exhaustion_raises():
    rc = ring(2, ("x", "y"))
    I = parse_ideal("[x*y]", rc)
    M = cyclic_module(I)
    # only the maximal prime allowed: S/(xy) has no such filtration
    with pytest.raises(CertificationError):
        search_prime_filtration(M, allowed=[prime(rc, [0, 1])])


def test_pretty_clean_n5_on_sequentially_cm():
    rc = ring(5)
    I = parse_ideal("[x1*x2, x1*x3, x2*x3]", rc)
    F, v = build_pretty_clean_n5(I)
    assert v.valid and v.pretty_clean


def test_pretty_clean_n5_rejects_non_sequentially_cm():
    found = 0
    for s in range(200):
        I = seeded_ideal(ring(5), s)
        flag, _ = is_sequentially_cm(I)
        if flag:
            continue
        with pytest.raises(NotSequentiallyCM):
            build_pretty_clean_n5(I)
        found += 1
        if found >= 5:
            break
    assert found >= 5


def test_verified_chain_reaches_numerator():
    rc = ring(2, ("x", "y"))
    I = parse_ideal("[x^2]", rc)
    J = parse_ideal("[x]", rc)
    # a single valid step that stops short of J must be rejected
    steps: tuple[Step, ...] = ()
    F = PrimeFiltration(quotient_module(J, I), steps)
    v = verify_filtration(F)
    assert not v.valid and "chain" in v.failure


def test_principal_module_filtration_via_peel():
    rc = ring(4)
    M = quotient_module(unit_ideal(rc), principal(rc, (1, 1, 0, 0)))
    F = build_principal_peel(M)
    assert verify_filtration(F).valid
