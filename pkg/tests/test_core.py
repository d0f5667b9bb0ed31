"""Monomial and ideal arithmetic: algebraic identities as property tests
plus small hand-checked cases."""
import pytest
from hypothesis import given, settings, strategies as st

from stanleydec import (
    ParseError,
    colon,
    colon_ideal,
    contains,
    format_ideal,
    ideal_sum,
    intersect,
    is_subideal,
    minimal_generators,
    parse_ideal,
    principal,
    product,
    radical,
    ring,
    saturate,
    unit_ideal,
    zero_ideal,
)
from stanleydec.core import (
    box_monomials,
    generator_bound,
    membership_table,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
)

from conftest import exponents, ideals_in, proper_ideals


def test_minimal_generators_drops_multiples():
    rc = ring(2)
    I = minimal_generators([(1, 0), (2, 1), (0, 3)], rc)
    assert set(I.gens) == {(1, 0), (0, 3)}


def test_zero_and_unit():
    rc = ring(3)
    assert zero_ideal(rc).is_zero()
    assert unit_ideal(rc).is_unit()
    assert not zero_ideal(rc).is_proper_nonzero()
    assert not unit_ideal(rc).is_proper_nonzero()


def test_parse_format_roundtrip():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x^2*y, z^3, y*z]", rc)
    assert parse_ideal(format_ideal(I), rc) == I


def test_parse_rejects_unknown_variable():
    rc = ring(2, ("x", "y"))
    with pytest.raises(ParseError):
        parse_ideal("[x*w]", rc)


@given(proper_ideals())
@settings(max_examples=60, deadline=None)
def test_radical_is_idempotent_and_squarefree(I):
    R = radical(I)
    assert radical(R) == R
    assert all(max(g) <= 1 for g in R.gens)
    assert is_subideal(I, R)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_intersection_membership(data):
    rc = ring(3)
    A = data.draw(ideals_in(rc))
    B = data.draw(ideals_in(rc))
    C = intersect(A, B)
    bound = generator_bound(A, B, margin=1)
    in_A = membership_table(A, bound)
    in_B = membership_table(B, bound)
    in_C = membership_table(C, bound)
    for m in box_monomials(bound):
        assert in_C[m] == (in_A[m] and in_B[m])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_sum_membership(data):
    rc = ring(3)
    A = data.draw(ideals_in(rc))
    B = data.draw(ideals_in(rc))
    C = ideal_sum(A, B)
    bound = generator_bound(A, B, margin=1)
    in_A = membership_table(A, bound)
    in_B = membership_table(B, bound)
    in_C = membership_table(C, bound)
    for m in box_monomials(bound):
        assert in_C[m] == (in_A[m] or in_B[m])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_colon_definition(data):
    rc = ring(3)
    I = data.draw(ideals_in(rc))
    m = data.draw(exponents(rc.n, 2))
    Q = colon(I, m)
    bound = generator_bound(I, margin=2)
    for g in box_monomials(bound):
        assert contains(Q, g) == contains(I, mono_mul(g, m))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_colon_ideal_via_generators(data):
    rc = ring(3)
    I = data.draw(ideals_in(rc))
    J = data.draw(ideals_in(rc))
    Q = colon_ideal(I, J)
    # (I : J) = intersection of (I : g) over generators g of J
    expected = None
    for g in J.gens:
        q = colon(I, g)
        expected = q if expected is None else intersect(expected, q)
    assert Q == expected


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_product_contains_and_absorbs(data):
    rc = ring(3)
    A = data.draw(ideals_in(rc))
    B = data.draw(ideals_in(rc))
    P = product(A, B)
    assert is_subideal(P, A) and is_subideal(P, B)
    assert is_subideal(P, intersect(A, B))


def test_saturate_removes_variable_powers():
    rc = ring(3, ("x", "y", "z"))
    I = parse_ideal("[x^2*z, y*z^3]", rc)
    S = saturate(I, [2])  # saturate with respect to z
    assert S == parse_ideal("[x^2, y]", rc)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_monomial_lattice_laws(data):
    n = 3
    a = data.draw(exponents(n))
    b = data.draw(exponents(n))
    assert mono_divides(mono_gcd(a, b), a)
    assert mono_divides(a, mono_lcm(a, b))
    assert mono_mul(mono_gcd(a, b), mono_lcm(a, b)) == mono_mul(a, b)


def test_principal_colon_is_unit():
    rc = ring(2)
    I = principal(rc, (2, 1))
    assert colon(I, (2, 1)).is_unit()
