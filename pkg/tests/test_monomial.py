import pytest
from hypothesis import given, settings, strategies as hs

from rrclosure import monomial as mc
from rrclosure.errors import DegenerateInput, DimensionMismatch
from rrclosure.monomial import MonomialIdeal, MonomialPrime
from rrclosure.oracle import truncate

from conftest import ideal


def test_minimalize():
    assert mc.minimalize([(2, 0), (3, 0), (0, 1)]) == ideal("x^2, y")
    assert mc.minimalize([(1, 0)]) == ideal("x")
    assert mc.minimalize([(2, 1), (1, 2), (2, 2)]) == ideal("x^2*y, x*y^2")


def test_canonical_form_is_order_independent():
    assert mc.minimalize([(0, 1), (2, 0)]) == mc.minimalize([(2, 0), (0, 1), (2, 3)])


def test_product_and_power():
    assert ideal("x") * ideal("y") == ideal("x*y")
    assert ideal("x, y") ** 2 == ideal("x^2, x*y, y^2")
    assert ideal("x^2, x*y") * ideal("x") == ideal("x^3, x^2*y")
    assert ideal("x, y") ** 0 == MonomialIdeal.unit(2)


def test_intersection():
    assert ideal("x") & ideal("y") == ideal("x*y")
    assert ideal("x^2, y") & MonomialIdeal.unit(2) == ideal("x^2, y")
    # brute force over all monomials of degree <= 5
    got = ideal("x^2, y") & ideal("x")
    A, B = truncate(ideal("x^2, y"), 5), truncate(ideal("x"), 5)
    assert truncate(got, 5).members == A.members & B.members
    assert got == ideal("x^2, x*y")


def test_colon():
    assert mc.ideal_colon(ideal("x^2"), ideal("x")) == ideal("x")
    assert mc.ideal_colon(ideal("x*y"), ideal("x, y")) == ideal("x*y")
    assert mc.ideal_colon(ideal("x^2, x*y"), ideal("x")) == ideal("x, y")
    with pytest.raises(DegenerateInput):
        mc.ideal_colon(ideal("x"), MonomialIdeal.zero(2))


def test_colon_by_brute_force():
    A, B = ideal("x^2, x*y"), ideal("x")
    got = truncate(mc.ideal_colon(A, B), 4).members
    T = truncate(A, 5)
    want = {m for m in truncate(MonomialIdeal.unit(2), 4).members if T.contains((m[0] + 1, m[1]))}
    assert got == want


def test_membership():
    assert (3, 1) in ideal("x^2")
    assert (0, 1) not in ideal("x")
    assert (5, 7) in MonomialIdeal.unit(2)
    assert (0, 0) not in MonomialIdeal.zero(2)


def test_decomposition_examples():
    assert set(mc.irreducible_decomposition(ideal("x*y"))) == {ideal("x"), ideal("y")}
    assert set(mc.irreducible_decomposition(ideal("x^2, x*y"))) == {ideal("x"), ideal("x^2, y")}
    assert set(mc.irreducible_decomposition(ideal("x^2, x*y, y^3"))) == {ideal("x^2, y"), ideal("x, y^3")}
    with pytest.raises(DegenerateInput):
        mc.irreducible_decomposition(MonomialIdeal.unit(2))
    with pytest.raises(DegenerateInput):
        mc.irreducible_decomposition(MonomialIdeal.zero(2))


def test_prime_data():
    rad, is_prime, P = mc.prime_data(ideal("x, z", "x y z"))
    assert is_prime and P == MonomialPrime({0, 2})
    rad, is_prime, P = mc.prime_data(ideal("x^2, y"))
    assert rad == ideal("x, y") and not is_prime and P is None
    rad, is_prime, _ = mc.prime_data(ideal("x*y"))
    assert rad == ideal("x*y") and not is_prime
    with pytest.raises(DegenerateInput):
        mc.prime_data(MonomialIdeal.unit(2))


def test_localize():
    assert mc.localize_ideal(ideal("x^2*y, y^3"), {1}) == ideal("y")
    assert mc.localize_ideal(ideal("x"), {0, 1}) == ideal("x")
    assert mc.localize_ideal(ideal("x^2, x*y"), {1}).is_unit
    with pytest.raises(ValueError):
        mc.localize_ideal(ideal("x"), {5})


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ideal("x") * ideal("x", "x y z")


def test_all_primes():
    assert len(mc.all_primes(3)) == 8
    assert MonomialPrime(frozenset()) in mc.all_primes(2)


# --- properties --------------------------------------------------------------

mono = hs.tuples(hs.integers(0, 4), hs.integers(0, 4), hs.integers(0, 3))
ideals = hs.lists(mono, min_size=1, max_size=4).map(lambda g: mc.minimalize(g, 3))
proper = ideals.filter(lambda A: not A.is_unit)


@settings(max_examples=60, deadline=None)
@given(ideals, ideals, ideals)
def test_lattice_laws(A, B, C):
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A & B == B & A
    assert A * B <= (A & B)
    assert mc.ideal_colon(A, B) >= A


@settings(max_examples=60, deadline=None)
@given(ideals, ideals, hs.integers(1, 3))
def test_colon_adjunction_and_powers(A, B, k):
    assert B * mc.ideal_colon(A, B) <= A
    assert mc.ideal_colon_power(A, B, k) == mc.ideal_colon(A, B ** k)


@settings(max_examples=60, deadline=None)
@given(proper.filter(lambda A: not A.is_zero))
def test_decomposition_intersects_back(A):
    comps = mc.irreducible_decomposition(A)
    acc = comps[0]
    for Q in comps[1:]:
        acc = acc & Q
    assert acc == A
    # irredundant
    for i in range(len(comps)):
        rest = [Q for j, Q in enumerate(comps) if j != i]
        if rest:
            acc = rest[0]
            for Q in rest[1:]:
                acc = acc & Q
            assert acc != A


@settings(max_examples=40, deadline=None)
@given(ideals, ideals)
def test_operations_match_truncation(A, B):
    D = 10
    tA, tB = truncate(A, D), truncate(B, D)
    assert truncate(A + B, D).members == tA.members | tB.members
    assert truncate(A & B, D).members == tA.members & tB.members
