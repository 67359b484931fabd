import pytest
from hypothesis import given, settings, strategies as hs

from rrclosure import ass
from rrclosure import monomial as mc
from rrclosure.errors import DegenerateInput
from rrclosure.instance import GenParams, gen_random
from rrclosure.module import MonomialSubmodule, QuotientPresentation
from rrclosure.monomial import MonomialIdeal, MonomialPrime
from rrclosure.oracle import oracle_eval

from conftest import ideal, pres, sub

R = QuotientPresentation.ring(2)
PX, PY, PXY = MonomialPrime({0}), MonomialPrime({1}), MonomialPrime({0, 1})


def test_ass_cyclic():
    assert ass.ass_cyclic(ideal("x^3")) == {PX}
    assert ass.ass_cyclic(ideal("x^2, x*y")) == {PX, PXY}
    assert ass.ass_cyclic(ideal("x*y")) == {PX, PY}
    assert ass.ass_cyclic(MonomialIdeal.zero(2)) == {MonomialPrime(())}
    with pytest.raises(DegenerateInput):
        ass.ass_cyclic(MonomialIdeal.unit(2))


def test_colon_search_witnesses():
    w = ass.ass_witnesses(MonomialIdeal.unit(2), ideal("x^2, x*y"))
    assert set(w) == {PX, PXY}
    V = ideal("x^2, x*y")
    for P, m in w.items():
        assert mc.ideal_colon(V, MonomialIdeal.principal(m)) == P.ideal(2)


def test_ass_subquotient():
    assert ass.ass_ideal_subquotient(ideal("x^3"), ideal("x^4")) == {PX}
    assert ass.ass_ideal_subquotient(MonomialIdeal.unit(2), ideal("x^2, x*y")) == {PX, PXY}
    assert ass.ass_ideal_subquotient(ideal("x"), ideal("x^2, x*y")) == {PXY}
    with pytest.raises(DegenerateInput):
        ass.ass_ideal_subquotient(ideal("x"), ideal("x"))


def test_ass_against_oracle():
    res = oracle_eval(("ass", ("ideal", MonomialIdeal.unit(2)), ("ideal", ideal("x^2, x*y"))), 4)
    assert res.conclusive and res.primes == {PX, PXY}


def test_ass_module_quotient():
    F = QuotientPresentation.free(2, 2).F
    assert ass.ass_module_quotient(F, sub("e1*x^2, e2*y", 2)) == {PX, PY}
    with pytest.raises(DegenerateInput):
        ass.ass_module_quotient(F, F)
    assert ass.ass_module_quotient(sub("1"), sub("x^2, x*y")) == ass.ass_cyclic(ideal("x^2, x*y"))


def test_rr_sequence_principal():
    rep = ass.ass_rr_sequence(ideal("x"), R, 5)
    assert rep.per_n == ({PX},) * 5
    assert rep.increasing and rep.stabilization_candidate == 1 and rep.stable_set == {PX}
    assert rep.certified


def test_rr_sequence_examples(classic):
    rep = ass.ass_rr_sequence(ideal("x^2, x*y"), R, 6)
    assert rep.increasing and rep.stable_set == {PX, PXY}
    rep = ass.ass_rr_sequence(classic, R, 5)
    assert rep.increasing and rep.stabilization_candidate is not None


def test_power_sequence():
    assert ass.ass_power_sequence(ideal("x"), R, 4).per_n == ({PX},) * 4
    rep = ass.ass_power_sequence(ideal("x^2, x*y"), R, 5)
    assert all(s == {PX, PXY} for s in rep.per_n)
    for n in range(1, 6):
        assert ass.ass_cyclic(ideal("x^2, x*y") ** n) == {PX, PXY}


def test_successive_sequence():
    rep = ass.ass_successive_rr(ideal("x"), R, 5)
    assert rep.per_n == ({PX},) * 5
    rep = ass.ass_successive_rr(ideal("x^2, x*y"), R, 6)
    assert rep.increasing and rep.stable_set == {PX, PXY}


def test_successive_sequence_marks_equal_closures():
    # E = R/(x^2), I = (x): every closure is all of E
    P = pres("x^2", names="x")
    rep = ass.ass_successive_rr(ideal("x", "x"), P, 3)
    assert rep.degenerate == (1, 2, 3) and rep.per_n == (None,) * 3
    rep = ass.ass_rr_sequence(ideal("x", "x"), P, 3)
    assert rep.degenerate == (1, 2, 3)


def test_ring_case_stable_equality():
    rep = ass.corollary25_check(ideal("x", "x"))
    assert rep.found and rep.n0 == 1
    rep = ass.corollary25_check(ideal("x^2, x*y"))
    assert rep.found and rep.n0 == 1
    assert all(s == {PX, PXY} for s in rep.quotient.per_n)
    with pytest.raises(DegenerateInput):
        ass.corollary25_check(ideal("x"), P=pres("y"))


def test_grade():
    assert ass.grade_positive(ideal("x^2, y"), R)
    assert not ass.grade_positive(ideal("x"), pres("x*y"))
    assert ass.grade_positive(ideal("y"), pres("x^3"))


def test_regular_monomial():
    assert ass.regular_monomial((1, 0), pres("y^2"))
    assert not ass.regular_monomial((0, 1), pres("y^2"))


def test_eventual_equality():
    rep = ass.eventual_equality_check(ideal("x", "x"), QuotientPresentation.ring(1))
    assert rep.n0 == 1
    with pytest.raises(DegenerateInput):
        ass.eventual_equality_check(ideal("x"), pres("x*y"))


def test_brodmann_inclusion(classic):
    rep = ass.brodmann_inclusion(classic, R, 5)
    assert rep.holds


# --- properties --------------------------------------------------------------

mono = hs.tuples(hs.integers(0, 4), hs.integers(0, 4), hs.integers(0, 4))
proper = hs.lists(mono, min_size=1, max_size=4).map(lambda g: mc.minimalize(g, 3)).filter(
    lambda A: not A.is_unit)


@settings(max_examples=80, deadline=None)
@given(proper)
def test_two_routes_agree(V):
    assert ass.ass_cyclic(V) == ass.ass_ideal_subquotient(MonomialIdeal.unit(3), V)


@settings(max_examples=30, deadline=None)
@given(hs.integers(0, 10 ** 6))
def test_rr_primes_inside_power_primes(seed):
    inst = gen_random(seed, GenParams(d=3, r=2, max_gens=3, max_exp=3))
    rep = ass.brodmann_inclusion(inst.I, inst.presentation, 4)
    assert rep.holds
    assert ass.ass_rr_sequence(inst.I, inst.presentation, 4).increasing
