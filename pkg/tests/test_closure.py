import pytest
from hypothesis import given, settings, strategies as hs

from rrclosure import module as mod
from rrclosure.closure import (chain_term, lemma21_check, rr_closure_general, rr_ideal, rr_power,
                               torsion_saturation)
from rrclosure.errors import DegenerateInput
from rrclosure.instance import GenParams, gen_random
from rrclosure.module import MonomialSubmodule, QuotientPresentation
from rrclosure.monomial import MonomialIdeal
from rrclosure.oracle import oracle_eval

from conftest import ideal, pres, sub

R = QuotientPresentation.ring(2)


def test_general_closure_examples():
    res = rr_closure_general(ideal("x"), sub("x"), R)
    assert res.value == sub("x^2") and res.certified
    assert rr_closure_general(ideal("x, y"), sub("x"), R).value == sub("x^2, x*y")
    assert rr_closure_general(ideal("x"), MonomialSubmodule.zero(1, 2), R).value.is_zero


def test_general_closure_against_oracle():
    # chain terms ((x,y)^{k+1}(x) : (x,y)^k) for k <= 6, by truncated membership to degree 8 + 6
    I, W = ideal("x, y"), ideal("x")
    got = rr_closure_general(I, MonomialSubmodule((W,)), R).value.coords[0]
    T = oracle_eval(("closure", ("ideal", I), ("ideal", W), ("ideal", MonomialIdeal.zero(2))), 14, 6)
    assert T.exact >= 8
    assert {m for m in T.members if sum(m) <= 8} == {m for m in T.members if sum(m) <= 8 and m in got}
    assert T.minimal(8) == sorted(got.gens)


def test_classic_closure(classic):
    res = rr_ideal(classic)
    assert res.value.coords[0] == ideal("x^4, x^3*y, x^2*y^2, x*y^3, y^4")
    assert res.certified


def test_rr_power_examples():
    for n in range(1, 5):
        assert rr_power(ideal("x"), n, R).value == sub(f"x^{n}")
    assert rr_power(ideal("x^2, x*y"), 1, R).value == sub("x^2, x*y")
    assert rr_ideal(ideal("x, y")).value == sub("x, y")
    assert rr_power(ideal("x"), 0, R).value.is_free


def test_degenerate_ideals_rejected():
    for bad in (MonomialIdeal.zero(2), MonomialIdeal.unit(2)):
        with pytest.raises(DegenerateInput):
            rr_power(bad, 1, R)


def test_window_and_cap_validated():
    with pytest.raises(ValueError):
        rr_power(ideal("x"), 1, R, window=4, cap=3)


def test_torsion_is_found_before_the_chain_plateaus():
    # I-torsion of E needs four colons here; without saturation the literal
    # chain stays flat for three steps and then grows
    I = ideal("y^3*z^2, x*y", "x y z")
    P = pres("e1*x^4*y^4*z^2, e2*x^3*z^4, e2*x^3*y", 2, "x y z")
    res = rr_power(I, 1, P)
    K = res.stabilized_at + torsion_saturation(I, P)[1]
    for k in (K, K + 4, K + 8):
        assert chain_term(I, 1, k, P) == res.value


def test_colon_identity_examples(classic):
    I = ideal("x")
    rep = lemma21_check(I, R, 3, 1)
    assert rep.holds and rep.lower == sub("x^2")
    rep = lemma21_check(classic, R, 2, 1)
    assert rep.holds and rep.certified
    rep = lemma21_check(classic, R, 2, 2)
    assert rep.holds and rep.lower.is_free
    with pytest.raises(ValueError):
        lemma21_check(I, R, 1, 2)


def test_lemma21_with_oracle_at_degree_16(classic):
    # the colon closure(I^2) : I computed by truncation must equal closure(I)
    rep = lemma21_check(classic, R, 2, 1)
    top = rr_power(classic, 2, R).value.coords[0]
    T = oracle_eval(("colon", ("ideal", top), ("ideal", classic)), 16)
    assert T.minimal() == sorted(rep.lower.coords[0].gens)


# --- properties --------------------------------------------------------------

seeds = hs.integers(0, 10 ** 6)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_chain_increasing_and_bracketed(seed):
    inst = gen_random(seed, GenParams(d=3, r=2, max_gens=3, max_exp=3))
    P = inst.presentation
    res = rr_power(inst.I, 1, P)
    for a, b in zip(res.chain, res.chain[1:]):
        assert a <= b
    IE = mod.power_scale_preimage(inst.I, 1, P)
    assert IE <= res.value
    for k in range(1, 4):
        assert chain_term(inst.I, 1, k, P) <= res.value


@settings(max_examples=40, deadline=None)
@given(seeds, hs.integers(1, 3))
def test_closure_decreasing_in_n_and_general_form(seed, n):
    inst = gen_random(seed, GenParams(d=3, r=2, max_gens=3, max_exp=3))
    P = inst.presentation
    a = rr_power(inst.I, n, P).value
    b = rr_power(inst.I, n + 1, P).value
    assert b <= a
    # with W = I^{n-1} F the general closure is the closure of I^n
    again = rr_closure_general(inst.I, mod.submodule_scale(inst.I ** (n - 1), P.F), P).value
    assert again == a


@settings(max_examples=30, deadline=None)
@given(seeds, hs.integers(1, 3))
def test_power_closure_in_ring_matches_ideal_closure(seed, m):
    inst = gen_random(seed, GenParams(d=3, r=1, max_gens=3, max_exp=3, free=True))
    R3 = QuotientPresentation.ring(inst.d)
    assert rr_ideal(inst.I ** m).value == rr_power(inst.I, m, R3).value
