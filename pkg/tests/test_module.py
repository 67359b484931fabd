import pytest

from rrclosure import module as mod
from rrclosure.errors import DegenerateInput, DimensionMismatch
from rrclosure.module import ModuleElement, MonomialSubmodule, QuotientPresentation
from rrclosure.monomial import MonomialIdeal

from conftest import ideal, pres, sub


def test_scale():
    W = MonomialSubmodule((ideal("y"), MonomialIdeal.unit(2)))
    assert mod.submodule_scale(ideal("x"), W) == MonomialSubmodule((ideal("x*y"), ideal("x")))
    assert mod.submodule_scale(MonomialIdeal.unit(2), W) == W
    W = MonomialSubmodule((ideal("x"), MonomialIdeal.zero(2)))
    assert mod.submodule_scale(ideal("x, y"), W) == MonomialSubmodule((ideal("x^2, x*y"), MonomialIdeal.zero(2)))


def test_power_scale_preimage():
    R = QuotientPresentation.ring(2)
    assert mod.power_scale_preimage(ideal("x"), 2, R) == sub("x^2")
    assert mod.power_scale_preimage(ideal("x"), 0, pres("e1*x, e2*y", 2)).is_free
    assert mod.power_scale_preimage(ideal("x"), 1, pres("y")) == sub("x, y")


def test_colons():
    assert mod.submodule_colon_ideal(sub("x^2"), ideal("x")) == sub("x")
    W = sub("e1*x^2, e2*x*y", 2)
    assert mod.submodule_colon_ideal(W, MonomialIdeal.unit(2)) == W
    assert mod.submodule_colon_ideal(W, ideal("x")) == sub("e1*x, e2*y", 2)
    with pytest.raises(DegenerateInput):
        mod.submodule_colon_ideal(W, MonomialIdeal.zero(2))


def test_element_colon():
    assert mod.element_colon(sub("x^2"), ModuleElement(0, (1, 0))) == ideal("x")
    assert mod.element_colon(sub("x^2"), ModuleElement(0, (3, 0))).is_unit
    assert mod.element_colon(sub("x^2, x*y"), ModuleElement(0, (1, 0))) == ideal("x, y")


def test_sum_and_order():
    assert sub("x") + sub("y") == sub("x, y")
    A = sub("x^2, x*y")
    assert A + A == A and A <= A
    assert A <= sub("x")
    with pytest.raises(DimensionMismatch):
        mod.submodule_sum(sub("x"), sub("e1*x", 2))


def test_localize_submodule():
    W = sub("e1*x^2*y, e2*y^3", 2)
    assert mod.localize_submodule(W, {1}) == sub("e1*y, e2*y^3", 2)
    assert mod.localize_submodule(W, {0, 1}) == W
    assert mod.localize_submodule(sub("x^2, x*y"), {1}).is_free


def test_from_elements_checks_rank():
    with pytest.raises(DimensionMismatch):
        MonomialSubmodule.from_elements([(2, (0, 0))], 2, 2)
