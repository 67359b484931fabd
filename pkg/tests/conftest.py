import pytest

from rrclosure.instance import parse_instance
from rrclosure.module import QuotientPresentation


def ideal(text, names="x y"):
    return parse_instance(f"vars {names}\nideal I: {text}\n").I


def sub(text, rank=1, names="x y"):
    return parse_instance(f"vars {names}\nideal I: x\nmodule rank {rank}\nsubmodule N: {text}\n").N


def pres(text, rank=1, names="x y"):
    return QuotientPresentation(sub(text, rank, names))


@pytest.fixture
def classic():
    return ideal("x^4, x^3*y, x*y^3, y^4")
