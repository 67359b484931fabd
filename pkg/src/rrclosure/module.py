"""Monomial submodules of a free module F = R^r and presentations E = F/N.

A monomial submodule of ``R^r`` is a direct sum of monomial ideals, one per
coordinate, so every operation here is coordinatewise. Submodules of ``E``
are always handled through their preimages in ``F`` (which contain ``N``).
Coordinates are 0-based.
"""

from dataclasses import dataclass

from . import monomial as mc
from .errors import DegenerateInput, DimensionMismatch
from .monomial import MonomialIdeal


@dataclass(frozen=True)
class MonomialSubmodule:
    coords: tuple  # tuple[MonomialIdeal, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("a submodule needs rank >= 1")
        d = coords[0].d
        if any(c.d != d for c in coords):
            raise DimensionMismatch("coordinate ideals live in different rings")
        object.__setattr__(self, "coords", coords)

    @property
    def r(self):
        return len(self.coords)

    @property
    def d(self):
        return self.coords[0].d

    @classmethod
    def zero(cls, r, d):
        return cls((MonomialIdeal.zero(d),) * r)

    @classmethod
    def free(cls, r, d):
        return cls((MonomialIdeal.unit(d),) * r)

    @classmethod
    def from_elements(cls, elements, r, d):
        """Submodule generated by ``(coord, monomial)`` pairs."""
        per = [[] for _ in range(r)]
        for c, m in elements:
            if not 0 <= c < r:
                raise DimensionMismatch(f"coordinate {c} out of range for rank {r}")
            per[c].append(tuple(m))
        return cls(tuple(mc.minimalize(p, d) for p in per))

    def elements(self):
        return [ModuleElement(i, g) for i, A in enumerate(self.coords) for g in A.gens]

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coords)

    @property
    def is_free(self):
        return all(c.is_unit for c in self.coords)

    def __contains__(self, e):
        return mc.membership(e.mono, self.coords[e.coord])

    def __le__(self, other):
        return submodule_leq(self, other)

    def __add__(self, other):
        return submodule_sum(self, other)

    def max_degree(self):
        return max(c.max_degree() for c in self.coords)


@dataclass(frozen=True)
class ModuleElement:
    coord: int
    mono: tuple


@dataclass(frozen=True)
class QuotientPresentation:
    """``E = F / N`` with ``F = R^r`` free of rank ``r`` over ``d`` variables."""

    relations: MonomialSubmodule

    @classmethod
    def free(cls, r, d):
        return cls(MonomialSubmodule.zero(r, d))

    @classmethod
    def ring(cls, d):
        return cls.free(1, d)

    @property
    def r(self):
        return self.relations.r

    @property
    def d(self):
        return self.relations.d

    @property
    def F(self):
        return MonomialSubmodule.free(self.r, self.d)

    @property
    def is_zero(self):
        return self.relations.is_free

    @property
    def is_ring(self):
        return self.r == 1 and self.relations.is_zero


def _check(A, B):
    if A.r != B.r or A.d != B.d:
        raise DimensionMismatch(f"rank/variables differ: ({A.r}, {A.d}) vs ({B.r}, {B.d})")


def submodule_scale(I, W):
    if I.d != W.d:
        raise DimensionMismatch("ideal and submodule live in different rings")
    return MonomialSubmodule(tuple(mc.ideal_product(I, c) for c in W.coords))


def submodule_sum(A, B):
    _check(A, B)
    return MonomialSubmodule(tuple(mc.ideal_sum(a, b) for a, b in zip(A.coords, B.coords)))


def submodule_leq(A, B):
    _check(A, B)
    return all(mc.ideal_leq(a, b) for a, b in zip(A.coords, B.coords))


def submodule_eq(A, B):
    _check(A, B)
    return A == B


def submodule_colon_ideal(W, J):
    if J.is_zero:
        raise DegenerateInput("colon by the zero ideal is undefined here")
    return MonomialSubmodule(tuple(mc.ideal_colon(c, J) for c in W.coords))


def submodule_colon_power(W, I, k):
    """``(W :_F I^k)`` by iterated colons."""
    return MonomialSubmodule(tuple(mc.ideal_colon_power(c, I, k) for c in W.coords))


def element_colon(W, e):
    if not 0 <= e.coord < W.r:
        raise DimensionMismatch(f"coordinate {e.coord} out of range for rank {W.r}")
    return mc.ideal_colon(W.coords[e.coord], MonomialIdeal.principal(e.mono))


def power_scale_preimage(I, n, P):
    """Preimage of ``I^n E`` in ``F``: coordinatewise ``I^n + N_i``."""
    if n < 0:
        raise ValueError("negative power")
    In = mc.ideal_power(I, n)
    return MonomialSubmodule(tuple(mc.ideal_sum(In, c) for c in P.relations.coords))


def localize_submodule(W, keep):
    return MonomialSubmodule(tuple(mc.localize_ideal(c, keep) for c in W.coords))


def localize_presentation(P, keep):
    return QuotientPresentation(localize_submodule(P.relations, keep))
