"""Monomials and monomial ideals of R = k[x_1, ..., x_d].

A monomial is a tuple of non-negative exponents. The coefficient field never
matters for monomial computations, so it is not represented at all.
A :class:`MonomialIdeal` stores its minimal generators sorted
lexicographically, so equal ideals compare equal.
"""

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import combinations

from . import _staircase as st
from .errors import DegenerateInput, DimensionMismatch, ExponentOverflow

Monomial = tuple  # tuple[int, ...]

EXPONENT_CAP = 2**31 - 1


def degree(m):
    return sum(m)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_colon(a, b):
    """Generator of ``((a) : (b))``, i.e. ``a / gcd(a, b)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(m):
    return frozenset(i for i, e in enumerate(m) if e)


def _check_exponents(gens):
    for g in gens:
        for e in g:
            if e < 0:
                raise ValueError(f"negative exponent in {g}")
            if e > EXPONENT_CAP:
                raise ExponentOverflow(f"exponent {e} exceeds cap {EXPONENT_CAP}")


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its canonical minimal generators.

    Build instances with :func:`minimalize` (or the ``ideal``/``unit``/``zero``
    helpers) unless ``gens`` is already canonical.
    """

    gens: tuple
    d: int

    @classmethod
    def zero(cls, d):
        return cls((), d)

    @classmethod
    def unit(cls, d):
        return cls(((0,) * d,), d)

    @classmethod
    def principal(cls, m):
        m = tuple(m)
        return cls((m,), len(m))

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.d,)

    def __contains__(self, m):
        return membership(m, self)

    def __le__(self, other):
        return ideal_leq(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n):
        return ideal_power(self, n)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return ideal_intersect(self, other)

    def max_degree(self):
        return max((degree(g) for g in self.gens), default=0)

    def corner(self):
        return st.corner(self.gens, self.d)

    def __repr__(self):
        return f"MonomialIdeal({list(self.gens)!r}, d={self.d})"


@total_ordering
@dataclass(frozen=True)
class MonomialPrime:
    """Prime generated by the variables with (0-based) indices in ``varset``.

    The empty varset is the zero ideal, which is prime in a polynomial ring.
    """

    varset: frozenset

    def __post_init__(self):
        object.__setattr__(self, "varset", frozenset(self.varset))

    def sort_key(self):
        return (len(self.varset), sorted(self.varset))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def ideal(self, d):
        gens = []
        for i in sorted(self.varset, reverse=True):
            g = [0] * d
            g[i] = 1
            gens.append(tuple(g))
        return MonomialIdeal(tuple(gens), d)

    def contains_ideal(self, A):
        """``A ⊆ self``: every generator of ``A`` involves a variable of the prime."""
        return all(self.varset & support(g) for g in A.gens)

    def names(self, varnames):
        return [varnames[i] for i in sorted(self.varset)]


def _same_d(*ideals):
    d = ideals[0].d
    for A in ideals[1:]:
        if A.d != d:
            raise DimensionMismatch(f"ambient variable counts differ: {d} vs {A.d}")
    return d


def minimalize(gens, d=None):
    gens = [tuple(int(e) for e in g) for g in gens]
    if d is None:
        if not gens:
            raise ValueError("cannot infer the variable count of an empty generator set")
        d = len(gens[0])
    for g in gens:
        if len(g) != d:
            raise DimensionMismatch(f"monomial {g} does not have {d} exponents")
    _check_exponents(gens)
    return MonomialIdeal(st.minimal(gens, d), d)


def ideal(*gens, d=None):
    return minimalize(gens, d)


def membership(m, A):
    if len(m) != A.d:
        raise DimensionMismatch(f"monomial {m} does not live in {A.d} variables")
    return any(divides(g, m) for g in A.gens)


def ideal_leq(A, B):
    _same_d(A, B)
    return all(membership(g, B) for g in A.gens)


def ideal_sum(A, B):
    d = _same_d(A, B)
    if A.is_zero:
        return B
    if B.is_zero:
        return A
    return MonomialIdeal(st.minimal(A.gens + B.gens, d), d)


def ideal_product(A, B):
    d = _same_d(A, B)
    if A.is_zero or B.is_zero:
        return MonomialIdeal.zero(d)
    prods = [mono_mul(a, b) for a in A.gens for b in B.gens]
    _check_exponents(prods)
    return MonomialIdeal(st.minimal(prods, d), d)


@lru_cache(maxsize=8192)
def _power(A, n):
    if n == 0:
        return MonomialIdeal.unit(A.d)
    if n == 1:
        return A
    return ideal_product(_power(A, n - 1), A)


def ideal_power(A, n):
    if n < 0:
        raise ValueError("negative power")
    return _power(A, n)


def ideal_intersect(A, B):
    d = _same_d(A, B)
    if A.is_zero or B.is_zero:
        return MonomialIdeal.zero(d)
    if A.is_unit:
        return B
    if B.is_unit:
        return A
    shape = tuple(max(a, b) + 1 for a, b in zip(A.corner(), B.corner()))
    if st.cells(shape) > st.MAX_CELLS:
        lcms = [mono_lcm(a, b) for a in A.gens for b in B.gens]
        return MonomialIdeal(st._minimal_pairwise(set(lcms)), d)
    ga = st.view(st.to_grid(A.gens, tuple(c + 1 for c in A.corner())), shape)
    gb = st.view(st.to_grid(B.gens, tuple(c + 1 for c in B.corner())), shape)
    return MonomialIdeal(st.from_grid(ga & gb), d)


def _colon_by_monomial(A, b):
    return MonomialIdeal(st._minimal_pairwise({mono_colon(a, b) for a in A.gens}), A.d)


def ideal_colon(A, B):
    """``(A : B) = {m : m B ⊆ A}``."""
    d = _same_d(A, B)
    if B.is_zero:
        raise DegenerateInput("colon by the zero ideal is undefined here")
    if A.is_zero or A.is_unit or B.is_unit:
        return A
    shape = tuple(c + 1 for c in A.corner())
    if st.cells(shape) > st.MAX_CELLS:
        out = MonomialIdeal.unit(d)
        for b in B.gens:
            out = ideal_intersect(out, _colon_by_monomial(A, b))
        return out
    return MonomialIdeal(st.from_grid(st.colon_grid(st.to_grid(A.gens, shape), B.gens)), d)


def ideal_colon_power(A, B, k):
    """``(A : B^k)`` computed as ``k`` successive colons by ``B``.

    Much cheaper than forming ``B^k`` when ``B`` has few generators.
    """
    d = _same_d(A, B)
    if B.is_zero:
        raise DegenerateInput("colon by the zero ideal is undefined here")
    if k == 0 or A.is_zero or A.is_unit or B.is_unit:
        return A
    shape = tuple(c + 1 for c in A.corner())
    if st.cells(shape) > st.MAX_CELLS:
        for _ in range(k):
            A = ideal_colon(A, B)
        return A
    grid = st.to_grid(A.gens, shape)
    for _ in range(k):
        nxt = st.colon_grid(grid, B.gens)
        if (nxt == grid).all():
            break
        grid = nxt
    return MonomialIdeal(st.from_grid(grid), d)


def _is_irreducible(A):
    return all(len(support(g)) == 1 for g in A.gens)


def _irreducible_leq(Q, P):
    """Containment of ideals generated by pure powers."""
    powers = {next(iter(support(g))): g for g in P.gens}
    for g in Q.gens:
        (i,) = support(g)
        if i not in powers or powers[i][i] > g[i]:
            return False
    return True


@lru_cache(maxsize=4096)
def _split(A):
    if _is_irreducible(A):
        return frozenset([A])
    g = next(g for g in A.gens if len(support(g)) > 1)
    j = min(support(g))
    u = tuple(e if i == j else 0 for i, e in enumerate(g))
    v = tuple(0 if i == j else e for i, e in enumerate(g))
    left = _split(ideal_sum(A, MonomialIdeal.principal(u)))
    right = _split(ideal_sum(A, MonomialIdeal.principal(v)))
    return _prune(left | right)


def _prune(comps):
    comps = list(comps)
    keep = []
    for Q in comps:
        if any(P != Q and _irreducible_leq(P, Q) for P in comps):
            continue
        keep.append(Q)
    return frozenset(keep)


def irreducible_decomposition(A):
    """Irredundant irreducible components of a proper nonzero ideal.

    Splits on a generator ``g = u * v`` with coprime nontrivial factors,
    ``A = (A + (u)) ∩ (A + (v))``, then discards components that contain
    another one. For ideals generated by pure powers that pairwise check is
    enough for irredundancy.
    """
    if A.is_zero or A.is_unit:
        raise DegenerateInput("zero and unit ideals have no irreducible decomposition")
    return sorted(_split(A), key=lambda Q: Q.gens)


def prime_data(A):
    """``(radical, is_prime, prime)`` for a proper ideal."""
    if A.is_unit:
        raise DegenerateInput("the unit ideal has no radical")
    rad = minimalize([tuple(min(e, 1) for e in g) for g in A.gens], A.d) if A.gens else A
    if all(degree(g) == 1 for g in A.gens):
        return rad, True, MonomialPrime(frozenset(next(iter(support(g))) for g in A.gens))
    return rad, False, None


def localize_ideal(A, keep):
    """Set every variable outside ``keep`` to 1 (localization at a monomial prime)."""
    keep = set(keep)
    if not keep <= set(range(A.d)):
        raise ValueError(f"keep-set {sorted(keep)} is not a set of variable indices")
    gens = [tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in A.gens]
    return MonomialIdeal(st.minimal(gens, A.d), A.d)


def all_primes(d):
    """Every monomial prime of ``k[x_1..x_d]``, including the zero ideal."""
    return [MonomialPrime(frozenset(c)) for r in range(d + 1) for c in combinations(range(d), r)]
