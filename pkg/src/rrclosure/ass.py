"""Associated primes of monomial quotients and the sequences they form.

Two independent routes compute ``Ass``:

* :func:`ass_cyclic` reads the radicals off an irreducible decomposition;
* :func:`ass_ideal_subquotient` searches a finite box of monomials ``m`` for
  annihilators ``(V : m)`` that are prime.

They overlap on cyclic quotients ``R/V`` (take ``U = R``), which is how the
test-suite keeps each honest.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _staircase as st
from . import module as mod
from . import monomial as mc
from .closure import DEFAULT_CAP, DEFAULT_WINDOW, rr_power, torsion_saturation
from .errors import DegenerateInput, DimensionMismatch, RRError
from .monomial import MonomialIdeal, MonomialPrime


def ass_cyclic(M):
    """``Ass(R/M)`` from the irreducible decomposition of ``M``."""
    if M.is_unit:
        raise DegenerateInput("R/R is the zero module")
    if M.is_zero:
        return frozenset([MonomialPrime(frozenset())])
    return frozenset(
        MonomialPrime(frozenset().union(*(mc.support(g) for g in Q.gens)))
        for Q in mc.irreducible_decomposition(M)
    )


def ass_witnesses(U, V):
    """Map each prime of ``Ass(U/V)`` to a monomial ``m ∈ U`` with ``(V : m)`` equal to it.

    ``(V : m)`` only depends on ``min(m, b)`` where ``b`` bounds the exponents
    of the generators of ``V``, so the box ``[0, b]`` is searched. A box point
    whose j-th exponent equals ``b_j`` stands for every larger exponent; to
    decide membership in ``U`` it is raised to ``max(b_j, u_j)``.
    """
    d = mc._same_d(U, V)
    if not mc.ideal_leq(V, U):
        raise DimensionMismatch("subquotient needs V ⊆ U")
    if U == V:
        raise DegenerateInput("U/V is the zero module")
    b = V.corner()
    u = U.corner()
    shape = tuple(c + 1 for c in b)
    if st.cells(shape) > st.MAX_CELLS:
        raise RRError(f"colon-search box {shape} is too large")
    Vg = st.to_grid(V.gens, shape)
    Ug = st.to_grid(U.gens, tuple(max(x, y) + 1 for x, y in zip(b, u)))
    rep = []
    for bj, uj in zip(b, u):
        idx = np.arange(bj + 1)
        idx[bj] = max(bj, uj)
        rep.append(idx)
    base = Ug[np.ix_(*rep)] & ~Vg

    # bit i set at m  <=>  x_i * m lies in V
    bits = np.zeros(shape, dtype=np.int64)
    for i in range(d):
        step = tuple(int(j == i) for j in range(d))
        bits |= st.view(Vg, shape, step).astype(np.int64) << i

    found = {}
    for size in range(d + 1):
        for S in combinations(range(d), size):
            mask = sum(1 << i for i in S)
            # m * (large powers of the variables outside S) lies in V?
            sat = Vg[np.ix_(*[np.arange(b[j] + 1) if j in S else np.array([b[j]]) for j in range(d)])]
            cand = base & (bits == mask) & ~sat
            if cand.any():
                m = tuple(int(v) for v in np.argwhere(cand)[0])
                w = tuple(max(bj, uj) if mj == bj else mj for mj, bj, uj in zip(m, b, u))
                found[MonomialPrime(frozenset(S))] = w
    for P, w in found.items():
        ok = (mc.membership(w, U) and not mc.membership(w, V)
              and mc.ideal_colon(V, MonomialIdeal.principal(w)) == P.ideal(d))
        if not ok:
            raise AssertionError(f"witness {w} does not certify {sorted(P.varset)}")
    return found


def ass_ideal_subquotient(U, V):
    return frozenset(ass_witnesses(U, V))


def ass_module_quotient(U, V):
    """``Ass(U/V)`` for monomial submodules ``V ⊆ U`` of ``F``."""
    if not mod.submodule_leq(V, U):
        raise DimensionMismatch("subquotient needs V ⊆ U")
    out = set()
    nonzero = False
    for a, b in zip(U.coords, V.coords):
        if a == b:
            continue
        nonzero = True
        out |= ass_ideal_subquotient(a, b)
    if not nonzero:
        raise DegenerateInput("U/V is the zero module")
    return frozenset(out)


@dataclass(frozen=True)
class AssSequenceReport:
    per_n: tuple  # per_n[n-1] is the prime set at index n (None when excluded)
    increasing: bool
    stabilization_candidate: object  # int | None
    stable_set: frozenset
    certified: bool
    closure_certified: bool
    degenerate: tuple = field(default=())  # indices whose module was zero


def _summarize(per_n, window, closure_certified, degenerate=(), exclude_degenerate=False):
    items = [(n, s) for n, s in enumerate(per_n, start=1)
             if not (exclude_degenerate and n in degenerate)]
    increasing = all(a <= b for (_, a), (_, b) in zip(items, items[1:]))
    candidate = None
    if items:
        last = items[-1][1]
        run = 0
        for n, s in reversed(items):
            if s != last:
                break
            run += 1
            candidate = n
        if run < window:
            candidate = None
        stable = last
    else:
        stable = frozenset()
    return AssSequenceReport(
        tuple(per_n), increasing, candidate, stable,
        candidate is not None and closure_certified, closure_certified, tuple(degenerate),
    )


def _check_seq_args(I, P, n_max):
    if I.is_zero or I.is_unit:
        raise DegenerateInput("the ideal must be nonzero and proper")
    if P.is_zero:
        raise DegenerateInput("E is the zero module")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")


def ass_rr_sequence(I, P, n_max=6, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """``Ass(E / closure(I^n, E))`` for ``n = 1..n_max``."""
    _check_seq_args(I, P, n_max)
    F = P.F
    per_n, degenerate, cert = [], [], True
    for n in range(1, n_max + 1):
        res = rr_power(I, n, P, window, cap)
        cert &= res.certified
        if res.value == F:
            degenerate.append(n)
            per_n.append(frozenset())
        else:
            per_n.append(ass_module_quotient(F, res.value))
    return _summarize(per_n, window, cert, degenerate)


def ass_power_sequence(I, P, n_max=6, window=DEFAULT_WINDOW):
    """``Ass(E / I^n E)`` for ``n = 1..n_max``."""
    _check_seq_args(I, P, n_max)
    F = P.F
    per_n = [ass_module_quotient(F, mod.power_scale_preimage(I, n, P)) for n in range(1, n_max + 1)]
    return _summarize(per_n, window, True)


def ass_successive_rr(I, P, n_max=6, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """``Ass(closure(I^n, E) / closure(I^{n+1}, E))``; equal neighbours are excluded."""
    _check_seq_args(I, P, n_max)
    per_n, degenerate, cert = [], [], True
    for n in range(1, n_max + 1):
        hi = rr_power(I, n, P, window, cap)
        lo = rr_power(I, n + 1, P, window, cap)
        cert &= hi.certified and lo.certified
        if hi.value == lo.value:
            degenerate.append(n)
            per_n.append(None)
        else:
            per_n.append(ass_module_quotient(hi.value, lo.value))
    return _summarize(per_n, window, cert, degenerate, exclude_degenerate=True)


@dataclass(frozen=True)
class Corollary25Report:
    quotient: AssSequenceReport
    successive: AssSequenceReport
    equal: tuple  # per n
    n0: object  # int | None

    @property
    def found(self):
        return self.n0 is not None


def _tail_start(flags):
    """Least 1-based n with every flag from n on true, or None."""
    n0 = None
    for n in range(len(flags), 0, -1):
        if not flags[n - 1]:
            break
        n0 = n
    return n0


def corollary25_check(I, n_max=6, window=DEFAULT_WINDOW, cap=DEFAULT_CAP, P=None):
    """Where ``Ass(R/closure(I^n))`` and ``Ass(closure(I^n)/closure(I^{n+1}))`` agree (E = R)."""
    if P is None:
        P = mod.QuotientPresentation.ring(I.d)
    if not P.is_ring:
        raise DegenerateInput("this check is only defined for E = R")
    q = ass_rr_sequence(I, P, n_max, window, cap)
    s = ass_successive_rr(I, P, n_max, window, cap)
    equal = tuple(a is not None and a == b for a, b in zip(q.per_n, s.per_n))
    return Corollary25Report(q, s, equal, _tail_start(equal))


def grade_positive(I, P):
    """``grade(I, E) > 0``, i.e. ``I`` lies in no associated prime of ``E``."""
    if I.is_unit:
        raise DegenerateInput("the ideal must be proper")
    if P.is_zero:
        raise DegenerateInput("E is the zero module")
    return not any(p.contains_ideal(I) for p in ass_module_quotient(P.F, P.relations))


def regular_monomial(c, P):
    """Whether multiplication by the monomial ``c`` is injective on ``E``."""
    supp = mc.support(c)
    return not any(p.varset & supp for p in ass_module_quotient(P.F, P.relations))


@dataclass(frozen=True)
class EventualEqualityReport:
    equal: tuple  # equal[n-1]: closure(I^n, E) == I^n E
    n0: object
    certified: bool

    @property
    def found(self):
        return self.n0 is not None


def eventual_equality_check(I, P, n_max=10, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """Least ``n0`` with ``closure(I^n, E) = I^n E`` for all ``n0 <= n <= n_max``."""
    if not grade_positive(I, P):
        raise DegenerateInput("grade(I, E) = 0: the eventual equality need not hold")
    equal, cert = [], True
    for n in range(1, n_max + 1):
        res = rr_power(I, n, P, window, cap)
        cert &= res.certified
        equal.append(res.value == mod.power_scale_preimage(I, n, P))
    return EventualEqualityReport(tuple(equal), _tail_start(equal), cert)


@dataclass(frozen=True)
class BrodmannReport:
    rr: AssSequenceReport
    power: AssSequenceReport  # computed up to n_max + shift
    shift: int
    stable_inclusion: bool
    union_inclusion: bool

    @property
    def holds(self):
        return self.stable_inclusion and self.union_inclusion


def brodmann_inclusion(I, P, n_max=6, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """Compare the closure-based and the ordinary-power ``Ass`` sequences.

    A prime of ``Ass(E/closure(I^n, E))`` is associated to ``E/I^{n+s}E``
    where ``s`` is the chain index at which the closure was reached plus the
    number of colons the torsion saturation took, so the power sequence is
    extended by the largest such ``s``.
    """
    rr = ass_rr_sequence(I, P, n_max, window, cap)
    _, steps = torsion_saturation(I, P)
    shift = steps + max(rr_power(I, n, P, window, cap).stabilized_at or cap
                        for n in range(1, n_max + 1))
    power = ass_power_sequence(I, P, n_max + shift, window)
    union_rr = frozenset().union(*rr.per_n)
    union_pw = frozenset().union(*power.per_n)
    return BrodmannReport(rr, power, shift, rr.stable_set <= power.stable_set, union_rr <= union_pw)
