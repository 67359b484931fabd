"""Brute-force semantics on degree-truncated monomial sets.

Every ideal is modelled by the set of its monomials of total degree ``<= D``
(a boolean array over ``[0, D]^d`` masked to the simplex). Operations are
evaluated straight from their defining set comprehensions:

* ``A*B``: every ``a*b`` with ``a``, ``b`` members;
* ``A:B``: every ``m`` with ``m*g ∈ A`` for each minimal element ``g`` of ``B``;
* ``Ass(U/V)``: every prime of the form ``(V : m)`` with ``m ∈ U \\ V``.

Truncation only ever loses members, and it loses them only above a known
degree. Each :class:`TruncatedSet` therefore carries ``exact``: the degree up
to which it equals the true set. Comparisons are only made on that range.

Nothing here uses the structural code paths; only the generator tuples of
the inputs are read.
"""

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

import numpy as np

from . import closure as _closure
from . import module as _module
from . import monomial as _monomial
from .ass import ass_cyclic as _ass_cyclic, ass_module_quotient as _ass_quotient
from .instance import Instance, format_instance
from .module import MonomialSubmodule, QuotientPresentation
from .monomial import MonomialIdeal, MonomialPrime


def _deg(m):
    return sum(m)


def _maxdeg(gens):
    return max((_deg(g) for g in gens), default=0)


def _simplex(D, d):
    grids = np.indices((D + 1,) * d, sparse=True)
    return sum(grids) <= D if d else np.ones((), dtype=bool)


@dataclass(frozen=True, eq=False)
class TruncatedSet:
    """Monomials of total degree ``<= D`` of an ideal.

    ``loss``: the set is exact on degrees ``<= D - loss``.
    ``need``: below this ``D`` the bookkeeping is void (``exact`` is -1).
    ``gen_bound`` and ``corner`` bound the degrees and exponents of the true
    minimal generators.
    """

    D: int
    d: int
    arr: np.ndarray
    loss: int
    need: int
    gen_bound: int
    corner: tuple

    @property
    def exact(self):
        return self.D - self.loss if self.D >= self.need else -1

    @property
    def members(self):
        return frozenset(tuple(int(v) for v in c) for c in np.argwhere(self.arr))

    def contains(self, m):
        return _deg(m) <= self.D and bool(self.arr[tuple(m)])

    def minimal(self, up_to=None):
        """Minimal members of degree ``<= up_to`` (default: the exact range)."""
        top = self.exact if up_to is None else up_to
        out = []
        for c in np.argwhere(self.arr):
            m = tuple(int(v) for v in c)
            if _deg(m) > top:
                continue
            if not any(m[j] and self.arr[m[:j] + (m[j] - 1,) + m[j + 1:]] for j in range(self.d)):
                out.append(m)
        return sorted(out)


def _mark(arr, g):
    if _deg(g) <= arr.shape[0] - 1:
        arr[tuple(slice(e, None) for e in g)] = True


def truncate(X, D):
    """Members of degree ``<= D`` of an ideal (or a list of them for a submodule)."""
    if D < 0:
        raise ValueError("D must be non-negative")
    if isinstance(X, MonomialSubmodule):
        return [truncate(A, D) for A in X.coords]
    d = X.d
    arr = np.zeros((D + 1,) * d, dtype=bool)
    for g in X.gens:
        _mark(arr, g)
    arr &= _simplex(D, d)
    corner = tuple(max((g[j] for g in X.gens), default=0) for j in range(d))
    return TruncatedSet(D, d, arr, 0, 0, _maxdeg(X.gens), corner)


def _shift(arr, g):
    """``{m * g : m ∈ arr}`` within the same box."""
    D = arr.shape[0] - 1
    out = np.zeros_like(arr)
    if _deg(g) > D:
        return out
    dst = tuple(slice(e, None) for e in g)
    src = tuple(slice(0, D + 1 - e) for e in g)
    out[dst] = arr[src]
    return out


def _unshift(arr, g):
    """``{m : m * g ∈ arr}``; monomials pushed past the box count as absent."""
    D = arr.shape[0] - 1
    out = np.zeros_like(arr)
    if _deg(g) > D:
        return out
    dst = tuple(slice(0, D + 1 - e) for e in g)
    src = tuple(slice(e, None) for e in g)
    out[dst] = arr[src]
    return out


def t_product(A, B):
    mask = _simplex(A.D, A.d)
    arr = np.zeros_like(A.arr)
    for g in A.minimal(A.D):
        arr |= _shift(B.arr, g)
    return TruncatedSet(A.D, A.d, arr & mask, max(A.loss, B.loss), max(A.need, B.need),
                        A.gen_bound + B.gen_bound, tuple(a + b for a, b in zip(A.corner, B.corner)))


def t_power(A, n):
    if n == 0:
        one = MonomialIdeal.unit(A.d)
        return truncate(one, A.D)
    return reduce(t_product, [A] * n)


def t_sum(A, B):
    return TruncatedSet(A.D, A.d, A.arr | B.arr, max(A.loss, B.loss), max(A.need, B.need),
                        max(A.gen_bound, B.gen_bound), tuple(map(max, A.corner, B.corner)))


def t_intersect(A, B):
    corner = tuple(map(max, A.corner, B.corner))
    return TruncatedSet(A.D, A.d, A.arr & B.arr, max(A.loss, B.loss), max(A.need, B.need),
                        min(A.gen_bound + B.gen_bound, sum(corner)), corner)


def t_colon(A, B):
    """``(A : B)``; needs every minimal element of ``B`` inside ``B``'s exact range."""
    need = max(A.need, B.need, B.loss + B.gen_bound)
    gens = B.minimal(B.D - B.loss) if B.D >= need else []
    if not gens and B.D >= need:
        raise ValueError("colon by the zero ideal")
    arr = np.ones_like(A.arr)
    for g in gens:
        arr &= _unshift(A.arr, g)
    arr &= _simplex(A.D, A.d)
    return TruncatedSet(A.D, A.d, arr, A.loss + B.gen_bound, need, sum(A.corner), A.corner)


def t_closure(I, W, N, k_max):
    """``{e : I^k e ⊆ I^{k+1} W + N for some k <= k_max}`` on truncated sets."""
    out = None
    for k in range(1, k_max + 1):
        target = t_sum(t_product(t_power(I, k + 1), W), N)
        term = t_colon(target, t_power(I, k))
        out = term if out is None else TruncatedSet(
            term.D, term.d, out.arr | term.arr, max(out.loss, term.loss), max(out.need, term.need),
            max(out.gen_bound, term.gen_bound), tuple(map(max, out.corner, term.corner)))
    return out


@dataclass(frozen=True)
class AssResult:
    primes: frozenset
    conclusive: bool
    D: int
    witnesses: dict = field(default_factory=dict, compare=False)


def t_ass(U, V):
    """Primes ``(V : m)`` over members ``m`` of ``U`` outside ``V``.

    A member ``m`` is examined for a candidate ``S`` once ``m`` and the
    multiples that decide ``(V : m) = (x_S)`` lie in the exact ranges: ``x_j m``
    for ``j ∈ S`` and ``m`` times powers of the other variables up to the
    corner of ``V``. The answer is complete once every ``m`` below
    ``max(corner(U), corner(V))`` could be examined: beyond the corner of
    ``V``, raising an exponent changes neither membership nor annihilator.
    """
    d = V.d
    b = V.corner
    eV, eU = V.exact, U.exact
    box = sum(max(x, y) for x, y in zip(b, U.corner))
    conclusive = eV >= box + 1 and eU >= box
    if eV < 0 or eU < 0:
        return AssResult(frozenset(), False, V.D)
    idx = np.indices(V.arr.shape, sparse=True)
    degs = sum(idx)
    cand = U.arr & ~V.arr & (degs <= eU)
    step_in = [_unshift(V.arr, tuple(int(i == j) for i in range(d))) for j in range(d)]
    found = {}
    for size in range(d + 1):
        for S in combinations(range(d), size):
            T = [j for j in range(d) if j not in S]
            sat = V.arr.copy()
            for j in T:  # anything of the form m * x_T^t in V
                sat = np.flip(np.logical_or.accumulate(np.flip(sat, j), axis=j), j)
            lift = sum((np.maximum(b[j] - idx[j], 0) for j in T), np.zeros((), dtype=int))
            ok = cand & ~sat & (degs + np.maximum(lift, 1) <= eV)
            for j in range(d):
                ok &= step_in[j] if j in S else ~step_in[j]
            if ok.any():
                m = tuple(int(v) for v in np.argwhere(ok)[0])
                found[MonomialPrime(frozenset(S))] = m
    return AssResult(frozenset(found), conclusive, V.D, found)


# --- expression trees -------------------------------------------------------

def oracle_eval(expr, D, k_max=6):
    """Evaluate a tuple tree.

    Nodes: ``("ideal", MonomialIdeal)``, ``("product", a, b)``,
    ``("power", a, n)``, ``("colon", a, b)``, ``("intersect", a, b)``,
    ``("sum", a, b)``, ``("closure", I, W, N)`` (chain up to ``k_max``) and
    ``("ass", U, V)``.
    """
    tag = expr[0]
    if tag == "ideal":
        return truncate(expr[1], D)
    ev = lambda e: oracle_eval(e, D, k_max)
    if tag == "product":
        return t_product(ev(expr[1]), ev(expr[2]))
    if tag == "power":
        return t_power(ev(expr[1]), expr[2])
    if tag == "colon":
        return t_colon(ev(expr[1]), ev(expr[2]))
    if tag == "intersect":
        return t_intersect(ev(expr[1]), ev(expr[2]))
    if tag == "sum":
        return t_sum(ev(expr[1]), ev(expr[2]))
    if tag == "closure":
        return t_closure(ev(expr[1]), ev(expr[2]), ev(expr[3]), k_max)
    if tag == "ass":
        return t_ass(ev(expr[1]), ev(expr[2]))
    raise ValueError(f"unknown oracle node {tag!r}")


def compare(T, S):
    """Compare a truncated set with a structural ideal on ``T``'s exact range.

    Returns ``(status, exact, complete)``; status is ``agree``, ``mismatch`` or
    ``inconclusive``. ``agree`` needs the exact range to reach every generator
    of ``S``; ``complete`` additionally means it reaches the bound on the
    oracle object's own generators, which pins both ideals down entirely.
    """
    e = T.exact
    if e < 0:
        return "inconclusive", e, False
    ref = truncate(S, T.D).arr
    low = sum(np.indices(T.arr.shape, sparse=True)) <= e if T.d else np.ones((), dtype=bool)
    if np.any((ref ^ T.arr) & low):
        return "mismatch", e, False
    if e < _maxdeg(S.gens):
        return "inconclusive", e, False
    return "agree", e, e >= T.gen_bound


# --- cross-checks -----------------------------------------------------------

@dataclass
class Comparison:
    op: str
    label: str
    status: str
    D: int
    exact: int  # valid degree range of the comparison (-1: none)
    complete: bool = False
    reproducer: object = None  # instance text for mismatches


@dataclass
class CrossCheckReport:
    comparisons: list

    @property
    def mismatches(self):
        return [c for c in self.comparisons if c.status == "mismatch"]

    @property
    def inconclusive(self):
        return [c for c in self.comparisons if c.status == "inconclusive"]

    @property
    def ok(self):
        return not self.mismatches and not self.inconclusive


ALL_OPS = ("product", "power", "colon", "intersect", "chain", "closure", "ass")


def _tasks(inst, ops, k_max):
    """Yield ``(op, label, structural thunk, oracle expr)``; Ass tasks return prime sets."""
    I = inst.I
    J = inst.J if inst.J is not None else inst.I
    P = QuotientPresentation(inst.N)
    gi, gj = ("ideal", I), ("ideal", J)
    if "product" in ops:
        yield "product", "I*J", lambda: _monomial.ideal_product(I, J), ("product", gi, gj)
    if "power" in ops:
        for n in range(1, 5):
            yield "power", f"I^{n}", (lambda n=n: _monomial.ideal_power(I, n)), ("power", gi, n)
    if "colon" in ops:
        yield "colon", "I:J", lambda: _monomial.ideal_colon(I, J), ("colon", gi, gj)
        yield "colon", "J:I", lambda: _monomial.ideal_colon(J, I), ("colon", gj, gi)
        for c, A in enumerate(inst.N.coords):
            if not A.is_zero:
                yield ("colon", f"N{c + 1}:I", (lambda A=A: _monomial.ideal_colon(A, I)),
                       ("colon", ("ideal", A), gi))
    if "intersect" in ops:
        yield "intersect", "I∩J", lambda: _monomial.ideal_intersect(I, J), ("intersect", gi, gj)
        for c, A in enumerate(inst.N.coords):
            yield ("intersect", f"I∩N{c + 1}", (lambda A=A: _monomial.ideal_intersect(I, A)),
                   ("intersect", gi, ("ideal", A)))
    if "chain" in ops:
        for n in (1, 2):
            for k in range(1, k_max + 1):
                for c, A in enumerate(inst.N.coords):
                    yield ("chain", f"T(n={n},k={k})[{c + 1}]",
                           (lambda n=n, k=k, c=c: _closure.chain_term(I, n, k, P).coords[c]),
                           ("colon", ("sum", ("power", gi, n + k), ("ideal", A)), ("power", gi, k)))
    if "closure" in ops:
        for n in (1, 2):
            res = _closure.rr_power(I, n, P)
            if not res.certified:
                continue
            # the closure equals the literal chain term at this depth
            _, steps = _closure.torsion_saturation(I, P)
            k = res.stabilized_at + steps
            for c, A in enumerate(inst.N.coords):
                yield ("closure", f"closure(I^{n})[{c + 1}] at k={k}",
                       (lambda n=n, c=c: _closure.rr_power(I, n, P).value.coords[c]),
                       ("colon", ("sum", ("power", gi, n + k), ("ideal", A)), ("power", gi, k)))
    if "ass" in ops:
        unit = ("ideal", MonomialIdeal.unit(I.d))
        yield "ass", "Ass(R/I)", lambda: _ass_quotient_ideals(MonomialIdeal.unit(I.d), I), ("ass", unit, gi)
        for c, A in enumerate(inst.N.coords):
            if not A.is_unit:
                V = _monomial.ideal_sum(_monomial.ideal_power(I, 2), A)
                yield ("ass", f"Ass(R/(I^2+N{c + 1}))",
                       (lambda V=V: _ass_quotient_ideals(MonomialIdeal.unit(I.d), V)),
                       ("ass", unit, ("sum", ("power", gi, 2), ("ideal", A))))
            hi = _closure.rr_power(I, 1, P).value.coords[c]
            lo = _closure.rr_power(I, 2, P).value.coords[c]
            if hi != lo:
                yield ("ass", f"Ass(closure(I)/closure(I^2))[{c + 1}]",
                       (lambda hi=hi, lo=lo: _ass_quotient_ideals(hi, lo)),
                       ("ass", ("ideal", hi), ("ideal", lo)))


def _ass_quotient_ideals(U, V):
    return _ass_quotient(MonomialSubmodule((U,)), MonomialSubmodule((V,)))


def _needed_D(T, S, complete):
    target = max(_maxdeg(S.gens), T.gen_bound if complete else 0)
    return max(T.need, T.loss + target)


def _run_one(structural, expr, D, k_max, raise_D, D_max, complete):
    S = structural()
    while True:
        out = oracle_eval(expr, D, k_max)
        if isinstance(out, AssResult):
            if not out.conclusive:
                status, exact, comp = "inconclusive", -1, False
            else:
                status = "agree" if out.primes == S else "mismatch"
                exact, comp = D, True
            nxt = _ass_needed_D(expr, D, k_max)
        else:
            status, exact, comp = compare(out, S)
            nxt = _needed_D(out, S, complete)
            if status == "agree" and complete and not comp:
                status = "inconclusive"
        if status != "inconclusive" or not raise_D or D >= D_max or nxt <= D:
            return status, D, exact, comp
        D = min(max(nxt, D + 1), D_max)


def _ass_needed_D(expr, D, k_max):
    U = oracle_eval(expr[1], D, k_max)
    V = oracle_eval(expr[2], D, k_max)
    box = sum(max(x, y) for x, y in zip(V.corner, U.corner))
    return max(V.loss + box + 1, U.loss + box, V.need, U.need)


def cross_check(instance, ops=ALL_OPS, D=12, k_max=6, raise_D=True, D_max=200, complete=False):
    """Run structural and oracle paths side by side.

    Inconclusive comparisons are retried at the degree bound they report as
    sufficient (capped at ``D_max``) when ``raise_D`` is set. Mismatches carry
    a shrunken reproducer in the instance text format.
    """
    out = []
    for op, label, structural, expr in _tasks(instance, set(ops), k_max):
        if D <= 0:
            out.append(Comparison(op, label, "inconclusive", D, -1))
            continue
        status, used, exact, comp = _run_one(structural, expr, D, k_max, raise_D, D_max, complete)
        rep = None
        if status == "mismatch":
            rep = format_instance(_shrink(instance, op, label, D, k_max, D_max))
        out.append(Comparison(op, label, status, used, exact, comp, rep))
    return CrossCheckReport(out)


def _mismatches(inst, op, label, D, k_max, D_max):
    try:
        for o, lab, structural, expr in _tasks(inst, {op}, k_max):
            if lab == label:
                return _run_one(structural, expr, D, k_max, True, D_max, False)[0] == "mismatch"
    except Exception:
        return False
    return False


def _variants(inst):
    """Smaller instances: drop one generator or lower one exponent."""
    d = inst.d

    def ideals(A):
        for i in range(len(A.gens)):
            rest = A.gens[:i] + A.gens[i + 1:]
            yield _monomial.minimalize(rest, d)
        for i, g in enumerate(A.gens):
            for j in range(d):
                if g[j]:
                    h = g[:j] + (g[j] - 1,) + g[j + 1:]
                    yield _monomial.minimalize(A.gens[:i] + (h,) + A.gens[i + 1:], d)

    for A in ideals(inst.I):
        if not A.is_zero and not A.is_unit:
            yield Instance(inst.names, A, inst.N, inst.J)
    if inst.J is not None:
        for A in ideals(inst.J):
            if not A.is_zero:
                yield Instance(inst.names, inst.I, inst.N, A)
    for c, C in enumerate(inst.N.coords):
        for A in ideals(C):
            if not A.is_unit:
                coords = inst.N.coords[:c] + (A,) + inst.N.coords[c + 1:]
                yield Instance(inst.names, inst.I, MonomialSubmodule(coords), inst.J)


def _shrink(inst, op, label, D, k_max, D_max, budget=200):
    """Greedily simplify while the mismatch persists."""
    cur = inst
    progress = True
    while progress and budget > 0:
        progress = False
        for cand in _variants(cur):
            budget -= 1
            if budget <= 0:
                break
            if _mismatches(cand, op, label, D, k_max, D_max):
                cur, progress = cand, True
                break
    return cur


def dual_ass_check(V):
    """Both ``Ass(R/V)`` routes; returns the two prime sets."""
    return _ass_cyclic(V), _ass_quotient_ideals(MonomialIdeal.unit(V.d), V)
