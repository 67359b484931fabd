"""Ratliff-Rush closures of ideal powers with respect to a module.

The closure of ``I^n`` with respect to ``E = F/N`` is the union of the
increasing chain ``T_k = (I^{n+k} E :_E I^k)``. No a-priori bound on when
the chain stops growing is available, so chains are computed until
``window`` consecutive terms agree (reported as ``certified``) or until
``cap`` terms have been built.

Before the chain is run, ``N`` is replaced by its ``I``-saturation
``G = (N :_F I^infinity)``. Any ``e`` with ``I^k e ⊆ I^{n+k}F + G`` satisfies
``I^{k+c} e ⊆ I^{n+k+c}F + N`` once ``I^c G ⊆ N``, so the union is unchanged,
but torsion that only shows up after many colons no longer produces a
premature plateau. The saturation chain itself is exact: it is constant
from its first repeat on.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import module as mod
from .errors import DegenerateInput, DimensionMismatch
from .module import MonomialSubmodule, QuotientPresentation

DEFAULT_WINDOW = 3
DEFAULT_CAP = 20


@dataclass(frozen=True)
class ClosureResult:
    value: MonomialSubmodule
    chain: tuple
    stabilized_at: object  # int | None, 1-based chain index
    certified: bool
    window_used: int
    cap_used: int
    saturation: MonomialSubmodule = None  # (N :_F I^infinity) used as relations


def _check_args(I, P, window, cap):
    if I.is_zero or I.is_unit:
        raise DegenerateInput("the ideal must be nonzero and proper")
    if I.d != P.d:
        raise DimensionMismatch("ideal and module live in different rings")
    if window < 1 or cap < window:
        raise ValueError(f"need 1 <= window <= cap, got window={window}, cap={cap}")


@lru_cache(maxsize=4096)
def torsion_saturation(I, P):
    """``((N :_F I^infinity), steps)``: the preimage of the ``I``-torsion of ``E``."""
    if I.is_zero:
        raise DegenerateInput("saturation by the zero ideal is undefined")
    cur, steps = P.relations, 0
    while True:
        nxt = mod.submodule_colon_ideal(cur, I)
        if nxt == cur:
            return cur, steps
        cur, steps = nxt, steps + 1


def chain_term(I, n, k, P):
    """``(I^{n+k} F + N) :_F I^k`` with the relations of ``P`` taken as given."""
    return mod.submodule_colon_power(mod.power_scale_preimage(I, n + k, P), I, k)


def _run_chain(term, window, cap, sat):
    chain = []
    for k in range(1, cap + 1):
        T = term(k)
        if chain and not mod.submodule_leq(chain[-1], T):
            raise AssertionError(f"closure chain decreased at k={k}")
        chain.append(T)
        if len(chain) >= window and all(c == T for c in chain[-window:]):
            return ClosureResult(T, tuple(chain), k - window + 1, True, window, cap, sat)
    return ClosureResult(chain[-1], tuple(chain), None, False, window, cap, sat)


@lru_cache(maxsize=4096)
def rr_closure_general(I, W, P, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """``{e in F : I^k e ⊆ I^{k+1} W + N for some k <= cap}``.

    ``W`` need not contain ``N``; the relations are always added to the
    scaled target.
    """
    _check_args(I, P, window, cap)
    if W.r != P.r or W.d != P.d:
        raise DimensionMismatch("submodule and presentation differ in shape")
    G, _ = torsion_saturation(I, P)
    if G.is_free:
        return ClosureResult(G, (G,), 1, True, window, cap, G)

    def term(k):
        target = mod.submodule_sum(mod.submodule_scale(I ** (k + 1), W), G)
        return mod.submodule_colon_power(target, I, k)

    return _run_chain(term, window, cap, G)


@lru_cache(maxsize=4096)
def rr_power(I, n, P, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """Preimage in ``F`` of the closure of ``I^n`` with respect to ``E``.

    ``n = 0`` gives all of ``F``.
    """
    _check_args(I, P, window, cap)
    if n < 0:
        raise ValueError("negative power")
    G, _ = torsion_saturation(I, P)
    if n == 0 or G.is_free:
        F = P.F
        return ClosureResult(F, (F,), 1, True, window, cap, G)
    Q = QuotientPresentation(G)
    return _run_chain(lambda k: chain_term(I, n, k, Q), window, cap, G)


def rr_ideal(I, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """The Ratliff-Rush ideal of ``I`` in ``R``."""
    return rr_power(I, 1, QuotientPresentation.ring(I.d), window, cap)


@dataclass(frozen=True)
class Lemma21Report:
    n: int
    m: int
    closure_colon: MonomialSubmodule  # closure(I^n, E) : closure(I^m)
    power_colon: MonomialSubmodule  # closure(I^n, E) : I^m
    lower: MonomialSubmodule  # closure(I^{n-m}, E)
    closure_eq_power: bool
    power_eq_lower: bool
    certified: bool

    @property
    def holds(self):
        return self.closure_eq_power and self.power_eq_lower


def lemma21_check(I, P, n, m, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    """Compare the three colon modules built from closures of ``I^n`` and ``I^m``."""
    if m < 1 or n < m:
        raise ValueError(f"need n >= m >= 1, got n={n}, m={m}")
    top = rr_power(I, n, P, window, cap)
    rr_m = rr_power(I, m, QuotientPresentation.ring(I.d), window, cap)
    low = rr_power(I, n - m, P, window, cap)
    a = mod.submodule_colon_ideal(top.value, rr_m.value.coords[0])
    b = mod.submodule_colon_ideal(top.value, I ** m)
    return Lemma21Report(
        n, m, a, b, low.value,
        a == b, b == low.value,
        top.certified and rr_m.certified and low.certified,
    )
