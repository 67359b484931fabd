"""Ratliff-Rush reductions of submodules and the checks built on them.

``N1 ⊆ N2`` is a reduction of ``N2`` with respect to ``I`` when every
``x ∈ N2`` satisfies ``I^n x ⊆ I^{n+1} N1`` (inside ``E``) for some ``n``.
The condition is used literally, so the relation is not reflexive on
positively graded data: ``(x)`` is not a reduction of itself in ``k[x]``.
Submodules of ``E`` are passed as submodules of ``F``; the relations of the
presentation are added wherever needed.
"""

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import module as mod
from . import monomial as mc
from .ass import regular_monomial
from .closure import DEFAULT_CAP, DEFAULT_WINDOW, rr_closure_general, torsion_saturation
from .errors import DegenerateInput
from .instance import DEFAULT_NAMES, Instance, format_instance, random_ideal, random_monomial
from .module import ModuleElement, MonomialSubmodule, QuotientPresentation


@dataclass(frozen=True)
class ReductionVerdict:
    holds: bool
    witness_index: object = None  # int | None
    counterexample: object = None  # ModuleElement | None
    certified: bool = False


def reduction_containment(N1, N2, I, P, k):
    """``I^k N2 ⊆ I^{k+1} N1 + N``."""
    lhs = mod.submodule_scale(mc.ideal_power(I, k), N2)
    rhs = mod.submodule_sum(mod.submodule_scale(mc.ideal_power(I, k + 1), N1), P.relations)
    return mod.submodule_leq(lhs, rhs)


def _never_reaches(x, I, N1, P):
    """Certify ``I^n x ⊄ I^{n+1} N1 + N`` for every ``n`` by a weighted degree count.

    For a weight ``w`` and a generator ``g`` of ``I`` of least ``w``-degree
    ``a``, the monomial ``x g^n`` has ``w``-degree ``w.x + n a`` while
    ``I^{n+1} N1`` starts in degree ``(n+1) a + b``. If ``w.x < a + b`` and no
    power of ``g`` pushes ``x`` into ``N``, ``x g^n`` is a witness for all ``n``.
    """
    d = I.d
    weights = [(1,) * d] + [tuple(int(i == j) for i in range(d)) for j in range(d)]
    target = N1.coords[x.coord]
    rel = P.relations.coords[x.coord]
    for w in weights:
        wdeg = lambda m: sum(a * b for a, b in zip(w, m))
        alpha = min(wdeg(g) for g in I.gens)
        beta = min((wdeg(h) for h in target.gens), default=None)
        if beta is not None and wdeg(x.mono) >= alpha + beta:
            continue
        for g in I.gens:
            if wdeg(g) != alpha:
                continue
            grows = mc.support(g)
            if not any(all(h[j] <= x.mono[j] for j in range(d) if j not in grows) for h in rel.gens):
                return True
    return False


def is_rr_reduction(N1, N2, I, P, window=DEFAULT_WINDOW, cap=DEFAULT_CAP):
    N = P.relations
    if not mod.submodule_leq(mod.submodule_sum(N1, N), mod.submodule_sum(N2, N)):
        raise ValueError("a reduction needs N1 ⊆ N2")
    if I.is_zero:
        raise DegenerateInput("the ideal must be nonzero")
    if I.is_unit:
        # I^n x ⊆ I^{n+1} N1 + N  reads  x ∈ N1 + N
        bad = [e for e in N2.elements() if e not in mod.submodule_sum(N1, N)]
        if bad:
            return ReductionVerdict(False, counterexample=bad[0], certified=True)
        return ReductionVerdict(True, witness_index=1, certified=True)

    C = rr_closure_general(I, N1, P, window, cap)
    outside = [e for e in N2.elements() if e not in C.value]
    if outside:
        # prefer a generator that is not already in N1 + N
        lower = mod.submodule_sum(N1, N)
        outside.sort(key=lambda e: e in lower)
        x = outside[0]
        return ReductionVerdict(False, counterexample=x, certified=_never_reaches(x, I, N1, P))
    # N2 sits in the chain over the saturated relations; against N itself the
    # containment needs at most as many extra steps as the saturation took
    _, steps = torsion_saturation(I, P)
    k0 = next(k for k, T in enumerate(C.chain, start=1) if mod.submodule_leq(N2, T))
    for k in range(1, k0 + steps + 1):
        if reduction_containment(N1, N2, I, P, k):
            return ReductionVerdict(True, witness_index=k, certified=True)
    raise AssertionError("closure membership did not yield a reduction witness")


def uniform_reduction_index(N1, N2, I, P, cap=DEFAULT_CAP):
    """Least ``s <= cap`` with ``I^s N2 ⊆ I^{s+1} N1 + N``, or None."""
    if not is_rr_reduction(N1, N2, I, P, cap=cap).holds:
        return None
    for s in range(1, cap + 1):
        if reduction_containment(N1, N2, I, P, s):
            return s
    return None


# --- property suite ---------------------------------------------------------

ITEMS = ("i", "ii", "iii", "iv", "v", "vi", "vii")


@dataclass(frozen=True)
class SuiteConfig:
    d_max: int = 3
    r_max: int = 2
    max_gens: int = 3
    max_exp: int = 3
    target: int = 100  # hypothesis-satisfying instances per item
    max_attempts: int = 4000
    window: int = DEFAULT_WINDOW
    cap: int = DEFAULT_CAP


@dataclass
class ItemResult:
    item: str
    tested: int = 0
    attempts: int = 0
    counterexample: object = None  # str | None

    def passed(self, target):
        return self.counterexample is None and self.tested >= target


@dataclass
class SuiteReport:
    config: SuiteConfig
    seed: int
    items: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed(self.config.target) for r in self.items.values())


class _Sampler:
    def __init__(self, rng, cfg):
        self.rng = rng
        self.cfg = cfg

    def setting(self, d=None, avoid=()):
        """Random ``(I, P)``; relations only use variables outside ``avoid``."""
        rng, cfg = self.rng, self.cfg
        d = rng.randint(1, cfg.d_max) if d is None else d
        r = rng.randint(1, cfg.r_max)
        I = random_ideal(rng, d, cfg.max_gens, cfg.max_exp)
        free_vars = [j for j in range(d) if j not in avoid]
        coords = []
        for _ in range(r):
            if not free_vars or rng.random() < 1 / 3:
                coords.append(mc.MonomialIdeal.zero(d))
                continue
            gens = [self._restricted(d, free_vars) for _ in range(rng.randint(1, cfg.max_gens))]
            if not avoid and rng.random() < 0.5:
                # a power of a generator of I makes part of E I-torsion
                g = rng.choice(I.gens)
                gens.append(tuple(e * rng.randint(1, 2) for e in g))
            coords.append(mc.minimalize(gens, d))
        return I, QuotientPresentation(MonomialSubmodule(tuple(coords)))

    def _restricted(self, d, allowed):
        while True:
            m = tuple(self.rng.randint(0, self.cfg.max_exp) if j in allowed else 0 for j in range(d))
            if any(m):
                return m

    def extra(self, P, count=None):
        rng = self.rng
        count = rng.randint(0, 2) if count is None else count
        elems = [(rng.randrange(P.r), random_monomial(rng, P.d, self.cfg.max_exp, positive=False))
                 for _ in range(count)]
        return MonomialSubmodule.from_elements(elems, P.r, P.d)

    def between(self, lo, hi):
        keep = [(e.coord, e.mono) for e in hi.elements() if self.rng.random() < 0.5]
        return mod.submodule_sum(lo, MonomialSubmodule.from_elements(keep, lo.r, lo.d))

    def base(self, I, P):
        """A submodule with a decent chance of being a reduction of something."""
        N = P.relations
        if self.rng.random() < 0.7:
            G, _ = torsion_saturation(I, P)
            return self.between(N, G)
        return mod.submodule_sum(N, self.extra(P))

    def above(self, I, P, lo):
        """``lo`` plus part of its closure, sometimes plus unrelated elements."""
        cl = rr_closure_general(I, lo, P, self.cfg.window, self.cfg.cap).value
        out = mod.submodule_sum(lo, self.between(lo, cl))
        if self.rng.random() < 0.25:
            out = mod.submodule_sum(out, self.extra(P, 1))
        return out


def _describe(I, P, mods, J=None):
    d = I.d
    names = DEFAULT_NAMES[:d] if d <= len(DEFAULT_NAMES) else tuple(f"x{i}" for i in range(d))
    N1 = mods.get("N1")
    N2 = mods.get("N2")
    text = format_instance(Instance(names, I, P.relations, J=J, N1=N1, N2=N2))
    from .instance import format_submodule
    for key, W in mods.items():
        if key not in ("N1", "N2"):
            text += f"# {key}: {format_submodule(W, names)}\n"
    return text


def thm28_suite(cfg=SuiteConfig(), seed=0, items=ITEMS):
    """Check the reduction properties on random hypothesis-satisfying instances.

    Each item draws instances until ``cfg.target`` of them satisfy its
    hypotheses (or ``cfg.max_attempts`` draws were made); any instance whose
    conclusion fails is recorded as a counterexample.
    """
    report = SuiteReport(cfg, seed)
    for item in items:
        rng = random.Random(f"{seed}:{item}")
        sampler = _Sampler(rng, cfg)
        res = ItemResult(item)
        check = _CHECKS[item]
        while res.tested < cfg.target and res.attempts < cfg.max_attempts and res.counterexample is None:
            res.attempts += 1
            outcome = check(sampler, cfg)
            if outcome is None:
                continue
            res.tested += 1
            if outcome is not True:
                res.counterexample = outcome
        report.items[item] = res
    return report


def _red(N1, N2, I, P, cfg):
    if not mod.submodule_leq(mod.submodule_sum(N1, P.relations), mod.submodule_sum(N2, P.relations)):
        return False
    return is_rr_reduction(N1, N2, I, P, cfg.window, cfg.cap).holds


def _check_i(s, cfg):
    I, P = s.setting()
    N = s.base(I, P)
    K = s.above(I, P, N)
    L = s.above(I, P, K)
    if not (_red(N, K, I, P, cfg) and _red(K, L, I, P, cfg)):
        return None
    return True if _red(N, L, I, P, cfg) else _describe(I, P, {"N1": N, "N2": L, "K": K})


def _check_ii(s, cfg):
    I, P = s.setting()
    N = mod.submodule_sum(P.relations, s.extra(P))
    K = mod.submodule_sum(N, s.extra(P))
    a = rr_closure_general(I, N, P, cfg.window, cfg.cap).value
    b = rr_closure_general(I, K, P, cfg.window, cfg.cap).value
    return True if mod.submodule_leq(a, b) else _describe(I, P, {"N1": N, "N2": K})


def _check_iii(s, cfg):
    I, P = s.setting()
    N = s.base(I, P)
    K = s.above(I, P, N)
    if not _red(N, K, I, P, cfg):
        return None
    J = random_ideal(s.rng, I.d, cfg.max_gens, cfg.max_exp)
    JN = mod.submodule_sum(mod.submodule_scale(J, N), P.relations)
    JK = mod.submodule_sum(mod.submodule_scale(J, K), P.relations)
    return True if _red(JN, JK, I, P, cfg) else _describe(I, P, {"N1": N, "N2": K}, J=J)


def _check_iv(s, cfg):
    I, P = s.setting()
    N1 = s.base(I, P)
    N3 = s.above(I, P, N1)
    N2 = s.between(N1, N3)
    if not _red(N1, N3, I, P, cfg):
        return None
    return True if _red(N2, N3, I, P, cfg) else _describe(I, P, {"N1": N2, "N2": N3, "N_low": N1})


def _check_v(s, cfg):
    I, P = s.setting()
    N1 = s.base(I, P)
    N2 = s.above(I, P, N1)
    M1 = s.base(I, P)
    M2 = s.above(I, P, M1)
    if not (_red(N1, N2, I, P, cfg) and _red(M1, M2, I, P, cfg)):
        return None
    A, B = mod.submodule_sum(N1, M1), mod.submodule_sum(N2, M2)
    return True if _red(A, B, I, P, cfg) else _describe(I, P, {"N1": A, "N2": B})


def _check_vi(s, cfg):
    rng = s.rng
    d = rng.randint(1, cfg.d_max)
    avoid = tuple(sorted(rng.sample(range(d), rng.randint(1, d))))
    I, P = s.setting(d, avoid)
    c = s._restricted(P.d, avoid)
    if not regular_monomial(c, P):
        return None
    N = s.base(I, P) if rng.random() < 0.5 else mod.submodule_sum(P.relations, s.extra(P))
    K = s.above(I, P, N)
    C = mc.MonomialIdeal.principal(c)
    cN = mod.submodule_sum(mod.submodule_scale(C, N), P.relations)
    cK = mod.submodule_sum(mod.submodule_scale(C, K), P.relations)
    if not _red(cN, cK, I, P, cfg):
        return None
    return True if _red(N, K, I, P, cfg) else _describe(I, P, {"N1": N, "N2": K, "c": cN})


def _check_vii(s, cfg):
    I, P = s.setting()
    N = s.base(I, P)
    K = s.above(I, P, N)
    if not _red(N, K, I, P, cfg):
        return None
    for size in range(I.d + 1):
        for keep in combinations(range(I.d), size):
            Il = mc.localize_ideal(I, keep)
            Pl = mod.localize_presentation(P, keep)
            Nl = mod.localize_submodule(N, keep)
            Kl = mod.localize_submodule(K, keep)
            if not _red(Nl, Kl, Il, Pl, cfg):
                return _describe(I, P, {"N1": N, "N2": K}) + f"# keep: {list(keep)}\n"
    return True


_CHECKS = {
    "i": _check_i, "ii": _check_ii, "iii": _check_iii, "iv": _check_iv,
    "v": _check_v, "vi": _check_vi, "vii": _check_vii,
}
