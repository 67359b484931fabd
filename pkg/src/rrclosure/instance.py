"""Plain-text instance files and seeded random instances.

Example::

    vars x y
    ideal I: x^4, x^3*y, x*y^3, y^4
    module rank 1
    submodule N:

Optional lines: ``ideal J: ...``, ``submodule N1: ...`` and
``submodule N2: ...``. Submodule elements carry their coordinate as a
factor ``e1``, ``e2``, ... (optional when the rank is 1). ``1`` denotes the
unit monomial; an empty list after the colon is the zero ideal/submodule.
Lines starting with ``#`` are comments.
"""

import random
import re
from dataclasses import dataclass

from . import monomial as mc
from .errors import ParseError
from .module import MonomialSubmodule, QuotientPresentation
from .monomial import MonomialIdeal

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_BASIS = re.compile(r"e([0-9]+)\Z")
_KEYS = ("ideal I", "ideal J", "submodule N", "submodule N1", "submodule N2")


@dataclass(frozen=True)
class Instance:
    names: tuple
    I: MonomialIdeal
    N: MonomialSubmodule
    J: object = None  # MonomialIdeal | None
    N1: object = None  # MonomialSubmodule | None
    N2: object = None

    @property
    def d(self):
        return len(self.names)

    @property
    def r(self):
        return self.N.r

    @property
    def presentation(self):
        return QuotientPresentation(self.N)


# --- formatting -------------------------------------------------------------

def format_monomial(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(A, names):
    return ", ".join(format_monomial(g, names) for g in A.gens)


def format_element(coord, m, names):
    body = format_monomial(m, names)
    return f"e{coord + 1}" if body == "1" else f"e{coord + 1}*{body}"


def format_submodule(W, names):
    return ", ".join(format_element(i, g, names) for i, A in enumerate(W.coords) for g in A.gens)


def _line(head, body):
    return f"{head}: {body}" if body else f"{head}:"


def format_instance(inst):
    lines = ["vars " + " ".join(inst.names), _line("ideal I", format_ideal(inst.I, inst.names))]
    if inst.J is not None:
        lines.append(_line("ideal J", format_ideal(inst.J, inst.names)))
    lines.append(f"module rank {inst.r}")
    lines.append(_line("submodule N", format_submodule(inst.N, inst.names)))
    for key, W in (("N1", inst.N1), ("N2", inst.N2)):
        if W is not None:
            lines.append(_line(f"submodule {key}", format_submodule(W, inst.names)))
    return "\n".join(lines) + "\n"


# --- parsing ----------------------------------------------------------------

def _parse_term(text, col, lineno, names, rank):
    """Parse ``e2*x^3*y`` into ``(coord, exponents)``; coord is None if absent."""
    index = {n: i for i, n in enumerate(names)}
    exps = [0] * len(names)
    coord = None
    pos = col
    for factor in text.split("*"):
        lead = len(factor) - len(factor.lstrip())
        f = factor.strip()
        fcol = pos + lead
        pos += len(factor) + 1
        if not f:
            raise ParseError("empty factor", lineno, fcol)
        if f == "1":
            continue
        base, _, power = f.partition("^")
        base = base.strip()
        if power:
            power = power.strip()
            if not re.fullmatch(r"[0-9]+", power):
                raise ParseError(f"bad exponent {power!r} (exponents are non-negative integers)",
                                 lineno, fcol)
            e = int(power)
        else:
            e = 1
        b = _BASIS.match(base)
        if b and base not in index:
            if rank is None:
                raise ParseError("module basis element in an ideal", lineno, fcol)
            if coord is not None or power:
                raise ParseError("a term needs exactly one basis factor e<i>", lineno, fcol)
            coord = int(b.group(1)) - 1
            if not 0 <= coord < rank:
                raise ParseError(f"basis element {base} exceeds rank {rank}", lineno, fcol)
            continue
        if base not in index:
            raise ParseError(f"undeclared variable {base!r}", lineno, fcol)
        exps[index[base]] += e
    if any(e > mc.EXPONENT_CAP for e in exps):
        raise ParseError("exponent exceeds the configured cap", lineno, col)
    return coord, tuple(exps)


def _parse_list(body, col, lineno, names, rank=None):
    out = []
    if not body.strip():
        return out
    pos = col
    for chunk in body.split(","):
        lead = len(chunk) - len(chunk.lstrip())
        if not chunk.strip():
            raise ParseError("empty term", lineno, pos + lead)
        coord, m = _parse_term(chunk.strip(), pos + lead, lineno, names, rank)
        if rank is not None:
            if coord is None:
                if rank != 1:
                    raise ParseError("term lacks a basis factor e<i>", lineno, pos + lead)
                coord = 0
            out.append((coord, m))
        else:
            out.append(m)
        pos += len(chunk) + 1
    return out


def parse_instance(text):
    names = None
    rank = None
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("vars"):
            if names is not None:
                raise ParseError("duplicate 'vars' line", lineno, 1)
            toks = stripped.split()
            if toks[0] != "vars" or len(toks) < 2:
                raise ParseError("expected 'vars <name> ...'", lineno, 1)
            for t in toks[1:]:
                if not _NAME.match(t) or _BASIS.match(t):
                    raise ParseError(f"invalid variable name {t!r}", lineno, line.find(t) + 1)
            if len(set(toks[1:])) != len(toks) - 1:
                raise ParseError("duplicate variable name", lineno, 1)
            names = tuple(toks[1:])
            continue
        if stripped.startswith("module rank"):
            if rank is not None:
                raise ParseError("duplicate 'module rank' line", lineno, 1)
            val = stripped[len("module rank"):].strip()
            if not re.fullmatch(r"[0-9]+", val) or int(val) < 1:
                raise ParseError(f"bad rank {val!r}", lineno, indent + len("module rank") + 2)
            rank = int(val)
            continue
        head, colon, body = stripped.partition(":")
        key = " ".join(head.split())
        if not colon or key not in _KEYS:
            raise ParseError(f"unknown key {head.strip()!r}", lineno, indent + 1)
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", lineno, indent + 1)
        seen[key] = (lineno, indent + len(head) + 2, body)
    if names is None:
        raise ParseError("missing 'vars' line")
    if "ideal I" not in seen:
        raise ParseError("missing 'ideal I' line")
    if rank is None:
        rank = 1
    d = len(names)

    def ideal_of(key):
        lineno, col, body = seen[key]
        return mc.minimalize(_parse_list(body, col, lineno, names), d)

    def sub_of(key):
        lineno, col, body = seen[key]
        return MonomialSubmodule.from_elements(_parse_list(body, col, lineno, names, rank), rank, d)

    return Instance(
        names=names,
        I=ideal_of("ideal I"),
        N=sub_of("submodule N") if "submodule N" in seen else MonomialSubmodule.zero(rank, d),
        J=ideal_of("ideal J") if "ideal J" in seen else None,
        N1=sub_of("submodule N1") if "submodule N1" in seen else None,
        N2=sub_of("submodule N2") if "submodule N2" in seen else None,
    )


# --- random instances -------------------------------------------------------

DEFAULT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class GenParams:
    d: int = 3
    r: int = 2
    max_gens: int = 4
    max_exp: int = 4
    fixed_shape: bool = False  # use exactly d variables and rank r
    free: bool = False  # E = R^r (no relations)


def random_monomial(rng, d, max_exp, positive=True):
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(d))
        if any(m) or not positive:
            return m


def random_ideal(rng, d, max_gens, max_exp):
    """A nonzero proper monomial ideal."""
    k = rng.randint(1, max_gens)
    return mc.minimalize([random_monomial(rng, d, max_exp) for _ in range(k)], d)


def gen_random(rng, params=GenParams()):
    """Random instance with nonzero proper ``I`` and nonzero ``E``.

    Relations are drawn per coordinate; each coordinate is left free with
    probability 1/3 and never becomes the unit ideal.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    if min(params.d, params.r, params.max_gens, params.max_exp) < 1:
        raise ValueError("all generator bounds must be positive")
    if params.d > len(DEFAULT_NAMES):
        raise ValueError(f"at most {len(DEFAULT_NAMES)} variables are supported by the generator")
    d = params.d if params.fixed_shape else rng.randint(1, params.d)
    r = params.r if params.fixed_shape else rng.randint(1, params.r)
    I = random_ideal(rng, d, params.max_gens, params.max_exp)
    J = random_ideal(rng, d, params.max_gens, params.max_exp)
    coords = []
    for _ in range(r):
        if params.free or rng.random() < 1 / 3:
            coords.append(MonomialIdeal.zero(d))
        else:
            coords.append(random_ideal(rng, d, params.max_gens, params.max_exp))
    return Instance(DEFAULT_NAMES[:d], I, MonomialSubmodule(tuple(coords)), J=J)


def corpus(seed, count, params=GenParams()):
    rng = random.Random(seed)
    return [gen_random(rng, params) for _ in range(count)]
