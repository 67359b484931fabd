"""Dense boolean grids for monomial ideals.

A nonzero monomial ideal whose generators have exponents bounded by a
corner ``c`` is fully described by its membership indicator on the box
``[0, c_1] x ... x [0, c_d]``: a monomial ``m`` belongs to the ideal iff
``min(m, c)`` does. The top layer of every axis therefore stands for all
larger exponents. Boxes larger than the corner are fine, they just repeat
the top layer.
"""

import numpy as np

# above this many cells the callers fall back to generator-level code
MAX_CELLS = 1 << 23


def corner(gens, d):
    if not gens:
        return (0,) * d
    return tuple(int(v) for v in np.max(np.asarray(gens, dtype=np.int64), axis=0))


def cells(shape):
    n = 1
    for s in shape:
        n *= s
    return n


def to_grid(gens, shape):
    """Indicator of the ideal generated by ``gens`` on a box of ``shape``.

    Every generator must fit in the box.
    """
    arr = np.zeros(shape, dtype=bool)
    if gens:
        idx = np.asarray(gens, dtype=np.intp).T
        arr[tuple(idx)] = True
        for ax in range(arr.ndim):
            np.logical_or.accumulate(arr, axis=ax, out=arr)
    return arr


def from_grid(arr):
    """Minimal generators of the ideal represented by ``arr``, lex sorted."""
    mask = arr.copy()
    for ax in range(arr.ndim):
        below = np.zeros_like(arr)
        dst = [slice(None)] * arr.ndim
        src = [slice(None)] * arr.ndim
        dst[ax] = slice(1, None)
        src[ax] = slice(None, -1)
        below[tuple(dst)] = arr[tuple(src)]
        mask &= ~below
    return tuple(tuple(int(v) for v in row) for row in np.argwhere(mask))


def view(arr, shape, offset=None):
    """``out[m] = arr[min(m + offset, arr.shape - 1)]`` for ``m`` in ``shape``."""
    if offset is None:
        offset = (0,) * arr.ndim
    if tuple(shape) == arr.shape and not any(offset):
        return arr
    idx = [np.minimum(np.arange(s) + o, t - 1)
           for s, o, t in zip(shape, offset, arr.shape)]
    return arr[np.ix_(*idx)]


def minimal(gens, d):
    """Minimal elements of a finite set of exponent vectors."""
    gens = list(set(gens))
    if len(gens) <= 1:
        return tuple(gens)
    shape = tuple(c + 1 for c in corner(gens, d))
    if cells(shape) > MAX_CELLS:
        return _minimal_pairwise(gens)
    return from_grid(to_grid(gens, shape))


def _minimal_pairwise(gens):
    kept = []
    for g in sorted(gens, key=lambda m: (sum(m), m)):
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


def colon_grid(arr, gens):
    """Grid of ``(A : B)`` on the box of ``A`` where ``B`` is generated by ``gens``."""
    out = np.ones(arr.shape, dtype=bool)
    for b in gens:
        out &= view(arr, arr.shape, b)
    return out
