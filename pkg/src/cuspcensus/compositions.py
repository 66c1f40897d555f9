"""Exact counting and enumeration of compositions of an integer.

A composition of t encodes a projective sign tuple through its run
sequence, so counting reciprocal geodesics of word length 4t reduces to
counting compositions of t.  Three families matter here:

* all compositions of t (there are 2^{t-1} for t >= 1),
* compositions with every part at most D (counted by a depth-D linear
  recursion, Fibonacci-like),
* compositions with exactly n parts bigger than D (geodesics making
  exactly 2n cusp excursions of depth bigger than D).

Every count is an exact Python integer; this module contains no floating
point.  Counting tables are memoized per D and grown on demand under a
lock, so results never depend on call order or thread count.
"""

from __future__ import annotations

import math
import threading
from typing import Iterator, Optional

from .words import Composition

_lock = threading.RLock()

# D -> [|C_{0,D}|, |C_{1,D}|, ...]
_bounded: dict[int, list[int]] = {}

# D -> list of columns; column m is [|C_{0}^{m,D}|, |C_{1}^{m,D}|, ...]
# together with its running prefix sums
_excursion_cols: dict[int, list[list[int]]] = {}
_excursion_prefs: dict[int, list[list[int]]] = {}

# D -> prefix sums of the self-convolution of the bounded counts:
# entry s is sum_{u<=s} sum_{i+j=u} |C_{i,D}| |C_{j,D}|
_conv_pref: dict[int, list[int]] = {}


class RangeError(ValueError):
    """A (k, r) pair outside the admissible range of the product formula."""


def count_all(t: int) -> int:
    """Number of compositions of t: 2^{t-1}, with one empty composition
    for t = 0.

    >>> [count_all(t) for t in range(5)]
    [1, 1, 2, 4, 8]
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return 1 if t == 0 else 1 << (t - 1)


def _grown_bounded(D: int, upto: int) -> list[int]:
    row = _bounded.setdefault(D, [1])
    while len(row) <= upto:
        s = len(row)
        row.append(sum(row[s - i] for i in range(1, min(D, s) + 1)))
    return row


def count_bounded(t: int, D: int) -> int:
    """Number of compositions of t with all parts at most D.

    Satisfies |C_{t,D}| = sum_{i=1}^{D} |C_{t-i,D}| with |C_{0,D}| = 1.

    >>> [count_bounded(t, 2) for t in range(7)]
    [1, 1, 2, 3, 5, 8, 13]
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    with _lock:
        return _grown_bounded(D, t)[t]


def _grown_excursion(D: int, n: int, upto: int) -> list[list[int]]:
    cols = _excursion_cols.setdefault(D, [])
    prefs = _excursion_prefs.setdefault(D, [])
    if not cols:
        cols.append([])
        prefs.append([])
    # column 0 is the bounded count
    bounded = _grown_bounded(D, upto)
    col0, pref0 = cols[0], prefs[0]
    while len(col0) <= upto:
        s = len(col0)
        col0.append(bounded[s])
        pref0.append(col0[s] + (pref0[s - 1] if s else 0))
    for m in range(1, n + 1):
        if m == len(cols):
            cols.append([0])
            prefs.append([0])
        col, pref = cols[m], prefs[m]
        below = prefs[m - 1]
        while len(col) <= upto:
            s = len(col)
            # first part of size 1..D keeps m; size D+1..s consumes one
            # large part, leaving any arrangement counted by column m-1
            v = sum(col[s - i] for i in range(1, min(D, s) + 1))
            if s >= D + 1:
                v += below[s - D - 1]
            col.append(v)
            pref.append(v + pref[s - 1])
    return cols


def count_exact_excursions(t: int, n: int, D: int) -> int:
    """Number of compositions of t with exactly n parts bigger than D.

    Each such composition is the run sequence of a reciprocal geodesic of
    word length 4t making exactly 2n excursions of depth bigger than D.

    >>> count_exact_excursions(7, 2, 1)
    35
    >>> count_exact_excursions(5, 1, 2)
    8
    >>> count_exact_excursions(4, 0, 2) == count_bounded(4, 2)
    True
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if n * (D + 1) > t:
        return 0
    with _lock:
        return _grown_excursion(D, n, t)[n][t]


def binomial(t: int, k: int) -> int:
    """Exact binomial coefficient, 0 when k > t."""
    if t < 0 or k < 0:
        raise ValueError(f"arguments must be >= 0, got ({t}, {k})")
    return math.comb(t, k)


def product_at(t: int, D: int, k: int, r: int) -> int:
    """Compositions of t whose unique part bigger than D equals r and
    starts at position k of the underlying tuple.

    The positions before the big part form a bounded composition of k-1
    and the positions after it one of t-k-r+1, so the count is the product
    |C_{k-1,D}| * |C_{t-k-r+1,D}|.
    """
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if r < D + 1:
        raise RangeError(f"r must be >= D+1 = {D + 1}, got {r}")
    if not 1 <= k <= t - r + 1:
        raise RangeError(f"k must satisfy 1 <= k <= t-r+1 = {t - r + 1}, got {k}")
    with _lock:
        row = _grown_bounded(D, max(k - 1, t - k - r + 1))
        return row[k - 1] * row[t - k - r + 1]


def two_excursion_sum(t: int, D: int) -> int:
    """Sum of product_at(t, D, k, r) over all admissible positions k and
    sizes r; equals count_exact_excursions(t, 1, D).

    Grouping the (k, r) grid by s = t - r turns the double sum into
    prefix sums of the self-convolution of the bounded counts, which this
    function maintains incrementally per D.

    >>> two_excursion_sum(5, 2)
    8
    >>> two_excursion_sum(2, 2)
    0
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    s_max = t - D - 1
    if s_max < 0:
        return 0
    with _lock:
        row = _grown_bounded(D, s_max)
        pref = _conv_pref.setdefault(D, [])
        while len(pref) <= s_max:
            s = len(pref)
            conv = sum(row[i] * row[s - i] for i in range(s + 1))
            pref.append(conv + (pref[s - 1] if s else 0))
        return pref[s_max]


def _composition_from_glue(t: int, glue: int) -> Composition:
    parts = []
    run = 1
    for j in range(t - 1):
        if glue >> j & 1:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def enumerate_compositions(
    t: int, n: Optional[int] = None, D: Optional[int] = None
) -> Iterator[Composition]:
    """Yield every composition of t exactly once, optionally only those
    with exactly n parts bigger than D.

    Order is fixed: ascending glue bitmask, where bit j of the mask merges
    positions j+1 and j+2 of the underlying tuple (equivalently descending
    cut-point bitmask).  For t = 3 this gives (1,1,1), (2,1), (1,2), (3).
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if (n is None) != (D is None):
        raise ValueError("filter needs both n and D or neither")
    if n is not None and n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if D is not None and D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if t == 0:
        if n is None or n == 0:
            yield Composition(())
        return
    for glue in range(1 << (t - 1)):
        c = _composition_from_glue(t, glue)
        if n is None or sum(1 for p in c.parts if p > D) == n:
            yield c
