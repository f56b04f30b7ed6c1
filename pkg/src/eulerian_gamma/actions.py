"""x-factorization and the three Z_2^n valley-hopping actions.

phi_x swaps the maximal small-letter blocks around x; the modified action
phi_x' only moves double ascents / double descents; the restricted action
phi_x'' additionally freezes beta1 and all rixed points.  Set actions
apply singleton generators in ascending label order (they commute, which
the test suite checks exhaustively).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import rixfact
from .errors import LabelOutOfRange, NotInDomain
from .perm import Permutation, WordT, as_word, dd_count


def x_factorization(
    p: Permutation | Sequence[int], x: int
) -> tuple[WordT, WordT, WordT, WordT]:
    """sigma = w1 w2 x w3 w4 with w2 (w3) the maximal contiguous block
    immediately left (right) of x whose letters are all smaller than x."""
    w = as_word(p)
    n = len(w)
    if not 1 <= x <= n:
        raise LabelOutOfRange(f"label {x} not in 1..{n}")
    pos = w.index(x)
    lo = pos
    while lo > 0 and w[lo - 1] < x:
        lo -= 1
    hi = pos + 1
    while hi < n and w[hi] < x:
        hi += 1
    return w[:lo], w[lo:pos], w[pos + 1: hi], w[hi:]


def foata_strehl(p: Permutation | Sequence[int], x: int) -> WordT:
    """phi_x: swap the two small-letter blocks adjacent to x."""
    w1, w2, w3, w4 = x_factorization(p, x)
    return w1 + w3 + (x,) + w2 + w4


def _letter_shape(w: WordT, x: int) -> str:
    n = len(w)
    inf = n + 1
    i = w.index(x)
    left = w[i - 1] if i > 0 else inf
    right = w[i + 1] if i < n - 1 else inf
    if left > x > right:
        return "dd"
    if left < x < right:
        return "da"
    if left < x > right:
        return "peak"
    return "valley"


def mfs_single(p: Permutation | Sequence[int], x: int) -> WordT:
    """phi_x': hop x if it is a double ascent or double descent."""
    w = as_word(p)
    if not 1 <= x <= len(w):
        raise LabelOutOfRange(f"label {x} not in 1..{len(w)}")
    if _letter_shape(w, x) in ("peak", "valley"):
        return w
    return foata_strehl(w, x)


def mfs(p: Permutation | Sequence[int], labels: Iterable[int]) -> WordT:
    w = as_word(p)
    for x in sorted(set(labels)):
        w = mfs_single(w, x)
    return w


def restricted_mfs_single(p: Permutation | Sequence[int], x: int) -> WordT:
    """phi_x'': like phi_x' but beta1 and all rixed points are frozen."""
    w = as_word(p)
    if not 1 <= x <= len(w):
        raise LabelOutOfRange(f"label {x} not in 1..{len(w)}")
    fact = rixfact.rix_factorize(w)
    if x == fact.beta1 or x in fact.rix_set:
        return w
    return mfs_single(w, x)


def restricted_mfs(p: Permutation | Sequence[int], labels: Iterable[int]) -> WordT:
    w = as_word(p)
    for x in sorted(set(labels)):
        w = restricted_mfs_single(w, x)
    return w


_SINGLE = {"mfs": mfs_single, "restricted": restricted_mfs_single}


def orbit(p: Permutation | Sequence[int], action: str = "mfs") -> set[WordT]:
    """Closure of {sigma} under all singleton generators (BFS)."""
    single = _SINGLE[action]
    start = as_word(p)
    n = len(start)
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for x in range(1, n + 1):
            w2 = single(w, x)
            if w2 not in seen:
                seen.add(w2)
                frontier.append(w2)
    return seen


def canonical_rep(p: Permutation | Sequence[int], action: str = "mfs") -> WordT:
    """mfs: the unique orbit element without double descent.

    restricted: for sigma with rix(sigma) = 0, the unique orbit element
    whose only double descent is beta1.  Each hop of a double descent
    strictly decreases des, so the loops terminate.
    """
    w = as_word(p)
    n = len(w)
    inf = n + 1
    if action == "mfs":
        while True:
            x = _first_double_descent(w, None)
            if x is None:
                return w
            w = mfs_single(w, x)
    elif action == "restricted":
        if rixfact.rix(w) != 0:
            raise NotInDomain(
                "restricted canonical representative needs rix(sigma) = 0"
            )
        while True:
            frozen = rixfact.rix_factorize(w).beta1
            x = _first_double_descent(w, frozen)
            if x is None:
                return w
            w = restricted_mfs_single(w, x)
    else:
        raise ValueError(f"unknown action {action!r}")


def _first_double_descent(w: WordT, skip: int | None) -> int | None:
    n = len(w)
    inf = n + 1
    for i in range(n):
        left = w[i - 1] if i > 0 else inf
        right = w[i + 1] if i < n - 1 else inf
        if left > w[i] > right and w[i] != skip:
            return w[i]
    return None
