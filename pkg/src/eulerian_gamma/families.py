"""Polynomial families built by exhaustive enumeration over S_n.

Everything here is a direct sum over permutations; the structured or
extracted routes live in checks.py so the two sides stay independent.
Accumulation goes through plain dicts keyed by exponent 6-tuples
(t, r, q, p, y, b) for speed, then wraps into MPoly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import rixfact
from .errors import BudgetExceeded, MismatchAgainstDirect
from .mpoly import GammaExpansion, MPoly, gamma_extract
from .perm import (
    admissible_inversion_count,
    cda_count,
    cyc_count,
    dd_count,
    des,
    inv_count,
)

ENUM_CEILING = 12


def _perms(n: int):
    if n > ENUM_CEILING:
        raise BudgetExceeded(f"n={n} exceeds enumeration ceiling {ENUM_CEILING}")
    return itertools.permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def basic_eulerian(n: int) -> MPoly:
    """A_n(t, r, q) = sum over S_n of t^exc r^fix q^(maj - exc)."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        exc = fix = m = 0
        for i in range(n):
            v = w[i]
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fix += 1
            if i < n - 1 and v > w[i + 1]:
                m += i + 1
        key = (exc, fix, m - exc, 0, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def basic_eulerian_desrix(n: int) -> MPoly:
    """The same polynomial via the triple (des, rix, ai)."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        key = (des(w), rixfact.rix(w), admissible_inversion_count(w), 0, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def dd_free_inv_table(n: int) -> dict[int, MPoly]:
    """k -> sum of q^inv over permutations with dd = 0 and des = k."""
    table: dict[int, dict[tuple, int]] = {}
    for w in _perms(n):
        if dd_count(w) != 0:
            continue
        k = des(w)
        key = (0, 0, inv_count(w), 0, 0, 0)
        bucket = table.setdefault(k, {})
        bucket[key] = bucket.get(key, 0) + 1
    return {k: MPoly.from_counts(v) for k, v in table.items()}


@lru_cache(maxsize=None)
def dd_free_ascent_inv_table(n: int) -> dict[int, MPoly]:
    """k -> sum of q^inv over dd-free permutations with a final ascent,
    indexed by des + 1 (the derangement-side gamma index)."""
    table: dict[int, dict[tuple, int]] = {}
    for w in _perms(n):
        if dd_count(w) != 0:
            continue
        if n < 2 or w[-2] > w[-1]:
            continue
        k = des(w) + 1
        key = (0, 0, inv_count(w), 0, 0, 0)
        bucket = table.setdefault(k, {})
        bucket[key] = bucket.get(key, 0) + 1
    return {k: MPoly.from_counts(v) for k, v in table.items()}


@lru_cache(maxsize=None)
def cda_free_derangement_cyc_table(n: int) -> dict[int, MPoly]:
    """k -> sum of b^cyc over derangements with cda = 0 and exc = k."""
    table: dict[int, dict[tuple, int]] = {}
    for w in _perms(n):
        if any(v == i for i, v in enumerate(w, start=1)):
            continue
        if cda_count(w) != 0:
            continue
        k = sum(1 for i, v in enumerate(w, start=1) if v > i)
        key = (0, 0, 0, 0, 0, cyc_count(w))
        bucket = table.setdefault(k, {})
        bucket[key] = bucket.get(key, 0) + 1
    return {k: MPoly.from_counts(v) for k, v in table.items()}


@lru_cache(maxsize=None)
def derangement_cyc_poly(n: int) -> MPoly:
    """Sum over derangements of b^cyc t^exc."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        if any(v == i for i, v in enumerate(w, start=1)):
            continue
        exc = sum(1 for i, v in enumerate(w, start=1) if v > i)
        key = (exc, 0, 0, 0, 0, cyc_count(w))
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def derangement_exc_des_maj_poly(n: int) -> MPoly:
    """Sum over derangements of t^exc p^des q^(maj - exc)."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        if any(v == i for i, v in enumerate(w, start=1)):
            continue
        exc = m = nd = 0
        for i in range(n):
            v = w[i]
            if v > i + 1:
                exc += 1
            if i < n - 1 and v > w[i + 1]:
                m += i + 1
                nd += 1
        key = (exc, 0, m - exc, nd, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def fixed_count_exc_maj_poly(n: int, j: int) -> MPoly:
    """Sum over permutations with exactly j fixed points of t^exc q^(maj-exc)."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        exc = fix = m = 0
        for i in range(n):
            v = w[i]
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fix += 1
            if i < n - 1 and v > w[i + 1]:
                m += i + 1
        if fix != j:
            continue
        key = (exc, 0, m - exc, 0, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def fixed_count_cyc_exc_poly(n: int, j: int) -> MPoly:
    """Sum over permutations with exactly j fixed points of b^cyc t^exc."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        fix = sum(1 for i, v in enumerate(w, start=1) if v == i)
        if fix != j:
            continue
        exc = sum(1 for i, v in enumerate(w, start=1) if v > i)
        key = (exc, 0, 0, 0, 0, cyc_count(w))
        acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


@lru_cache(maxsize=None)
def alternating_inv_poly(n: int) -> MPoly:
    """Sum of q^inv over alternating permutations of [n]."""
    acc: dict[tuple, int] = {}
    for w in _perms(n):
        ok = True
        for i in range(n - 1):
            if (i % 2 == 0) != (w[i] < w[i + 1]):
                ok = False
                break
        if ok:
            key = (0, 0, inv_count(w), 0, 0, 0)
            acc[key] = acc.get(key, 0) + 1
    return MPoly.from_counts(acc)


# --- Gamma aggregates -----------------------------------------------------

@lru_cache(maxsize=None)
def gamma_poly(n: int) -> MPoly:
    """Gamma_n(y, q) = sum over dd-free permutations of y^des q^inv."""
    if n == 0:
        return MPoly.const(1)
    acc = MPoly.zero()
    for k, poly in dd_free_inv_table(n).items():
        acc = acc + MPoly.var("y", k) * poly if k > 0 else acc + poly
    return acc


@lru_cache(maxsize=None)
def gamma_tilde_poly(n: int) -> MPoly:
    """GammaTilde_n(y, q) = sum over dd-free final-ascent permutations of
    y^(des + 1) q^inv; 1 for n = 0, 0 for n = 1."""
    if n == 0:
        return MPoly.const(1)
    acc = MPoly.zero()
    for k, poly in dd_free_ascent_inv_table(n).items():
        acc = acc + MPoly.var("y", k) * poly
    return acc


# --- gamma expansions with built-in cross-check ---------------------------

def _compare_expansion(
    expansion: GammaExpansion, direct: dict[int, MPoly], label: str
) -> GammaExpansion:
    for k, g in enumerate(expansion.gammas):
        if direct.get(k, MPoly.zero()) != g:
            raise MismatchAgainstDirect(
                f"{label}: k={k}: extracted {g.to_text()} != "
                f"direct {direct.get(k, MPoly.zero()).to_text()}"
            )
    for k in direct:
        if k > len(expansion.gammas) - 1 and not direct[k].is_zero():
            raise MismatchAgainstDirect(f"{label}: direct k={k} out of range")
    return expansion


def gamma_basic(n: int) -> GammaExpansion:
    """Gamma expansion of A_n(t,1,q) at center n-1, cross-checked against
    the direct q^inv sums over dd-free permutations."""
    if n < 1:
        raise ValueError("n >= 1 required")
    h = basic_eulerian(n).substitute("r", 1)
    expansion = gamma_extract(h, center=n - 1)
    return _compare_expansion(expansion, dd_free_inv_table(n), f"gamma_basic({n})")


def gamma_derangement(n: int) -> GammaExpansion:
    """Gamma expansion of A_n(t,0,q) at center n, cross-checked against the
    direct sums over dd-free final-ascent permutations."""
    if n < 1:
        raise ValueError("n >= 1 required")
    h = basic_eulerian(n).substitute("r", 0)
    expansion = gamma_extract(h, center=n)
    return _compare_expansion(
        expansion, dd_free_ascent_inv_table(n), f"gamma_derangement({n})"
    )


def cyc_gamma(n: int) -> GammaExpansion:
    """Gamma expansion of the derangement cycle polynomial at center n,
    cross-checked against direct b^cyc sums over cda-free derangements."""
    if n < 1:
        raise ValueError("n >= 1 required")
    h = derangement_cyc_poly(n)
    expansion = gamma_extract(h, center=n)
    return _compare_expansion(
        expansion, cda_free_derangement_cyc_table(n), f"cyc_gamma({n})"
    )


def sw3_gamma(n: int) -> GammaExpansion:
    """Gamma expansion in t of the derangement (t^exc p^des q^(maj-exc))
    polynomial; coefficients live in N[p, q].

    Center n: the p-refined polynomial is symmetric about n/2 (like the
    p = 1 specialization), so the k indices line up with the derangement
    gamma coefficients gamma~_{n,k}(q) at p = 1.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    return gamma_extract(derangement_exc_des_maj_poly(n), center=n)
