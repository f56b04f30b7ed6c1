"""Sparse exact multivariate polynomials over the fixed alphabet t,r,q,p,y,b.

Coefficients are Python ints (arbitrary precision); terms map exponent
6-tuples to nonzero coefficients.  "b" is the cycle-counting variable
(rendered as "b" in ASCII output).  The series variable z is never a
polynomial variable: truncated series live in series.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NotExpandable, OutOfRange

VARS = ("t", "r", "q", "p", "y", "b")
NVARS = len(VARS)
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}

ExpT = tuple[int, ...]
_ZERO_EXP: ExpT = (0,) * NVARS


class MPoly:
    """Exact sparse polynomial in t, r, q, p, y, b with int coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExpT, int] | None = None):
        self.terms: dict[ExpT, int] = {
            e: c for e, c in (terms or {}).items() if c != 0
        }

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return MPoly()

    @staticmethod
    def const(c: int) -> "MPoly":
        return MPoly({_ZERO_EXP: c}) if c else MPoly()

    @staticmethod
    def var(name: str, power: int = 1) -> "MPoly":
        e = [0] * NVARS
        e[_VAR_INDEX[name]] = power
        return MPoly({tuple(e): 1})

    @staticmethod
    def monomial(coeff: int, **powers: int) -> "MPoly":
        e = [0] * NVARS
        for name, k in powers.items():
            e[_VAR_INDEX[name]] = k
        return MPoly({tuple(e): coeff}) if coeff else MPoly()

    @staticmethod
    def from_counts(counts: Mapping[ExpT, int]) -> "MPoly":
        """Wrap an exponent->coefficient accumulator without copying zeros."""
        return MPoly(counts)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "MPoly | int") -> "MPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly | int") -> "MPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "MPoly":
        return _coerce(other) - self

    def __mul__(self, other: "MPoly | int") -> "MPoly":
        other = _coerce(other)
        out: dict[ExpT, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str) -> int:
        """Degree in var; -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((e[i] for e in self.terms), default=-1)

    def coeff_in(self, var: str, k: int) -> "MPoly":
        """Coefficient of var**k, as a polynomial in the other variables."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MPoly(out)

    def substitute(self, var: str, value: int) -> "MPoly":
        i = _VAR_INDEX[var]
        out: dict[ExpT, int] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            e2t = tuple(e2)
            s = out.get(e2t, 0) + c * value**k
            if s:
                out[e2t] = s
            else:
                out.pop(e2t, None)
        return MPoly(out)

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[ExpT, int]]:
        """Canonical graded-lex order on exponent vectors over (t,r,q,p,y,b)."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(VARS, e)
                if k != 0
            ]
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_text_compact(self) -> str:
        """Render without spaces or '*', e.g. "2q+3q^2+2q^3+q^4"."""
        if not self.terms:
            return "0"
        return _group_body(self)

    def to_text_grouped(self, var: str = "t") -> str:
        """Render grouped by powers of var, e.g. "1 + (3+2q)t + t^2"."""
        if not self.terms:
            return "0"
        parts = []
        for k in range(self.degree(var) + 1):
            coeff = self.coeff_in(var, k)
            if coeff.is_zero():
                continue
            head = var if k == 1 else f"{var}^{k}"
            if k == 0:
                parts.append(_group_body(coeff))
            elif coeff == MPoly.const(1):
                parts.append(head)
            else:
                parts.append(f"({_group_body(coeff)}){head}")
        return " + ".join(parts)


def _group_body(p: MPoly) -> str:
    out = []
    for e, c in p.sorted_terms():
        factors = [v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k != 0]
        if not factors:
            body = str(abs(c))
        else:
            mono = "".join(factors)
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(out)


def _coerce(x: "MPoly | int") -> MPoly:
    return x if isinstance(x, MPoly) else MPoly.const(x)


ZERO = MPoly.zero()
ONE = MPoly.const(1)


# --- q-factorials and q-binomials ----------------------------------------

@lru_cache(maxsize=None)
def q_factorial(n: int) -> MPoly:
    """The shifted q-factorial (q;q)_n = prod_{i=1..n} (1 - q^i)."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * (ONE - MPoly.var("q", n))


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> MPoly:
    """Gaussian binomial [n k]_q via the Pascal recurrence
    [n k] = [n-1 k] + q^(n-k) [n-1 k-1]."""
    if k < 0 or k > n:
        raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k) + MPoly.var("q", n - k) * q_binomial(n - 1, k - 1)


@lru_cache(maxsize=None)
def one_plus_t_power(m: int) -> MPoly:
    return (ONE + MPoly.var("t")) ** m


# --- gamma expansion ------------------------------------------------------

@dataclass(frozen=True)
class GammaExpansion:
    """h(t) = sum_k gammas[k] * t^k * (1+t)^(center - 2k)."""

    center: int
    gammas: tuple[MPoly, ...]

    def reconstruct(self) -> MPoly:
        t = MPoly.var("t")
        total = MPoly.zero()
        for k, g in enumerate(self.gammas):
            total = total + g * t**k * one_plus_t_power(self.center - 2 * k)
        return total

    def at_q_one(self) -> tuple[int, ...]:
        """Each gamma specialized at q=1 (must be constant in the rest)."""
        out = []
        for g in self.gammas:
            c = g
            for v in VARS:
                c = c.substitute(v, 1)
            out.append(c.terms.get(_ZERO_EXP, 0))
        return tuple(out)


def gamma_extract(h: MPoly, center: int, var: str = "t") -> GammaExpansion:
    """Peel gamma coefficients of h viewed as a polynomial in var.

    gamma_0 = [var^0]h, subtract gamma_0*(1+var)^center, continue.  Raises
    NotExpandable when a residual term survives, i.e. h is not symmetric
    about center/2.
    """
    if h.degree(var) > center:
        raise NotExpandable(
            f"degree {h.degree(var)} exceeds center {center}"
        )
    tvar = MPoly.var(var)
    one_plus = ONE + tvar
    residual = h
    gammas = []
    for k in range(center // 2 + 1):
        g = residual.coeff_in(var, k)
        gammas.append(g)
        if not g.is_zero():
            residual = residual - g * tvar**k * one_plus ** (center - 2 * k)
    if not residual.is_zero():
        raise NotExpandable(
            f"no gamma expansion with center {center}: residual {residual.to_text()}"
        )
    return GammaExpansion(center=center, gammas=tuple(gammas))
