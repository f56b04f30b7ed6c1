"""Permutations of [n], word-level statistics, classification and enumeration.

All statistics live on plain tuples of labels so that the exhaustive
verification loops stay cheap; the Permutation wrapper adds validation and
the text format used by the CLI.  Local shape statistics (dd, da, peak,
valley) use the boundary convention sigma_0 = sigma_{n+1} = +infinity, so a
single letter is a valley and valley = peak + 1 for every n >= 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import BudgetExceeded, NotABijection

DEFAULT_MAX_N = 12

WordT = tuple[int, ...]


def as_word(p: "Permutation | Sequence[int]") -> WordT:
    if isinstance(p, Permutation):
        return p.word
    return tuple(p)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] identified with its one-line word."""

    word: WordT

    def __post_init__(self) -> None:
        w = tuple(self.word)
        object.__setattr__(self, "word", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise NotABijection(f"not a rearrangement of 1..{len(w)}: {w}")

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


def from_word(letters: Sequence[int]) -> Permutation:
    return Permutation(tuple(letters))


def parse_permutation(text: str) -> Permutation:
    """Parse "2743156" (digits, n <= 9) or "10,8,4,9,7,2,5,3,6,1"."""
    text = text.strip()
    if not text:
        return Permutation(())
    if "," in text:
        try:
            letters = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise NotABijection(f"unparseable permutation: {text!r}") from exc
    elif text.isdigit():
        letters = [int(ch) for ch in text]
    else:
        raise NotABijection(f"unparseable permutation: {text!r}")
    return from_word(letters)


def format_word(w: Sequence[int]) -> str:
    w = tuple(w)
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


# --- word-level statistics ------------------------------------------------

def exc_count(w: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if v > i)


def fix_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(v for i, v in enumerate(w, start=1) if v == i)


def des_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def inv_count(w: Sequence[int]) -> int:
    n = len(w)
    total = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                total += 1
    return total


def inverse(w: Sequence[int]) -> WordT:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def imaj(w: Sequence[int]) -> int:
    return maj(inverse(w))


def cyc_count(w: Sequence[int]) -> int:
    n = len(w)
    seen = [False] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = w[j - 1]
    return count


def cda_count(w: Sequence[int]) -> int:
    """Cyclic double ascents: values i with sigma^-1(i) < i < sigma(i)."""
    inv = inverse(w)
    return sum(1 for i in range(1, len(w) + 1) if inv[i - 1] < i < w[i - 1])


def shape_counts(w: Sequence[int]) -> tuple[int, int, int, int]:
    """(dd, da, peak, valley) under the +infinity boundary convention."""
    n = len(w)
    if n == 0:
        return (0, 0, 0, 0)
    inf = n + 1
    dd = da = peak = valley = 0
    for i in range(n):
        left = w[i - 1] if i > 0 else inf
        right = w[i + 1] if i < n - 1 else inf
        v = w[i]
        if left > v > right:
            dd += 1
        elif left < v < right:
            da += 1
        elif left < v > right:
            peak += 1
        else:
            valley += 1
    return dd, da, peak, valley


def dd_count(w: Sequence[int]) -> int:
    n = len(w)
    if n == 0:
        return 0
    inf = n + 1
    count = 0
    for i in range(n):
        left = w[i - 1] if i > 0 else inf
        right = w[i + 1] if i < n - 1 else inf
        if left > w[i] > right:
            count += 1
    return count


def admissible_inversion_count(w: Sequence[int]) -> int:
    """Inversions (w_i, w_j) with a left ascent into w_i or a larger letter
    strictly between them.

    O(n^2): for each i, the pair (w_i, w_j) fails the second condition
    exactly when j comes before the next letter greater than w_i.
    """
    n = len(w)
    if len(set(w)) != n:
        raise ValueError("word letters must be distinct")
    total = 0
    for i in range(n):
        wi = w[i]
        next_greater = n  # first l > i with w_l > w_i, or n
        for l in range(i + 1, n):
            if w[l] > wi:
                next_greater = l
                break
        left_ascent = i > 0 and w[i - 1] < wi
        for j in range(i + 1, n):
            if w[j] < wi and (left_ascent or next_greater < j):
                total += 1
    return total


def is_alternating(w: Sequence[int]) -> bool:
    """sigma_1 < sigma_2 > sigma_3 < sigma_4 > ..."""
    for i in range(len(w) - 1):
        if i % 2 == 0:
            if w[i] > w[i + 1]:
                return False
        elif w[i] < w[i + 1]:
            return False
    return True


def is_derangement(w: Sequence[int]) -> bool:
    return all(v != i for i, v in enumerate(w, start=1))


# --- statistic bundle -----------------------------------------------------

@dataclass(frozen=True)
class StatisticBundle:
    exc: int
    fix_set: frozenset[int]
    maj: int
    des_set: frozenset[int]
    inv: int
    imaj: int
    ai: int
    aid: int
    rix: int
    rix_set: frozenset[int]
    cyc: int
    cda: int
    dd: int
    da: int
    peak: int
    valley: int
    lyc: int

    @property
    def fix(self) -> int:
        return len(self.fix_set)

    @property
    def des(self) -> int:
        return len(self.des_set)

    def as_dict(self) -> dict:
        return {
            "exc": self.exc,
            "fix": self.fix,
            "fix_set": sorted(self.fix_set),
            "maj": self.maj,
            "des": self.des,
            "des_set": sorted(self.des_set),
            "inv": self.inv,
            "imaj": self.imaj,
            "ai": self.ai,
            "aid": self.aid,
            "rix": self.rix,
            "rix_set": sorted(self.rix_set),
            "cyc": self.cyc,
            "cda": self.cda,
            "dd": self.dd,
            "da": self.da,
            "peak": self.peak,
            "valley": self.valley,
            "lyc": self.lyc,
        }


def statistics(p: Permutation | Sequence[int]) -> StatisticBundle:
    from . import bijections, rixfact  # cycle: bijections needs perm

    w = as_word(p)
    dd, da, peak, valley = shape_counts(w)
    ai = admissible_inversion_count(w)
    nd = des(w)
    return StatisticBundle(
        exc=exc_count(w),
        fix_set=fix_set(w),
        maj=maj(w),
        des_set=des_set(w),
        inv=inv_count(w),
        imaj=imaj(w),
        ai=ai,
        aid=ai + nd,
        rix=rixfact.rix(w),
        rix_set=rixfact.rixed_points(w),
        cyc=cyc_count(w),
        cda=cda_count(w),
        dd=dd,
        da=da,
        peak=peak,
        valley=valley,
        lyc=bijections.lyc(w),
    )


# --- classification -------------------------------------------------------

@dataclass(frozen=True)
class Membership:
    """Membership record in the four permutation families plus extras.

    The k index is the defining index of each family (des or exc); it is
    None when the permutation is not a member.
    """

    d_k: int | None          # dd = 0, des = k
    d_tilde_k: int | None    # dd = 0, last step ascends, des = k - 1
    e_k: int | None          # fix = 0, cda = 0, exc = k
    r0_k: int | None         # rix = 0, dd = 1, des = k
    alternating: bool
    derangement: bool


def classify(p: Permutation | Sequence[int]) -> Membership:
    from . import rixfact

    w = as_word(p)
    n = len(w)
    dd = dd_count(w)
    k = des(w)
    d_k = k if dd == 0 else None
    d_tilde_k = None
    if dd == 0 and n >= 2 and w[-2] < w[-1]:
        d_tilde_k = k + 1
    e_k = None
    if n >= 1 and is_derangement(w) and cda_count(w) == 0:
        e_k = exc_count(w)
    r0_k = None
    if n >= 1 and dd == 1 and rixfact.rix(w) == 0:
        r0_k = k
    return Membership(
        d_k=d_k,
        d_tilde_k=d_tilde_k,
        e_k=e_k,
        r0_k=r0_k,
        alternating=n >= 1 and is_alternating(w),
        derangement=n >= 1 and is_derangement(w),
    )


# --- enumeration ----------------------------------------------------------

def words(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[WordT]:
    """All words of S_n in lexicographic order, as raw tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds enumeration ceiling {max_n}")
    return itertools.permutations(range(1, n + 1))


def enumerate_perms(
    n: int,
    pred: Callable[[Permutation], bool] | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> Iterator[Permutation]:
    for w in words(n, max_n=max_n):
        p = Permutation(w)
        if pred is None or pred(p):
            yield p
