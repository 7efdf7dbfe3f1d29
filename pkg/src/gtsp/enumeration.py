"""Standard tableau sets, Weyl dimensions and the f_A moves on type D tableaux."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .scalars import HALF, integer_distance, is_half_integer, is_integer
from .tableau import TableauC, TableauD, is_D_standard, row_sums

SERIES = ("C", "D")


def rho(series: str, n: int) -> tuple[Fraction, ...]:
    if series == "C":
        return tuple(Fraction(-k) for k in range(1, n + 1))
    if series == "D":
        return tuple(Fraction(-k) for k in range(0, n))
    raise ValueError(f"unknown series {series!r}")


def dominance_failures(series: str, lam: Sequence[Fraction]) -> list[str]:
    lam = [Fraction(x) for x in lam]
    n = len(lam)
    bad = []
    if not (all(is_integer(x) for x in lam) or all(is_half_integer(x) for x in lam)):
        bad.append("entries must be all integers or all half-integers")
    for i in range(n - 1):
        d = integer_distance(lam[i], lam[i + 1])
        if d is None or d < 0:
            bad.append(f"lambda_{i + 1} - lambda_{i + 2} is not a nonnegative integer")
    if series == "C":
        d = integer_distance(0, lam[0])
        if d is None or d < 0:
            bad.append("-lambda_1 is not a nonnegative integer")
    elif series == "D":
        d = integer_distance(0, lam[0] + lam[1]) if n >= 2 else None
        if d is None or d < 0:
            bad.append("-lambda_1 - lambda_2 is not a nonnegative integer")
    else:
        raise ValueError(f"unknown series {series!r}")
    return bad


def is_dominant(series: str, lam: Sequence[Fraction]) -> bool:
    return not dominance_failures(series, lam)


@dataclass(frozen=True)
class DominantWeight:
    series: str
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))
        bad = dominance_failures(self.series, self.entries)
        if bad:
            raise ValueError(f"{self.entries} is not a dominant {self.series}-weight: {bad[0]}")

    @property
    def n(self) -> int:
        return len(self.entries)


def top_row(series: str, lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """lambda + rho + 1/2 for the given series."""
    r = rho(series, len(lam))
    return tuple(Fraction(x) + r[i] + HALF for i, x in enumerate(lam))


def _span(lo: Fraction, hi: Fraction) -> list[Fraction]:
    """lo, lo + 1, ..., hi when hi - lo is a nonnegative integer, else []."""
    d = integer_distance(hi, lo)
    if d is None or d < 0:
        return []
    return [lo + j for j in range(d + 1)]


def _c_primed_rows(row: Sequence[Fraction]) -> Iterable[tuple[Fraction, ...]]:
    ranges = [_span(row[0], -HALF)]
    for i in range(1, len(row)):
        ranges.append(_span(row[i], row[i - 1] - 1))
    return product(*ranges)


def _c_lower_rows(primed: Sequence[Fraction]) -> Iterable[tuple[Fraction, ...]]:
    ranges = [_span(primed[i + 1] + 1, primed[i]) for i in range(len(primed) - 1)]
    return product(*ranges)


def _d_primed_rows(row: Sequence[Fraction]) -> Iterable[tuple[Fraction, ...]]:
    k = len(row)
    ranges = []
    for j in range(2, k + 1):
        hi = row[j - 2] - 1
        if j == 2:
            hi = min(hi, -row[0]) if integer_distance(hi, -row[0]) is not None else None
        ranges.append([] if hi is None else _span(row[j - 1], hi))
    return product(*ranges)


def _d_lower_rows(primed: Sequence[Fraction]) -> Iterable[tuple[Fraction, ...]]:
    # primed = (u'_{k2}, ..., u'_{kk}); lower row has k - 1 entries
    k = len(primed) + 1
    ranges = [_span(primed[0] + 1, -primed[0])]
    for j in range(2, k):
        ranges.append(_span(primed[j - 1] + 1, primed[j - 2]))
    return product(*ranges)


def _enumerate_C(top: tuple[Fraction, ...]) -> list[TableauC]:
    n = len(top)
    out = []

    def descend(k, rows, primed):
        row = rows[-1]
        for p in _c_primed_rows(row):
            if k == 1:
                out.append(TableauC(n, tuple(reversed(rows)), tuple(reversed(primed + [p]))))
                continue
            for lower in _c_lower_rows(p):
                descend(k - 1, rows + [lower], primed + [p])

    descend(n, [top], [])
    return out


def _enumerate_D(top: tuple[Fraction, ...]) -> list[TableauD]:
    n = len(top)
    out = []

    def descend(k, rows, primed):
        if k == 1:
            out.append(TableauD(n, tuple(reversed(rows)), tuple(reversed(primed + [()]))))
            return
        for p in _d_primed_rows(rows[-1]):
            for lower in _d_lower_rows(p):
                descend(k - 1, rows + [lower], primed + [p])

    descend(n, [top], [])
    return out


@dataclass
class StandardSet:
    series: str
    lam: tuple[Fraction, ...]
    tableaux: list = field(default_factory=list)
    dominant: bool = True
    diagnostic: str = ""

    def __len__(self):
        return len(self.tableaux)

    def __iter__(self):
        return iter(self.tableaux)


_CACHE: dict = {}


def enumerate_standard(series: str, lam: Sequence[Fraction]) -> StandardSet:
    """All C- or D-standard tableaux with top row lambda + rho + 1/2."""
    lam = tuple(Fraction(x) for x in lam)
    key = (series, lam)
    if key in _CACHE:
        return _CACHE[key]
    bad = dominance_failures(series, lam)
    if bad:
        result = StandardSet(series, lam, [], dominant=False, diagnostic=bad[0])
    else:
        top = top_row(series, lam)
        tabs = _enumerate_C(top) if series == "C" else _enumerate_D(top)
        result = StandardSet(series, lam, tabs)
    _CACHE[key] = result
    return result


def positive_roots(series: str, n: int) -> list[tuple[int, ...]]:
    """Positive roots for the simple systems behind the dominance conditions.

    Type C: e_p - e_q, -e_p - e_q (p < q) and -2 e_p.  Type D drops -2 e_p.
    """
    roots = []
    for p in range(n):
        for q in range(p + 1, n):
            a = [0] * n
            a[p], a[q] = 1, -1
            roots.append(tuple(a))
            b = [0] * n
            b[p], b[q] = -1, -1
            roots.append(tuple(b))
        if series == "C":
            c = [0] * n
            c[p] = -2
            roots.append(tuple(c))
    return roots


def weyl_dimension(series: str, lam: Sequence[Fraction]) -> int:
    lam = tuple(Fraction(x) for x in lam)
    bad = dominance_failures(series, lam)
    if bad:
        raise ValueError(f"weight {lam} is not dominant: {bad[0]}")
    r = rho(series, len(lam))
    shifted = [lam[i] + r[i] for i in range(len(lam))]
    num = Fraction(1)
    for alpha in positive_roots(series, len(lam)):
        top = sum(a * x for a, x in zip(alpha, shifted))
        bottom = sum(a * x for a, x in zip(alpha, r))
        num *= Fraction(top) / bottom
    if num.denominator != 1 or num <= 0:
        raise ArithmeticError(f"Weyl product for {lam} gave {num}")
    return num.numerator


# -- f_k moves ---------------------------------------------------------------

def f_shift(t: TableauD, k: int) -> TableauD:
    """Move u_{k1} up by one unless it sits on a sign-coupled boundary."""
    if not (1 <= k <= t.n - 1):
        raise IndexError(f"f_k needs 1 <= k <= {t.n - 1}")
    if not is_D_standard(t):
        raise ValueError("f_k is defined on D-standard tableaux only")
    x = t.u(k, 1)
    blocked = x == -t.up(k + 1, 2) or (k >= 2 and x == -t.up(k, 2))
    return t.shifted({(k, 1, False): -1 if blocked else 1})


def f_subset(t: TableauD, subset: Iterable[int]) -> TableauD:
    """f_{a_1} o f_{a_2} o ... o f_{a_s} with a_1 < ... < a_s."""
    for k in sorted(set(subset), reverse=True):
        t = f_shift(t, k)
    return t


def parity_key(t: TableauD, ref: TableauD) -> tuple[int, ...]:
    s, _ = row_sums(t)
    s0, _ = row_sums(ref)
    return tuple(int(s[k] - s0[k]) % 2 for k in range(t.n - 1))


def weight_classes(lam: Sequence[Fraction]) -> dict[tuple[int, ...], list[TableauD]]:
    """Partition D_st by R ~ M iff S_k(R - M) is even for k < n."""
    tabs = enumerate_standard("D", lam).tableaux
    if not tabs:
        return {}
    ref = tabs[0]
    classes: dict[tuple[int, ...], list[TableauD]] = {}
    for t in tabs:
        classes.setdefault(parity_key(t, ref), []).append(t)
    return classes


def weight_class_representatives(lam: Sequence[Fraction]) -> list[list[TableauD]]:
    return list(weight_classes(lam).values())


def _t_functional(t: TableauD, k: int) -> Fraction:
    s, sp = row_sums(t)
    s_next = s[k] if k < t.n else Fraction(0)
    return sp[k - 1] - HALF * s_next - HALF * s[k - 1]


def t_bound(lam: Sequence[Fraction], k: int) -> int:
    """max over ordered pairs (R, W) of floor(S'_k - S_{k+1}/2 - S_k/2)(R - W)."""
    tabs = enumerate_standard("D", lam).tableaux
    if not tabs:
        raise ValueError(f"{tuple(lam)} is not a dominant D-weight")
    n = tabs[0].n
    if not (1 <= k <= n - 1):
        raise IndexError(f"t_k needs 1 <= k <= {n - 1}")
    values = [_t_functional(t, k) for t in tabs]
    return math.floor(max(values) - min(values))
