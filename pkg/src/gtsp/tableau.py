"""Gelfand-Tsetlin tableaux of types C and D.

A type C tableau of rank n has unprimed rows l_{k,1..k} and primed rows
l'_{k,1..k} for k = 1..n.  A type D tableau has unprimed rows u_{k,1..k}
and primed rows u'_{k,2..k} for k = 2..n.  Indices are 1-based throughout,
rows are stored bottom-up (``rows[k - 1]`` is row k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import HALF, integer_distance, is_half_integer, shift_geq, shift_gt

Row = tuple[Fraction, ...]


def _rows(data) -> tuple[Row, ...]:
    return tuple(tuple(x if type(x) is Fraction else Fraction(x) for x in row) for row in data)


def _cached_hash(t) -> int:
    # Fraction.__hash__ is slow and tableaux are hashed constantly as dict keys
    h = t.__dict__.get("_hash")
    if h is None:
        h = hash((t.n, t.rows, t.primed))
        object.__setattr__(t, "_hash", h)
    return h


@dataclass(frozen=True)
class TableauC:
    n: int
    rows: tuple[Row, ...]
    primed: tuple[Row, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _rows(self.rows))
        object.__setattr__(self, "primed", _rows(self.primed))
        if len(self.rows) != self.n or len(self.primed) != self.n:
            raise ValueError("type C tableau needs n unprimed and n primed rows")
        for k in range(1, self.n + 1):
            if len(self.rows[k - 1]) != k or len(self.primed[k - 1]) != k:
                raise ValueError(f"row {k} of a type C tableau must have {k} entries")

    __hash__ = _cached_hash

    def l(self, k: int, i: int) -> Fraction:
        return self.rows[k - 1][i - 1]

    def lp(self, k: int, i: int) -> Fraction:
        return self.primed[k - 1][i - 1]

    @property
    def top(self) -> Row:
        return self.rows[self.n - 1]

    def entries(self):
        """Yield ((k, i, primed), value) for every entry."""
        for k in range(1, self.n + 1):
            for i in range(1, k + 1):
                yield (k, i, False), self.l(k, i)
                yield (k, i, True), self.lp(k, i)

    def shifted(self, changes) -> "TableauC":
        """Return a copy with ``{(k, i, primed): amount}`` added entrywise."""
        rows = [list(r) for r in self.rows]
        primed = [list(r) for r in self.primed]
        for (k, i, is_primed), amount in changes.items():
            if not (1 <= i <= k <= self.n):
                raise IndexError(f"shift position ({k},{i}) outside a rank {self.n} tableau")
            target = primed if is_primed else rows
            target[k - 1][i - 1] += amount
        return TableauC(self.n, rows, primed)

    def sort_key(self):
        return (self.rows, self.primed)


@dataclass(frozen=True)
class TableauD:
    n: int
    rows: tuple[Row, ...]
    primed: tuple[Row, ...]  # primed[k - 1] holds u'_{k,2..k}; empty for k = 1

    def __post_init__(self):
        object.__setattr__(self, "rows", _rows(self.rows))
        object.__setattr__(self, "primed", _rows(self.primed))
        if len(self.rows) != self.n or len(self.primed) != self.n:
            raise ValueError("type D tableau needs n unprimed rows and n primed slots")
        for k in range(1, self.n + 1):
            if len(self.rows[k - 1]) != k or len(self.primed[k - 1]) != k - 1:
                raise ValueError(f"row {k} of a type D tableau has the wrong length")

    __hash__ = _cached_hash

    def u(self, k: int, i: int) -> Fraction:
        return self.rows[k - 1][i - 1]

    def up(self, k: int, i: int) -> Fraction:
        if i < 2:
            raise IndexError("type D primed entries start at column 2")
        return self.primed[k - 1][i - 2]

    @property
    def top(self) -> Row:
        return self.rows[self.n - 1]

    def shifted(self, changes) -> "TableauD":
        rows = [list(r) for r in self.rows]
        primed = [list(r) for r in self.primed]
        for (k, i, is_primed), amount in changes.items():
            if not (1 <= i <= k <= self.n) or (is_primed and i < 2):
                raise IndexError(f"shift position ({k},{i}) outside the type D shape")
            if is_primed:
                primed[k - 1][i - 2] += amount
            else:
                rows[k - 1][i - 1] += amount
        return TableauD(self.n, rows, primed)

    def sort_key(self):
        return (self.rows, self.primed)


@dataclass(frozen=True)
class Shift:
    """Add ``amount`` to the single entry l_{row,column} (or its primed twin)."""

    row: int
    column: int
    primed: bool = False
    amount: int = 1

    def inverse(self) -> "Shift":
        return Shift(self.row, self.column, self.primed, -self.amount)


def apply_shift(t, s: Shift):
    return t.shifted({(s.row, s.column, s.primed): s.amount})


# -- standardness ----------------------------------------------------------

def _chain(values, strict) -> bool:
    """Check values[0] (>= or >) values[1] ... in the integer-shift order.

    ``strict[j]`` selects ``>`` for the comparison between positions j, j+1.
    """
    for j in range(len(values) - 1):
        test = shift_gt if strict[j] else shift_geq
        if not test(values[j], values[j + 1]):
            return False
    return True


def _interleave(head, primed_row, lower_row):
    """Build head >= p1 >= q1 > p2 >= q2 > ... as (values, strict flags)."""
    values = list(head)
    strict = [False] * len(head)
    for j, p in enumerate(primed_row):
        values.append(p)
        if j < len(lower_row):
            values.append(lower_row[j])
            strict.extend([False, True])
        else:
            strict.append(False)
    return values, strict[: len(values) - 1]


def c_standard_violations(t: TableauC) -> list[str]:
    """Names of the violated chains of the C-standard conditions (empty if standard)."""
    bad = []
    for k in range(1, t.n + 1):
        values, strict = _interleave([-HALF], t.primed[k - 1], t.rows[k - 1])
        if not _chain(values, strict):
            bad.append(f"row chain k={k}")
    for k in range(2, t.n + 1):
        values, strict = _interleave([-HALF], t.primed[k - 1], t.rows[k - 2])
        if not _chain(values, strict):
            bad.append(f"interlacing chain k={k}")
    return bad


def is_C_standard(t: TableauC) -> bool:
    return not c_standard_violations(t)


def is_D_standard(t: TableauD) -> bool:
    for k in range(2, t.n + 1):
        p = t.primed[k - 1]
        row = t.rows[k - 1]
        below = t.rows[k - 2]
        # -u'_{k2} >= u_{k1} > u'_{k2} >= u_{k2} > ... > u'_{kk} >= u_{kk}
        values = [-p[0], row[0]]
        strict = [False, True]
        for j in range(len(p)):
            values.append(p[j])
            values.append(row[j + 1])
            strict.extend([False, True])
        if not _chain(values, strict[: len(values) - 1]):
            return False
        # -u'_{k2} >= u_{k-1,1} > u'_{k2} >= u_{k-1,2} > ... > u'_{kk}
        values = [-p[0], below[0]]
        strict = [False, True]
        for j in range(len(p)):
            values.append(p[j])
            strict.append(False)
            if j + 1 < len(below):
                values.append(below[j + 1])
                strict.append(True)
        if not _chain(values, strict[: len(values) - 1]):
            return False
    return True


# -- regularity and genericity ---------------------------------------------

def c_regular_violations(t: TableauC) -> list[str]:
    n = t.n
    bad = []
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            for a in range(1, k + 1):
                if a != i and t.lp(k, a) == t.lp(k, i):
                    bad.append(f"(i) l'_{k}{a} = l'_{k}{i}")
    for k in range(1, n):
        for i in range(1, k + 1):
            for a in range(1, k + 1):
                if a == i:
                    continue
                if t.l(k, a) == t.l(k, i):
                    bad.append(f"(ii) l_{k}{a} = l_{k}{i}")
                if t.l(k, a) + t.l(k, i) == 1:
                    bad.append(f"(iii) l_{k}{a} + l_{k}{i} = 1")
            if 2 * t.l(k, i) == 1:
                bad.append(f"(iv) 2 l_{k}{i} = 1")
    return bad


def is_C_regular(t: TableauC) -> bool:
    return not c_regular_violations(t)


def _generic_core(n, primed, unprimed) -> bool:
    for k in range(1, n + 1):
        row = primed(k)
        for x in range(len(row)):
            for y in range(len(row)):
                if x != y and integer_distance(row[x], row[y]) is not None:
                    return False
    for k in range(1, n):
        row = unprimed(k)
        for x in range(len(row)):
            for y in range(len(row)):
                if x != y and integer_distance(row[x], row[y]) is not None:
                    return False
                if integer_distance(row[x], -row[y]) is not None:
                    return False
    return True


def is_C_generic(t: TableauC) -> bool:
    if not _generic_core(t.n, lambda k: t.primed[k - 1], lambda k: t.rows[k - 1]):
        return False
    return not any(is_half_integer(t.l(k, i)) for k in range(1, t.n) for i in range(1, k + 1))


def is_D_generic(t) -> bool:
    """Conditions (i)-(iii) of genericity.

    A type C tableau is judged on its type D part (first primed column removed).
    """
    if isinstance(t, TableauC):
        t = split_CD(t)[0]
    return _generic_core(t.n, lambda k: t.primed[k - 1], lambda k: t.rows[k - 1])


# -- C/D split ---------------------------------------------------------------

def split_CD(t: TableauC) -> tuple[TableauD, tuple[Fraction, ...]]:
    """Remove the first primed column: (T_D, (l'_11, ..., l'_n1))."""
    d = TableauD(t.n, t.rows, tuple(row[1:] for row in t.primed))
    column = tuple(row[0] for row in t.primed)
    return d, column


def join_CD(d: TableauD, column: Sequence[Fraction]) -> TableauC:
    if len(column) != d.n:
        raise ValueError("column length must equal the rank")
    primed = tuple((Fraction(column[k]),) + d.primed[k] for k in range(d.n))
    return TableauC(d.n, d.rows, primed)


# -- weights -----------------------------------------------------------------

def row_sums(t):
    """Per-row sums (S(l), S(l')), each a tuple indexed by k - 1.

    For a type D tableau the primed sum of row k runs over columns 2..k.
    """
    return tuple(sum(r, Fraction(0)) for r in t.rows), tuple(sum(r, Fraction(0)) for r in t.primed)


def weight_C(t: TableauC) -> tuple[Fraction, ...]:
    s, sp = row_sums(t)
    out = []
    for k in range(1, t.n + 1):
        below = s[k - 2] if k >= 2 else Fraction(0)
        out.append(2 * sp[k - 1] - s[k - 1] - below + k - HALF)
    return tuple(out)


def weight_from_row_sums(t: TableauC) -> tuple[Fraction, ...]:
    """Compact form 2 S(l') - S(l) - S(l_{-1}) - rho_C - 1/2."""
    s, sp = row_sums(t)
    shifted = (Fraction(0),) + s[:-1]
    rho = tuple(Fraction(-k) for k in range(1, t.n + 1))
    return tuple(2 * sp[k] - s[k] - shifted[k] - rho[k] - HALF for k in range(t.n))


# -- JSON --------------------------------------------------------------------

def tableau_to_json(t) -> dict:
    from .scalars import format_rational

    kind = "C" if isinstance(t, TableauC) else "D"
    return {
        "type": kind,
        "n": t.n,
        "rows": [[format_rational(x) for x in t.rows[k - 1]] for k in range(t.n, 0, -1)],
        "primed": [
            [format_rational(x) for x in t.primed[k - 1]]
            for k in range(t.n, 0 if kind == "C" else 1, -1)
        ],
    }


def tableau_from_json(data: dict):
    from .scalars import parse_rational

    kind = data.get("type", "C")
    n = int(data["n"])
    rows = [[parse_rational(x) for x in r] for r in data["rows"]][::-1]
    primed = [[parse_rational(x) for x in r] for r in data["primed"]][::-1]
    if kind == "C":
        return TableauC(n, rows, primed)
    if kind == "D":
        return TableauD(n, rows, [[]] + primed)
    raise ValueError(f"unknown tableau type {kind!r}")
