"""Gelfand-Tsetlin coefficients and the action of sp(2n) on tableau vectors."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from .algebra import (
    AlgebraElement,
    Symbol,
    canonical,
    check_symbol,
    derived_generators,
    direct_generators,
    operator_table,
)
from .tableau import TableauC, c_regular_violations, weight_C
from .series import Series
from .vector import LinComb


class RegularityError(ZeroDivisionError):
    """A Gelfand-Tsetlin coefficient was evaluated at a non-C-regular tableau."""


class MembershipError(ValueError):
    """An operator was applied to a tableau outside the declared basis."""


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def coef_A(t: TableauC, k: int, i: int) -> Fraction:
    p = t.primed[k - 1]
    return 1 / _prod(p[a] - p[i - 1] for a in range(k) if a != i - 1)


def coef_B(t: TableauC, k: int, i: int) -> Fraction:
    x = t.lp(k, i)
    return (
        2
        * coef_A(t, k, i)
        * (2 * x - 1)
        * _prod(v - x for v in t.rows[k - 1])
        * (_prod(v - x for v in t.rows[k - 2]) if k >= 2 else 1)
    )


def coef_C(t: TableauC, k: int, i: int) -> Fraction:
    below = t.rows[k - 2]
    x = below[i - 1]
    den = (2 * x - 1) * _prod((x - y) * (x + y - 1) for a, y in enumerate(below) if a != i - 1)
    return 1 / den


def coef_D(t: TableauC, k: int, i: int, j: int, m: int) -> Fraction:
    y2 = t.l(k - 1, j) ** 2
    top = t.primed[k - 1]
    below = t.primed[k - 2]
    return (
        coef_A(t, k, i)
        * coef_A(t, k - 1, m)
        * coef_C(t, k, j)
        * _prod(y2 - v * v for a, v in enumerate(top) if a != i - 1)
        * _prod(y2 - v * v for a, v in enumerate(below) if a != m - 1)
    )


_KINDS = {"A": (coef_A, 2), "B": (coef_B, 2), "C": (coef_C, 2), "D": (coef_D, 4)}


def gt_coefficient(kind: str, t: TableauC, *indices: int) -> Fraction:
    """Evaluate A_{ki}, B_{ki}, C_{ki} or D_{kijm} exactly at t."""
    if kind not in _KINDS:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    fn, arity = _KINDS[kind]
    if len(indices) != arity:
        raise ValueError(f"{kind} takes {arity} indices")
    k = indices[0]
    if not 1 <= k <= t.n:
        raise IndexError(f"row index {k} out of range")
    limits = {"A": (k,), "B": (k,), "C": (k - 1,), "D": (k, k - 1, k - 1)}[kind]
    for idx, hi in zip(indices[1:], limits):
        if not 1 <= idx <= hi:
            raise IndexError(f"column index {idx} out of range for {kind} at k={k}")
    if kind in "CD" and k < 2:
        raise IndexError(f"{kind} needs k >= 2")
    bad = c_regular_violations(t)
    if bad:
        raise RegularityError(f"tableau is not C-regular: {bad[0]}")
    return fn(t, *indices)


def formula_terms(sym: Symbol, n: int) -> list[tuple[dict, str, tuple[int, ...]]]:
    """The literal formula of a direct generator as (shift, coefficient kind, indices)."""
    i, j = sym
    if i > 0 and j == -i:
        return [({(i, a, True): 1}, "A", (i, a)) for a in range(1, i + 1)]
    if i < 0 and j == -i:
        return [({(j, a, True): -1}, "B", (j, a)) for a in range(1, j + 1)]
    if i > 0 and j == -(i + 1):
        k = i + 1
        out = [({(k - 1, a, False): -1}, "C", (k, a)) for a in range(1, k)]
        for a in range(1, k + 1):
            for b in range(1, k):
                for m in range(1, k):
                    out.append(({(k, a, True): 1, (k - 1, b, False): 1, (k - 1, m, True): 1}, "D", (k, a, b, m)))
        return out
    raise ValueError(f"{sym} is not a directly implemented generator")


def raw_terms(sym: Symbol, t: TableauC, at=None) -> list:
    """Literal formula output of a directly implemented generator (no projection).

    ``at`` is the object the coefficients are evaluated on; it defaults to t
    and may be a perturbed copy of t with series entries.
    """
    i, j = sym
    if i == j and i > 0:
        return [(t, weight_C(t)[i - 1])]
    at = t if at is None else at
    out = []
    for shift, kind, idx in formula_terms(sym, t.n):
        c = _KINDS[kind][0](at, *idx)
        if kind != "D" or c:
            out.append((t.shifted(shift), c))
    return out


class Perturbed:
    """Entries of t moved to t + eps * z as series; enough of the tableau interface for the coefficients."""

    def __init__(self, t: TableauC, z: "TableauC"):
        self.n = t.n
        self.rows = tuple(tuple(Series.linear(v, d) for v, d in zip(r, dr)) for r, dr in zip(t.rows, z.rows))
        self.primed = tuple(tuple(Series.linear(v, d) for v, d in zip(r, dr)) for r, dr in zip(t.primed, z.primed))

    def l(self, k: int, i: int):
        return self.rows[k - 1][i - 1]

    def lp(self, k: int, i: int):
        return self.primed[k - 1][i - 1]


def generic_direction(n: int, seed: int = 20231) -> TableauC:
    """A fixed perturbation direction with no accidental linear relations."""
    rng = random.Random(seed)

    def draw():
        return Fraction(rng.randint(10**6, 10**7), rng.randint(10**6, 10**7))

    rows = [tuple(draw() for _ in range(k)) for k in range(1, n + 1)]
    primed = [tuple(draw() for _ in range(k)) for k in range(1, n + 1)]
    return TableauC(n, rows, primed)


class TableauModule:
    """A basis universe of type C tableaux carrying the projected GT action.

    ``member`` decides basis membership; formula terms landing outside the
    basis are dropped.  Actions of single symbols on basis tableaux are
    memoized.  ``drop_hook(sym, source, target, coef)`` sees every dropped
    term with its raw coefficient.

    ``derived_mode`` selects how the half-commutator symbols F_{k,k-1} and
    F_{k-1,k} are evaluated.  "free" (the default) composes the literal
    formulas over the free span of all tableaux and projects only the final
    result; "projected" composes the already projected generator actions.
    """

    def __init__(self, n: int, member: Callable[[TableauC], bool], name: str = "module", derived_mode: str = "free"):
        if derived_mode not in ("free", "projected"):
            raise ValueError(f"unknown derived_mode {derived_mode!r}")
        self.n = n
        self.member = member
        self.name = name
        self.derived_mode = derived_mode
        self._free_cache: dict = {}
        self._direction = generic_direction(n)
        self.drop_hook: Optional[Callable] = None
        self._direct = set(direct_generators(n))
        self._derived = derived_generators(n)
        self._table = operator_table(n)
        self._cache: dict = {}

    def clear_cache(self) -> None:
        self._cache.clear()
        self._free_cache.clear()

    def _direct_on_basis(self, sym: Symbol, t: TableauC) -> LinComb:
        out = LinComb()
        try:
            terms = raw_terms(sym, t)
        except ZeroDivisionError as exc:
            raise RegularityError(f"{sym} hit a singular coefficient at {t}") from exc
        for target, c in terms:
            if not c:
                continue
            if target is t or self.member(target):
                out.add_term(target, c)
            elif self.drop_hook is not None:
                self.drop_hook(sym, t, target, c)
        return out

    def act_on_basis(self, sym: Symbol, t: TableauC) -> LinComb:
        """Action of a canonical symbol on one basis tableau."""
        key = (sym, t)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if sym in self._direct:
            out = self._direct_on_basis(sym, t)
        elif self.derived_mode == "free" and sym in self._derived:
            out = LinComb()
            for target, c in self.free_action(sym, t):
                if target is t or self.member(target):
                    out.add_term(target, c)
                elif self.drop_hook is not None:
                    self.drop_hook(sym, t, target, c)
        else:
            coef, g, x = self._derived.get(sym) or self._table[sym]
            v = LinComb.basis(t)
            out = (self.apply(g, self.apply(x, v)) - self.apply(x, self.apply(g, v))).scaled(coef)
        self._cache[key] = out
        return out

    def _terms(self, sym: Symbol, t: TableauC, perturbed: bool) -> list:
        key = (perturbed, sym, t)
        hit = self._free_cache.get(key)
        if hit is None:
            hit = raw_terms(sym, t, at=Perturbed(t, self._direction) if perturbed else None)
            self._free_cache[key] = hit
        return hit

    def _compose(self, sym: Symbol, t: TableauC, perturbed: bool) -> dict:
        coef, g, x = self._derived[sym]
        acc: dict = {}
        for first, second, sign in ((x, g, 1), (g, x, -1)):
            s1, c1 = canonical(first)
            s2, c2 = canonical(second)
            for mid, a in self._terms(c1, t, perturbed):
                if not a:
                    continue
                for target, b in self._terms(c2, mid, perturbed):
                    acc[target] = acc.get(target, 0) + a * b * (sign * s1 * s2)
        return acc

    def free_action(self, sym: Symbol, t: TableauC) -> LinComb:
        """Half-commutator symbol composed over the free span, before projection.

        Intermediate tableaux may be singular for the formulas.  In that case
        every entry is moved to t + eps * z and the eps -> 0 limit of each
        collected coefficient is taken, which is finite whenever the
        singularities cancel.
        """
        key = (sym, t)
        hit = self._free_cache.get(key)
        if hit is not None:
            return hit
        coef = self._derived[sym][0]
        try:
            acc = self._compose(sym, t, perturbed=False)
        except ZeroDivisionError:
            acc = self._compose(sym, t, perturbed=True)
        out = LinComb()
        for target, value in acc.items():
            try:
                c = value.limit() if isinstance(value, Series) else value
            except ZeroDivisionError as exc:
                raise RegularityError(f"{sym} has a genuine pole at {t}") from exc
            if c:
                out.add_term(target, coef * c)
        self._free_cache[key] = out
        return out

    def apply(self, sym: Symbol, v: LinComb) -> LinComb:
        sign, c = canonical(sym)
        out = LinComb()
        for t, coef in v:
            for target, d in self.act_on_basis(c, t):
                out.add_term(target, coef * d * sign)
        return out

    def act_generator(self, sym: Symbol, t: TableauC) -> LinComb:
        check_symbol(sym, self.n)
        if not self.member(t):
            raise MembershipError(f"{t} is not in the basis of {self.name}")
        if canonical(sym)[1] not in self._direct:
            raise ValueError(f"{sym} is not a directly implemented generator")
        return self.apply(sym, LinComb.basis(t))

    def act_derived(self, sym: Symbol, v: LinComb) -> LinComb:
        """F_{k,k-1} or F_{k-1,k} through the half-commutator identities."""
        if canonical(sym)[1] not in self._derived:
            raise ValueError(f"{sym} is not F_(k,k-1) or F_(k-1,k)")
        for t, _ in v:
            if not self.member(t):
                raise MembershipError(f"{t} is not in the basis of {self.name}")
        return self.apply(sym, v)

    def act_element(self, x: AlgebraElement, v: LinComb) -> LinComb:
        out = LinComb()
        for word, c in x.terms.items():
            w = v
            for sym in reversed(word):
                check_symbol(sym, self.n)
                w = self.apply(sym, w)
                if not w:
                    break
            out = out + w.scaled(c)
        return out
