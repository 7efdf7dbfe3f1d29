"""sp(2n) in its 2n x 2n matrix realization, and formal words in the F_{ij}.

Matrices are indexed by I = {1..n, -1..-n}; F_{ij} = E_{ij} - sgn(i) sgn(j) E_{-j,-i}.
Symbols are pairs (i, j) of nonzero integers.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

Symbol = tuple[int, int]

_SYMBOL_RE = re.compile(r"\A\s*F\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*\Z")


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


def check_symbol(sym: Symbol, n: int) -> None:
    i, j = sym
    if not (1 <= abs(i) <= n and 1 <= abs(j) <= n):
        raise ValueError(f"F({i},{j}) is not a generator symbol of sp({2 * n})")


def parse_symbol(text: str) -> Symbol:
    m = _SYMBOL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed generator symbol {text!r}; expected e.g. F(1,-2)")
    i, j = int(m.group(1)), int(m.group(2))
    if i == 0 or j == 0:
        raise ValueError("generator indices must be nonzero")
    return (i, j)


def format_symbol(sym: Symbol) -> str:
    return f"F({sym[0]},{sym[1]})"


def _key(sym: Symbol):
    i, j = sym
    return (i < 0, abs(i), j < 0, abs(j))


def canonical(sym: Symbol) -> tuple[int, Symbol]:
    """Return (sign, c) with F_sym = sign * F_c and c the canonical representative."""
    i, j = sym
    partner = (-j, -i)
    if partner == sym or _key(sym) <= _key(partner):
        return 1, sym
    return -_sgn(i) * _sgn(j), partner


@lru_cache(maxsize=None)
def canonical_symbols(n: int) -> tuple[Symbol, ...]:
    seen = []
    for i in list(range(1, n + 1)) + list(range(-1, -n - 1, -1)):
        for j in list(range(1, n + 1)) + list(range(-1, -n - 1, -1)):
            _, c = canonical((i, j))
            if c not in seen:
                seen.append(c)
    return tuple(seen)


def root(sym: Symbol, n: int) -> tuple[int, ...]:
    """Weight of F_{ij}: e_i - e_j with e_{-a} = -e_a."""
    out = [0] * n
    i, j = sym
    out[abs(i) - 1] += _sgn(i)
    out[abs(j) - 1] -= _sgn(j)
    return tuple(out)


# -- matrices ----------------------------------------------------------------

def _index(a: int, n: int) -> int:
    return a - 1 if a > 0 else n - a - 1


Matrix = dict  # sparse: {(row, col): Fraction}


def matrix(sym: Symbol, n: int) -> Matrix:
    i, j = sym
    m: Matrix = {}

    def add(r, c, v):
        key = (_index(r, n), _index(c, n))
        m[key] = m.get(key, 0) + v
        if m[key] == 0:
            del m[key]

    add(i, j, Fraction(1))
    add(-j, -i, Fraction(-_sgn(i) * _sgn(j)))
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = {}
    by_row: dict = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    for (r, k), v in a.items():
        for c, w in by_row.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + v * w
    return {k: v for k, v in out.items() if v != 0}


def mat_add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v != 0}


def mat_bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -1)


def expand(m: Matrix, n: int) -> dict[Symbol, Fraction]:
    """Write a matrix of sp(2n) in the canonical F basis; raises if m is not in sp(2n)."""
    out: dict[Symbol, Fraction] = {}
    for c in canonical_symbols(n):
        i, j = c
        lead = (_index(i, n), _index(j, n))
        v = m.get(lead, 0)
        if v:
            scale = 2 if i == -j else 1
            out[c] = Fraction(v) / scale
    rebuilt: Matrix = {}
    for c, v in out.items():
        rebuilt = mat_add(rebuilt, matrix(c, n), v)
    if rebuilt != {k: Fraction(v) for k, v in m.items()}:
        raise ValueError("matrix does not lie in sp(2n)")
    return out


@lru_cache(maxsize=None)
def _bracket_table(a: Symbol, b: Symbol, n: int) -> tuple:
    return tuple(sorted(expand(mat_bracket(matrix(a, n), matrix(b, n)), n).items()))


def structure_constants(a: Symbol, b: Symbol, n: int) -> "AlgebraElement":
    """[F_a, F_b] as a combination of canonical symbols."""
    check_symbol(a, n)
    check_symbol(b, n)
    return AlgebraElement({(s,): c for s, c in _bracket_table(a, b, n)})


# -- formal words ------------------------------------------------------------

class AlgebraElement:
    """Rational linear combination of words in generator symbols.

    A word (s1, s2, ..., sm) denotes the product F_{s1} F_{s2} ... F_{sm};
    it acts on a vector by applying sm first.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[Symbol, ...], Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                w = tuple(w)
                self.terms[w] = self.terms.get(w, 0) + c
                if not self.terms[w]:
                    del self.terms[w]

    @classmethod
    def generator(cls, sym: Symbol) -> "AlgebraElement":
        return cls({(sym,): 1})

    @classmethod
    def parse(cls, text: str) -> "AlgebraElement":
        return cls.generator(parse_symbol(text))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return AlgebraElement(terms)

    def __neg__(self):
        return AlgebraElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            terms: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    terms[w1 + w2] = terms.get(w1 + w2, 0) + c1 * c2
            return AlgebraElement(terms)
        return AlgebraElement({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        return AlgebraElement({w: c * scalar for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "".join(format_symbol(s) for s in w) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)

    def symbols(self) -> set[Symbol]:
        return {s for w in self.terms for s in w}

    def to_matrix(self, n: int) -> Matrix:
        out: Matrix = {}
        for w, c in self.terms.items():
            if not w:
                raise ValueError("constant terms have no matrix")
            m = matrix(w[0], n)
            for s in w[1:]:
                m = mat_mul(m, matrix(s, n))
            out = mat_add(out, m, c)
        return out


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


# -- generating families and the bracket-word table ---------------------------

def direct_generators(n: int) -> list[Symbol]:
    """Symbols whose action is given by closed formulas on tableaux."""
    out = [(k, k) for k in range(1, n + 1)]
    out += [(k, -k) for k in range(1, n + 1)]
    out += [(-k, k) for k in range(1, n + 1)]
    out += [(k - 1, -k) for k in range(2, n + 1)]
    return out


def derived_generators(n: int) -> dict[Symbol, tuple[Fraction, Symbol, Symbol]]:
    """F_{k,k-1} = 1/2 [F_{k-1,-k}, F_{-(k-1),k-1}] and F_{k-1,k} = 1/2 [F_{k-1,-k}, F_{-k,k}]."""
    out = {}
    for k in range(2, n + 1):
        out[(k, k - 1)] = (Fraction(1, 2), (k - 1, -k), (-(k - 1), k - 1))
        out[(k - 1, k)] = (Fraction(1, 2), (k - 1, -k), (-k, k))
    return out


@lru_cache(maxsize=None)
def operator_table(n: int) -> dict[Symbol, tuple[Fraction, Symbol, Symbol]]:
    """For every canonical symbol outside the direct set: F_target = coef * [F_g, F_x].

    Found by breadth-first search over right-normed brackets of the six
    generator families, each entry checked against the matrix realization.
    """
    direct = direct_generators(n)
    table: dict[Symbol, tuple[Fraction, Symbol, Symbol]] = dict(derived_generators(n))
    for target, (coef, g, x) in table.items():
        m = mat_bracket(matrix(g, n), matrix(x, n))
        assert expand(m, n) == {target: 1 / coef}, target
    families = direct + list(table)
    known = deque(families)
    have = set(families)
    while known:
        x = known.popleft()
        for g in families:
            m = mat_bracket(matrix(g, n), matrix(x, n))
            if not m:
                continue
            e = expand(m, n)
            if len(e) != 1:
                continue
            (target, c), = e.items()
            if target in have:
                continue
            table[target] = (1 / c, g, x)
            have.add(target)
            known.append(target)
    missing = set(canonical_symbols(n)) - have
    if missing:
        raise RuntimeError(f"generators failed to reach {sorted(missing)}")
    return table


def operator_for(sym: Symbol, n: int) -> AlgebraElement:
    """A bracket word in the generator families whose matrix equals F_sym."""
    check_symbol(sym, n)
    sign, c = canonical(sym)
    if c in direct_generators(n):
        return AlgebraElement.generator(c) * sign
    coef, g, x = operator_table(n)[c]
    return bracket(AlgebraElement.generator(g), operator_for(x, n)) * (coef * sign)


# -- Casimir -----------------------------------------------------------------

def trace_form(a: Symbol, b: Symbol, n: int) -> Fraction:
    m = mat_mul(matrix(a, n), matrix(b, n))
    return sum((v for (r, c), v in m.items() if r == c), Fraction(0))


@lru_cache(maxsize=None)
def _casimir_terms(n: int) -> tuple:
    syms = canonical_symbols(n)
    terms = {}
    for a in syms:
        # the trace-form dual of a root vector F_a is a multiple of F_{-a}-root vector
        partners = [b for b in syms if trace_form(a, b, n) != 0]
        if a[0] == a[1] and a[0] > 0:
            # Cartan part: tr(F_kk F_ll) = 2 delta_kl
            terms[(a, a)] = Fraction(1, 2)
            continue
        (b,) = partners
        terms[(a, b)] = 1 / trace_form(a, b, n)
    return tuple(sorted(terms.items()))


def casimir(n: int) -> AlgebraElement:
    """Quadratic Casimir sum_s X_s X^s for the trace form tr(XY)."""
    return AlgebraElement(dict(_casimir_terms(n)))
