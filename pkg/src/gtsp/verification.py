"""Exact checks of the module-theoretic statements, returned as JSON-ready reports.

Every report has the shape ``{"check", "spec", "failures", "count", "seed"}``
and is a deterministic function of its arguments.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Optional, Sequence

from .action import Perturbed, coef_B, coef_D, generic_direction
from .algebra import canonical_symbols, casimir, direct_generators, format_symbol, structure_constants
from .enumeration import enumerate_standard, is_dominant, rho
from .modules import (
    Bounded,
    BoundedSubPlus,
    FiniteC,
    GenericC,
    ModuleSpec,
    _vec,
    annihilators,
    degree,
    highest_weight_tableau,
    support_window,
    weight_space_basis,
)
from .scalars import HALF, format_rational
from .tableau import TableauC, tableau_to_json, weight_C
from .vector import LinComb


def _report(check: str, spec, failures: list, count: int, seed: Optional[int] = None, **extra) -> dict:
    out = {"check": check, "spec": spec, "failures": failures, "count": count, "seed": seed}
    out.update(extra)
    return out


def _spec_json(spec) -> Optional[dict]:
    return spec.to_json() if isinstance(spec, ModuleSpec) else spec


def members_for(spec: ModuleSpec, samples: int, seed: int, radius: int = 3) -> list[TableauC]:
    if isinstance(spec, FiniteC):
        return list(spec.basis)
    return spec.sample(samples, seed=seed, radius=radius)


def symbol_pairs(n: int) -> list[tuple]:
    """All canonical pairs for n <= 3; for larger n, direct generators against everything."""
    syms = canonical_symbols(n)
    if n <= 3:
        return [(a, b) for i, a in enumerate(syms) for b in syms[i + 1:]]
    direct = direct_generators(n)
    return [(a, b) for a in direct for b in syms if a != b]


# -- representation property ---------------------------------------------------

def relation_failures(spec: ModuleSpec, tableaux: Sequence[TableauC], pairs=None,
                      max_failures: Optional[int] = None) -> list[dict]:
    """Witnesses of [a, b] v != (structure-constant expansion) v; stops early once max_failures are found."""
    m = spec.module()
    pairs = symbol_pairs(spec.n) if pairs is None else pairs
    bad = []
    for t in tableaux:
        v = LinComb.basis(t)
        for a, b in pairs:
            lhs = m.apply(a, m.apply(b, v)) - m.apply(b, m.apply(a, v))
            rhs = m.act_element(structure_constants(a, b, spec.n), v)
            if lhs != rhs:
                diff = lhs - rhs
                bad.append({
                    "tableau": tableau_to_json(t),
                    "pair": [format_symbol(a), format_symbol(b)],
                    "difference_terms": len(diff),
                })
                if max_failures is not None and len(bad) >= max_failures:
                    return bad
    return bad


def verify_representation(spec: ModuleSpec, samples: int = 100, seed: int = 0, radius: int = 3,
                          max_failures: Optional[int] = None) -> dict:
    tabs = members_for(spec, samples, seed, radius)
    failures = relation_failures(spec, tabs, max_failures=max_failures)
    return _report("relations", _spec_json(spec), failures, len(tabs), seed if not isinstance(spec, FiniteC) else None)


# -- Casimir -------------------------------------------------------------------

def casimir_scalar(spec: ModuleSpec, t: TableauC) -> Fraction:
    """The Casimir eigenvalue at t; raises if the image is not a multiple of t."""
    image = spec.module().act_element(casimir(spec.n), LinComb.basis(t))
    extra = [s for s in image.support() if s != t]
    if extra:
        raise ArithmeticError(f"Casimir is not diagonal at {t}: {len(extra)} off-diagonal terms")
    return image[t]


def _monomials(n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of all monomials of degree <= 2 in n variables."""
    out = [(0,) * n]
    out += [tuple(int(a == i) for a in range(n)) for i in range(n)]
    for i, j in combinations_with_replacement(range(n), 2):
        e = [0] * n
        e[i] += 1
        e[j] += 1
        out.append(tuple(e))
    return out


def _eval_monomial(e, x) -> Fraction:
    out = Fraction(1)
    for p, v in zip(e, x):
        out *= Fraction(v) ** p
    return out


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact Gauss-Jordan solve of a square nonsingular system."""
    n = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular fitting system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _finite_weights(n: int, span: int) -> list[tuple[Fraction, ...]]:
    out = []
    for lam in product(range(-span, 1), repeat=n):
        lam = tuple(Fraction(x) for x in lam)
        if is_dominant("C", lam):
            out.append(lam)
    out.sort(key=lambda w: (sum(abs(x) for x in w), w), reverse=False)
    return out


@lru_cache(maxsize=None)
def casimir_polynomial(n: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Eigenvalue polynomial of the Casimir on finite modules L_C(lambda), fitted exactly.

    The fit uses the smallest dominant weights that make the system square
    and nonsingular; the remaining small weights are held out and must agree.
    """
    monos = _monomials(n)
    weights = _finite_weights(n, 3 if n <= 2 else 2)
    rows, values, used = [], [], []
    for lam in weights:
        row = [_eval_monomial(e, lam) for e in monos]
        trial = rows + [row]
        if _rank(trial) > len(rows):
            rows.append(row)
            used.append(lam)
            values.append(casimir_scalar(FiniteC(lam), FiniteC(lam).basis[0]))
        if len(rows) == len(monos):
            break
    if len(rows) < len(monos):
        raise ArithmeticError("not enough finite modules to fit the Casimir polynomial")
    coeffs = _solve(rows, values)
    poly = tuple((e, c) for e, c in zip(monos, coeffs) if c)
    for lam in weights:
        if lam in used:
            continue
        if len(FiniteC(lam).basis) > 60:
            continue
        got = casimir_scalar(FiniteC(lam), FiniteC(lam).basis[-1])
        if got != evaluate_polynomial(poly, lam):
            raise ArithmeticError(f"held-out weight {lam} disagrees with the fitted Casimir polynomial")
    return poly


def _rank(rows: list[list[Fraction]]) -> int:
    a = [r[:] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                f = a[r][col] / a[rank][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def evaluate_polynomial(poly, x) -> Fraction:
    return sum((c * _eval_monomial(e, x) for e, c in poly), Fraction(0))


def expected_casimir(spec: ModuleSpec) -> Fraction:
    poly = casimir_polynomial(spec.n)
    if isinstance(spec, Bounded):
        return evaluate_polynomial(poly, tuple(l + 1 for l in spec.lam))
    if isinstance(spec, GenericC):
        top = spec.seed.top
        r = rho("C", spec.n)
        return evaluate_polynomial(poly, tuple(x - p - HALF for x, p in zip(top, r)))
    if isinstance(spec, FiniteC):
        return evaluate_polynomial(poly, spec.lam)
    raise TypeError(f"no Casimir prediction for {type(spec).__name__}")


def verify_casimir(spec: ModuleSpec, samples: int = 50, seed: int = 0, radius: int = 3) -> dict:
    tabs = members_for(spec, samples, seed, radius)
    expected = expected_casimir(spec)
    failures, scalars = [], set()
    for t in tabs:
        try:
            value = casimir_scalar(spec, t)
        except ArithmeticError as exc:
            failures.append({"tableau": tableau_to_json(t), "error": str(exc)})
            continue
        scalars.add(value)
        if value != expected:
            failures.append({"tableau": tableau_to_json(t), "scalar": format_rational(value)})
    return _report(
        "casimir", _spec_json(spec), failures, len(tabs), seed,
        expected=format_rational(expected), scalars=sorted(format_rational(s) for s in scalars),
    )


# -- multiplicities ---------------------------------------------------------------

def verify_multiplicity(spec: Bounded, window_radius: int = 3) -> dict:
    want = degree(spec)
    failures = []
    count = 0
    support = set(support_window(spec, window_radius))
    base = support_window(spec, 0)[0]
    for x in product(range(-window_radius, window_radius + 1), repeat=spec.n):
        gamma = tuple(b + xi for b, xi in zip(base, x))
        basis = weight_space_basis(spec, gamma)
        expected = want if gamma in support else 0
        count += 1
        bad = len(basis) != expected or any(weight_C(t) != gamma or not spec.member(t) for t in basis)
        if bad:
            failures.append({"gamma": [format_rational(g) for g in gamma], "dimension": len(basis), "expected": expected})
    return _report("multiplicity", _spec_json(spec), failures, count, None, degree=want, radius=window_radius)


# -- primitivity and submodules -------------------------------------------------

def verify_primitive(lam: Sequence[Fraction]) -> dict:
    lam = _vec(lam)
    n = len(lam)
    spec = Bounded((HALF,) * n, lam)
    t = highest_weight_tableau(lam)
    m = spec.module()
    failures = []
    for sym in annihilators(n):
        image = m.apply(sym, LinComb.basis(t))
        if image:
            failures.append({"generator": format_symbol(sym), "terms": len(image)})
    return _report("primitive", _spec_json(spec), failures, len(annihilators(n)), None, tableau=tableau_to_json(t))


def verify_submodule(spec: BoundedSubPlus, samples: int = 200, seed: int = 0, radius: int = 3) -> dict:
    """Every term of a sampled action that leaves V_k^+ must carry coefficient exactly 0."""
    ambient = spec.ambient()
    m = ambient.module()
    rng = random.Random(seed)
    tabs = spec.sample(samples, seed=seed, radius=radius)
    syms = direct_generators(spec.n) + sorted(m._derived)
    failures = []
    boundary = 0
    for t in tabs:
        sym = syms[rng.randrange(len(syms))]
        dropped = []
        m.drop_hook = lambda s, src, tgt, c: dropped.append((tgt, c))
        try:
            image = m.act_on_basis(sym, t)
        finally:
            m.drop_hook = None
        escapes = [(u, c) for u, c in image if not spec.member(u)]
        boundary += sum(1 for u, _ in dropped if not spec.member(u))
        for u, c in escapes + [(u, c) for u, c in dropped if c and ambient.member(u)]:
            failures.append({"tableau": tableau_to_json(t), "generator": format_symbol(sym),
                             "target": tableau_to_json(u), "coefficient": format_rational(c)})
    return _report("submodule", _spec_json(spec), failures, len(tabs), seed, dropped_outside=boundary)


# -- appendix identities ----------------------------------------------------------

def lagrange_sum(c: Sequence[Fraction]) -> Fraction:
    c = _vec(c)
    k = len(c)
    total = Fraction(0)
    for i in range(k):
        num = Fraction(1)
        for a in range(1, k - 1):
            num *= c[a] - c[i] - 1
        den = Fraction(1)
        for a in range(k):
            if a != i:
                den *= c[a] - c[i]
        total += num / den
    return total


def verify_lagrange(k: int, c: Sequence[Fraction]) -> bool:
    c = _vec(c)
    if k < 2 or len(c) != k:
        raise ValueError("need k >= 2 values")
    if len(set(c)) != k:
        raise ValueError("values must be pairwise distinct")
    return lagrange_sum(c) == 0


def lemma_hypotheses(t: TableauC, k: int, summation: bool = False) -> list[str]:
    bad = []
    if not 2 <= k <= t.n:
        return [f"k={k} outside 2..{t.n}"]
    if t.lp(k, 1) != HALF:
        bad.append(f"l'_({k},1) != 1/2")
    if t.lp(k, k) != t.l(k, k):
        bad.append(f"l'_({k},{k}) != l_({k},{k})")
    for i in range(2, k):
        if not (t.l(k, i) == t.lp(k, i) == t.l(k - 1, i)):
            bad.append(f"l_({k},{i}), l'_({k},{i}), l_({k - 1},{i}) differ")
    if summation and t.l(k, 1) + t.l(k - 1, 1) != 1:
        bad.append(f"l_({k},1) + l_({k - 1},1) != 1")
    return bad


def lemma_direction(t: TableauC, k: int) -> TableauC:
    """A generic direction that keeps t inside the hypothesis locus of the lemmas at row k."""
    z = generic_direction(t.n)
    rows = [list(r) for r in z.rows]
    primed = [list(r) for r in z.primed]
    primed[k - 1][0] = Fraction(0)
    for i in range(2, k):
        rows[k - 1][i - 1] = primed[k - 1][i - 1] = rows[k - 2][i - 1]
    primed[k - 1][k - 1] = rows[k - 1][k - 1]
    if t.l(k, 1) + t.l(k - 1, 1) == 1:
        rows[k - 2][0] = -rows[k - 1][0]
    return TableauC(t.n, rows, primed)


class _Evaluator:
    """Exact evaluation; at a 0/0 point the value is the limit along the hypothesis locus."""

    def __init__(self, direction: TableauC):
        self.direction = direction
        self.resolved: list[str] = []

    def __call__(self, label, build):
        try:
            return build(lambda s: s)
        except ZeroDivisionError:
            pass
        try:
            value = build(lambda s: Perturbed(s, self.direction)).limit()
        except (ZeroDivisionError, ArithmeticError):
            return None
        self.resolved.append(label)
        return value


def vanishing_items(t: TableauC, k: int, evaluator: Optional[_Evaluator] = None) -> dict[str, list]:
    """Nonzero (or genuinely singular) instances of each lemma item at row k."""
    out: dict[str, list] = {"i": [], "ii": [], "iii": [], "iv": [], "v": [], "sum": []}
    ev = evaluator or _Evaluator(lemma_direction(t, k))

    def note(item, label, build):
        value = ev(label, build)
        if value is None or value != 0:
            out[item].append({"at": label, "value": None if value is None else format_rational(value)})

    def b_at(s, i):
        return lambda lift: coef_B(lift(s), k, i)

    for i in range(1, k + 1):
        note("i", f"B_{k}{i}(L)", b_at(t, i))
    for s_ in range(1, k):
        shifted = t.shifted({(k - 1, s_, False): -1})
        for r in range(2, k):
            note("ii", f"B_{k}{r}(L-d({k - 1},{s_}))", b_at(shifted, r))
    for i in range(1, k + 1):
        for j in range(1, k):
            shifted = t.shifted({(k, i, True): 1, (k - 1, j, False): 1})
            for tt in range(1, k + 1):
                if tt != i:
                    note("iii", f"B_{k}{tt}(L+d'({k},{i})+d({k - 1},{j}))", b_at(shifted, tt))
    for j in range(2, k):
        shifted = t.shifted({(k, j, True): 1, (k - 1, j, False): 1})
        note("iv", f"B_{k}{j}(L+d'({k},{j})+d({k - 1},{j}))", b_at(shifted, j))
    for i in range(1, k + 1):
        for j in range(2, k):
            if i == j:
                continue
            for m in range(1, k):
                note("v", f"D_{k}{i}{j}{m}(L)", lambda lift, i=i, j=j, m=m: coef_D(lift(t), k, i, j, m))
    if t.l(k, 1) + t.l(k - 1, 1) == 1:
        for m in range(1, k):
            def total(lift, m=m):
                acc = Fraction(0)
                for i in range(1, k + 1):
                    bumped = t.shifted({(k, i, True): 1, (k - 1, 1, False): 1})
                    acc = coef_D(lift(t), k, i, 1, m) * coef_B(lift(bumped), k, i) + acc
                return acc
            note("sum", f"sum_i D_{k}i1{m} B_{k}i", total)
    return out


def verify_vanishing_lemmas(t: TableauC, ks: Optional[Sequence[int]] = None) -> dict:
    ks = list(range(2, t.n + 1)) if ks is None else list(ks)
    for k in ks:
        bad = lemma_hypotheses(t, k)
        if bad:
            raise ValueError(f"lemma hypotheses fail at k={k}: {bad[0]}")
    failures, resolved = [], []
    for k in ks:
        ev = _Evaluator(lemma_direction(t, k))
        for item, hits in vanishing_items(t, k, ev).items():
            failures.extend({"k": k, "item": item, **h} for h in hits)
        resolved.extend(f"k={k}: {label}" for label in ev.resolved)
    return _report("vanishing", None, failures, len(ks), None, tableau=tableau_to_json(t), limits=resolved)


def synthetic_lemma_tableau(n: int, k: int, rng: random.Random) -> TableauC:
    """A random rational tableau meeting the hypotheses of both lemmas at row k."""

    def r():
        return Fraction(rng.randint(-400, 400), rng.randint(7, 97)) + Fraction(1, 1009)

    rows = [[r() for _ in range(j)] for j in range(1, n + 1)]
    primed = [[r() for _ in range(j)] for j in range(1, n + 1)]
    primed[k - 1][0] = HALF
    for i in range(2, k):
        v = r()
        rows[k - 1][i - 1] = primed[k - 1][i - 1] = rows[k - 2][i - 1] = v
    primed[k - 1][k - 1] = rows[k - 1][k - 1]
    rows[k - 2][0] = 1 - rows[k - 1][0]
    return TableauC(n, rows, primed)


# -- oscillator --------------------------------------------------------------------

def verify_oscillator(mu, lam, sigma, radius: int = 6, samples: int = 20, seed: int = 0) -> dict:
    from .oscillator import compare_degree1, homomorphism_failures, matching_osc_spec, osc_casimir_scalar

    report = compare_degree1(mu, lam, sigma, radius=radius)
    osc = matching_osc_spec(mu, lam, sigma)
    failures = list(report["mismatches"])
    monos = osc.sample(samples, seed=seed)
    failures += [{"homomorphism": f} for f in homomorphism_failures(osc, monos[:5])]
    scalars = {osc_casimir_scalar(osc, a) for a in monos}
    expected = expected_casimir(Bounded(_vec(mu), _vec(lam)))
    if scalars != {expected}:
        failures.append({"casimir": sorted(format_rational(s) for s in scalars), "expected": format_rational(expected)})
    return _report("oscillator", report, failures, report["fibers"], seed)
