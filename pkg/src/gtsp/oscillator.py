"""Degree-1 bounded modules realized by differential operators on monomials.

The oscillator homomorphism sends sp(2n) to even-degree operators in the Weyl
algebra on t_1..t_n.  The modules F(nu, Sigma) are spans of monomials t^alpha
with rational exponents, twisted on Sigma by t_i -> d_i, d_i -> -t_i.  They
serve as an independent oracle for the degree-1 tableau modules.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .algebra import AlgebraElement, Symbol, canonical, canonical_symbols, casimir, check_symbol, structure_constants
from .modules import (
    Bounded,
    ConeSpec,
    Subquotient,
    _vec,
    degree,
    in_root_lattice,
    int_of_double,
    support_base,
    weight_space_basis,
)
from .scalars import HALF, RootTwo, format_rational, is_integer

Monomial = tuple[Fraction, ...]
Word = tuple[tuple[str, int], ...]

# phi(F_{k,-k}) = A_NORM t_k^2 and phi(F_{-k,k}) = B_NORM d_k^2.  The product
# A_NORM * B_NORM = -1 is forced by [F_kk, F_{k,-k}] = 2 F_{k,-k}.
A_NORM = RootTwo(0, HALF)
B_NORM = RootTwo(0, -1)


class OracleInconsistency(RuntimeError):
    """The oscillator action left its monomial basis with a nonzero coefficient."""


def int_indices(nu: Sequence[Fraction]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(nu, 1) if is_integer(x))


@dataclass(frozen=True)
class OscSpec:
    nu: Monomial
    sigma: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "nu", _vec(self.nu))
        object.__setattr__(self, "sigma", frozenset(int(i) for i in self.sigma))
        if not self.sigma <= int_indices(self.nu):
            raise ValueError(f"Sigma={sorted(self.sigma)} is not contained in Int(nu)")

    @property
    def n(self) -> int:
        return len(self.nu)

    def member(self, alpha: Sequence[Fraction]) -> bool:
        alpha = _vec(alpha)
        if len(alpha) != self.n or not in_root_lattice(tuple(a - v for a, v in zip(alpha, self.nu))):
            return False
        return all(alpha[i - 1] >= 0 for i in int_indices(self.nu))

    def weight(self, alpha: Sequence[Fraction]) -> Monomial:
        """Cartan weight of t^alpha: alpha_k + 1/2, negated on twisted indices."""
        return tuple(-(a + HALF) if k in self.sigma else a + HALF for k, a in enumerate(alpha, 1))

    def monomial_of_weight(self, gamma: Sequence[Fraction]) -> Monomial:
        return tuple(-g - HALF if k in self.sigma else g - HALF for k, g in enumerate(_vec(gamma), 1))

    def cone(self) -> ConeSpec:
        return ConeSpec(int_indices(self.nu) - self.sigma, self.sigma)

    def sample(self, count: int, seed: int = 0, radius: int = 3) -> list[Monomial]:
        rng = random.Random(seed)
        ints = int_indices(self.nu)
        base = tuple(Fraction(int(v) % 2) if k in ints else v for k, v in enumerate(self.nu, 1))
        out = []
        while len(out) < count:
            z = [rng.randint(0, 2 * radius) if k in ints else rng.randint(-radius, radius) for k in range(1, self.n + 1)]
            if sum(z) % 2:
                z[0] += 1
            alpha = tuple(b + zi for b, zi in zip(base, z))
            if self.member(alpha):
                out.append(alpha)
        return out

    def to_json(self) -> dict:
        return {"nu": [format_rational(x) for x in self.nu], "sigma": sorted(self.sigma)}

    @classmethod
    def from_json(cls, data: dict) -> "OscSpec":
        return cls(_vec(data["nu"]), frozenset(data.get("sigma", [])))


# -- the homomorphism on words ---------------------------------------------------

def _commutator(x: list, y: list, scale) -> list:
    out = [(c * d * scale, u + v) for c, u in x for d, v in y]
    out += [(-(c * d) * scale, v + u) for c, u in x for d, v in y]
    return out


@lru_cache(maxsize=None)
def phi_canonical(sym: Symbol) -> tuple:
    """phi(F_sym) for a canonical symbol, as (coefficient, word) pairs; words act right to left."""
    i, j = sym
    if i > 0 and j < 0:
        return ((A_NORM, (("t", i), ("t", -j))),)
    if i < 0 and j > 0:
        return ((B_NORM, (("d", -i), ("d", j))),)
    if i > 0 and j > 0 and i != j:
        return ((RootTwo(1), (("t", i), ("d", j))),)
    if i == j and i > 0:
        # phi(F_kk) = [phi(F_{k,-k}), phi(F_{-k,k})] / 4
        return tuple(_commutator(list(phi_canonical((i, -i))), list(phi_canonical((-i, i))), Fraction(1, 4)))
    raise ValueError(f"{sym} is not canonical")


def phi(sym: Symbol) -> list:
    sign, c = canonical(sym)
    return [(coef * sign, word) for coef, word in phi_canonical(c)]


def twist(word_terms: list, sigma: frozenset) -> list:
    """theta_Sigma: t_i -> d_i and d_i -> -t_i for i in Sigma."""
    out = []
    for coef, word in word_terms:
        new = []
        for op, i in word:
            if i in sigma:
                if op == "t":
                    new.append(("d", i))
                else:
                    new.append(("t", i))
                    coef = -coef
            else:
                new.append((op, i))
        out.append((coef, tuple(new)))
    return out


def _apply_word(word: Word, alpha: Monomial):
    coef = Fraction(1)
    alpha = list(alpha)
    for op, i in reversed(word):
        if op == "t":
            alpha[i - 1] += 1
        else:
            coef *= alpha[i - 1]
            if not coef:
                return None
            alpha[i - 1] -= 1
    return tuple(alpha), coef


def osc_act(sym: Symbol, alpha: Sequence[Fraction], spec: OscSpec) -> dict:
    """theta_Sigma(phi(F_sym)) applied to t^alpha, as {monomial: RootTwo}."""
    alpha = _vec(alpha)
    check_symbol(sym, spec.n)
    if not spec.member(alpha):
        raise ValueError(f"t^{alpha} is not a basis monomial of F(nu, Sigma)")
    out: dict = {}
    for coef, word in twist(phi(sym), spec.sigma):
        hit = _apply_word(word, alpha)
        if hit is None:
            continue
        target, c = hit
        out[target] = out.get(target, RootTwo(0)) + coef * c
    out = {m: c for m, c in out.items() if c}
    for m in out:
        if not spec.member(m):
            raise OracleInconsistency(f"F{sym} sends t^{alpha} outside the module")
    return out


def osc_apply(sym: Symbol, v: dict, spec: OscSpec) -> dict:
    out: dict = {}
    for alpha, c in v.items():
        for m, d in osc_act(sym, alpha, spec).items():
            out[m] = out.get(m, RootTwo(0)) + c * d
    return {m: c for m, c in out.items() if c}


def osc_element(x: AlgebraElement, v: dict, spec: OscSpec) -> dict:
    out: dict = {}
    for word, c in x.terms.items():
        w = v
        for sym in reversed(word):
            w = osc_apply(sym, w, spec)
        for m, d in w.items():
            out[m] = out.get(m, RootTwo(0)) + d * c
    return {m: c for m, c in out.items() if c}


def osc_casimir_scalar(spec: OscSpec, alpha: Sequence[Fraction]) -> Fraction:
    alpha = _vec(alpha)
    image = osc_element(casimir(spec.n), {alpha: RootTwo(1)}, spec)
    if set(image) - {alpha}:
        raise OracleInconsistency("the Casimir element is not diagonal on monomials")
    value = image.get(alpha, RootTwo(0))
    if not value.is_rational():
        raise OracleInconsistency("irrational Casimir scalar")
    return value.a


def homomorphism_failures(spec: OscSpec, monomials: Sequence[Monomial]) -> list[dict]:
    """Pairs (a, b) with [phi(a), phi(b)] != phi([a, b]) on the given monomials."""
    syms = canonical_symbols(spec.n)
    bad = []
    for alpha in monomials:
        v = {tuple(alpha): RootTwo(1)}
        for idx, a in enumerate(syms):
            for b in syms[idx + 1:]:
                ab = osc_apply(a, osc_apply(b, v, spec), spec)
                ba = osc_apply(b, osc_apply(a, v, spec), spec)
                lhs = {m: ab.get(m, RootTwo(0)) - ba.get(m, RootTwo(0)) for m in set(ab) | set(ba)}
                lhs = {m: c for m, c in lhs.items() if c}
                rhs = osc_element(structure_constants(a, b, spec.n), v, spec)
                if lhs != rhs:
                    bad.append({"monomial": [format_rational(x) for x in alpha], "pair": [list(a), list(b)]})
    return bad


# -- differential comparison with the tableau modules ----------------------------

def matching_osc_spec(mu, lam, sigma) -> OscSpec:
    """The F(nu, Sigma') with the same support coset and cone as V(mu, lambda, Sigma).

    V(mu, lambda, Sigma) has cone C_{Sigma, Int(2mu) - Sigma}, so the twist is
    Sigma' = Int(2mu) - Sigma, and nu is read off from 2mu + lambda + 1.
    """
    mu, lam = _vec(mu), _vec(lam)
    twisted = int_of_double(mu) - frozenset(sigma)
    base = tuple(2 * m + l + 1 for m, l in zip(mu, lam))
    nu = tuple(-b - HALF if k in twisted else b - HALF for k, b in enumerate(base, 1))
    # integral coordinates may move by even steps without changing the coset
    nu = tuple(Fraction(int(v) % 2) if is_integer(v) else v for v in nu)
    return OscSpec(nu, twisted)


def compare_degree1(mu, lam, sigma, radius: int = 6) -> dict:
    mu, lam, sigma = _vec(mu), _vec(lam), frozenset(sigma)
    ambient = Bounded(mu, lam)
    if degree(ambient) != 1:
        raise ValueError("compare_degree1 needs a degree-1 module")
    tab = Subquotient(mu, lam, sigma)
    osc = matching_osc_spec(mu, lam, sigma)
    base = support_base(ambient)
    mismatches = []
    seen = 0
    for x in product(range(-radius, radius + 1), repeat=len(mu)):
        if sum(x) % 2:
            continue
        gamma = tuple(b + xi for b, xi in zip(base, x))
        d_tab = len(weight_space_basis(tab, gamma))
        d_osc = 1 if osc.member(osc.monomial_of_weight(gamma)) else 0
        seen += 1
        if d_tab != d_osc:
            mismatches.append({"gamma": [format_rational(g) for g in gamma], "tableau": d_tab, "oscillator": d_osc})
    tab_cone = ConeSpec(sigma, int_of_double(mu) - sigma)
    osc_cone = osc.cone()
    if tab_cone != osc_cone:
        mismatches.append({"cone": {"tableau": [sorted(tab_cone.plus), sorted(tab_cone.minus)],
                                    "oscillator": [sorted(osc_cone.plus), sorted(osc_cone.minus)]}})
    return {
        "window": radius,
        "mu": [format_rational(m) for m in mu],
        "lambda": [format_rational(l) for l in lam],
        "sigma": sorted(sigma),
        "oscillator": osc.to_json(),
        "fibers": seen,
        "mismatches": mismatches,
    }
