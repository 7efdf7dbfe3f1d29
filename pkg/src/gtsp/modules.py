"""Basis universes: finite, generic and bounded tableaux modules.

Every module here is described by a small immutable spec.  Infinite modules
are never materialized; they are accessed through ``member``, weight-space
queries and seeded samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .action import TableauModule
from .enumeration import enumerate_standard, is_dominant, parity_key, top_row, weyl_dimension
from .scalars import HALF, format_rational, integer_distance, is_half_integer, is_integer, parse_rational
from .tableau import (
    TableauC,
    TableauD,
    is_C_generic,
    join_CD,
    row_sums,
    split_CD,
    tableau_from_json,
    tableau_to_json,
)
from .vector import LinComb

Vector = tuple[Fraction, ...]


def _vec(values) -> Vector:
    return tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in values)


def in_root_lattice(v: Sequence[Fraction]) -> bool:
    """Membership in Q_C: integer vectors with even coordinate sum."""
    if not all(is_integer(x) for x in v):
        return False
    return int(sum(v)) % 2 == 0


def tau1(lam: Sequence[Fraction]) -> Vector:
    lam = _vec(lam)
    return (-lam[0],) + lam[1:]


def int_of_double(mu: Sequence[Fraction]) -> frozenset[int]:
    """Int(2 mu) as 1-based indices."""
    return frozenset(i for i, x in enumerate(mu, 1) if is_integer(2 * Fraction(x)))


# -- specs -------------------------------------------------------------------

_MODULES: dict = {}


class ModuleSpec:
    """Common interface of the basis universes."""

    variant: str = ""
    n: int

    def member(self, t: TableauC) -> bool:  # pragma: no cover - overridden
        raise NotImplementedError

    def module(self) -> TableauModule:
        m = _MODULES.get(self)
        if m is None:
            m = TableauModule(self.n, self.member, name=self.variant)
            _MODULES[self] = m
        return m

    def sample(self, count: int, seed: int = 0, radius: int = 3) -> list[TableauC]:  # pragma: no cover
        raise NotImplementedError

    def to_json(self) -> dict:  # pragma: no cover
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteC(ModuleSpec):
    lam: Vector
    variant: str = field(default="finite", init=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", _vec(self.lam))
        if not is_dominant("C", self.lam):
            raise ValueError(f"{self.lam} is not a dominant sp(2n)-weight")

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def basis(self) -> list[TableauC]:
        return enumerate_standard("C", self.lam).tableaux

    def _basis_set(self) -> frozenset:
        key = ("finite-set", self.lam)
        s = _MODULES.get(key)
        if s is None:
            s = frozenset(self.basis)
            _MODULES[key] = s
        return s

    def member(self, t: TableauC) -> bool:
        return isinstance(t, TableauC) and t.n == self.n and t in self._basis_set()

    def sample(self, count: int, seed: int = 0, radius: int = 3) -> list[TableauC]:
        rng = random.Random(seed)
        return [rng.choice(self.basis) for _ in range(count)]

    def to_json(self) -> dict:
        return {"variant": self.variant, "lambda": [format_rational(x) for x in self.lam]}


@dataclass(frozen=True)
class GenericC(ModuleSpec):
    seed: TableauC
    variant: str = field(default="generic", init=False)

    def __post_init__(self):
        if not is_C_generic(self.seed):
            raise ValueError("seed tableau is not C-generic")

    @property
    def n(self) -> int:
        return self.seed.n

    def member(self, t: TableauC) -> bool:
        if not isinstance(t, TableauC) or t.n != self.n or t.top != self.seed.top:
            return False
        return all(integer_distance(v, w) is not None for (_, v), (_, w) in zip(t.entries(), self.seed.entries()))

    def sample(self, count: int, seed: int = 0, radius: int = 3) -> list[TableauC]:
        rng = random.Random(seed)
        keys = [key for key, _ in self.seed.entries() if key[0] < self.n]
        return [self.seed.shifted({key: rng.randint(-radius, radius) for key in keys}) for _ in range(count)]

    def to_json(self) -> dict:
        return {"variant": self.variant, "seed": tableau_to_json(self.seed)}


def _check_bounded(mu: Vector, lam: Vector) -> None:
    if len(mu) != len(lam):
        raise ValueError("mu and lambda must have the same length")
    if len(lam) < 2:
        raise ValueError("rank must be at least 2")
    if any(is_integer(x) for x in mu):
        raise ValueError("every mu_i must be non-integral")
    if not all(is_half_integer(x) for x in lam):
        raise ValueError("lambda must lie in (1/2 + Z)^n")
    if not is_dominant("D", lam):
        raise ValueError(f"{lam} is not a dominant so(2n)-weight")


@dataclass(frozen=True)
class Bounded(ModuleSpec):
    mu: Vector
    lam: Vector
    variant: str = field(default="bounded", init=False)

    def __post_init__(self):
        object.__setattr__(self, "mu", _vec(self.mu))
        object.__setattr__(self, "lam", _vec(self.lam))
        _check_bounded(self.mu, self.lam)

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def d_standard(self) -> list[TableauD]:
        return enumerate_standard("D", self.lam).tableaux

    def _d_set(self) -> frozenset:
        key = ("d-set", self.lam)
        s = _MODULES.get(key)
        if s is None:
            s = frozenset(self.d_standard)
            _MODULES[key] = s
        return s

    def member(self, t: TableauC) -> bool:
        if not isinstance(t, TableauC) or t.n != self.n:
            return False
        d, column = split_CD(t)
        if any(integer_distance(c, m) is None for c, m in zip(column, self.mu)):
            return False
        return d in self._d_set()

    def _column_bounds(self) -> dict[int, bool]:
        """Per-index requirement on w'_{k1}: True means >= 1/2, False means <= -1/2."""
        return {}

    def sample(self, count: int, seed: int = 0, radius: int = 3) -> list[TableauC]:
        rng = random.Random(seed)
        tabs = self.d_standard
        bounds = self._column_bounds()
        out = []
        for _ in range(count):
            d = rng.choice(tabs)
            column = []
            for k, m in enumerate(self.mu, 1):
                want = bounds.get(k)
                if want is True:
                    column.append(HALF + rng.randint(0, radius))
                elif want is False:
                    column.append(HALF - rng.randint(1, radius + 1))
                else:
                    column.append(m + rng.randint(-radius, radius))
            out.append(join_CD(d, column))
        return out

    def ambient(self) -> "Bounded":
        return Bounded(self.mu, self.lam)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "mu": [format_rational(x) for x in self.mu],
            "lambda": [format_rational(x) for x in self.lam],
        }


def _plus(t: TableauC, k: int) -> bool:
    d = integer_distance(t.lp(k, 1), HALF)
    return d is not None and d >= 0


@dataclass(frozen=True)
class BoundedSubPlus(Bounded):
    """V_k^+(mu, lambda): members of B(mu, lambda) with w'_{k1} - 1/2 in Z_{>=0}."""

    k: int = 1
    variant: str = field(default="bounded_sub_plus", init=False)

    def __post_init__(self):
        super().__post_init__()
        if not (1 <= self.k <= self.n):
            raise ValueError(f"k must lie in 1..{self.n}")
        if not is_half_integer(self.mu[self.k - 1]):
            raise ValueError("V_k^+ needs mu_k in 1/2 + Z")

    def member(self, t: TableauC) -> bool:
        return super().member(t) and _plus(t, self.k)

    def _column_bounds(self) -> dict[int, bool]:
        return {self.k: True}

    def to_json(self) -> dict:
        out = super().to_json()
        out["k"] = self.k
        return out


@dataclass(frozen=True)
class Subquotient(Bounded):
    """V(mu, lambda, Sigma) realized on the basis tableaux with the matching V_k^+ pattern."""

    sigma: frozenset = frozenset()
    variant: str = field(default="subquotient", init=False)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "sigma", frozenset(int(i) for i in self.sigma))
        if not self.sigma <= int_of_double(self.mu):
            raise ValueError(f"Sigma={sorted(self.sigma)} is not contained in Int(2 mu)={sorted(int_of_double(self.mu))}")

    @property
    def complement(self) -> frozenset:
        return int_of_double(self.mu) - self.sigma

    def member(self, t: TableauC) -> bool:
        if not super().member(t):
            return False
        return all(_plus(t, i) for i in self.sigma) and not any(_plus(t, j) for j in self.complement)

    def _column_bounds(self) -> dict[int, bool]:
        out = {i: True for i in self.sigma}
        out.update({j: False for j in self.complement})
        return out

    def to_json(self) -> dict:
        out = super().to_json()
        out["sigma"] = sorted(self.sigma)
        return out


def spec_from_json(data: dict) -> ModuleSpec:
    variant = data.get("variant")
    if variant == "finite":
        return FiniteC(_vec(data["lambda"]))
    if variant == "generic":
        return GenericC(tableau_from_json(data["seed"]))
    if variant in ("bounded", "bounded_sub_plus", "subquotient"):
        mu, lam = _vec(data["mu"]), _vec(data["lambda"])
        if variant == "bounded":
            return Bounded(mu, lam)
        if variant == "bounded_sub_plus":
            return BoundedSubPlus(mu, lam, k=int(data["k"]))
        return Subquotient(mu, lam, sigma=frozenset(data.get("sigma", [])))
    raise ValueError(f"unknown module variant {variant!r}")


def spec_to_json(spec: ModuleSpec) -> dict:
    return spec.to_json()


def membership(t: TableauC, spec: ModuleSpec) -> bool:
    return spec.member(t)


# -- special tableaux ----------------------------------------------------------

def _ell(lam: Sequence[Fraction]) -> Vector:
    return top_row("D", _vec(lam))


def special_upper(mu: Sequence[Fraction], lam: Sequence[Fraction]) -> TableauC:
    """T(W^{mu,lambda}): w'_{k1} = mu_k and every other entry of column i equal to l_i."""
    _check_bounded(_vec(mu), _vec(lam))
    mu, ell = _vec(mu), _ell(lam)
    n = len(ell)
    rows = [ell[:k] for k in range(1, n + 1)]
    primed = [(mu[k - 1],) + ell[1:k] for k in range(1, n + 1)]
    return TableauC(n, rows, primed)


def special_lower(mu: Sequence[Fraction], lam: Sequence[Fraction]) -> TableauC:
    """T(W_{mu,lambda}): first column alternates l_1, 1 - l_1, ... downwards from the top."""
    _check_bounded(_vec(mu), _vec(lam))
    mu, ell = _vec(mu), _ell(lam)
    n = len(ell)
    first = [Fraction(0)] * n
    first[n - 1] = ell[0]
    for k in range(n, 1, -1):
        first[k - 2] = 1 - first[k - 1]
    rows = [(first[k - 1],) + ell[1:k] for k in range(1, n + 1)]
    primed = [(mu[k - 1],) + ell[1:k] for k in range(1, n + 1)]
    return TableauC(n, rows, primed)


def highest_weight_tableau(lam: Sequence[Fraction]) -> TableauC:
    """T(W_lambda) = special_lower(1/2, lambda)."""
    lam = _vec(lam)
    return special_lower((HALF,) * len(lam), lam)


# -- weights, supports, degrees ------------------------------------------------

def support_base(spec: Bounded) -> Vector:
    return tuple(2 * m + l + 1 for m, l in zip(spec.mu, spec.lam))


def support_contains(spec: Bounded, gamma: Sequence[Fraction]) -> bool:
    gamma = _vec(gamma)
    if len(gamma) != spec.n:
        raise ValueError("weight has the wrong length")
    return in_root_lattice(tuple(g - b for g, b in zip(gamma, support_base(spec))))


def degree(spec: Bounded) -> int:
    dim = weyl_dimension("D", spec.lam)
    q, r = divmod(dim, 2 ** (spec.n - 1))
    if r or q <= 0:
        raise ArithmeticError(f"dim L_D{spec.lam} = {dim} is not a positive multiple of 2^(n-1)")
    return q


def _column_for(d: TableauD, gamma: Vector) -> Vector:
    """The first primed column giving a tableau with D-part d the weight gamma."""
    s, sp = row_sums(d)
    out = []
    for k in range(1, d.n + 1):
        below = s[k - 2] if k >= 2 else Fraction(0)
        out.append((gamma[k - 1] - k + HALF + s[k - 1] + below) / 2 - sp[k - 1])
    return tuple(out)


def reference_tableau(spec: Bounded, gamma: Sequence[Fraction]) -> Optional[TableauC]:
    """Some member of B(mu, lambda) of weight gamma, or None outside the support."""
    gamma = _vec(gamma)
    for d in spec.d_standard:
        column = _column_for(d, gamma)
        if all(integer_distance(c, m) is not None for c, m in zip(column, spec.mu)):
            return join_CD(d, column)
    return None


def explicit_extension(w: TableauC, r: TableauD) -> TableauC:
    """Extend r (in the class of T_D(w)) to the tableau of weight omega(w).

    r'_{k1} = w'_{k1} + S'_k(W - R) - S_k(W - R)/2 - S_{k-1}(W - R)/2.
    """
    wd, column = split_CD(w)
    sw, spw = row_sums(wd)
    sr, spr = row_sums(r)
    out = []
    for k in range(1, w.n + 1):
        ds = sw[k - 1] - sr[k - 1]
        dbelow = (sw[k - 2] - sr[k - 2]) if k >= 2 else Fraction(0)
        out.append(column[k - 1] + (spw[k - 1] - spr[k - 1]) - ds / 2 - dbelow / 2)
    return join_CD(r, out)


def weight_space_basis(spec: Bounded, gamma: Sequence[Fraction]) -> list[TableauC]:
    """Basis of the gamma weight space; empty outside the support."""
    gamma = _vec(gamma)
    ambient = spec.ambient()
    if not support_contains(ambient, gamma):
        return []
    w = reference_tableau(ambient, gamma)
    if w is None:
        return []
    wd, _ = split_CD(w)
    out = []
    for r in ambient.d_standard:
        if any(parity_key(r, wd)):
            continue
        t = explicit_extension(w, r)
        if spec.member(t):
            out.append(t)
    return sorted(out, key=lambda t: t.sort_key())


def subquotient_dims(mu, lam, sigma: Iterable[int], gamma) -> int:
    return len(weight_space_basis(Subquotient(_vec(mu), _vec(lam), frozenset(sigma)), gamma))


def support_window(spec: Bounded, radius: int) -> list[Vector]:
    """Support weights base + x with x in Q_C and max|x_i| <= radius."""
    base = support_base(spec)
    out = []
    for x in product(range(-radius, radius + 1), repeat=spec.n):
        if sum(x) % 2 == 0:
            out.append(tuple(b + xi for b, xi in zip(base, x)))
    return out


# -- primitivity ---------------------------------------------------------------

def annihilators(n: int) -> list[tuple[int, int]]:
    return [(k - 1, k) for k in range(2, n + 1)] + [(-j, j) for j in range(1, n + 1)]


def is_primitive(t: TableauC, spec: ModuleSpec) -> bool:
    if not spec.member(t):
        raise ValueError("tableau is not a basis element of the module")
    m = spec.module()
    v = LinComb.basis(t)
    return all(not m.apply(sym, v) for sym in annihilators(spec.n))


# -- classification --------------------------------------------------------------

Triple = tuple  # (mu, lambda, sigma)


def _triple(x) -> tuple[Vector, Vector, frozenset]:
    mu, lam, sigma = x
    return _vec(mu), _vec(lam), frozenset(sigma)


def iso_equivalent(a, b) -> bool:
    """Isomorphism test for V(mu, lambda, Sigma) by the parameter criterion."""
    mu, lam, sigma = _triple(a)
    mu2, lam2, sigma2 = _triple(b)
    if sigma != sigma2 or len(mu) != len(mu2):
        return False
    diff = tuple(2 * (x - y) for x, y in zip(mu, mu2))
    if lam == lam2 and in_root_lattice(diff):
        return True
    if lam == tau1(lam2):
        return in_root_lattice((diff[0] - 1,) + diff[1:])
    return False


def psi_reachable(lam: Sequence[Fraction], target: Sequence[Fraction]) -> Optional[Vector]:
    """A non-integral mu with 2 mu + lambda + 1 = target mod Q_C, or None if none exists.

    With a = target - lambda - 1 we need z in Q_C making every integral a_i + z_i
    odd.  This fails exactly when a is integral with an odd sum of a_i + 1,
    i.e. on the coset lambda + eps_1 + Q_C.
    """
    lam, target = _vec(lam), _vec(target)
    if len(lam) != len(target):
        raise ValueError("lambda and target must have the same length")
    a = [t - l - 1 for t, l in zip(target, lam)]
    z = [(0 if int(x) % 2 else 1) if is_integer(x) else 0 for x in a]
    if sum(z) % 2:
        free = next((i for i, x in enumerate(a) if not is_integer(x)), None)
        if free is None:
            return None
        z[free] += 1
    return tuple((x + zi) / 2 for x, zi in zip(a, z))


# -- cones and cosets ----------------------------------------------------------

@dataclass(frozen=True)
class ConeSpec:
    """C_{plus, minus} = C_plus intersected with -C_minus inside Q_C."""

    plus: frozenset = frozenset()
    minus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))

    def contains(self, x: Sequence[Fraction]) -> bool:
        return cone_membership(self, x)

    def __and__(self, other: "ConeSpec") -> "ConeSpec":
        return ConeSpec(self.plus | other.plus, self.minus | other.minus)

    def __neg__(self) -> "ConeSpec":
        return ConeSpec(self.minus, self.plus)


def cone_membership(c: ConeSpec, x: Sequence[Fraction]) -> bool:
    x = _vec(x)
    if not in_root_lattice(x):
        raise ValueError(f"{x} is not in the root lattice Q_C")
    return all(x[k - 1] >= 0 for k in c.plus) and all(x[k - 1] <= 0 for k in c.minus)


def cone_union(cones: Iterable[ConeSpec], x) -> bool:
    return any(cone_membership(c, x) for c in cones)


def cone_difference(a: ConeSpec, b: ConeSpec, x) -> bool:
    return cone_membership(a, x) and not cone_membership(b, x)


@dataclass(frozen=True)
class WeightCoset:
    """An element of C^n / Q_C."""

    representative: Vector

    def __post_init__(self):
        object.__setattr__(self, "representative", _vec(self.representative))

    def _normal(self) -> Vector:
        frac = [x - (x.numerator // x.denominator) for x in self.representative]
        ints = sum(x - f for x, f in zip(self.representative, frac))
        if int(ints) % 2:
            frac[0] += 1
        return tuple(frac)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightCoset) or len(other.representative) != len(self.representative):
            return NotImplemented
        return in_root_lattice(tuple(x - y for x, y in zip(self.representative, other.representative)))

    def __hash__(self) -> int:
        return hash(self._normal())

    def __contains__(self, gamma) -> bool:
        return WeightCoset(gamma) == self
