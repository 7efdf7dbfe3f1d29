"""Sparse formal linear combinations keyed by hashable basis objects."""

from __future__ import annotations

from fractions import Fraction


class LinComb:
    """Finite formal sum sum_b c_b * b with exact coefficients; zeros are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for b, c in items:
                self.add_term(b, c)

    @classmethod
    def basis(cls, b) -> "LinComb":
        return cls({b: Fraction(1)})

    def add_term(self, b, c) -> None:
        if not c:
            return
        v = self.terms.get(b)
        v = c if v is None else v + c
        if v:
            self.terms[b] = v
        else:
            self.terms.pop(b, None)

    def copy(self) -> "LinComb":
        out = LinComb()
        out.terms = dict(self.terms)
        return out

    def __add__(self, other: "LinComb") -> "LinComb":
        out = self.copy()
        for b, c in other.terms.items():
            out.add_term(b, c)
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        out = self.copy()
        for b, c in other.terms.items():
            out.add_term(b, -c)
        return out

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, s) -> "LinComb":
        if not s:
            return LinComb()
        out = LinComb()
        out.terms = {b: c * s for b, c in self.terms.items()}
        return out

    __rmul__ = scaled

    def __mul__(self, s):
        return self.scaled(s)

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, b):
        return self.terms.get(b, 0)

    def support(self):
        return set(self.terms)

    def __repr__(self):
        return f"LinComb({len(self.terms)} terms)"


TableauVector = LinComb
