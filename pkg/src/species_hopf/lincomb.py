"""Sparse formal linear combinations with exact rational coefficients.

The universal value type of every algebraic operation in this package:
a finite map from basis objects to nonzero Fractions. Basis objects must
be hashable and either provide a ``sort_key()`` method or be tuples of
such objects (tuples model tensor factors and render with " ⊗ ").
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator


def canonical_key(b):
    """Total-order key for a basis object, recursing through tuples."""
    if isinstance(b, tuple):
        return tuple(canonical_key(x) for x in b)
    sk = getattr(b, "sort_key", None)
    if callable(sk):
        return sk()
    return b


def render_basis(b) -> str:
    """Textual form of a basis object; tuples are tensor factors."""
    if isinstance(b, tuple):
        return " ⊗ ".join(render_basis(x) for x in b)
    return str(b)


class LinComb:
    """Immutable sparse linear combination over an arbitrary basis.

    No stored coefficient is ever zero; iteration follows the canonical
    total order on the basis, so printing is deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable | dict | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for b, c in items:
                c = Fraction(c)
                if c == 0:
                    continue
                c2 = acc.get(b, Fraction(0)) + c
                if c2 == 0:
                    acc.pop(b, None)
                else:
                    acc[b] = c2
        self._terms = acc

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def single(cls, basis, coeff=1) -> "LinComb":
        return cls([(basis, Fraction(coeff))])

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, basis) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms, key=canonical_key))

    def items(self):
        for b in self:
            yield b, self._terms[b]

    def __add__(self, other: "LinComb") -> "LinComb":
        acc = dict(self._terms)
        for b, c in other._terms.items():
            c2 = acc.get(b, Fraction(0)) + c
            if c2 == 0:
                acc.pop(b, None)
            else:
                acc[b] = c2
        out = LinComb()
        out._terms = acc
        return out

    def __neg__(self) -> "LinComb":
        out = LinComb()
        out._terms = {b: -c for b, c in self._terms.items()}
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar) -> "LinComb":
        scalar = Fraction(scalar)
        if scalar == 0:
            return LinComb()
        out = LinComb()
        out._terms = {b: c * scalar for b, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def map_basis(self, f: Callable) -> "LinComb":
        """Linear extension of a basis map f: B -> LinComb."""
        acc = LinComb()
        for b, c in self._terms.items():
            acc = acc + f(b) * c
        return acc

    def tensor(self, other: "LinComb") -> "LinComb":
        """Bilinear tensor product; basis objects become flat tuples."""
        pairs = []
        for b1, c1 in self._terms.items():
            t1 = b1 if isinstance(b1, tuple) else (b1,)
            for b2, c2 in other._terms.items():
                t2 = b2 if isinstance(b2, tuple) else (b2,)
                pairs.append((t1 + t2, c1 * c2))
        return LinComb(pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b in self:
            c = self._terms[b]
            s = render_basis(b)
            if c == 1:
                parts.append(s)
            else:
                parts.append(f"{c}·{s}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinComb({self})"


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lincomb_map(a: LinComb, f: Callable) -> LinComb:
    return a.map_basis(f)


def tensor_product(a: LinComb, b: LinComb) -> LinComb:
    return a.tensor(b)
