"""Quasishuffle algebras on words over a commutative semigroup.

The letter alphabet is the basis of a finitely generated free
commutative semigroup (a grouplike basis of the semigroup bialgebra V):
letters multiply by adding exponent vectors, δ_V(m) = m ⊗ m and
ε_V(m) = 1. Presets:

  qsym    one generator, exponents ≥ 1  (positive integers under +)
  k       zero generators, a single element (the trivial monoid)
  free:g  free commutative semigroup on g generators

Words carry the quasishuffle product indexed by (k,l)-quasishuffle
surjections, deconcatenation Δ, and the interval-fusion coproduct δ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .lincomb import LinComb


@dataclass(frozen=True)
class Semigroup:
    """A presentation of the letter semigroup: name + generator count."""

    name: str
    generators: int

    def validate(self, m: "Monomial") -> "Monomial":
        if len(m.exps) != self.generators:
            raise ValueError(
                f"monomial {m} has {len(m.exps)} exponents, preset "
                f"{self.name!r} expects {self.generators}"
            )
        if self.generators and (any(e < 0 for e in m.exps) or all(e == 0 for e in m.exps)):
            raise ValueError(f"monomial {m} is not a semigroup element")
        return m


QSYM = Semigroup("qsym", 1)
K = Semigroup("k", 0)


def free_semigroup(g: int) -> Semigroup:
    if g < 0:
        raise ValueError("generator count must be nonnegative")
    return Semigroup(f"free:{g}", g)


def preset_by_name(name: str) -> Semigroup:
    if name == "qsym":
        return QSYM
    if name == "k":
        return K
    if name.startswith("free:"):
        return free_semigroup(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown semigroup preset {name!r}")


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over the semigroup generators."""

    exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exps) != len(other.exps):
            raise ValueError("monomials from different presentations")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def sort_key(self):
        return self.exps

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        if len(self.exps) == 1:
            return str(self.exps[0])
        return ".".join(str(e) for e in self.exps)


def monomial_product(ms: Iterable[Monomial]) -> Monomial:
    ms = list(ms)
    if not ms:
        raise ValueError("a semigroup has no empty product")
    acc = ms[0]
    for m in ms[1:]:
        acc = acc * m
    return acc


@dataclass(frozen=True)
class Word:
    letters: tuple  # tuple of Monomials

    @classmethod
    def of(cls, *exps) -> "Word":
        return cls(tuple(Monomial(e if isinstance(e, tuple) else (e,)) for e in exps))

    @classmethod
    def empty(cls) -> "Word":
        return cls(())

    def __len__(self) -> int:
        return len(self.letters)

    def sort_key(self):
        return (len(self.letters), tuple(m.exps for m in self.letters))

    def __str__(self) -> str:
        return "[" + ",".join(str(m) for m in self.letters) + "]"


def enumerate_qsh(k: int, l: int) -> list:
    """All (k,l)-quasishuffle surjections [k+l] -> [m], increasing on
    [1..k] and on [k+1..k+l], as integer tuples."""
    if k < 0 or l < 0:
        raise ValueError("word lengths must be nonnegative")
    out = []
    for m in range(max(k, l), k + l + 1):
        positions = list(range(1, m + 1))
        for a in combinations(positions, k):
            for b in combinations(positions, l):
                if set(a) | set(b) != set(positions):
                    continue
                sigma = [0] * (k + l)
                for i, v in enumerate(a):
                    sigma[i] = v
                for j, v in enumerate(b):
                    sigma[k + j] = v
                out.append(tuple(sigma))
    out.sort()
    return out


def qsh_words(w1: Word, w2: Word) -> LinComb:
    """Quasishuffle of two basis words; shared fibers multiply in V."""
    k, l = len(w1), len(w2)
    letters = w1.letters + w2.letters
    out = []
    for sigma in enumerate_qsh(k, l):
        m = max(sigma) if sigma else 0
        fibers = [[] for _ in range(m)]
        for i, v in enumerate(sigma):
            fibers[v - 1].append(letters[i])
        out.append(
            (Word(tuple(monomial_product(f) for f in fibers)), 1)
        )
    return LinComb(out)


def qsh_product(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb.zero()
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            out = out + qsh_words(w1, w2) * (c1 * c2)
    return out


def deconcat(w: Word) -> LinComb:
    """Δ(v1…vn) = Σ v1…vk ⊗ v(k+1)…vn, n+1 terms."""
    out = []
    for i in range(len(w.letters) + 1):
        out.append(((Word(w.letters[:i]), Word(w.letters[i:])), 1))
    return LinComb(out)


def delta_word(w: Word) -> LinComb:
    """Interval-fusion coproduct on words with grouplike letters: each
    choice of cut positions contributes (fused intervals) ⊗ (⧢ of the
    interval words)."""
    k = len(w.letters)
    if k == 0:
        return LinComb.single((Word.empty(), Word.empty()))
    out = LinComb.zero()
    for r in range(k):
        for cuts in combinations(range(1, k), r):
            bounds = [0, *cuts, k]
            intervals = [
                w.letters[bounds[i] : bounds[i + 1]]
                for i in range(len(bounds) - 1)
            ]
            left = Word(tuple(monomial_product(iv) for iv in intervals))
            right = LinComb.single(Word.empty())
            for iv in intervals:
                right = qsh_product(right, LinComb.single(Word(iv)))
            out = out + LinComb.single(left).tensor(right)
    return out


def eps_delta_word(w: Word) -> Fraction:
    """Counit of δ: 1 on the unit and on single letters (ε_V = 1 on the
    grouplike basis), 0 on longer words."""
    return Fraction(1) if len(w.letters) <= 1 else Fraction(0)


# ---------------------------------------------------------------------------
# K preset: realization as the polynomial algebra


def _k_word(n: int) -> Word:
    return Word((Monomial(()),) * n)


def _k_power_matrix(n: int) -> list:
    """Row i: x^{⧢i} expanded in the word-length basis (index = length)."""
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    rows[0][0] = Fraction(1)
    power = LinComb.single(Word.empty())
    x = LinComb.single(_k_word(1))
    for i in range(1, n + 1):
        power = qsh_product(power, x)
        for w, c in power.terms.items():
            rows[i][len(w)] = c
    return rows


def kx_realize(p: LinComb, preset: Semigroup = K) -> dict:
    """Map a K-preset word combination to a polynomial in X (dict degree
    -> Fraction), under the isomorphism generated by x ↦ X and
    x^{⧢n} = n!·xⁿ + lower-order terms."""
    if preset.generators != 0:
        raise ValueError("kx_realize requires the K preset")
    degree = max((len(w) for w in p.terms), default=0)
    rows = _k_power_matrix(degree)
    # x^{⧢n} = Σ_k rows[n][k]·word_k with rows[n][n] = n!, and x^{⧢n}
    # realizes to X^n, so word_n = (X^n - Σ_{k<n} rows[n][k]·word_k)/n!
    word_poly: list = [dict() for _ in range(degree + 1)]
    for n in range(degree + 1):
        lead = rows[n][n]
        out: dict = {n: Fraction(1) / lead}
        for k in range(n):
            c = rows[n][k]
            if c == 0:
                continue
            for d, cd in word_poly[k].items():
                out[d] = out.get(d, Fraction(0)) - c / lead * cd
        word_poly[n] = {d: c for d, c in out.items() if c != 0}
    result: dict = {}
    for w, c in p.terms.items():
        for d, cd in word_poly[len(w)].items():
            result[d] = result.get(d, Fraction(0)) + c * cd
    return {d: c for d, c in sorted(result.items()) if c != 0}


def _join_signed(terms: list) -> str:
    """Render [(coeff, symbol), ...] as "a x - b x^2 ..."."""
    if not terms:
        return "0"
    chunks = []
    for c, sym in terms:
        mag = abs(c)
        body = sym if mag == 1 and sym != "1" else (
            str(mag) if sym == "1" else f"{mag} {sym}"
        )
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def poly_str(poly: dict) -> str:
    return _join_signed(
        [(poly[d], "1" if d == 0 else ("x" if d == 1 else f"x^{d}"))
         for d in sorted(poly)]
    )


def kx_words_str(p: LinComb) -> str:
    """Render a K-preset word combination in the power notation: the
    length-n word prints as x^n."""
    terms = []
    for w, c in p.items():
        n = len(w)
        terms.append((c, "1" if n == 0 else ("x" if n == 1 else f"x^{n}")))
    return _join_signed(terms)
