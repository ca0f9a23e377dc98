"""Set compositions: quasishuffle product, deconcatenation, and the
interval-fusion coproduct.

A set composition is an ordered sequence of nonempty disjoint blocks.
The quasishuffle C1 ⧢ C2 is the sum of all compositions of the union
restricting to C1 and C2; generated here by enumerate-and-filter,
matching the defining formula verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .lincomb import LinComb
from .partitions import check_label


@dataclass(frozen=True)
class SetComposition:
    blocks: tuple  # ordered tuple of frozensets

    def __post_init__(self):
        seen: set = set()
        blocks = []
        for b in self.blocks:
            fb = frozenset(b)
            if not fb:
                raise ValueError("empty block")
            if seen & fb:
                raise ValueError("blocks are not disjoint")
            seen |= fb
            blocks.append(fb)
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def of(cls, *blocks: Iterable[str]) -> "SetComposition":
        return cls(tuple(frozenset(b) for b in blocks))

    @property
    def ground(self) -> frozenset:
        out: set = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.blocks)

    def sort_key(self):
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(sorted(b)) + "}" for b in self.blocks) + ")"


def parse_composition(text: str) -> SetComposition:
    """Parse "({a,b},{c})"; "()" is the empty composition."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad composition literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return SetComposition(())
    blocks = []
    pos = 0
    while pos < len(inner):
        if inner[pos] != "{":
            raise ValueError(f"bad composition literal: {text!r}")
        end = inner.find("}", pos)
        if end < 0:
            raise ValueError(f"bad composition literal: {text!r}")
        labels = [check_label(x.strip()) for x in inner[pos + 1 : end].split(",")]
        blocks.append(frozenset(labels))
        pos = end + 1
        if pos < len(inner):
            if inner[pos] != ",":
                raise ValueError(f"bad composition literal: {text!r}")
            pos += 1
    return SetComposition(tuple(blocks))


def restrict_composition(c: SetComposition, sub: Iterable[str]) -> SetComposition:
    s = frozenset(sub)
    if not s <= c.ground:
        raise ValueError("restriction set is not contained in the ground set")
    return SetComposition(tuple(b & s for b in c.blocks if b & s))


@lru_cache(maxsize=None)
def _enumerate_compositions(g: frozenset) -> tuple:
    if not g:
        return (SetComposition(()),)
    items = sorted(g)
    out = []
    # choose the first block among all nonempty subsets, then recurse
    subsets = []
    for r in range(1, len(items) + 1):
        subsets.extend(frozenset(c) for c in combinations(items, r))
    for first in subsets:
        for rest in _enumerate_compositions(g - first):
            out.append(SetComposition((first,) + rest.blocks))
    out.sort(key=SetComposition.sort_key)
    return tuple(out)


def enumerate_compositions(ground: Iterable[str]) -> list:
    """All ordered set partitions of a finite set, deterministic order."""
    return list(_enumerate_compositions(frozenset(ground)))


@lru_cache(maxsize=None)
def _quasishuffle_pair(c1: SetComposition, c2: SetComposition) -> LinComb:
    out = []
    for c in _enumerate_compositions(c1.ground | c2.ground):
        if (
            restrict_composition(c, c1.ground) == c1
            and restrict_composition(c, c2.ground) == c2
        ):
            out.append((c, 1))
    return LinComb(out)


def quasishuffle_comp(c1: SetComposition, c2: SetComposition) -> LinComb:
    if c1.ground & c2.ground:
        raise ValueError("ground sets overlap")
    return _quasishuffle_pair(c1, c2)


def deconcat_comp(
    c: SetComposition, a: Iterable[str], b: Iterable[str]
) -> LinComb:
    """The unique prefix cut realizing the split, or zero."""
    sa, sb = frozenset(a), frozenset(b)
    if sa & sb or sa | sb != c.ground:
        raise ValueError("A, B must be a disjoint cover of the ground set")
    acc: set = set()
    for i in range(len(c.blocks) + 1):
        if acc == sa:
            return LinComb.single(
                (
                    SetComposition(c.blocks[:i]),
                    SetComposition(c.blocks[i:]),
                )
            )
        if i < len(c.blocks):
            acc = acc | c.blocks[i]
    return LinComb.zero()


def delta_comp(c: SetComposition) -> LinComb:
    """δ(C) = Σ over cut positions of (fused intervals) ⊗ (⧢ of the
    interval factors)."""
    k = len(c.blocks)
    if k == 0:
        empty = SetComposition(())
        return LinComb.single((empty, empty))
    out = LinComb.zero()
    cut_positions = list(range(1, k))
    for r in range(len(cut_positions) + 1):
        for cuts in combinations(cut_positions, r):
            bounds = [0, *cuts, k]
            intervals = [
                c.blocks[bounds[i] : bounds[i + 1]] for i in range(len(bounds) - 1)
            ]
            left = SetComposition(
                tuple(frozenset().union(*iv) for iv in intervals)
            )
            right = LinComb.single(SetComposition(()))
            for iv in intervals:
                right = right.map_basis(
                    lambda w, iv=iv: quasishuffle_comp(w, SetComposition(iv))
                )
            out = out + LinComb.single(left).tensor(right)
    return out


def eps_delta_comp(c: SetComposition):
    from fractions import Fraction

    return Fraction(1) if len(c.blocks) <= 1 else Fraction(0)
