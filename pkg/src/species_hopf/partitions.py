"""Finite label sets, set partitions, the refinement order, quotients.

Order convention (kept verbatim from the source material despite being
counterintuitive): p <= q means p is COARSER than q, i.e. every block of
q sits inside a block of p. ``refines(p, q)`` implements exactly that
test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

_FORBIDDEN = set(",|{}();~ \t\n")


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"invalid label: {label!r}")
    bad = set(label) & _FORBIDDEN
    if bad:
        raise ValueError(f"label {label!r} contains forbidden characters {sorted(bad)}")
    return label


def block_label(block: Iterable[str]) -> str:
    """Comma-join sorted labels of a block; nested labels are flattened.

    Flattening realizes the identification of iterated quotients: a label
    that is already comma-joined re-splits before re-sorting.
    """
    parts = set()
    for lbl in block:
        parts.update(lbl.split(","))
    if not parts:
        raise ValueError("empty block has no label")
    return ",".join(sorted(parts))


def split_block_label(label: str) -> frozenset:
    return frozenset(label.split(","))


@dataclass(frozen=True)
class SetPartition:
    """Equivalence relation on a finite label set, as disjoint blocks."""

    blocks: tuple  # tuple of frozensets, sorted by min element

    def __post_init__(self):
        seen = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks are not disjoint")
            seen |= b
        ordered = tuple(sorted((frozenset(b) for b in self.blocks), key=lambda b: min(b)))
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[str]]) -> "SetPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def discrete(cls, ground: Iterable[str]) -> "SetPartition":
        return cls(tuple(frozenset([x]) for x in ground))

    @classmethod
    def single_block(cls, ground: Iterable[str]) -> "SetPartition":
        g = frozenset(ground)
        return cls((g,) if g else ())

    @property
    def ground(self) -> frozenset:
        out: set = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def block_of(self, x: str) -> frozenset:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def sort_key(self):
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + "|".join(",".join(sorted(b)) for b in self.blocks) + "}"


def parse_partition(text: str) -> SetPartition:
    """Parse the "{a,b|c}" grammar; "{}" is the empty partition."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad partition literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return SetPartition(())
    blocks = []
    for chunk in inner.split("|"):
        labels = [check_label(x.strip()) for x in chunk.split(",")]
        blocks.append(frozenset(labels))
    return SetPartition.from_blocks(blocks)


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    if n == 0:
        return 1
    return sum(
        __import__("math").comb(n - 1, k) * bell_number(k) for k in range(n)
    )


def enumerate_partitions(ground: Iterable[str]) -> list:
    """All Bell(|X|) partitions, via restricted-growth strings over the
    sorted ground set. Deterministic order, no duplicates."""
    labels = sorted(set(ground))
    n = len(labels)
    if n == 0:
        return [SetPartition(())]
    out = []

    def grow(i: int, rgs: list, maxval: int):
        if i == n:
            nblocks = maxval + 1
            blocks = [set() for _ in range(nblocks)]
            for j, v in enumerate(rgs):
                blocks[v].add(labels[j])
            out.append(SetPartition.from_blocks(blocks))
            return
        for v in range(maxval + 2):
            grow(i + 1, rgs + [v], max(maxval, v))

    grow(1, [0], 0)
    return out


def refines(p: SetPartition, q: SetPartition) -> bool:
    """p <= q in the coarsening convention: every block of q lies inside
    some block of p."""
    if p.ground != q.ground:
        raise ValueError("ground mismatch")
    return all(any(bq <= bp for bp in p.blocks) for bq in q.blocks)


def quotient_set(ground: Iterable[str], p: SetPartition) -> frozenset:
    g = frozenset(ground)
    if p.ground != g:
        raise ValueError("partition does not cover the given set")
    return frozenset(block_label(b) for b in p.blocks)


def restrict_partition(p: SetPartition, sub: Iterable[str]) -> SetPartition:
    s = frozenset(sub)
    if not s <= p.ground:
        raise ValueError("restriction set is not contained in the ground set")
    return SetPartition(tuple(b & s for b in p.blocks if b & s))


def disjoint_union_partition(p: SetPartition, q: SetPartition) -> SetPartition:
    if p.ground & q.ground:
        raise ValueError("ground sets overlap")
    return SetPartition(p.blocks + q.blocks)


def coarsenings_below(p: SetPartition) -> list:
    """All q on the same ground with refines(q, p): merge whole blocks of
    p. Count = Bell(#blocks)."""
    items = list(p.blocks)
    out = []
    for grouping in _partitions_of_list(items):
        out.append(
            SetPartition(tuple(frozenset().union(*grp) for grp in grouping))
        )
    return out


def _partitions_of_list(items: list) -> list:
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for sub in _partitions_of_list(rest):
        for i in range(len(sub)):
            out.append(sub[:i] + [[head] + sub[i]] + sub[i + 1 :])
        out.append([[head]] + sub)
    return out


def splits_of(ground: Iterable[str]):
    """All ordered disjoint covers (A, B) of a finite set."""
    labels = sorted(set(ground))
    for mask in itertools.product((0, 1), repeat=len(labels)):
        a = frozenset(l for l, m in zip(labels, mask) if m == 0)
        b = frozenset(l for l, m in zip(labels, mask) if m == 1)
        yield a, b
