"""Simple graphs on labeled vertex sets.

Vertex names are plain labels, or comma-joined block labels when the
graph arose from a contraction (its vertices then form a partition of an
underlying ground set). Contraction silently drops loops and merges
parallel edges.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .partitions import (
    SetPartition,
    block_label,
    enumerate_partitions,
    split_block_label,
)

DEFAULT_CANON_BOUND = 8


def canon_bound() -> int:
    env = os.environ.get("SPECIES_HOPF_MAXN")
    return int(env) if env else DEFAULT_CANON_BOUND


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset  # frozenset of 2-tuples with sorted endpoints

    def __post_init__(self):
        verts = frozenset(self.vertices)
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in verts or v not in verts:
                raise ValueError(f"edge {e!r} leaves the vertex set")
            edges.add(tuple(sorted((u, v))))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def make(cls, vertices: Iterable[str], edges: Iterable = ()) -> "Graph":
        return cls(frozenset(vertices), frozenset(tuple(e) for e in edges))

    @classmethod
    def empty(cls) -> "Graph":
        return cls(frozenset(), frozenset())

    def sort_key(self):
        return (
            tuple(sorted(self.vertices)),
            tuple(sorted(self.edges)),
        )

    def __str__(self) -> str:
        vs = ";".join(sorted(self.vertices))
        es = ",".join(f"{u}~{v}" for u, v in sorted(self.edges))
        return "{" + vs + (":" + es if es else "") + "}"

    def has_edge(self, u: str, v: str) -> bool:
        return tuple(sorted((u, v))) in self.edges


def induced_subgraph(g: Graph, sub: Iterable[str]) -> Graph:
    s = frozenset(sub)
    if not s <= g.vertices:
        raise ValueError("induced set is not contained in the vertex set")
    return Graph(s, frozenset(e for e in g.edges if e[0] in s and e[1] in s))


def restrict_edges(g: Graph, p: SetPartition) -> Graph:
    """Keep exactly the edges whose two endpoints share a block."""
    if p.ground != g.vertices:
        raise ValueError("ground mismatch")
    keep = frozenset(e for e in g.edges if p.block_of(e[0]) == p.block_of(e[1]))
    return Graph(g.vertices, keep)


def contract(g: Graph, p: SetPartition) -> Graph:
    """Merge each block to one vertex (comma-joined label, flattened);
    drop loops and duplicate edges."""
    if p.ground != g.vertices:
        raise ValueError("ground mismatch")
    label_of = {}
    for b in p.blocks:
        lbl = block_label(b)
        for v in b:
            label_of[v] = lbl
    new_edges = set()
    for u, v in g.edges:
        lu, lv = label_of[u], label_of[v]
        if lu != lv:
            new_edges.add(tuple(sorted((lu, lv))))
    return Graph(frozenset(label_of.values()), frozenset(new_edges))


def connected_components(g: Graph) -> SetPartition:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps: dict = {}
    for v in g.vertices:
        comps.setdefault(find(v), set()).add(v)
    return SetPartition.from_blocks(comps.values())


def is_connected(g: Graph) -> bool:
    if not g.vertices:
        return True
    return len(connected_components(g).blocks) == 1


def connected_partitions(g: Graph) -> list:
    """All partitions of V(G) whose every block induces a connected
    subgraph. Enumerate-then-filter; deterministic order."""
    out = []
    for p in enumerate_partitions(g.vertices):
        if all(is_connected(induced_subgraph(g, b)) for b in p.blocks):
            out.append(p)
    return out


def canonical_form(
    g: Graph,
    decorations: Optional[dict] = None,
    bound: Optional[int] = None,
):
    """Minimal encoding of (graph, decorations) over all relabelings to
    {"1",...,"n"}. Returns (graph, decoration sequence or None, the
    relabeling map used). Two inputs agree iff they differ by a
    decoration-preserving isomorphism."""
    limit = bound if bound is not None else canon_bound()
    verts = sorted(g.vertices)
    n = len(verts)
    if n > limit:
        raise ValueError("canonicalization bound exceeded")
    if decorations is not None and set(decorations) != set(verts):
        raise ValueError("decoration keys must equal the vertex set")
    best = None
    for perm in permutations(range(1, n + 1)):
        relabel = {v: str(perm[i]) for i, v in enumerate(verts)}
        edges = tuple(
            sorted(
                tuple(sorted((int(relabel[u]), int(relabel[v]))))
                for u, v in g.edges
            )
        )
        if decorations is None:
            decs = None
            key = (edges,)
        else:
            inv = {int(relabel[v]): v for v in verts}
            decs = tuple(decorations[inv[i]] for i in range(1, n + 1))
            key = (edges, tuple(d.sort_key() for d in decs))
        if best is None or key < best[0]:
            best = (key, edges, decs, relabel)
    if best is None:  # n == 0
        return Graph.empty(), (None if decorations is None else ()), {}
    _, edges, decs, relabel = best
    cg = Graph.make(
        [str(i) for i in range(1, n + 1)],
        [(str(u), str(v)) for u, v in edges],
    )
    return cg, decs, relabel


def all_graphs(ground: Iterable[str]) -> list:
    """Every simple graph on the given vertex set, deterministic order."""
    verts = sorted(set(ground))
    pairs = list(combinations(verts, 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        out.append(Graph.make(verts, edges))
    out.sort(key=Graph.sort_key)
    return out


def pgraph_ground(g: Graph) -> frozenset:
    """Underlying ground set of a graph whose vertices are block labels."""
    out: set = set()
    for v in g.vertices:
        parts = split_block_label(v)
        if out & parts:
            raise ValueError("vertex blocks are not disjoint")
        out |= parts
    return frozenset(out)


def pgraph_partition(g: Graph) -> SetPartition:
    """The partition of the ground set encoded by a block-label graph."""
    return SetPartition.from_blocks(split_block_label(v) for v in g.vertices)


def graph_to_json(g: Graph, decorations: Optional[dict] = None) -> str:
    obj: dict = {
        "vertices": sorted(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }
    if decorations is not None:
        obj["decorations"] = {
            v: list(decorations[v].exps) for v in sorted(decorations)
        }
    return json.dumps(obj)


def graph_from_json(text: str):
    """Parse the graph JSON schema; returns (Graph, decorations or None).

    Decorations are exponent vectors, resolved to monomials by the
    caller's active semigroup preset."""
    obj = json.loads(text)
    g = Graph.make(obj["vertices"], [tuple(e) for e in obj.get("edges", [])])
    decs = obj.get("decorations")
    if decs is not None:
        decs = {v: tuple(e) for v, e in decs.items()}
        ground = set()
        for v in g.vertices:
            ground |= split_block_label(v)
        if set(decs) != set(g.vertices) and set(decs) != ground:
            raise ValueError(
                "decoration keys must equal the vertex set or the ground set"
            )
    return g, decs
