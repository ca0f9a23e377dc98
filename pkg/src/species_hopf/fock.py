"""V-coloured bosonic Fock functor on graphs.

Coinvariant classes are realized by canonical representatives: a
decorated graph is stored on vertex labels "1".."n" in the minimal
encoding over all simultaneous relabelings of graph and decoration
sequence, so equality of classes is structural equality and sums
collect automatically.

Decorations are grouplike monomials (see quasishuffle.Semigroup), so in
every Sweedler expansion v' = v'' = v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import (
    Graph,
    canonical_form,
    connected_partitions,
    contract,
    induced_subgraph,
    restrict_edges,
    split_block_label,
)
from .lincomb import LinComb
from .partitions import SetPartition
from .quasishuffle import monomial_product


@dataclass(frozen=True)
class DecoratedGraph:
    """Canonical S_n-coinvariant class: graph on {"1",...,"n"} plus one
    monomial per vertex (index i decorates vertex str(i+1))."""

    graph: Graph
    decorations: tuple  # tuple of Monomials

    def __post_init__(self):
        n = len(self.decorations)
        want = frozenset(str(i) for i in range(1, n + 1))
        if self.graph.vertices != want:
            raise ValueError("vertices must be 1..n matching the decorations")

    @classmethod
    def empty(cls) -> "DecoratedGraph":
        return cls(Graph.empty(), ())

    @property
    def size(self) -> int:
        return len(self.decorations)

    def decoration_map(self) -> dict:
        return {str(i + 1): m for i, m in enumerate(self.decorations)}

    def sort_key(self):
        return (
            self.graph.sort_key(),
            tuple(m.exps for m in self.decorations),
        )

    def __str__(self) -> str:
        return f"{self.graph}[{','.join(str(m) for m in self.decorations)}]"


def class_of(
    g: Graph, decorations: dict, bound: Optional[int] = None
) -> DecoratedGraph:
    """Canonical coinvariant class of a labeled decorated graph."""
    cg, decs, _ = canonical_form(g, decorations, bound=bound)
    return DecoratedGraph(cg, decs)


def fock_product(a: LinComb, b: LinComb) -> LinComb:
    """Disjoint union of classes: shift the second factor's labels."""
    out = LinComb.zero()
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            k = da.size
            verts = set(da.graph.vertices)
            edges = set(da.graph.edges)
            decs = dict(da.decoration_map())
            for i in range(1, db.size + 1):
                verts.add(str(k + i))
                decs[str(k + i)] = db.decorations[i - 1]
            for u, v in db.graph.edges:
                edges.add((str(k + int(u)), str(k + int(v))))
            merged = Graph.make(verts, edges)
            out = out + LinComb.single(class_of(merged, decs), ca * cb)
    return out


def fock_coproduct(d: DecoratedGraph) -> LinComb:
    """Δ = sum over all 2ⁿ vertex splits of canonicalized induced halves;
    multiplicities are emergent from class collection."""
    from .partitions import splits_of

    decs = d.decoration_map()
    out = LinComb.zero()
    for a, b in splits_of(d.graph.vertices):
        left = class_of(induced_subgraph(d.graph, a), {v: decs[v] for v in a})
        right = class_of(induced_subgraph(d.graph, b), {v: decs[v] for v in b})
        out = out + LinComb.single((left, right))
    return out


def fock_delta(d: DecoratedGraph) -> LinComb:
    """δ = Σ over connected partitions of (contracted class, decorations
    multiplied per block) ⊗ (edge-restricted class, decorations kept)."""
    decs = d.decoration_map()
    out = LinComb.zero()
    for p in connected_partitions(d.graph):
        cg = contract(d.graph, p)
        cdecs = {
            v: monomial_product(decs[x] for x in sorted(split_block_label(v)))
            for v in cg.vertices
        }
        left = class_of(cg, cdecs)
        right = class_of(restrict_edges(d.graph, p), decs)
        out = out + LinComb.single((left, right))
    return out


def fock_counits(d: DecoratedGraph):
    """(ε_Δ, ε_δ): the empty-class indicator, and the edgeless indicator
    (ε_V = 1 on the grouplike basis)."""
    eps_D = Fraction(1) if d.size == 0 else Fraction(0)
    eps_d = Fraction(1) if not d.graph.edges else Fraction(0)
    return eps_D, eps_d


def coaction_rho(d: DecoratedGraph) -> LinComb:
    """V-coaction: grouplike decorations give a single term, the class
    itself tensored with the product of all its decorations."""
    if d.size == 0:
        return LinComb.zero()  # the coaction of V has no unit to emit
    total = monomial_product(d.decorations)
    return LinComb.single((d, total))


# ---------------------------------------------------------------------------
# Partitioned decorated classes and the projection π


@dataclass(frozen=True)
class DecoratedPartitionedGraph:
    """Canonical class of a partitioned graph over ground {"1".."n"} with
    one monomial per ground element. The graph's vertices are the
    comma-joined block labels of the partition."""

    graph: Graph
    decorations: tuple  # per ground element 1..n

    def __post_init__(self):
        n = len(self.decorations)
        ground: set = set()
        for v in self.graph.vertices:
            parts = split_block_label(v)
            if ground & parts:
                raise ValueError("vertex blocks are not disjoint")
            ground |= parts
        if ground != {str(i) for i in range(1, n + 1)}:
            raise ValueError("ground must be 1..n matching the decorations")

    @property
    def size(self) -> int:
        return len(self.decorations)

    def decoration_map(self) -> dict:
        return {str(i + 1): m for i, m in enumerate(self.decorations)}

    def partition(self) -> SetPartition:
        return SetPartition.from_blocks(
            split_block_label(v) for v in self.graph.vertices
        )

    def sort_key(self):
        return (
            self.graph.sort_key(),
            tuple(m.exps for m in self.decorations),
        )

    def __str__(self) -> str:
        return f"{self.graph}[{','.join(str(m) for m in self.decorations)}]"


def pclass_of(
    graph: Graph, decorations: dict, bound: Optional[int] = None
) -> DecoratedPartitionedGraph:
    """Canonical class of a labeled partitioned decorated graph: minimize
    over all relabelings of the ground set. ``decorations`` is keyed by
    ground element."""
    from itertools import permutations

    ground = sorted(decorations)
    n = len(ground)
    from .graphs import canon_bound

    limit = bound if bound is not None else canon_bound()
    if n > limit:
        raise ValueError("canonicalization bound exceeded")
    best = None
    for perm in permutations(range(1, n + 1)):
        relabel = {x: str(perm[i]) for i, x in enumerate(ground)}
        new_vertices = {}
        for v in graph.vertices:
            parts = sorted(relabel[x] for x in split_block_label(v))
            new_vertices[v] = ",".join(sorted(parts))
        edges = frozenset(
            tuple(sorted((new_vertices[u], new_vertices[v])))
            for u, v in graph.edges
        )
        blocks = tuple(
            sorted(
                tuple(sorted(int(x) for x in split_block_label(nv)))
                for nv in new_vertices.values()
            )
        )
        inv = {relabel[x]: x for x in ground}
        decs = tuple(decorations[inv[str(i)]] for i in range(1, n + 1))
        key = (
            blocks,
            tuple(sorted(tuple(sorted(e)) for e in edges)),
            tuple(m.exps for m in decs),
        )
        if best is None or key < best[0]:
            g2 = Graph(frozenset(new_vertices.values()), edges)
            best = (key, g2, decs)
    if best is None:
        return DecoratedPartitionedGraph(Graph.empty(), ())
    return DecoratedPartitionedGraph(best[1], best[2])


def pi_project(dp: DecoratedPartitionedGraph) -> LinComb:
    """Collapse each block to one vertex decorated by the product of its
    members' monomials."""
    decs = dp.decoration_map()
    verts = sorted(dp.graph.vertices)
    new_decs = {
        v: monomial_product(decs[x] for x in sorted(split_block_label(v)))
        for v in verts
    }
    return LinComb.single(class_of(dp.graph, new_decs))


def pfock_product(a: LinComb, b: LinComb) -> LinComb:
    """Product on partitioned decorated classes: shift + disjoint union."""
    out = LinComb.zero()
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            k = da.size
            decs = {str(i + 1): m for i, m in enumerate(da.decorations)}
            verts = set(da.graph.vertices)
            edges = set(da.graph.edges)
            shift = {}
            for i in range(1, db.size + 1):
                shift[str(i)] = str(k + i)
                decs[str(k + i)] = db.decorations[i - 1]
            vmap = {}
            for v in db.graph.vertices:
                nv = ",".join(sorted(shift[x] for x in split_block_label(v)))
                vmap[v] = nv
                verts.add(nv)
            for u, v in db.graph.edges:
                edges.add(tuple(sorted((vmap[u], vmap[v]))))
            out = out + LinComb.single(
                pclass_of(Graph.make(verts, edges), decs), ca * cb
            )
    return out


def pfock_coproduct(dp: DecoratedPartitionedGraph) -> LinComb:
    """Δ' on partitioned classes: sum over splits of the block set."""
    from itertools import product as iproduct

    decs = dp.decoration_map()
    verts = sorted(dp.graph.vertices)
    out = LinComb.zero()
    for mask in iproduct((0, 1), repeat=len(verts)):
        a = frozenset(v for v, m in zip(verts, mask) if m == 0)
        b = frozenset(v for v, m in zip(verts, mask) if m == 1)
        left = pclass_of(
            induced_subgraph(dp.graph, a),
            {x: decs[x] for v in a for x in split_block_label(v)},
        )
        right = pclass_of(
            induced_subgraph(dp.graph, b),
            {x: decs[x] for v in b for x in split_block_label(v)},
        )
        out = out + LinComb.single((left, right))
    return out


def pfock_delta(dp: DecoratedPartitionedGraph) -> LinComb:
    """δ' on partitioned classes: extraction-contraction over the
    coarsenings of the stored partition (grouplike decorations pass
    through unchanged on both legs)."""
    decs = dp.decoration_map()
    out = LinComb.zero()
    for p in connected_partitions(dp.graph):
        left = pclass_of(contract(dp.graph, p), decs)
        right = pclass_of(restrict_edges(dp.graph, p), decs)
        out = out + LinComb.single((left, right))
    return out


def embed_plain(d: DecoratedGraph) -> DecoratedPartitionedGraph:
    """A plain decorated class as a partitioned class with the discrete
    partition."""
    return DecoratedPartitionedGraph(d.graph, d.decorations)
