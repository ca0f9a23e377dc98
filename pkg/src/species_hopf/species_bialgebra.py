"""Twisted bialgebra operations on graphs and partitioned graphs.

Product = disjoint union, Δ = induced-subgraph splits, and the
extraction-contraction coproduct δ_∼(G) = G/∼ ⊗ G|∼ when every block of
∼ induces a connected subgraph (zero otherwise). A "partitioned graph"
is represented as a Graph whose vertices are comma-joined block labels
of a partition of the underlying ground set; iterated quotients flatten
by the comma convention, making the nested-quotient identification a
literal string operation.

The check_* functions verify the compatibility axioms exhaustively over
every graph basis element and every partition below a size bound; each
accepts an injectable per-partition coproduct so mutation tests can
demonstrate that the axioms genuinely constrain the definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .graphs import (
    Graph,
    all_graphs,
    connected_partitions,
    contract,
    induced_subgraph,
    is_connected,
    pgraph_partition,
    restrict_edges,
)
from .lincomb import LinComb
from .partitions import (
    SetPartition,
    block_label,
    enumerate_partitions,
    quotient_set,
    refines,
    restrict_partition,
    splits_of,
)

CHECK_BOUND = 4


def product_m(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear disjoint union. Errors if any pair of basis graphs share
    vertex labels."""
    out = []
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            if g.vertices & h.vertices:
                raise ValueError("non-disjoint supports")
            out.append(
                (Graph(g.vertices | h.vertices, g.edges | h.edges), cg * ch)
            )
    return LinComb(out)


def graph_product(*graphs: Graph) -> Graph:
    acc = Graph.empty()
    for g in graphs:
        if acc.vertices & g.vertices:
            raise ValueError("non-disjoint supports")
        acc = Graph(acc.vertices | g.vertices, acc.edges | g.edges)
    return acc


def coproduct_delta_AB(g: Graph, a: Iterable[str], b: Iterable[str]) -> LinComb:
    """Δ_{A,B}(G) = G|_A ⊗ G|_B for a disjoint cover A ⊔ B = V(G)."""
    sa, sb = frozenset(a), frozenset(b)
    if sa & sb or sa | sb != g.vertices:
        raise ValueError("A, B must be a disjoint cover of the vertex set")
    return LinComb.single((induced_subgraph(g, sa), induced_subgraph(g, sb)))


def coproduct_delta_AB_prime(
    h: Graph, a: Iterable[str], b: Iterable[str]
) -> LinComb:
    """Δ'_{A,B} on a partitioned graph: zero unless every vertex block
    lies inside A or inside B."""
    sa, sb = frozenset(a), frozenset(b)
    ground = pgraph_partition(h).ground
    if sa & sb or sa | sb != ground:
        raise ValueError("A, B must be a disjoint cover of the ground set")
    va, vb = set(), set()
    for v in h.vertices:
        parts = frozenset(v.split(","))
        if parts <= sa:
            va.add(v)
        elif parts <= sb:
            vb.add(v)
        else:
            return LinComb.zero()
    return LinComb.single((induced_subgraph(h, va), induced_subgraph(h, vb)))


def extraction_contraction(g: Graph, p: SetPartition) -> LinComb:
    """δ_∼(G) = G/∼ ⊗ G|∼ if every block of ∼ induces a connected
    subgraph of G, 0 otherwise."""
    if p.ground != g.vertices:
        raise ValueError("ground mismatch")
    if not all(is_connected(induced_subgraph(g, b)) for b in p.blocks):
        return LinComb.zero()
    return LinComb.single((contract(g, p), restrict_edges(g, p)))


def extraction_contraction_nofilter(g: Graph, p: SetPartition) -> LinComb:
    """Mutant δ without the connectedness filter; exists only so the
    negative-control tests can show the axioms fail without it."""
    if p.ground != g.vertices:
        raise ValueError("ground mismatch")
    return LinComb.single((contract(g, p), restrict_edges(g, p)))


def full_delta(g: Graph, delta_fn: Callable = extraction_contraction) -> LinComb:
    """δ(G) = Σ_∼ δ_∼(G) over all partitions of V(G); the left tensor
    legs land in the partitioned-graph species."""
    acc = LinComb.zero()
    for p in enumerate_partitions(g.vertices):
        acc = acc + delta_fn(g, p)
    return acc


def delta_prime(h: Graph) -> LinComb:
    """δ' on a partitioned graph: sum of extraction-contractions over the
    coarsenings of its partition. Via the comma-flattening convention
    this is the full δ of the block-label graph."""
    pgraph_partition(h)  # validates the block structure
    return full_delta(h)


def counit_eps_delta(g: Graph) -> Fraction:
    return Fraction(1) if not g.edges else Fraction(0)


def coaction_rho(
    a: LinComb, b: LinComb, delta_fn: Callable = extraction_contraction
) -> LinComb:
    """ρ_{X,Y} = m_{1,3,24} ∘ (δ ⊗ δ) on a pair of graph combinations
    with disjoint supports. Terms are triples (contracted left leg,
    contracted right leg, product of the two restricted legs)."""
    out = LinComb.zero()
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            if g.vertices & h.vertices:
                raise ValueError("non-disjoint supports")
            dg = full_delta(g, delta_fn)
            dh = full_delta(h, delta_fn)
            for (g1, g2), c1 in dg.terms.items():
                for (h1, h2), c2 in dh.terms.items():
                    out = out + LinComb.single(
                        (g1, h1, graph_product(g2, h2)),
                        cg * ch * c1 * c2,
                    )
    return out


@dataclass(frozen=True)
class CheckResult:
    axiom: str
    x: tuple
    y: tuple
    cases: int
    passed: bool
    counterexample: Optional[str] = None

    def row(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        base = (
            f"{self.axiom:<24} X={{{','.join(self.x)}}} "
            f"Y={{{','.join(self.y)}}} cases={self.cases} {status}"
        )
        if self.counterexample:
            base += f"  counterexample: {self.counterexample}"
        return base


def coproduct_delta_AB_prime_nosplit(
    h: Graph, a: Iterable[str], b: Iterable[str]
) -> LinComb:
    """Mutant Δ' without the block-compatibility filter: a straddling
    block falls to the side holding its minimum element. Exists only so
    the negative-control tests can show the filter is load-bearing."""
    sa, sb = frozenset(a), frozenset(b)
    ground = pgraph_partition(h).ground
    if sa & sb or sa | sb != ground:
        raise ValueError("A, B must be a disjoint cover of the ground set")
    va, vb = set(), set()
    for v in h.vertices:
        parts = frozenset(v.split(","))
        if parts <= sa:
            va.add(v)
        elif parts <= sb:
            vb.add(v)
        elif min(parts) in sa:
            va.add(v)
        else:
            vb.add(v)
    return LinComb.single((induced_subgraph(h, va), induced_subgraph(h, vb)))


def check_coproduct_prime(
    ground: Iterable[str],
    dprime_fn: Callable = coproduct_delta_AB_prime,
    bound: int = CHECK_BOUND,
) -> CheckResult:
    """Δ'_{A,B} lands in P'[A] ⊗ P'[B] (component targeting), and is
    twisted-coassociative over ordered triple covers (A, B, C)."""
    labels = tuple(sorted(set(ground)))
    if len(labels) > bound:
        raise ValueError("check bound exceeded")
    pgraphs = []
    for p in enumerate_partitions(labels):
        for h in all_graphs(quotient_set(labels, p)):
            pgraphs.append(h)
    cases = 0
    for h in pgraphs:
        for a, b in splits_of(labels):
            cases += 1
            for (h1, h2), _ in dprime_fn(h, a, b).terms.items():
                g1 = frozenset(x for v in h1.vertices for x in v.split(","))
                g2 = frozenset(x for v in h2.vertices for x in v.split(","))
                if g1 != a or g2 != b:
                    return CheckResult(
                        "components(Δ')", labels, (), cases, False,
                        f"H={h} A={{{','.join(sorted(a))}}} "
                        f"B={{{','.join(sorted(b))}}}: legs {h1} ⊗ {h2} "
                        "miss their components",
                    )
    for h in pgraphs:
        for a, b0 in splits_of(labels):
            for b, c in splits_of(b0):
                cases += 1
                lhs = LinComb.zero()
                for (h1, h2), k in dprime_fn(h, a | b, c).terms.items():
                    lhs = lhs + dprime_fn(h1, a, b).tensor(
                        LinComb.single(h2)
                    ) * k
                rhs = LinComb.zero()
                for (h1, h2), k in dprime_fn(h, a, b | c).terms.items():
                    rhs = rhs + LinComb.single(h1).tensor(
                        dprime_fn(h2, b, c)
                    ) * k
                if lhs != rhs:
                    return CheckResult(
                        "coassociativity(Δ')", labels, (), cases, False,
                        f"H={h} A={sorted(a)} B={sorted(b)} C={sorted(c)}: "
                        f"{lhs} != {rhs}",
                    )
    return CheckResult("coassociativity(Δ')", labels, (), cases, True)


def _induced_quotient_partition(p: SetPartition, q: SetPartition) -> SetPartition:
    """For p coarser than q: the partition of the block labels of q whose
    classes correspond to the blocks of p."""
    groups: dict = {}
    for bq in q.blocks:
        bp = p.block_of(min(bq))
        groups.setdefault(bp, set()).add(block_label(bq))
    return SetPartition.from_blocks(groups.values())


def check_coassociativity_delta(
    ground: Iterable[str],
    delta_fn: Callable = extraction_contraction,
    bound: int = CHECK_BOUND,
) -> CheckResult:
    """For p coarser than q: (δ_p ⊗ Id)∘δ_q = (Id ⊗ δ_q)∘δ_p, and for
    incomparable pairs the composite vanishes."""
    labels = tuple(sorted(set(ground)))
    if len(labels) > bound:
        raise ValueError("check bound exceeded")
    parts = enumerate_partitions(labels)
    cases = 0
    for g in all_graphs(labels):
        for q in parts:
            dq = delta_fn(g, q)
            for p in parts:
                cases += 1
                if refines(p, q):
                    lhs = LinComb.zero()
                    pbar = _induced_quotient_partition(p, q)
                    for (g1, g2), c in dq.terms.items():
                        lhs = lhs + delta_fn(g1, pbar).tensor(
                            LinComb.single(g2)
                        ) * c
                    rhs = LinComb.zero()
                    for (g1, g2), c in delta_fn(g, p).terms.items():
                        rhs = rhs + LinComb.single(g1).tensor(
                            delta_fn(g2, q)
                        ) * c
                    if lhs != rhs:
                        return CheckResult(
                            "coassociativity(δ)", labels, (), cases, False,
                            f"G={g} p={p} q={q}: {lhs} != {rhs}",
                        )
                else:
                    # (Id ⊗ δ_q)∘δ_p must vanish when p is not coarser than q
                    comp = LinComb.zero()
                    for (g1, g2), c in delta_fn(g, p).terms.items():
                        comp = comp + LinComb.single(g1).tensor(
                            delta_fn(g2, q)
                        ) * c
                    if not comp.is_zero():
                        return CheckResult(
                            "coassociativity(δ)", labels, (), cases, False,
                            f"G={g} p={p} q={q}: expected 0, got {comp}",
                        )
    return CheckResult("coassociativity(δ)", labels, (), cases, True)


def check_counit(
    ground: Iterable[str],
    delta_fn: Callable = extraction_contraction,
    eps_fn: Callable = counit_eps_delta,
    bound: int = CHECK_BOUND,
) -> CheckResult:
    labels = tuple(sorted(set(ground)))
    if len(labels) > bound:
        raise ValueError("check bound exceeded")
    parts = enumerate_partitions(labels)
    discrete = SetPartition.discrete(labels)
    cases = 0
    for g in all_graphs(labels):
        for p in parts:
            cases += 1
            side = LinComb.zero()
            for (g1, g2), c in delta_fn(g, p).terms.items():
                side = side + LinComb.single(g1) * (c * eps_fn(g2))
            want = LinComb.single(g) if p == discrete else LinComb.zero()
            if side != want:
                return CheckResult(
                    "counit(ε_δ, right)", labels, (), cases, False,
                    f"G={g} p={p}: {side} != {want}",
                )
        cases += 1
        total = LinComb.zero()
        for p in parts:
            for (g1, g2), c in delta_fn(g, p).terms.items():
                total = total + LinComb.single(g2) * (c * eps_fn(g1))
        if total != LinComb.single(g):
            return CheckResult(
                "counit(ε_δ, left-sum)", labels, (), cases, False,
                f"G={g}: {total} != {g}",
            )
    return CheckResult("counit(ε_δ)", labels, (), cases, True)


def check_product_compat(
    ground_x: Iterable[str],
    ground_y: Iterable[str],
    delta_fn: Callable = extraction_contraction,
    bound: int = CHECK_BOUND,
) -> CheckResult:
    """δ_∼ ∘ m = (m ⊗ m)∘(Id ⊗ c ⊗ Id)∘(δ_{∼_X} ⊗ δ_{∼_Y}) when
    ∼ = ∼_X ⊔ ∼_Y, zero otherwise."""
    lx = tuple(sorted(set(ground_x)))
    ly = tuple(sorted(set(ground_y)))
    if set(lx) & set(ly):
        raise ValueError("ground sets overlap")
    if len(lx) + len(ly) > bound:
        raise ValueError("check bound exceeded")
    union = tuple(sorted(lx + ly))
    cases = 0
    for g in all_graphs(lx):
        for h in all_graphs(ly):
            gh = graph_product(g, h)
            for p in enumerate_partitions(union):
                cases += 1
                lhs = delta_fn(gh, p)
                split = all(b <= set(lx) or b <= set(ly) for b in p.blocks)
                if not split:
                    rhs = LinComb.zero()
                else:
                    px = restrict_partition(p, lx)
                    py = restrict_partition(p, ly)
                    rhs = LinComb.zero()
                    for (g1, g2), c1 in delta_fn(g, px).terms.items():
                        for (h1, h2), c2 in delta_fn(h, py).terms.items():
                            rhs = rhs + LinComb.single(
                                (graph_product(g1, h1), graph_product(g2, h2)),
                                c1 * c2,
                            )
                if lhs != rhs:
                    return CheckResult(
                        "product-compat(δ,m)", lx, ly, cases, False,
                        f"G={g} H={h} p={p}: {lhs} != {rhs}",
                    )
    return CheckResult("product-compat(δ,m)", lx, ly, cases, True)


def check_coproduct_compat(
    ground_x: Iterable[str],
    ground_y: Iterable[str],
    delta_fn: Callable = extraction_contraction,
    bound: int = CHECK_BOUND,
) -> CheckResult:
    """(Δ_{X/∼_X, Y/∼_Y} ⊗ Id)∘δ_{∼_X ⊔ ∼_Y} = m_{1,3,24}∘(δ_{∼_X} ⊗
    δ_{∼_Y})∘Δ_{X,Y}."""
    lx = tuple(sorted(set(ground_x)))
    ly = tuple(sorted(set(ground_y)))
    if set(lx) & set(ly):
        raise ValueError("ground sets overlap")
    if len(lx) + len(ly) > bound:
        raise ValueError("check bound exceeded")
    union = tuple(sorted(lx + ly))
    cases = 0
    for g in all_graphs(union):
        for px in enumerate_partitions(lx):
            for py in enumerate_partitions(ly):
                cases += 1
                p = SetPartition(px.blocks + py.blocks)
                lhs = LinComb.zero()
                for (g1, g2), c in delta_fn(g, p).terms.items():
                    xq = frozenset(block_label(b) for b in px.blocks)
                    yq = frozenset(block_label(b) for b in py.blocks)
                    lhs = lhs + LinComb.single(
                        (
                            induced_subgraph(g1, xq),
                            induced_subgraph(g1, yq),
                            g2,
                        ),
                        c,
                    )
                gx = induced_subgraph(g, frozenset(lx))
                gy = induced_subgraph(g, frozenset(ly))
                rhs = LinComb.zero()
                for (a1, a2), c1 in delta_fn(gx, px).terms.items():
                    for (b1, b2), c2 in delta_fn(gy, py).terms.items():
                        rhs = rhs + LinComb.single(
                            (a1, b1, graph_product(a2, b2)), c1 * c2
                        )
                if lhs != rhs:
                    return CheckResult(
                        "coproduct-compat(δ,Δ)", lx, ly, cases, False,
                        f"G={g} px={px} py={py}: {lhs} != {rhs}",
                    )
    return CheckResult("coproduct-compat(δ,Δ)", lx, ly, cases, True)
