"""Acceptance gate: golden examples, exhaustive axiom suites, mutation
negative controls, oracle equivalences, and CLI determinism.

Every check here runs the real public entry points; nothing is mocked.
"""

import json
import math
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

import pytest

from species_hopf.fock import class_of, fock_coproduct, fock_delta
from species_hopf.graphs import (
    Graph,
    all_graphs,
    connected_partitions,
)
from species_hopf.lincomb import LinComb
from species_hopf.partitions import enumerate_partitions, parse_partition
from species_hopf.quasishuffle import (
    Monomial,
    Word,
    deconcat,
    delta_word,
    kx_realize,
    qsh_product,
    qsh_words,
)
from species_hopf.set_compositions import (
    SetComposition,
    delta_comp,
    quasishuffle_comp,
)
from species_hopf.species_bialgebra import (
    check_coassociativity_delta,
    check_coproduct_prime,
    check_counit,
    coproduct_delta_AB,
    coproduct_delta_AB_prime,
    coproduct_delta_AB_prime_nosplit,
    delta_prime,
    extraction_contraction_nofilter,
    full_delta,
)
from species_hopf.verify import run_suites, suite_fock

PATH3 = Graph.make("abc", [("a", "b"), ("b", "c")])
TRIANGLE = Graph.make("abc", [("a", "b"), ("b", "c"), ("a", "c")])


# ---------------------------------------------------------------------------
# Criterion 1: golden examples, exact equality


def test_golden_coproduct_table():
    g = lambda v, *e: Graph.make(v, e)
    splits = [("a", "bc"), ("bc", "a"), ("b", "ac"), ("ac", "b"),
              ("c", "ab"), ("ab", "c")]
    for graph in (PATH3, TRIANGLE):
        for a, b in splits:
            got = coproduct_delta_AB(graph, a, b)
            want = LinComb.single(
                (
                    Graph(frozenset(a), frozenset(
                        e for e in graph.edges if set(e) <= set(a))),
                    Graph(frozenset(b), frozenset(
                        e for e in graph.edges if set(e) <= set(b))),
                )
            )
            assert got == want
    # spot values from the table
    assert coproduct_delta_AB(PATH3, "ac", "b") == LinComb.single(
        (g("ac"), g("b"))
    )
    assert coproduct_delta_AB(TRIANGLE, "ac", "b") == LinComb.single(
        (g("ac", ("a", "c")), g("b"))
    )


def test_golden_comp_quasishuffles_and_deltas():
    X, Y, Z, T = (frozenset(s) for s in ("x", "y", "z", "t"))
    c = SetComposition.of
    assert len(quasishuffle_comp(c(X), c(Y)).terms) == 3
    assert len(quasishuffle_comp(c(X, Y), c(Z)).terms) == 5
    assert len(quasishuffle_comp(c(X, Y), c(Z, T)).terms) == 13
    assert delta_comp(c(X)) == LinComb.single((c(X), c(X)))
    dxy = delta_comp(c(X, Y))
    assert dxy == LinComb.single(c(X, Y)).tensor(
        quasishuffle_comp(c(X), c(Y))
    ) + LinComb.single((c(X | Y), c(X, Y)))
    dxyz = delta_comp(c(X, Y, Z))
    want = LinComb.single(c(X, Y, Z)).tensor(
        quasishuffle_comp(c(X), c(Y)).map_basis(
            lambda w: quasishuffle_comp(w, c(Z))
        )
    )
    want = want + LinComb.single(c(X, Y | Z)).tensor(
        quasishuffle_comp(c(X), c(Y, Z))
    )
    want = want + LinComb.single(c(X | Y, Z)).tensor(
        quasishuffle_comp(c(X, Y), c(Z))
    )
    want = want + LinComb.single((c(X | Y | Z), c(X, Y, Z)))
    assert dxyz == want


def test_golden_partitioned_graphs():
    g = lambda v, *e: Graph.make(v, e)
    h = g(["a,b", "c"], ("a,b", "c"))
    assert coproduct_delta_AB_prime(h, "ab", "c") == LinComb.single(
        (g(["a,b"]), g(["c"]))
    )
    assert coproduct_delta_AB_prime(h, "ac", "b").is_zero()
    assert delta_prime(h) == LinComb.single(
        (h, g(["a,b", "c"]))
    ) + LinComb.single((g(["a,b,c"]), h))
    assert len(delta_prime(PATH3).terms) == 4
    assert len(delta_prime(TRIANGLE).terms) == 5
    # the third triangle term: contracting {a,c} leaves edge(a,c)·vertex(b)
    tri_terms = delta_prime(TRIANGLE).terms
    assert (
        tri_terms[(g(["a,c", "b"], ("a,c", "b")), g("abc", ("a", "c")))] == 1
    )


def test_golden_decorated_graphs():
    v1, v2, v3 = Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1))

    def dg(edges, decs):
        verts = [str(i) for i in range(1, len(decs) + 1)]
        return class_of(Graph.make(verts, edges), dict(zip(verts, decs)))

    edge = dg([("1", "2")], [v1, v2])
    path = dg([("1", "2"), ("2", "3")], [v1, v2, v3])
    tri = dg([("1", "2"), ("2", "3"), ("1", "3")], [v1, v2, v3])
    assert len(fock_coproduct(edge).terms) == 4
    assert len(fock_coproduct(path).terms) == 8
    assert len(fock_coproduct(tri).terms) == 8
    de = fock_delta(edge)
    assert de == LinComb.single((edge, dg([], [v1, v2]))) + LinComb.single(
        (dg([], [v1 * v2]), edge)
    )
    dp = fock_delta(path)
    assert len(dp.terms) == 4
    assert dp.coeff((dg([("1", "2")], [v1 * v2, v3]),
                     dg([("1", "2")], [v1, v2, v3]))) == 1
    dt = fock_delta(tri)
    assert len(dt.terms) == 5
    assert dt.coeff((dg([], [v1 * v2 * v3]), tri)) == 1
    assert dt.coeff((dg([("1", "2")], [v1 * v3, v2]),
                     dg([("1", "2")], [v1, v3, v2]))) == 1


def test_golden_k_preset_powers():
    x = LinComb.single(Word((Monomial(()),)))
    kw = lambda n: Word((Monomial(()),) * n)
    sq = qsh_product(x, x)
    assert sq == LinComb([(kw(1), 1), (kw(2), 2)])
    cube = qsh_product(sq, x)
    assert cube == LinComb([(kw(1), 1), (kw(2), 6), (kw(3), 6)])


# ---------------------------------------------------------------------------
# Criterion 2: exhaustive axiom suites in < 60 s


def test_exhaustive_axiom_suites_within_budget():
    start = time.monotonic()
    rows = run_suites(["graphs", "comp", "words"], 4)
    rows += suite_fock(3)
    elapsed = time.monotonic() - start
    failures = [r.row() for r in rows if not r.passed]
    assert not failures, failures
    assert elapsed < 60, f"suites took {elapsed:.1f}s"


# ---------------------------------------------------------------------------
# Criterion 3: mutation negative controls must FAIL with a counterexample


def test_negative_control_delta_without_connectedness_filter():
    r = check_counit("abc", delta_fn=extraction_contraction_nofilter)
    assert not r.passed and r.counterexample
    r2 = check_coassociativity_delta(
        "abc", delta_fn=extraction_contraction_nofilter
    )
    assert not r2.passed and r2.counterexample


def test_negative_control_coproduct_prime_without_block_filter():
    r = check_coproduct_prime(
        "ab", dprime_fn=coproduct_delta_AB_prime_nosplit
    )
    assert not r.passed and r.counterexample


# ---------------------------------------------------------------------------
# Criterion 4: oracle equivalences


def _bfs_connected(g, block):
    block = set(block)
    if not block:
        return True
    adj = {v: set() for v in block}
    for u, v in g.edges:
        if u in block and v in block:
            adj[u].add(v)
            adj[v].add(u)
    seen, queue = {min(block)}, [min(block)]
    while queue:
        x = queue.pop()
        for y in adj[x] - seen:
            seen.add(y)
            queue.append(y)
    return seen == block


def test_oracle_connected_partitions():
    for n in range(5):
        ground = "abcd"[:n]
        for g in all_graphs(ground):
            want = [
                p
                for p in enumerate_partitions(ground)
                if all(_bfs_connected(g, b) for b in p.blocks)
            ]
            assert connected_partitions(g) == want


def _oracle_qsh(u, v):
    if not u:
        return Counter({v: 1})
    if not v:
        return Counter({u: 1})
    out = Counter()
    for w, c in _oracle_qsh(u[1:], v).items():
        out[(u[0],) + w] += c
    for w, c in _oracle_qsh(u, v[1:]).items():
        out[(v[0],) + w] += c
    for w, c in _oracle_qsh(u[1:], v[1:]).items():
        out[(u[0] + v[0],) + w] += c
    return out


def _compositions(weight):
    if weight == 0:
        yield ()
        return
    for first in range(1, weight + 1):
        for rest in _compositions(weight - first):
            yield (first,) + rest


def test_oracle_qsym_vs_integer_compositions():
    comps = [c for w in range(6) for c in _compositions(w)]
    for u in comps:
        for v in comps:
            if sum(u) + sum(v) > 5:
                continue
            got = {
                tuple(m.exps[0] for m in w.letters): c
                for w, c in qsh_words(Word.of(*u), Word.of(*v)).terms.items()
            }
            assert got == {
                k: Fraction(c) for k, c in _oracle_qsh(u, v).items()
            }


def test_oracle_k_substitution():
    def realize_tensor(t):
        out = {}
        for (l, r), c in t.terms.items():
            for dx, cx in kx_realize(LinComb.single(l)).items():
                for dy, cy in kx_realize(LinComb.single(r)).items():
                    out[(dx, dy)] = out.get((dx, dy), Fraction(0)) + c * cx * cy
        return {k: v for k, v in out.items() if v != 0}

    for n in range(5):
        w = Word((Monomial(()),) * n)
        p = kx_realize(LinComb.single(w))
        want_sum = {}
        for d, c in p.items():
            for i in range(d + 1):
                want_sum[(i, d - i)] = want_sum.get(
                    (i, d - i), Fraction(0)
                ) + c * math.comb(d, i)
        want_sum = {k: v for k, v in want_sum.items() if v != 0}
        assert realize_tensor(deconcat(w)) == want_sum
        assert realize_tensor(delta_word(w)) == {
            (d, d): c for d, c in p.items()
        }


# ---------------------------------------------------------------------------
# Criterion 5: CLI byte determinism


PATH3_JSON = '{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}'
EDGE_DEC_JSON = (
    '{"vertices": ["1", "2"], "edges": [["1", "2"]],'
    ' "decorations": {"1": [1, 0], "2": [0, 1]}}'
)
GOLDEN_CLI = [
    ["delta", "--graph", PATH3_JSON],
    ["delta", "--graph", PATH3_JSON, "--partition", "{a,b|c}"],
    ["delta-prime", "--graph", PATH3_JSON],
    ["qsh", "--V", "k", "--left", "x", "--right", "x"],
    ["qsh", "--V", "qsym", "--left", "[1,2]", "--right", "[1]"],
    ["delta-t", "--V", "qsym", "--word", "[1,2]"],
    ["realize-kx", "--word", "x^3"],
    ["--format", "json", "fock-delta", "--graph", EDGE_DEC_JSON],
    ["--format", "json", "fock-coproduct", "--graph", EDGE_DEC_JSON],
    ["rho", "--graph", EDGE_DEC_JSON],
    ["verify", "--suite", "graphs", "--max-n", "2"],
]


@pytest.mark.parametrize("args", GOLDEN_CLI)
def test_cli_byte_determinism(args):
    def run():
        return subprocess.run(
            [sys.executable, "-m", "species_hopf.cli", *args],
            capture_output=True,
            check=False,
        )

    first, second = run(), run()
    assert first.returncode == 0, first.stderr
    assert first.stdout and first.stdout == second.stdout
    assert first.returncode == second.returncode
