"""Axiom suites over every basis element up to a size bound.

Each suite returns a list of CheckResult rows; a suite passes iff every
row does. The graph suite takes injectable coproducts so the mutation
tests can demonstrate the axioms genuinely fail without the
connectedness / block-compatibility filters.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable

from .fock import (
    DecoratedGraph,
    DecoratedPartitionedGraph,
    class_of,
    coaction_rho,
    fock_coproduct,
    fock_counits,
    fock_delta,
    fock_product,
    pclass_of,
    pfock_coproduct,
    pfock_delta,
    pfock_product,
    pi_project,
)
from .graphs import all_graphs
from .lincomb import LinComb
from .partitions import block_label, enumerate_partitions
from .quasishuffle import (
    Monomial,
    Word,
    delta_word,
    deconcat,
    eps_delta_word,
    qsh_product,
)
from .set_compositions import (
    SetComposition,
    delta_comp,
    enumerate_compositions,
    eps_delta_comp,
    quasishuffle_comp,
)
from .species_bialgebra import (
    CheckResult,
    check_coassociativity_delta,
    check_coproduct_compat,
    check_coproduct_prime,
    check_counit,
    check_product_compat,
    coproduct_delta_AB_prime,
    extraction_contraction,
)

LETTERS = "abcdefgh"

SUITE_NAMES = ("graphs", "comp", "words", "fock")


def suite_graphs(
    max_n: int = 3,
    delta_fn: Callable = extraction_contraction,
    dprime_fn: Callable = coproduct_delta_AB_prime,
) -> list:
    rows = []
    for n in range(1, max_n + 1):
        ground = LETTERS[:n]
        rows.append(check_coassociativity_delta(ground, delta_fn, bound=max_n))
        rows.append(check_counit(ground, delta_fn, bound=max_n))
        rows.append(check_coproduct_prime(ground, dprime_fn, bound=max_n))
    for i in range(1, max_n):
        for j in range(1, max_n - i + 1):
            lx, ly = LETTERS[:i], LETTERS[i : i + j]
            rows.append(check_product_compat(lx, ly, delta_fn, bound=max_n))
            rows.append(check_coproduct_compat(lx, ly, delta_fn, bound=max_n))
    return rows


# ---------------------------------------------------------------------------
# Set compositions


def _comp_full_Delta(c: SetComposition) -> LinComb:
    return LinComb(
        [
            ((SetComposition(c.blocks[:i]), SetComposition(c.blocks[i:])), 1)
            for i in range(len(c.blocks) + 1)
        ]
    )


def _all_comps(max_n: int) -> list:
    out = []
    for n in range(max_n + 1):
        out.extend(enumerate_compositions(LETTERS[:n]))
    return out


def suite_comp(max_n: int = 3) -> list:
    label = (f"n<={max_n}",)
    rows = []

    cases = 0
    bad = None
    for n1 in range(1, max_n):
        for n2 in range(1, max_n - n1 + 1):
            g1, g2 = LETTERS[:n1], LETTERS[n1 : n1 + n2]
            for c1 in enumerate_compositions(g1):
                for c2 in enumerate_compositions(g2):
                    cases += 1
                    ab = quasishuffle_comp(c1, c2)
                    ba = quasishuffle_comp(c2, c1)
                    if ab != ba:
                        bad = f"{c1} ⧢ {c2}"
                        break
    rows.append(CheckResult("commutativity(⧢,Comp)", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for n1 in range(1, max_n - 1):
        for n2 in range(1, max_n - n1):
            for n3 in range(1, max_n - n1 - n2 + 1):
                g1 = LETTERS[:n1]
                g2 = LETTERS[n1 : n1 + n2]
                g3 = LETTERS[n1 + n2 : n1 + n2 + n3]
                for c1 in enumerate_compositions(g1):
                    for c2 in enumerate_compositions(g2):
                        for c3 in enumerate_compositions(g3):
                            cases += 1
                            l = quasishuffle_comp(c1, c2).map_basis(
                                lambda w: quasishuffle_comp(w, c3)
                            )
                            r = quasishuffle_comp(c2, c3).map_basis(
                                lambda w: quasishuffle_comp(c1, w)
                            )
                            if l != r:
                                bad = f"({c1} ⧢ {c2}) ⧢ {c3}"
    rows.append(CheckResult("associativity(⧢,Comp)", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for c in _all_comps(max_n):
        cases += 1
        d = delta_comp(c)
        lhs = LinComb.zero()
        rhs = LinComb.zero()
        for (l, r), k in d.terms.items():
            lhs = lhs + delta_comp(l).tensor(LinComb.single(r)) * k
            rhs = rhs + LinComb.single(l).tensor(delta_comp(r)) * k
        if lhs != rhs:
            bad = str(c)
    rows.append(CheckResult("coassociativity(δ,Comp)", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for c in _all_comps(max_n):
        cases += 1
        d = delta_comp(c)
        left = LinComb.zero()
        right = LinComb.zero()
        for (l, r), k in d.terms.items():
            left = left + LinComb.single(r) * (k * eps_delta_comp(l))
            right = right + LinComb.single(l) * (k * eps_delta_comp(r))
        if left != LinComb.single(c) or right != LinComb.single(c):
            bad = str(c)
    rows.append(CheckResult("counit(ε_δ,Comp)", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for c in _all_comps(max_n):
        cases += 1
        lhs = LinComb.zero()
        for (l, r), k in delta_comp(c).terms.items():
            for (l1, l2), k2 in _comp_full_Delta(l).terms.items():
                lhs = lhs + LinComb.single((l1, l2, r), k * k2)
        rhs = LinComb.zero()
        for (a, b), k in _comp_full_Delta(c).terms.items():
            for (a1, a2), ka in delta_comp(a).terms.items():
                for (b1, b2), kb in delta_comp(b).terms.items():
                    rhs = rhs + quasishuffle_comp(a2, b2).map_basis(
                        lambda w, a1=a1, b1=b1: LinComb.single((a1, b1, w))
                    ) * (k * ka * kb)
        if lhs != rhs:
            bad = str(c)
    rows.append(
        CheckResult("double-compat(Δ,δ,Comp)", label, (), cases, bad is None, bad)
    )
    return rows


# ---------------------------------------------------------------------------
# Words over the free 2-generator semigroup


def _all_words(max_len: int) -> list:
    gens = [Monomial((1, 0)), Monomial((0, 1))]
    out = [Word.empty()]
    for n in range(1, max_len + 1):
        out.extend(Word(ls) for ls in iproduct(gens, repeat=n))
    return out


def suite_words(max_n: int = 3) -> list:
    label = (f"len<={max_n}",)
    rows = []
    words = _all_words(max_n)

    cases = 0
    bad = None
    for w1 in words:
        for w2 in words:
            if len(w1) + len(w2) > max_n + 1:
                continue
            cases += 1
            a = qsh_product(LinComb.single(w1), LinComb.single(w2))
            b = qsh_product(LinComb.single(w2), LinComb.single(w1))
            if a != b:
                bad = f"{w1} ⧢ {w2}"
    rows.append(CheckResult("commutativity(⧢,T(V))", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for w1 in words:
        for w2 in words:
            for w3 in words:
                if len(w1) + len(w2) + len(w3) > max_n:
                    continue
                cases += 1
                l = qsh_product(
                    qsh_product(LinComb.single(w1), LinComb.single(w2)),
                    LinComb.single(w3),
                )
                r = qsh_product(
                    LinComb.single(w1),
                    qsh_product(LinComb.single(w2), LinComb.single(w3)),
                )
                if l != r:
                    bad = f"({w1} ⧢ {w2}) ⧢ {w3}"
    rows.append(CheckResult("associativity(⧢,T(V))", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for w in words:
        cases += 1
        d = delta_word(w)
        lhs = LinComb.zero()
        rhs = LinComb.zero()
        for (l, r), k in d.terms.items():
            lhs = lhs + delta_word(l).tensor(LinComb.single(r)) * k
            rhs = rhs + LinComb.single(l).tensor(delta_word(r)) * k
        if lhs != rhs:
            bad = str(w)
    rows.append(CheckResult("coassociativity(δ,T(V))", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for w in words:
        cases += 1
        d = delta_word(w)
        left = LinComb.zero()
        right = LinComb.zero()
        for (l, r), k in d.terms.items():
            left = left + LinComb.single(r) * (k * eps_delta_word(l))
            right = right + LinComb.single(l) * (k * eps_delta_word(r))
        if left != LinComb.single(w) or right != LinComb.single(w):
            bad = str(w)
    rows.append(CheckResult("counit(ε_δ,T(V))", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for w in words:
        cases += 1
        lhs = LinComb.zero()
        for (l, r), k in delta_word(w).terms.items():
            for (l1, l2), k2 in deconcat(l).terms.items():
                lhs = lhs + LinComb.single((l1, l2, r), k * k2)
        rhs = LinComb.zero()
        for (a, b), k in deconcat(w).terms.items():
            for (a1, a2), ka in delta_word(a).terms.items():
                for (b1, b2), kb in delta_word(b).terms.items():
                    rhs = rhs + qsh_product(
                        LinComb.single(a2), LinComb.single(b2)
                    ).map_basis(
                        lambda v, a1=a1, b1=b1: LinComb.single((a1, b1, v))
                    ) * (k * ka * kb)
        if lhs != rhs:
            bad = str(w)
    rows.append(
        CheckResult("double-compat(Δ,δ,T(V))", label, (), cases, bad is None, bad)
    )
    return rows


# ---------------------------------------------------------------------------
# Decorated graph classes (V-coloured Fock image)

_GENS = (Monomial((1, 0)), Monomial((0, 1)))


def decorated_classes(n: int, gens: tuple = _GENS) -> list:
    verts = [str(i) for i in range(1, n + 1)]
    out = set()
    for g in all_graphs(verts):
        for decs in iproduct(gens, repeat=n):
            out.add(class_of(g, dict(zip(verts, decs))))
    return sorted(out, key=DecoratedGraph.sort_key)


def partitioned_classes(n: int, gens: tuple = _GENS) -> list:
    ground = [str(i) for i in range(1, n + 1)]
    out = set()
    for p in enumerate_partitions(ground):
        qverts = [block_label(b) for b in p.blocks]
        for g in all_graphs(qverts):
            for decs in iproduct(gens, repeat=n):
                out.add(pclass_of(g, dict(zip(ground, decs))))
    return sorted(out, key=DecoratedPartitionedGraph.sort_key)


def _lift2(lc: LinComb, f: Callable, g: Callable) -> LinComb:
    """Apply linear maps to the two legs of a tensor-pair combination."""
    return lc.map_basis(lambda pair: f(pair[0]).tensor(g(pair[1])))


def suite_fock(max_n: int = 3) -> list:
    label = (f"n<={max_n}",)
    rows = []
    by_n = {n: decorated_classes(n) for n in range(max_n + 1)}
    all_classes = [d for n in range(max_n + 1) for d in by_n[n]]
    single = LinComb.single

    cases = 0
    bad = None
    for d in all_classes:
        cases += 1
        cop = fock_coproduct(d)
        lhs = _lift2(cop, fock_coproduct, single)
        rhs = _lift2(cop, single, fock_coproduct)
        flip = LinComb([((b, a), k) for (a, b), k in cop.terms.items()])
        if lhs != rhs or flip != cop:
            bad = str(d)
    rows.append(
        CheckResult("coassoc+cocomm(Δ,F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for na in range(max_n + 1):
        for nb in range(max_n + 1 - na):
            for da in by_n[na]:
                for db in by_n[nb]:
                    cases += 1
                    prod = fock_product(single(da), single(db))
                    lhs = prod.map_basis(fock_coproduct)
                    rhs = LinComb.zero()
                    for (a1, a2), ka in fock_coproduct(da).terms.items():
                        for (b1, b2), kb in fock_coproduct(db).terms.items():
                            rhs = rhs + fock_product(single(a1), single(b1)).tensor(
                                fock_product(single(a2), single(b2))
                            ) * (ka * kb)
                    if lhs != rhs:
                        bad = f"{da} · {db}"
    rows.append(
        CheckResult("bialgebra(Δ,m,F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for n1 in range(1, max_n):
        for n2 in range(1, max_n - n1 + 1):
            n3 = max_n - n1 - n2
            for da in by_n[n1]:
                for db in by_n[n2]:
                    for dc in by_n[n3] if n3 >= 1 else [DecoratedGraph.empty()]:
                        cases += 1
                        l = fock_product(
                            fock_product(single(da), single(db)), single(dc)
                        )
                        r = fock_product(
                            single(da), fock_product(single(db), single(dc))
                        )
                        if l != r:
                            bad = f"{da} · {db} · {dc}"
    rows.append(
        CheckResult("associativity(m,F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for d in all_classes:
        cases += 1
        dd = fock_delta(d)
        lhs = _lift2(dd, fock_delta, single)
        rhs = _lift2(dd, single, fock_delta)
        if lhs != rhs:
            bad = str(d)
    rows.append(
        CheckResult("coassociativity(δ,F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for d in all_classes:
        cases += 1
        dd = fock_delta(d)
        left = LinComb.zero()
        right = LinComb.zero()
        for (l, r), k in dd.terms.items():
            left = left + single(r) * (k * fock_counits(l)[1])
            right = right + single(l) * (k * fock_counits(r)[1])
        if left != single(d) or right != single(d):
            bad = str(d)
    rows.append(CheckResult("counit(ε_δ,F_V)", label, (), cases, bad is None, bad))

    cases = 0
    bad = None
    for na in range(max_n + 1):
        for nb in range(max_n + 1 - na):
            for da in by_n[na]:
                for db in by_n[nb]:
                    cases += 1
                    prod = fock_product(single(da), single(db))
                    lhs = prod.map_basis(fock_delta)
                    rhs = LinComb.zero()
                    for (a1, a2), ka in fock_delta(da).terms.items():
                        for (b1, b2), kb in fock_delta(db).terms.items():
                            rhs = rhs + fock_product(single(a1), single(b1)).tensor(
                                fock_product(single(a2), single(b2))
                            ) * (ka * kb)
                    if lhs != rhs:
                        bad = f"{da} · {db}"
    rows.append(
        CheckResult("multiplicativity(δ,F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for d in all_classes:
        cases += 1
        lhs = LinComb.zero()
        for (l, r), k in fock_delta(d).terms.items():
            for (l1, l2), k2 in fock_coproduct(l).terms.items():
                lhs = lhs + LinComb.single((l1, l2, r), k * k2)
        rhs = LinComb.zero()
        for (a, b), k in fock_coproduct(d).terms.items():
            for (a1, a2), ka in fock_delta(a).terms.items():
                for (b1, b2), kb in fock_delta(b).terms.items():
                    rhs = rhs + fock_product(single(a2), single(b2)).map_basis(
                        lambda p, a1=a1, b1=b1: LinComb.single((a1, b1, p))
                    ) * (k * ka * kb)
        if lhs != rhs:
            bad = str(d)
    rows.append(
        CheckResult("double-compat(Δ,δ,F_V)", label, (), cases, bad is None, bad)
    )

    pclasses = [dp for n in range(max_n + 1) for dp in partitioned_classes(n)]

    cases = 0
    bad = None
    for dp in pclasses:
        cases += 1
        via_prime = _lift2(pfock_delta(dp), pi_project, pi_project)
        direct = pi_project(dp).map_basis(fock_delta)
        if via_prime != direct:
            bad = f"δ: {dp}"
            break
        via_prime = _lift2(pfock_coproduct(dp), pi_project, pi_project)
        direct = pi_project(dp).map_basis(fock_coproduct)
        if via_prime != direct:
            bad = f"Δ: {dp}"
            break
    by_pn = {n: partitioned_classes(n) for n in range(max_n + 1)}
    for na in range(max_n + 1):
        for nb in range(max_n + 1 - na):
            for da in by_pn[na]:
                for db in by_pn[nb]:
                    cases += 1
                    lhs = pfock_product(
                        LinComb.single(da), LinComb.single(db)
                    ).map_basis(pi_project)
                    rhs = fock_product(pi_project(da), pi_project(db))
                    if lhs != rhs:
                        bad = f"m: {da} · {db}"
    rows.append(
        CheckResult("π-intertwining(F_V)", label, (), cases, bad is None, bad)
    )

    cases = 0
    bad = None
    for d in all_classes:
        if d.size == 0:
            continue
        cases += 1
        rho = coaction_rho(d)
        ident = LinComb.zero()
        for (a, m), k in rho.terms.items():
            ident = ident + single(a) * k  # ε_V = 1 on the grouplike basis
        if ident != single(d):
            bad = f"counit: {d}"
            break
        lhs = LinComb.zero()
        for (a, m), k in rho.terms.items():
            for (a1, m1), k1 in coaction_rho(a).terms.items():
                lhs = lhs + LinComb.single((a1, m1, m), k * k1)
        rhs = LinComb([((a, m, m), k) for (a, m), k in rho.terms.items()])
        if lhs != rhs:
            bad = f"coassoc: {d}"
    for na in range(1, max_n):
        for nb in range(1, max_n - na + 1):
            for da in by_n[na]:
                for db in by_n[nb]:
                    cases += 1
                    lhs = fock_product(single(da), single(db)).map_basis(
                        coaction_rho
                    )
                    rhs = LinComb.zero()
                    for (a, ma), ka in coaction_rho(da).terms.items():
                        for (b, mb), kb in coaction_rho(db).terms.items():
                            rhs = rhs + fock_product(single(a), single(b)).map_basis(
                                lambda p, m=ma * mb: LinComb.single((p, m))
                            ) * (ka * kb)
                    if lhs != rhs:
                        bad = f"multiplicativity: {da} · {db}"
    rows.append(CheckResult("coaction(ρ,F_V)", label, (), cases, bad is None, bad))
    return rows


def run_suites(names: Iterable[str], max_n: int = 3) -> list:
    runners = {
        "graphs": suite_graphs,
        "comp": suite_comp,
        "words": suite_words,
        "fock": suite_fock,
    }
    rows = []
    for name in names:
        if name not in runners:
            raise ValueError(f"unknown suite {name!r}")
        rows.extend(runners[name](max_n))
    rows.sort(key=lambda r: (r.axiom, r.x, r.y))
    return rows
