from fractions import Fraction

import pytest

from species_hopf.lincomb import LinComb
from species_hopf.set_compositions import (
    SetComposition,
    delta_comp,
    deconcat_comp,
    enumerate_compositions,
    eps_delta_comp,
    parse_composition,
    quasishuffle_comp,
    restrict_composition,
)

X = frozenset({"x1", "x2"})
Y = frozenset({"y"})
Z = frozenset({"z"})
T = frozenset({"t"})


def comp(*blocks):
    return SetComposition.of(*blocks)


def lc(*comps):
    return LinComb([(c, 1) for c in comps])


def test_validation_and_parse():
    with pytest.raises(ValueError):
        SetComposition.of({"a"}, {"a", "b"})
    with pytest.raises(ValueError):
        SetComposition.of(set())
    c = parse_composition("({a,b},{c})")
    assert c == comp({"a", "b"}, {"c"})
    assert str(c) == "({a,b},{c})"
    assert parse_composition("()") == SetComposition(())


def test_restriction_drops_empty_intersections():
    c = comp({"a", "b"}, {"c"}, {"d"})
    assert restrict_composition(c, {"b", "d"}) == comp({"b"}, {"d"})


def test_enumeration_counts():
    # ordered Bell numbers 1, 1, 3, 13
    for n, want in [(0, 1), (1, 1), (2, 3), (3, 13)]:
        assert len(enumerate_compositions("abcd"[:n])) == want


def test_quasishuffle_X_Y():
    # (X) ⧢ (Y) = (X,Y) + (Y,X) + (X ⊔ Y)
    out = quasishuffle_comp(comp(X), comp(Y))
    assert out == lc(comp(X, Y), comp(Y, X), comp(X | Y))


def test_quasishuffle_XY_Z():
    # (X,Y) ⧢ (Z) = (X,Y,Z)+(X,Z,Y)+(Z,X,Y)+(X⊔Z,Y)+(X,Y⊔Z)
    out = quasishuffle_comp(comp(X, Y), comp(Z))
    want = lc(
        comp(X, Y, Z),
        comp(X, Z, Y),
        comp(Z, X, Y),
        comp(X | Z, Y),
        comp(X, Y | Z),
    )
    assert out == want


def test_quasishuffle_XY_ZT_13_terms():
    out = quasishuffle_comp(comp(X, Y), comp(Z, T))
    want = lc(
        comp(X, Y, Z, T),
        comp(X, Z, Y, T),
        comp(Z, X, Y, T),
        comp(X, Z, T, Y),
        comp(Z, X, T, Y),
        comp(Z, T, X, Y),
        comp(X, Y | Z, T),
        comp(X | Z, Y, T),
        comp(X | Z, T, Y),
        comp(X, Z, Y | T),
        comp(Z, X, Y | T),
        comp(Z, X | T, Y),
        comp(X | Z, Y | T),
    )
    assert len(out.terms) == 13
    assert out == want


def test_deconcat_unique_cut():
    c = comp(X, Y, Z)
    out = deconcat_comp(c, X | Y, Z)
    assert out == LinComb.single((comp(X, Y), comp(Z)))
    # no prefix realizes {x1,x2,z}
    assert deconcat_comp(c, X | Z, Y).is_zero()
    assert deconcat_comp(c, frozenset(), X | Y | Z) == LinComb.single(
        (SetComposition(()), c)
    )


def test_delta_X():
    c = comp(X)
    assert delta_comp(c) == LinComb.single((c, c))


def test_delta_XY():
    c = comp(X, Y)
    fused = comp(X | Y)
    want = LinComb.zero()
    for q, k in quasishuffle_comp(comp(X), comp(Y)).terms.items():
        want = want + LinComb.single((c, q), k)
    want = want + LinComb.single((fused, c))
    assert delta_comp(c) == want


def test_delta_XYZ():
    c = comp(X, Y, Z)
    shuffle3 = quasishuffle_comp(comp(X), comp(Y)).map_basis(
        lambda w: quasishuffle_comp(w, comp(Z))
    )
    want = LinComb.single(comp(X, Y, Z)).tensor(shuffle3)
    want = want + LinComb.single(comp(X, Y | Z)).tensor(
        quasishuffle_comp(comp(X), comp(Y, Z))
    )
    want = want + LinComb.single(comp(X | Y, Z)).tensor(
        quasishuffle_comp(comp(X, Y), comp(Z))
    )
    want = want + LinComb.single((comp(X | Y | Z), c))
    assert delta_comp(c) == want


def test_delta_empty():
    e = SetComposition(())
    assert delta_comp(e) == LinComb.single((e, e))


def test_counit():
    assert eps_delta_comp(SetComposition(())) == Fraction(1)
    assert eps_delta_comp(comp(X)) == Fraction(1)
    assert eps_delta_comp(comp(X, Y)) == Fraction(0)
