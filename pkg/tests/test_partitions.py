import pytest

from species_hopf.partitions import (
    SetPartition,
    bell_number,
    block_label,
    coarsenings_below,
    disjoint_union_partition,
    enumerate_partitions,
    parse_partition,
    quotient_set,
    refines,
    restrict_partition,
    split_block_label,
    splits_of,
)


def test_block_label_sorts_and_flattens():
    assert block_label({"b", "a"}) == "a,b"
    # labels that are themselves comma-joined re-split before sorting,
    # realizing the iterated-quotient identification
    assert block_label({"b,d", "a", "c"}) == "a,b,c,d"
    assert split_block_label("a,b,c") == frozenset("abc")


def test_partition_normalizes_and_validates():
    p = SetPartition.from_blocks([{"c"}, {"a", "b"}])
    assert str(p) == "{a,b|c}"
    with pytest.raises(ValueError):
        SetPartition.from_blocks([{"a"}, {"a", "b"}])
    with pytest.raises(ValueError):
        SetPartition.from_blocks([set()])


def test_parse_roundtrip():
    for text in ("{a,b|c}", "{a}", "{}"):
        assert str(parse_partition(text)) == text


def test_bell_numbers():
    assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("n", range(5))
def test_enumeration_count_matches_bell(n):
    ground = "abcde"[:n]
    parts = enumerate_partitions(ground)
    assert len(parts) == bell_number(n)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert p.ground == frozenset(ground)


def test_refines_is_the_coarsening_order():
    coarse = parse_partition("{a,b|c}")
    fine = parse_partition("{a|b|c}")
    whole = parse_partition("{a,b,c}")
    # p <= q iff p is coarser: blocks of q sit inside blocks of p
    assert refines(coarse, fine)
    assert not refines(fine, coarse)
    assert refines(whole, coarse) and refines(whole, fine)
    assert refines(coarse, coarse)
    with pytest.raises(ValueError):
        refines(coarse, parse_partition("{a|b}"))


def test_quotient_and_restrict():
    p = parse_partition("{a,b|c}")
    assert quotient_set("abc", p) == frozenset({"a,b", "c"})
    assert restrict_partition(p, "ac") == parse_partition("{a|c}")
    q = disjoint_union_partition(p, parse_partition("{d}"))
    assert str(q) == "{a,b|c|d}"
    with pytest.raises(ValueError):
        disjoint_union_partition(p, parse_partition("{c}"))


def test_coarsenings_below():
    p = parse_partition("{a|b|c}")
    below = coarsenings_below(p)
    assert len(below) == bell_number(3)
    assert all(refines(q, p) for q in below)
    p2 = parse_partition("{a,b|c}")
    assert len(coarsenings_below(p2)) == bell_number(2)


def test_splits_cover():
    splits = list(splits_of("ab"))
    assert len(splits) == 4
    for a, b in splits:
        assert a | b == frozenset("ab") and not a & b
