import random
from fractions import Fraction

import pytest

from intsymp.shapes import (
    add_rect,
    conjugate,
    contains,
    family,
    format_shape,
    frobenius,
    from_frobenius,
    from_index_set,
    half_shift,
    index_set,
    normalize,
    parse_shape,
    part,
    partitions_in_box,
    size,
)


def test_normalize():
    assert normalize((3, 2, 0, 0)) == (3, 2)
    assert normalize(()) == ()
    with pytest.raises(ValueError):
        normalize((1, 2))


def test_conjugate_involution_random():
    rng = random.Random(2)
    for _ in range(100):
        la = tuple(sorted((rng.randint(0, 6) for _ in range(5)), reverse=True))
        la = normalize(la)
        assert conjugate(conjugate(la)) == la
        assert size(conjugate(la)) == size(la)


def test_box_counts():
    # number of partitions in an m x n box is binom(m+n, n)
    assert len(partitions_in_box(2, 2)) == 6
    assert len(partitions_in_box(3, 2)) == 10
    assert len(partitions_in_box(0, 4)) == 1
    for la in partitions_in_box(3, 2):
        assert len(la) <= 2 and part(la, 1) <= 3


def test_contains():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (2, 2, 1))
    assert contains((1,), ())


def test_families_partition_parity():
    # inside any box, even-column and odd-column shapes are disjoint
    for m in range(4):
        for n in range(1, 4):
            ec = set(family("even_cols", m, n))
            oc = set(family("odd_cols", m, n))
            assert not (ec & oc)
            for la in family("even", m, n):
                assert all(p % 2 == 0 for p in la)
    assert family("even_cols", 0, 3) == [()]
    assert family("odd_cols", 0, 3) == []
    # odd columns force full width
    for la in family("odd_cols", 3, 3):
        assert part(la, 1) == 3


def test_index_set_roundtrip():
    rng = random.Random(8)
    for _ in range(80):
        n = rng.randint(1, 5)
        la = normalize(tuple(sorted((rng.randint(0, 5) for _ in range(n)), reverse=True)))
        idx = index_set(la, n)
        assert len(set(idx)) == n
        assert list(idx) == sorted(idx)
        assert from_index_set(idx) == la
    assert index_set((), 4) == (0, 1, 2, 3)


def test_frobenius_roundtrip():
    rng = random.Random(13)
    for _ in range(80):
        la = normalize(tuple(sorted((rng.randint(0, 7) for _ in range(6)), reverse=True)))
        arms, legs = frobenius(la)
        assert all(arms[i] > arms[i + 1] for i in range(len(arms) - 1))
        assert from_frobenius(arms, legs) == la


def test_add_rect_and_half_shift():
    assert add_rect((2, 1), 3, 3) == (5, 4, 3)
    assert add_rect((), 2, 2) == (2, 2)
    assert add_rect((1,), 0, 1) == (1,)
    with pytest.raises(ValueError):
        add_rect((1, 1, 1), 1, 2)
    assert half_shift((1,), 2) == (Fraction(3, 2), Fraction(1, 2))


def test_parse_and_format():
    assert parse_shape("") == ()
    assert parse_shape("3,1,1") == (3, 1, 1)
    assert parse_shape("3/2,1/2") == (Fraction(3, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        parse_shape("1,2")
    assert format_shape((2, 1)) == "(2,1)"
    assert format_shape(()) == "()"
