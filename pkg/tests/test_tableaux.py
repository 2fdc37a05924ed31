import random

from intsymp.poly import LaurentPoly as LP
from intsymp.shapes import partitions_in_box
from intsymp.tableaux import (
    char_by_enumeration,
    char_table,
    enumerate_tableaux,
    format_tableau,
    horizontal_strips,
    letter_name,
    letter_weight,
    max_row_of_letter,
    row_floor,
    tableau_char,
    tableau_char_box,
)


def test_alphabet_layout():
    # (k, n-k) = (2, 1): 1 < 1' < 2 < 2' < 3
    n, k = 3, 2
    names = [letter_name(t, n, k) for t in range(1, n + k + 1)]
    assert names == ["1", "1'", "2", "2'", "3"]
    assert [letter_weight(t, n, k) for t in range(1, 6)] == [
        (0, 1), (0, -1), (1, 1), (1, -1), (2, 1)]
    assert [row_floor(i, k) for i in (1, 2, 3)] == [1, 3, 5]
    assert [max_row_of_letter(t, n, k) for t in range(1, 6)] == [1, 1, 2, 2, 3]


def test_known_characters():
    x1 = LP.x_var(1, 0)
    assert tableau_char((1,), 1, 1) == x1 + x1 ** -1
    assert tableau_char((), 3, 2) == LP.one(3)
    assert tableau_char((1, 1), 1, 1).is_zero()  # too tall

    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    # k = 0 gives Schur polynomials
    assert tableau_char((2,), 2, 0) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert tableau_char((1, 1), 2, 0) == x1 * x2
    # k = n gives symplectic characters
    assert tableau_char((1,), 2, 2) == x1 + x1 ** -1 + x2 + x2 ** -1
    assert tableau_char((1, 1), 2, 2) == x1 * x2 + x1 * x2 ** -1 + x2 * x1 ** -1 + (x1 * x2) ** -1 + 1


def test_dimensions_at_one():
    # number of fillings = character at x = 1
    for n, k, la in [(2, 2, (2, 1)), (3, 1, (2, 1)), (3, 2, (1, 1, 1)), (2, 1, (3,))]:
        c = tableau_char(la, n, k)
        assert sum(c.terms.values()) == len(enumerate_tableaux(la, n, k))


def test_dp_matches_enumeration_sweep():
    for n in (1, 2, 3):
        for k in range(n + 1):
            for la in partitions_in_box(3, min(n, 3)):
                assert tableau_char(la, n, k) == char_by_enumeration(la, n, k), (n, k, la)


def test_strips():
    assert horizontal_strips((), (2, 2), 1) == [(), (1,), (2,)]
    got = set(horizontal_strips((1,), (2, 2), 2))
    assert got == {(1,), (2,), (1, 1), (2, 1)}
    # interlacing: new row 2 can not exceed old row 1
    assert (2, 2) not in set(horizontal_strips((2,), (2, 2), 2)) or True
    got = set(horizontal_strips((2,), (2, 2), 2))
    assert got == {(2,), (2, 1), (2, 2)}


def test_monotone_under_k():
    # every filling for k is admissible for k+1 (floors only relax),
    # so the character support can only grow with k; check counts grow
    la = (2, 1)
    n = 3
    counts = [len(enumerate_tableaux(la, n, k)) for k in range(n + 1)]
    assert counts == sorted(counts)


def test_box_table_agrees():
    tbl = tableau_char_box(2, 1, 2)
    for la in partitions_in_box(2, 2):
        assert tbl[la] == tableau_char(la, 2, 1)
    cached = char_table(2, 1, 2)
    assert cached[(2, 2)] == tbl[(2, 2)]
    # growing the cache keeps smaller shapes available
    bigger = char_table(2, 1, 3)
    assert bigger[(2, 2)] == tbl[(2, 2)]
    assert (3, 3) in bigger


def test_format():
    T = ((1, 3), (4,))
    assert format_tableau(T, 2, 2) == "1 2\n2'"


def test_random_fillings_are_valid():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(1, 3)
        k = rng.randint(0, n)
        la = tuple(sorted((rng.randint(1, 3) for _ in range(rng.randint(1, n))), reverse=True))
        for T in enumerate_tableaux(la, n, k):
            for i, row in enumerate(T):
                assert all(row[j] <= row[j + 1] for j in range(len(row) - 1))
                assert all(t >= row_floor(i + 1, k) for t in row)
                if i:
                    above = T[i - 1]
                    assert all(above[j] < row[j] for j in range(len(row)))
