"""Checks for the summation identities and their Pfaffian machinery."""

import itertools
import random
from fractions import Fraction

import pytest

from intsymp.poly import LaurentPoly, PolyFrac
from intsymp.linalg import det, pfaffian
from intsymp.shapes import partitions_in_box, conjugate, index_set
from intsymp.characters import intsymp_char, poly_prod
from intsymp import identities as idn

rng = random.Random(20240901)


def test_main_identity_spec_cases():
    assert idn.verify_main(1, 2, 1, 1, 0)["equal"]
    assert idn.verify_main(2, 2, 0, 2, 0)["equal"]
    assert idn.verify_main(4, 2, 2, 1, 0)["equal"]
    assert idn.verify_main(3, 3, 2, 2, 1)["equal"]


def test_main_identity_small_sweep():
    # the full grid is the acceptance suite's job; this is the cheap core
    for n in (1, 2):
        for k in range(n + 1):
            for m in (0, 1, 2):
                for a in (0, 1):
                    for variant in (1, 2, 3, 4):
                        if variant == 2 and (m == 0 or m % 2):
                            continue
                        if variant == 4 and m == 0:
                            continue
                        r = idn.verify_main(variant, n, k, m, a)
                        assert r["equal"], r


def test_main_identity_fractional_sides():
    # odd m makes the right side a ratio of characters rather than a
    # polynomial; equality still holds as unreduced fractions
    assert idn.verify_main(1, 3, 1, 1, 0)["equal"]
    assert idn.verify_main(3, 3, 2, 1, 0)["equal"]
    assert idn.verify_main(4, 3, 2, 1, 1)["equal"]


def test_main_identity_rejects_bad_parameters():
    with pytest.raises(ValueError):
        idn.verify_main(2, 2, 1, 1, 0)  # odd m in the even-rows variant
    with pytest.raises(ValueError):
        idn.verify_main(4, 2, 1, 0, 0)  # difference variant needs m >= 1
    with pytest.raises(ValueError):
        idn.verify_main(5, 2, 1, 1, 0)
    with pytest.raises(ValueError):
        idn.verify_main(1, 2, 3, 1, 0)


def test_schur_specializations():
    for n in (1, 2, 3):
        for m in (0, 1, 2):
            for case_id in (1, 2, 3, 4, 5, 6):
                if case_id >= 3 and m == 0:
                    continue
                assert idn.verify_main_schur(n, m, case_id), (n, m, case_id)


def test_rectangle_factorizations():
    for n in (1, 2, 3):
        for m in range(4):
            assert idn.verify_rect_factorizations(n, m), (n, m)


def test_truncation_case_table():
    n = 2
    for k in (1, 2):
        for m in (1, 2):
            for la in partitions_in_box(m, n):
                if idn.part(la, 1) != m and la:
                    got = idn.truncate_at_zero(la, k, n, m)
                    assert got.is_zero() or not got.terms, (la, k, m)
                    continue
                got = idn.truncate_at_zero(la, k, n, m)
                if idn.part(la, 1) == m:
                    want = intsymp_char(la[1:], n - 1, k - 1)
                    assert got == want, (la, k, m)
                else:
                    assert not got.terms, (la, k, m)


def test_truncation_classical():
    # same surgery on the classical characters, half-integers included
    assert idn.truncate_classical_at_zero("symp", (2, 1), 2, 2) is not None
    got = idn.truncate_classical_at_zero("symp", (2, 1), 2, 2)
    from intsymp.characters import symp_char
    assert got == symp_char((1,), 1)
    got = idn.truncate_classical_at_zero("orth_b", (Fraction(3, 2), Fraction(1, 2)), 2, Fraction(3, 2))
    from intsymp.characters import orth_b_char
    assert got == orth_b_char((Fraction(1, 2),), 1)
    got = idn.truncate_classical_at_zero("orth_d", (1,), 1, 2)
    assert not got.terms


def test_truncation_transports_main_identity():
    assert idn.reduction_transports_main(2, 1, 1, 0)
    assert idn.reduction_transports_main(2, 2, 2, 1)
    assert idn.reduction_transports_main(3, 2, 1, 1)


def _random_x(rows, cols, arity):
    mat = []
    for i in range(rows):
        row = []
        for j in range(cols):
            exps = tuple(2 * rng.randint(-2, 2) for _ in range(arity))
            row.append(LaurentPoly.monomial(arity, exps,
                                            rng.choice((-1, 1, 2))))
        mat.append(row)
    return mat


def test_minor_summation_random_matrices():
    for n in (2, 4):
        for top in (n + 1, n + 3):
            for _ in range(3):
                x_mat = _random_x(n, top, 2)
                y_mat = [[0] * top for _ in range(top)]
                for i in range(top):
                    for j in range(i + 1, top):
                        v = rng.randint(-2, 2)
                        y_mat[i][j] = v
                        y_mat[j][i] = -v
                assert idn.minor_summation_check(x_mat, y_mat), (n, top)


def test_minor_summation_structured_kernels():
    # the three structured skew matrices used by the main summations
    for n in (2, 4):
        for m in (1, 2):
            x_mat = _random_x(n, n + m, 2)
            for kind in ("B", "C"):
                y = idn.build_subpf_matrices(n, m, kind)
                assert idn.minor_summation_check(x_mat, y), (n, m, kind)
            for eps in (1, -1):
                y = idn.build_subpf_matrices(n, m, "D", eps=eps)
                assert idn.minor_summation_check(x_mat, y), (n, m, eps)


def test_structured_pfaffian_values():
    # closed forms for the principal sub-Pfaffians indexed by partitions
    for n in (2, 4):
        for m in (1, 2, 3):
            for la in partitions_in_box(m, n):
                for kind, eps in (("B", 1), ("C", 1), ("D", 1), ("D", -1)):
                    y = idn.build_subpf_matrices(n, m, kind, eps=eps)
                    got = idn.subpf_value(y, la, n)
                    want = idn.expected_subpf(kind, la, m, n, eps)
                    assert got == want, (n, m, la, kind, eps)


def test_x_minors_give_shifted_characters():
    n = 2
    for k in range(n + 1):
        for a in (0, 1):
            for la in partitions_in_box(2, n):
                assert idn.x_minor_char_check(la, n, k, 2, a), (k, a, la)


def test_q_matrix_endpoint_shapes():
    # at k = 0 and k = n the entries collapse to single closed fractions
    for n in (2, 4):
        width = 3 * n
        xs = [LaurentPoly.x_var(width, i) for i in range(n)]
        avec = [LaurentPoly.x_var(width, n + i) for i in range(n)]
        bvec = [LaurentPoly.x_var(width, 2 * n + i) for i in range(n)]
        q0 = idn.build_Q(n, 0, xs, avec, [])
        qn = idn.build_Q(n, n, xs, avec, bvec)
        for i in range(n):
            for j in range(i + 1, n):
                xi, xj = PolyFrac(xs[i]), PolyFrac(xs[j])
                ai, aj = PolyFrac(avec[i]), PolyFrac(avec[j])
                bi, bj = PolyFrac(bvec[i]), PolyFrac(bvec[j])
                mix = 1 - xi * xj
                assert q0[i][j] == idn._qpol(xi, xj, ai, aj) / mix
                want = -(idn._qpol(xi, xj, ai, aj) * idn._qpol(xi, xj, bi, bj)) \
                    / ((xj - xi) * mix)
                assert qn[i][j] == want


def test_pfaffian_is_det_product_symbolic():
    for k in range(3):
        assert idn.verify_pf_det_det(2, k), k


def _distinct_fractions(count):
    seen = set()
    out = []
    while len(out) < count:
        v = Fraction(rng.randint(2, 9), rng.randint(10, 19))
        if v in seen:
            continue
        seen.add(v)
        out.append(v)
    return out


def test_pfaffian_is_det_product_at_points():
    n = 4
    for k in range(n + 1):
        for _ in range(3):
            xs = _distinct_fractions(n)
            avec = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n)]
            bvec = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(k)]
            assert idn.verify_pf_det_det(n, k, xs=xs, avec=avec, bvec=bvec), k


def test_sums_match_pfaffians():
    cases = [(1, 2, 1, 1, 0), (2, 2, 0, 2, 0), (4, 2, 2, 1, 0),
             (3, 2, 1, 2, 1), (1, 2, 2, 2, 1), (3, 2, 2, 1, 0),
             (2, 2, 1, 2, 1), (2, 2, 2, 2, 0), (4, 2, 1, 2, 0),
             (4, 2, 1, 1, 1), (4, 2, 0, 1, 0), (3, 2, 0, 1, 0),
             (1, 2, 0, 2, 1)]
    for c in cases:
        assert idn.verify_sum_eq_pf(*c), c


def test_sum_pfaffian_rejects_odd_n():
    with pytest.raises(ValueError):
        idn.verify_sum_eq_pf(1, 3, 1, 1, 0)
    with pytest.raises(ValueError):
        idn.verify_sum_eq_pf(1, 2, 1, 0, 0)


def test_two_zone_sign_pfaffian():
    for n in (2, 4):
        for size in range(n + 1):
            for kset in itertools.combinations(range(1, n + 1), size):
                assert idn.verify_signzone_pf(n, set(kset)), (n, kset)


def test_det_evaluations():
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            assert idn.verify_detW_evaluations(n, m), (n, m)
    for n in (1, 2, 3):
        for k in range(n + 1):
            for m in (0, 1, 2):
                for a in (0, 1):
                    assert idn.verify_detU_evaluations(n, k, m, a), (n, k, m, a)
    with pytest.raises(ValueError):
        idn.verify_detW_evaluations(2, 0)


def _sign_product(n, inset, xs, one):
    # (-1)^(n#I - sum I) prod (x_j - x_i) over same-side pairs times
    # prod (1 - x_i x_j) over cross pairs, all 1-based
    out = one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i in inset) == (j in inset):
                out = out * (xs[j - 1] - xs[i - 1])
            else:
                out = out * (one - xs[i - 1] * xs[j - 1])
    if (n * len(inset) - sum(inset)) % 2:
        out = -out
    return out


def test_coefficient_determinants():
    # multilinearity in the a and b rows: each coefficient is itself a
    # mixed Vandermonde determinant with a closed product form
    n = 4
    xs = [LaurentPoly.x_var(n, i) for i in range(n)]
    one = LaurentPoly.one(n)
    for size in range(n + 1):
        for inset in itertools.combinations(range(1, n + 1), size):
            iset = set(inset)
            mat = [[xs[i - 1] ** (n - j) if i in iset else xs[i - 1] ** (j - 1)
                    for j in range(1, n + 1)] for i in range(1, n + 1)]
            assert det(mat) == _sign_product(n, iset, xs, one), inset
    k, big_n = 3, 5
    ys = [LaurentPoly.x_var(k, i) for i in range(k)]
    one = LaurentPoly.one(k)
    for size in range(k + 1):
        for inset in itertools.combinations(range(1, k + 1), size):
            jset = set(inset)
            mat = [[ys[i - 1] ** (k - j) if i in jset
                    else ys[i - 1] ** (big_n - k + j - 1)
                    for j in range(1, k + 1)] for i in range(1, k + 1)]
            want = _sign_product(k, jset, ys, one)
            for i in range(1, k + 1):
                if i not in jset:
                    want = want * ys[i - 1] ** (big_n - k)
            assert det(mat) == want, inset
