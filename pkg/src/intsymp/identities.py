"""Verification of the box-summation identities and their Pfaffian mechanics.

Everything here is a check, not a computation for its own sake: each
function builds both sides of one published identity out of independent
ingredients (tableau sums on one side, Weyl-type character ratios and
Pfaffians on the other) and compares them exactly.  Rational functions
are carried as unreduced numerator/denominator pairs and compared by
cross multiplication, so a reported equality is a ring identity, not a
numerical coincidence.
"""

from fractions import Fraction
from itertools import combinations

from .poly import LaurentPoly, PolyFrac
from .linalg import det, pfaffian
from .shapes import conjugate, family, normalize, part, index_set
from .characters import (
    intsymp_char,
    intsymp_denom_factors,
    orth_b_char,
    orth_d_char,
    poly_prod,
    symp_char,
)
from .tableaux import char_table

VARIANTS = (1, 2, 3, 4)


def _xv(width, i, power2=2, c=1):
    return LaurentPoly.x_var(width, i, power2=power2, c=c)


def _half_product(size, arity=None):
    # prod_{i < size} (x_i^{1/2} + x_i^{-1/2})
    width = size if arity is None else arity
    return poly_prod(
        [_xv(width, i, 1) + _xv(width, i, -1) for i in range(size)], width)


def symp_rect_frac(r, size, arity=None):
    """The symplectic character of the rectangle (r^size) as a fraction.

    For integer r this is a polynomial; for half-integer r >= -1/2 it is
    an odd orthogonal rectangle over prod (x_i^{1/2} + x_i^{-1/2}),
    which is how half-integer symplectic characters are defined.
    """
    r = Fraction(r)
    width = size if arity is None else arity
    if r.denominator == 1:
        return PolyFrac(symp_char((r,) * size, size, arity=width))
    num = orth_b_char((r + Fraction(1, 2),) * size, size, arity=width)
    return PolyFrac(num, _half_product(size, width))


def shifted_shape(la, n, a):
    """la + (a^n): add a to every one of the n (possibly zero) parts."""
    return normalize(tuple(part(la, i) + a for i in range(1, n + 1)))


def check_case(variant, n, k, m, a):
    if variant not in VARIANTS:
        raise ValueError("variant must be 1..4")
    if not (0 <= k <= n):
        raise ValueError("need 0 <= k <= n")
    if m < 0 or a < 0 or int(m) != m or int(a) != a:
        raise ValueError("m and a must be nonnegative integers")
    if variant == 2 and m % 2:
        raise ValueError("variant 2 needs even m")
    if variant == 4 and m == 0:
        raise ValueError("variant 4 needs m >= 1")


def main_lhs(variant, n, k, m, a):
    """Sum of intermediate characters over the variant's shape family."""
    check_case(variant, n, k, m, a)
    if variant == 1:
        fams = [(1, family("par", m, n))]
    elif variant == 2:
        fams = [(1, family("even", m, n))]
    elif variant == 3:
        fams = [(1, family("even_cols", m, n)), (1, family("odd_cols", m, n))]
    else:
        fams = [(1, family("even_cols", m, n)), (-1, family("odd_cols", m, n))]
    # one DP pass per (n, k, m+a) serves every summand
    table = char_table(n, k, m + a)
    zero = LaurentPoly.zero(n)
    total = zero
    for sign, fam in fams:
        for la in fam:
            c = table.get(shifted_shape(la, n, a), zero)
            total = total + c if sign > 0 else total - c
    return total


def main_rhs(variant, n, k, m, a):
    """Product side of the summation identity, as an unreduced fraction.

    The denominator is 1 for even m; for odd m the symplectic rectangle
    factors contribute prod (x_i^{1/2} + x_i^{-1/2}) denominators.
    """
    check_case(variant, n, k, m, a)
    half_m = Fraction(m, 2)
    if variant == 1:
        out = PolyFrac(orth_b_char((half_m,) * n, n))
    elif variant == 2:
        out = PolyFrac(symp_char((half_m,) * n, n))
    elif variant == 3:
        out = PolyFrac(orth_d_char((half_m,) * n, n))
    else:
        out = symp_rect_frac(half_m - 1, n)
        if n % 2:
            out = -out
    if variant == 4:
        out = out * orth_d_char((half_m + a + 1,) * k, k, arity=n)
        for i in range(k, n):
            out = out * (_xv(n, i, m + 2 * a) * (_xv(n, i) - _xv(n, i, -2)))
    else:
        out = out * symp_rect_frac(half_m + a, k, n)
        for i in range(k, n):
            out = out * _xv(n, i, m + 2 * a)
    return out


def verify_main(variant, n, k, m, a):
    """Compare both sides of one summation identity.

    Returns a report dict; `equal` is exact LaurentPoly (or cleared
    fraction) equality. Inequality is reported, never raised.
    """
    lhs = main_lhs(variant, n, k, m, a)
    rhs = main_rhs(variant, n, k, m, a)
    return {
        "variant": variant,
        "n": n,
        "k": k,
        "m": m,
        "a": a,
        "lhs": lhs,
        "rhs": rhs,
        "equal": PolyFrac(lhs) == rhs,
    }


# ---------------------------------------------------------------------
# rectangular Schur reductions
# ---------------------------------------------------------------------

def schur_of_letters(la, letters, arity):
    """Schur polynomial of an explicit list of monomial letters.

    Computed as the bialternant det(l_q^{la_p + N - p}) / det(l_q^{N - p})
    with the Vandermonde denominator divided out factor by factor.
    """
    la = normalize(la)
    nl = len(letters)
    if len(la) > nl:
        return LaurentPoly.zero(arity)
    exps = [part(la, p) + nl - p for p in range(1, nl + 1)]
    mat = [[letters[q] ** exps[p] for q in range(nl)] for p in range(nl)]
    numer = det(mat)
    if isinstance(numer, int):
        numer = LaurentPoly.const(arity, numer)
    fs = [letters[p] - letters[q]
          for p in range(nl) for q in range(p + 1, nl)]
    return numer.div_exact_many(fs)


def _pair_letters(n, upto):
    out = []
    for i in range(upto):
        out.append(_xv(n, i))
        out.append(_xv(n, i, -2))
    return out


def corollary_letters(n, case_id):
    """Letter lists used by the six rectangular Schur identities."""
    if case_id == 1:
        return _pair_letters(n, n - 1) + [_xv(n, n - 1), LaurentPoly.one(n)]
    if case_id == 2:
        return _pair_letters(n, n) + [LaurentPoly.one(n)]
    if case_id in (3, 4):
        return _pair_letters(n, n - 1) + [_xv(n, n - 1)]
    if case_id in (5, 6):
        return _pair_letters(n, n)
    raise ValueError("case_id must be 1..6")


def verify_main_schur(n, m, case_id):
    """One of the six rectangular Schur identities.

    Cases 1 and 2 sum over all partitions in the box; cases 3..6 pick
    the all-even-columns or all-odd-columns family, swapping the two
    when n is odd.
    """
    if case_id not in (1, 2, 3, 4, 5, 6):
        raise ValueError("case_id must be 1..6")
    if m < 0 or (case_id >= 3 and m == 0):
        raise ValueError("m out of range for this case")
    letters = corollary_letters(n, case_id)
    rect = (m,) * (n if case_id in (1, 2, 3, 5) else n - 1)
    lhs = schur_of_letters(rect, letters, n)
    k = n if case_id in (2, 5, 6) else n - 1
    if case_id in (1, 2):
        fam = family("par", m, n)
    else:
        even_first = case_id in (3, 5)
        wants_even = even_first == (n % 2 == 0)
        fam = family("even_cols" if wants_even else "odd_cols", m, n)
    rhs = LaurentPoly.zero(n)
    for la in fam:
        rhs = rhs + intsymp_char(la, n, k)
    return lhs == rhs


def verify_rect_factorizations(n, m):
    """The six factorization formulas behind the rectangular Schur
    identities: products of an orthogonal and a symplectic rectangle.

    Checks the two plain ones for any m >= 0 and the four +/- pairs for
    m >= 1. The m = 1 minus-identities run through the fraction field.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    half_m = Fraction(m, 2)
    ob = orth_b_char((half_m,) * n, n)
    od = orth_d_char((half_m,) * n, n)
    sp_full = symp_rect_frac(half_m, n)
    sp_head = symp_rect_frac(half_m, n - 1, n)
    xn_half = _xv(n, n - 1, m)

    s_big1 = schur_of_letters((m,) * n, corollary_letters(n, 1), n)
    s_big2 = schur_of_letters((m,) * n, corollary_letters(n, 2), n)
    ok = (PolyFrac(s_big1) == sp_head * ob * xn_half
          and PolyFrac(s_big2) == sp_full * ob)
    if m == 0 or not ok:
        return ok

    s35 = schur_of_letters((m,) * n, corollary_letters(n, 3), n)
    s46 = schur_of_letters((m,) * (n - 1), corollary_letters(n, 3), n)
    t35 = schur_of_letters((m,) * n, corollary_letters(n, 5), n)
    t46 = schur_of_letters((m,) * (n - 1), corollary_letters(n, 5), n)

    ok = ok and PolyFrac(s35 + s46) == sp_head * od * xn_half
    ok = ok and PolyFrac(t35 + t46) == sp_full * od

    sp_low = symp_rect_frac(half_m - 1, n)
    od_head = orth_d_char((half_m + 1,) * (n - 1), n - 1, arity=n)
    od_full = orth_d_char((half_m + 1,) * n, n)
    tail = xn_half * (_xv(n, n - 1) - _xv(n, n - 1, -2))
    ok = ok and PolyFrac(s35 - s46) == sp_low * od_head * tail
    ok = ok and PolyFrac(t35 - t46) == sp_low * od_full
    return ok


# ---------------------------------------------------------------------
# reduction at x_1 = 0
# ---------------------------------------------------------------------

def truncate_at_zero(la, k, n, m):
    """x_1^m times the intermediate character, evaluated at x_1 = 0.

    Needs 0 < k <= n and la_1 <= m; the result is a LaurentPoly in the
    surviving variables x_2, ..., x_n. Raises ValueError if a negative
    power of x_1 survives, which would contradict the reduction lemma.
    """
    la = normalize(la)
    if not (0 < k <= n):
        raise ValueError("need 0 < k <= n")
    if part(la, 1) > m:
        raise ValueError("need la_1 <= m")
    p = _xv(n, 0, 2 * m) * intsymp_char(la, n, k)
    return p.set_var_zero(0)


def truncate_classical_at_zero(kind, la, n, m):
    """Classical analogue of truncate_at_zero; m may be a half-integer."""
    from .characters import classical_char
    p = _xv(n, 0, int(2 * Fraction(m))) * classical_char(kind, la, n)
    return p.set_var_zero(0)


def reduction_transports_main(n, k, m, a):
    """Apply the x_1 = 0 reduction to both sides of the first summation
    identity at (n, k) and check that what comes out is the same
    identity at (n-1, k-1)."""
    if k < 1:
        raise ValueError("need k >= 1")
    shift = _xv(n, 0, 2 * (m + a))
    lhs_cut = (shift * main_lhs(1, n, k, m, a)).set_var_zero(0)
    rhs_cut = (shift * main_rhs(1, n, k, m, a).to_poly()).set_var_zero(0)
    down_l = main_lhs(1, n - 1, k - 1, m, a)
    down_r = main_rhs(1, n - 1, k - 1, m, a).to_poly()
    return lhs_cut == rhs_cut == down_l == down_r


# ---------------------------------------------------------------------
# minor summation and the index-set matrices
# ---------------------------------------------------------------------

def _matmul(rows_a, rows_b):
    out = []
    for ra in rows_a:
        row = []
        for j in range(len(rows_b[0])):
            acc = 0
            for t, v in enumerate(ra):
                acc = acc + v * rows_b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _transpose(rows):
    return [list(col) for col in zip(*rows)]


def _pick_minor(rows, row_idx, col_idx):
    return [[rows[i][j] for j in col_idx] for i in row_idx]


def minor_summation_check(x_mat, y_mat):
    """Brute force of the minor summation identity.

    x_mat is n x (M+1) with n even, y_mat skew-symmetric of order M+1.
    Sums Pf of the J-submatrix of y times the J-column minor of x over
    all n-subsets J and compares with Pf(x y x^T).
    """
    n = len(x_mat)
    width = len(x_mat[0])
    if n % 2:
        raise ValueError("need even n")
    total = 0
    for j_set in combinations(range(width), n):
        pf = pfaffian(_pick_minor(y_mat, j_set, j_set))
        if isinstance(pf, int) and pf == 0:
            continue
        total = total + pf * det(_pick_minor(x_mat, range(n), j_set))
    rhs = pfaffian(_matmul(_matmul(x_mat, y_mat), _transpose(x_mat)))
    return total == rhs


def build_subpf_matrices(n, m, kind, eps=1):
    """The three index-set skew matrices of order n+m.

    kind "B": all ones above the diagonal. kind "C": 1 at (even, odd)
    positions. kind "D": 1 on the superdiagonal and eps in the corner.
    """
    size = n + m
    mat = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if kind == "B":
                v = 1
            elif kind == "C":
                v = 1 if (i % 2 == 0 and j % 2 == 1) else 0
            elif kind == "D":
                if j == i + 1:
                    v = 1
                elif (i, j) == (0, size - 1):
                    v = eps
                else:
                    v = 0
            else:
                raise ValueError("kind must be B, C or D")
            mat[i][j] = v
            mat[j][i] = -v
    return mat


def subpf_value(y_mat, la, n):
    """Pf of the submatrix of y_mat picked by the index set of la."""
    idx = index_set(la, n)
    return pfaffian(_pick_minor(y_mat, idx, idx))


def expected_subpf(kind, la, m, n, eps=1):
    """Case table for the index-set Pfaffians."""
    la = normalize(la)
    if kind == "B":
        return 1
    if kind == "C":
        return 1 if all(v % 2 == 0 for v in la) else 0
    conj = conjugate(la)
    if all(v % 2 == 0 for v in conj):
        return 1
    if part(la, 1) == m and all(v % 2 == 1 for v in conj):
        return eps
    return 0


def build_X_matrix(n, k, m, a):
    """The n x (n+m) matrix whose I_n(la) minors are, up to the fixed
    denominator, the shifted intermediate characters. Entries in the
    first k rows are unreduced fractions."""
    rows = []
    one = LaurentPoly.one(n)
    for j in range(1, n + 1):
        row = []
        if j <= k:
            plus = poly_prod(
                [one - _xv(n, j - 1, -2) * _xv(n, l) for l in range(k, n)], n)
            minus = poly_prod(
                [one - _xv(n, j - 1) * _xv(n, l) for l in range(k, n)], n)
            den = plus * minus
            for r in range(n + m):
                e = a + r - n + k + 1
                num = (_xv(n, j - 1, 2 * e) * minus
                       - _xv(n, j - 1, -2 * e) * plus)
                row.append(PolyFrac(num, den))
        else:
            for r in range(n + m):
                row.append(PolyFrac(_xv(n, j - 1, 2 * (a + r))))
        rows.append(row)
    return rows


def intsymp_denominator(n, k):
    return poly_prod(intsymp_denom_factors(n, k), n)


def x_minor_char_check(la, n, k, m, a):
    """det of the I_n(la) minor over the signed empty-shape denominator
    equals the shifted intermediate character."""
    x_mat = build_X_matrix(n, k, m, a)
    idx = index_set(la, n)
    minor = det(_pick_minor(x_mat, range(n), idx))
    den = intsymp_denominator(n, k)
    if (n * (n - 1) // 2) % 2:
        den = -den
    return minor == PolyFrac(intsymp_char(shifted_shape(la, n, a), n, k) * den,
                             LaurentPoly.one(n))


# ---------------------------------------------------------------------
# the Q matrix and its evaluation as a product of determinants
# ---------------------------------------------------------------------

def _qpol(xi, xj, ai, aj):
    # (xj - xi)(1 - ai aj) + (1 - xi xj)(aj - ai), in fraction arithmetic.
    # The sign of the first term is pinned by the k=0 endpoint, where the
    # Pfaffian of the 2x2 case must reproduce the two-variable det below.
    return (xj - xi) * (1 - ai * aj) + (1 - xi * xj) * (aj - ai)


def _as_const(v):
    if isinstance(v, LaurentPoly):
        return v
    return LaurentPoly.const(0, v)


def build_Q(n, k, xs, avec, bvec):
    """Skew-symmetric n x n matrix of unreduced fractions.

    xs and avec have length n, bvec length k; entries may be any
    LaurentPolys (monomials and arity-0 constants both work). The three
    index zones carry different entry shapes; rows and columns past k
    never see bvec.
    """
    if n % 2:
        raise ValueError("need even n")
    one = LaurentPoly.one(xs[0].arity)
    xf = [PolyFrac(x) for x in xs]
    xr = [PolyFrac(one, x) for x in xs]
    af = [PolyFrac(v) for v in avec]
    bf = [PolyFrac(v) for v in bvec]

    def f_val(u):
        # u^{n-k} / prod_{l>k} (1 - u x_l)
        top = PolyFrac(u.num ** (n - k), u.den ** (n - k))
        prod = PolyFrac(one)
        for l in range(k, n):
            prod = prod * (1 - u * xf[l])
        return top / prod

    fpos = [f_val(xf[i]) for i in range(k)]
    fneg = [f_val(xr[i]) for i in range(k)]

    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if i < k and j < k:
                q = _qpol(xf[i], xf[j], af[i], af[j])
                inv_mix = 1 - xf[i] * xf[j]
                diff = xf[j] - xf[i]
                inner = (fneg[i] * fneg[j] * bf[i] * bf[j] / inv_mix
                         + fneg[i] * fpos[j] * bf[i] / diff
                         - fpos[i] * fneg[j] * bf[j] / diff
                         - fpos[i] * fpos[j] / inv_mix)
                entry = q * inner
            elif i < k:
                q = _qpol(xf[i], xf[j], af[i], af[j])
                entry = -q * (fneg[i] * bf[i] / (1 - xf[i] * xf[j])
                              - fpos[i] / (xf[j] - xf[i]))
            else:
                entry = _qpol(xf[i], xf[j], af[i], af[j]) / (1 - xf[i] * xf[j])
            mat[i][j] = entry
            mat[j][i] = -entry
    return mat


def build_W_matrix(n, xs, avec):
    """n x n rows (x_i^{j-1} + a_i x_i^{n-j})_{j=1..n}."""
    return [[xs[i] ** (j - 1) + avec[i] * xs[i] ** (n - j)
             for j in range(1, n + 1)]
            for i in range(n)]


def build_U_matrix(k, n, ys, bvec):
    """k x k rows (y_i^{n-k+j-1} + b_i y_i^{k-j})_{j=1..k}."""
    return [[ys[i] ** (n - k + j - 1) + bvec[i] * ys[i] ** (k - j)
             for j in range(1, k + 1)]
            for i in range(k)]


def pf_det_det_denominator(n, k, xs):
    one = LaurentPoly.one(xs[0].arity)
    out = one
    for i in range(k):
        for j in range(i + 1, k):
            out = out * (xs[j] - xs[i]) * (one - xs[i] * xs[j])
    for i in range(k):
        for j in range(k, n):
            out = out * (xs[j] - xs[i]) * (one - xs[i] * xs[j])
    for i in range(k, n):
        for j in range(i + 1, n):
            out = out * (one - xs[i] * xs[j])
    return out


def verify_pf_det_det(n, k, xs=None, avec=None, bvec=None):
    """Pf of the Q matrix against the two-determinant product.

    With no arguments the check is fully symbolic: x, a, b are 2n+k
    independent variables. Passing arity-0 constants gives an exact
    rational point check instead.
    """
    if xs is None:
        width = 2 * n + k
        xs = [_xv(width, i) for i in range(n)]
        avec = [_xv(width, n + i) for i in range(n)]
        bvec = [_xv(width, 2 * n + i) for i in range(k)]
    else:
        xs = [_as_const(v) for v in xs]
        avec = [_as_const(v) for v in avec]
        bvec = [_as_const(v) for v in bvec]
    pf = pfaffian(build_Q(n, k, xs, avec, bvec))
    detw = det(build_W_matrix(n, xs, avec))
    detu = det(build_U_matrix(k, n, xs[:k], bvec))
    if isinstance(detu, int):
        detu = LaurentPoly.const(xs[0].arity, detu)
    num = detw * detu
    if (k * (k - 1) // 2) % 2:
        num = -num
    rhs = PolyFrac(num, pf_det_det_denominator(n, k, xs))
    if isinstance(pf, int):
        pf = PolyFrac(LaurentPoly.const(xs[0].arity, pf))
    return pf == rhs


def verify_sum_eq_pf(variant, n, k, m, a):
    """Tableau-side sum against the prefactored Pf of the specialized Q.

    Only even n makes sense here. The specializations a_i, b_i per
    variant are monomials in the x_i themselves.
    """
    check_case(variant, n, k, m, a)
    if n % 2 or m == 0:
        raise ValueError("need even n and m >= 1")
    xs = [_xv(n, i) for i in range(n)]
    one = LaurentPoly.one(n)
    if variant == 1:
        avec = [_xv(n, i, 2 * (m + n), c=-1) for i in range(n)]
        extra = poly_prod([one - _xv(n, i) for i in range(n)], n)
    elif variant == 2:
        avec = [_xv(n, i, 2 * (m + n + 1), c=-1) for i in range(n)]
        extra = poly_prod([one - _xv(n, i, 4) for i in range(n)], n)
    elif variant == 3:
        avec = [_xv(n, i, 2 * (m + n - 1)) for i in range(n)]
        extra = one
    else:
        avec = [_xv(n, i, 2 * (m + n - 1), c=-1) for i in range(n)]
        extra = one
    bsign = 1 if variant == 4 else -1
    bvec = [_xv(n, i, 2 * (2 * a + m + n + 1), c=bsign) for i in range(k)]
    pf = pfaffian(build_Q(n, k, xs, avec, bvec))
    if isinstance(pf, int):
        pf = PolyFrac(LaurentPoly.const(n, pf))
    mono = LaurentPoly.one(n)
    for i in range(k):
        mono = mono * _xv(n, i, -2 * a)
    for i in range(k, n):
        mono = mono * _xv(n, i, 2 * a)
    den = intsymp_denominator(n, k) * extra
    for i in range(k):
        den = den * _xv(n, i, 2 * (m + n))
    if (n * (n - 1) // 2) % 2:
        den = -den
    if variant == 4 and k % 2:
        # the positive b-specialization contributes a sign once per b-row
        den = -den
    rhs = pf * PolyFrac(mono, den)
    return PolyFrac(main_lhs(variant, n, k, m, a)) == rhs


# ---------------------------------------------------------------------
# closed Pfaffian of the two-zone sign matrix
# ---------------------------------------------------------------------

def build_signzone_matrix(n, kset):
    """Skew matrix whose Pfaffian has the closed product form: the
    (i,j) entry is -(x_j-x_i)/(1-x_ix_j), (x_j-x_i)/(1-x_ix_j), -1 or 1
    according to membership of 1-based i, j in kset."""
    one = LaurentPoly.one(n)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ii, jj = i + 1, j + 1
            frac = PolyFrac(_xv(n, j) - _xv(n, i), one - _xv(n, i) * _xv(n, j))
            if ii in kset and jj in kset:
                entry = -frac
            elif ii not in kset and jj not in kset:
                entry = frac
            elif ii in kset:
                entry = PolyFrac(-one)
            else:
                entry = PolyFrac(one)
            mat[i][j] = entry
            mat[j][i] = -entry
    return mat


def signzone_pf_closed(n, kset):
    """(-1)^{sum kset} times the product of (x_j-x_i)/(1-x_ix_j) over
    same-side pairs i < j."""
    one = LaurentPoly.one(n)
    num, den = one, one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            same = (i in kset) == (j in kset)
            if same:
                num = num * (_xv(n, j - 1) - _xv(n, i - 1))
                den = den * (one - _xv(n, i - 1) * _xv(n, j - 1))
    if sum(kset) % 2:
        num = -num
    return PolyFrac(num, den)


def verify_signzone_pf(n, kset):
    got = pfaffian(build_signzone_matrix(n, kset))
    if isinstance(got, int):
        got = PolyFrac(LaurentPoly.const(n, got))
    return got == signzone_pf_closed(n, kset)


# ---------------------------------------------------------------------
# determinant evaluations of the W and U matrices
# ---------------------------------------------------------------------

def verify_detW_evaluations(n, m):
    """det W at the three monomial specializations of the a-vector
    against prefactored classical rectangles.

    Needs m >= 1: the even-orthogonal evaluation picks up its factor 2
    from a nonempty rectangle, and the zero rectangle has character 1.
    """
    if m < 1:
        raise ValueError("m must be positive")
    one = LaurentPoly.one(n)
    xs = [_xv(n, i) for i in range(n)]
    vand = one
    for i in range(n):
        for j in range(i + 1, n):
            vand = vand * (xs[j] - xs[i]) * (one - xs[i] * xs[j])
    mhalf = poly_prod([_xv(n, i, m) for i in range(n)], n)
    half_m = Fraction(m, 2)

    w1 = det(build_W_matrix(n, xs, [_xv(n, i, 2 * (m + n), c=-1)
                                    for i in range(n)]))
    r1 = mhalf * poly_prod([one - xs[i] for i in range(n)], n) * vand
    ok = w1 == r1 * orth_b_char((half_m,) * n, n)

    w2 = det(build_W_matrix(n, xs, [_xv(n, i, 2 * (m + n + 1), c=-1)
                                    for i in range(n)]))
    r2 = mhalf * poly_prod([one - _xv(n, i, 4) for i in range(n)], n) * vand
    ok = ok and PolyFrac(w2) == symp_rect_frac(half_m, n) * r2

    w3 = det(build_W_matrix(n, xs, [_xv(n, i, 2 * (m + n - 1))
                                    for i in range(n)]))
    ok = ok and w3 == mhalf * vand * orth_d_char((half_m,) * n, n)
    return ok


def verify_detU_evaluations(n, k, m, a):
    """det U at the two monomial specializations of the b-vector."""
    width = n
    one = LaurentPoly.one(width)
    ys = [_xv(width, i) for i in range(k)]
    vand = one
    for i in range(k):
        for j in range(i + 1, k):
            vand = vand * (ys[j] - ys[i]) * (one - ys[i] * ys[j])
    e2 = m + 2 * a
    half = Fraction(m, 2) + a

    u1 = det(build_U_matrix(k, n, ys,
                            [_xv(width, i, 2 * (m + 2 * a + n + 1), c=-1)
                             for i in range(k)]))
    if isinstance(u1, int):
        u1 = LaurentPoly.const(width, u1)
    r1 = poly_prod([_xv(width, i, e2 + 2 * (n - k)) for i in range(k)], width)
    r1 = r1 * poly_prod([one - _xv(width, i, 4) for i in range(k)], width)
    ok = PolyFrac(u1) == symp_rect_frac(half, k, width) * (r1 * vand)

    u2 = det(build_U_matrix(k, n, ys,
                            [_xv(width, i, 2 * (m + 2 * a + n + 1))
                             for i in range(k)]))
    if isinstance(u2, int):
        u2 = LaurentPoly.const(width, u2)
    r2 = poly_prod([_xv(width, i, e2 + 2 * (n - k + 1)) for i in range(k)],
                   width)
    ok = ok and u2 == r2 * vand * orth_d_char((half + 1,) * k, k, arity=width)
    return ok
