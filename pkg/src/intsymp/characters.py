"""Classical Weyl characters and determinant routes to the interpolating ones.

The tableau model in tableaux.py is the definition of the character
sp^{(k,n-k)}_la; this module provides the determinant formulas for the same
object: two Jacobi-Trudi forms, a staggered-alphabet one, two bialternants,
Giambelli on Frobenius hooks, two dual (conjugate shape) determinants and
the universal symplectic Schur function cut off at a finite alphabet.  The
test suite insists all routes agree with the tableau sum.

The classical characters (Schur, symplectic, odd and even orthogonal) are
also available in unreduced ratio form because the summation identities
evaluate them at half-integer rectangles, where an individual character may
fail to be a Laurent polynomial even though the identity as a whole is.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import det
from .poly import LaurentPoly, PolyFrac
from .shapes import conjugate, frobenius, normalize, part
from .tableaux import tableau_char


def mixed_letters(n, k, lo=1):
    """Monomial alphabet x_lo, 1/x_lo, ..., x_k, 1/x_k, x_{k+1}, ..., x_n.

    The first max(k - lo + 1, 0) variables come paired with their
    inverses; for lo > k the list is plain x_lo, ..., x_n.
    """
    out = []
    for j in range(lo, k + 1):
        out.append(LaurentPoly.x_var(n, j - 1))
        out.append(LaurentPoly.x_var(n, j - 1, power2=-2))
    for j in range(max(lo, k + 1), n + 1):
        out.append(LaurentPoly.x_var(n, j - 1))
    return out


def hom_list(letters, rmax, arity):
    """h_0 .. h_rmax of a monomial alphabet.

    One letter is absorbed at a time; the ascending update uses the already
    extended h[r-1], which is exactly the recursion
    h_r(.., z) = h_r(..) + z h_{r-1}(.., z).
    """
    h = [LaurentPoly.one(arity)] + [LaurentPoly.zero(arity) for _ in range(rmax)]
    for z in letters:
        for r in range(1, rmax + 1):
            h[r] = h[r] + z * h[r - 1]
    return h


def elem_list(letters, rmax, arity):
    """e_0 .. e_rmax; the update runs downward so each letter enters once."""
    e = [LaurentPoly.one(arity)] + [LaurentPoly.zero(arity) for _ in range(rmax)]
    for z in letters:
        for r in range(rmax, 0, -1):
            e[r] = e[r] + z * e[r - 1]
    return e


def poly_prod(factors, arity):
    p = LaurentPoly.one(arity)
    for f in factors:
        p = p * f
    return p


# ---------------------------------------------------------------------
# classical characters
# ---------------------------------------------------------------------

KINDS = ("schur", "symp", "orth_b", "orth_d")


def _half2(v):
    f = Fraction(v) * 2
    if f.denominator != 1:
        raise ValueError("part off the half-integer lattice: %r" % (v,))
    return int(f)


def _parts2(la, n, least2):
    """Doubled parts padded to length n, with monotonicity checks."""
    p2 = [_half2(p) for p in la]
    if len(p2) > n:
        raise ValueError("more parts than variables")
    p2 += [0] * (n - len(p2))
    if any(p2[i] < p2[i + 1] for i in range(n - 1)):
        raise ValueError("parts must be weakly decreasing")
    if p2 and p2[-1] < least2:
        raise ValueError("last part below the allowed range")
    return p2


def pair_factor(width, i, j):
    """x_i + 1/x_i - x_j - 1/x_j (0-based variable slots)."""
    return (LaurentPoly.x_var(width, i) + LaurentPoly.x_var(width, i, power2=-2)
            - LaurentPoly.x_var(width, j) - LaurentPoly.x_var(width, j, power2=-2))


def classical_denom_factors(kind, n, arity=None):
    """The Weyl denominator of the given kind as a list of factors.

    The product of the list equals the denominator determinant; for
    orth_d the trailing constant 2 is part of it.
    """
    width = n if arity is None else arity
    fs = []
    if kind == "schur":
        for i in range(n):
            for j in range(i + 1, n):
                fs.append(LaurentPoly.x_var(width, i) - LaurentPoly.x_var(width, j))
        return fs
    if kind == "symp":
        for i in range(n):
            fs.append(LaurentPoly.x_var(width, i) - LaurentPoly.x_var(width, i, power2=-2))
    elif kind == "orth_b":
        for i in range(n):
            fs.append(LaurentPoly.x_var(width, i, power2=1)
                      - LaurentPoly.x_var(width, i, power2=-1))
    elif kind != "orth_d":
        raise ValueError("unknown kind %r" % kind)
    for i in range(n):
        for j in range(i + 1, n):
            fs.append(pair_factor(width, i, j))
    if kind == "orth_d" and n > 0:
        # keep the constant last so the polynomial factors divide first
        fs.append(LaurentPoly.const(width, 2))
    return fs


def _power_matrix(exps2, n, width, sign):
    """Rows indexed by doubled exponents e: entries x_j^e + sign * x_j^{-e}
    (plain x_j^e when sign is 0)."""
    mat = []
    for e2 in exps2:
        row = []
        for j in range(n):
            m = LaurentPoly.x_var(width, j, power2=e2)
            if sign:
                m = m + LaurentPoly.x_var(width, j, power2=-e2, c=sign)
            row.append(m)
        mat.append(row)
    return mat


def _as_poly(v, width):
    if isinstance(v, LaurentPoly):
        return v
    return LaurentPoly.const(width, v)


def classical_numer(kind, la, n, arity=None):
    """Numerator determinant of the Weyl character ratio.

    For orth_d this includes the factor 2 attached when la_n > 0, so the
    character is exactly classical_numer / prod(classical_denom_factors).
    """
    width = n if arity is None else arity
    least2 = -1 if kind == "symp" else 0
    p2 = _parts2(la, n, least2)
    if n == 0:
        return LaurentPoly.one(width)
    if kind == "schur":
        exps2 = [p2[i] + 2 * (n - 1 - i) for i in range(n)]
        sign = 0
    elif kind == "symp":
        exps2 = [p2[i] + 2 * (n - i) for i in range(n)]
        sign = -1
    elif kind == "orth_b":
        exps2 = [p2[i] + 2 * (n - i) - 1 for i in range(n)]
        sign = -1
    elif kind == "orth_d":
        exps2 = [p2[i] + 2 * (n - 1 - i) for i in range(n)]
        sign = 1
    else:
        raise ValueError("unknown kind %r" % kind)
    num = _as_poly(det(_power_matrix(exps2, n, width, sign)), width)
    if kind == "orth_d" and p2[-1] > 0:
        num = 2 * num
    return num


def classical_frac(kind, la, n, arity=None):
    """Weyl character as an unreduced PolyFrac (no division attempted)."""
    width = n if arity is None else arity
    num = classical_numer(kind, la, n, arity)
    den = poly_prod(classical_denom_factors(kind, n, arity), width)
    return PolyFrac(num, den)


def classical_char(kind, la, n, arity=None):
    """Weyl character as a Laurent polynomial.

    Raises ExactDivisionError when the ratio is not polynomial (this
    happens for symp at la_n = -1/2; use classical_frac there).
    """
    num = classical_numer(kind, la, n, arity)
    return num.div_exact_many(classical_denom_factors(kind, n, arity))


def schur_char(la, n, arity=None):
    return classical_char("schur", la, n, arity)


def symp_char(la, n, arity=None):
    return classical_char("symp", la, n, arity)


def orth_b_char(la, n, arity=None):
    return classical_char("orth_b", la, n, arity)


def orth_d_char(la, n, arity=None):
    return classical_char("orth_d", la, n, arity)


# ---------------------------------------------------------------------
# interpolating characters by determinant
# ---------------------------------------------------------------------

METHODS = ("tableau", "jt1", "jt2", "jt3", "bialt", "bialt-bar",
           "giambelli", "dual-jt1", "dual-jt2", "univ-sc")

#: methods defined only for shapes with at most k+1 rows
SHORT_METHODS = ("jt3", "dual-jt2", "univ-sc")


def _pick(hs, r, arity):
    if r < 0:
        return LaurentPoly.zero(arity)
    return hs[r]


def intsymp_denom_factors(n, k):
    """Factors of det A_empty = det Abar_empty for parameters (k, n-k)."""
    fs = []
    for i in range(k):
        fs.append(LaurentPoly.x_var(n, i) - LaurentPoly.x_var(n, i, power2=-2))
    for i in range(k):
        for j in range(i + 1, k):
            fs.append(pair_factor(n, i, j))
    for i in range(k, n):
        for j in range(i + 1, n):
            fs.append(LaurentPoly.x_var(n, i) - LaurentPoly.x_var(n, j))
    return fs


def _jt1(la, n, k):
    rmax = part(la, 1) + n
    cols = [hom_list(mixed_letters(n, k, lo=j), rmax, n) for j in range(1, n + 1)]
    mat = []
    for i in range(1, n + 1):
        mat.append([_pick(cols[j - 1], part(la, i) - i + j, n) for j in range(1, n + 1)])
    return _as_poly(det(mat), n)


def _jt2(la, n, k):
    rmax = part(la, 1) + n
    full = hom_list(mixed_letters(n, k), rmax, n)
    tail = hom_list(mixed_letters(n, k, lo=k + 1), rmax, n)
    mat = []
    for i in range(1, n + 1):
        li = part(la, i)
        row = []
        for j in range(1, n + 1):
            if j == 1:
                row.append(_pick(full, li - i + 1, n))
            elif j <= k:
                row.append(_pick(full, li - i + j, n) + _pick(full, li - i - j + 2, n))
            else:
                row.append(_pick(tail, li - i + j, n))
        mat.append(row)
    return _as_poly(det(mat), n)


def _jt3(la, n, k):
    l = len(la)
    if l > k + 1:
        raise ValueError("this determinant needs l(la) <= k+1")
    if l == 0:
        return LaurentPoly.one(n)
    full = hom_list(mixed_letters(n, k), la[0] + l, n)
    mat = []
    for i in range(1, l + 1):
        li = la[i - 1]
        row = [_pick(full, li - i + 1, n)]
        for j in range(2, l + 1):
            row.append(_pick(full, li - i + j, n) + _pick(full, li - i - j + 2, n))
        mat.append(row)
    return _as_poly(det(mat), n)


def _bialt(la, n, k):
    rmax = part(la, 1) + k + 1
    tail_letters = mixed_letters(n, k, lo=k + 1)
    hplus, hminus = [], []
    for j in range(1, k + 1):
        hplus.append(hom_list([LaurentPoly.x_var(n, j - 1)] + tail_letters, rmax, n))
        hminus.append(hom_list([LaurentPoly.x_var(n, j - 1, power2=-2)] + tail_letters,
                               rmax, n))
    mat = []
    for i in range(1, n + 1):
        e = part(la, i) + k - i + 1
        row = []
        for j in range(1, k + 1):
            row.append(_pick(hplus[j - 1], e, n) - _pick(hminus[j - 1], e, n))
        for j in range(k + 1, n + 1):
            row.append(LaurentPoly.x_var(n, j - 1, power2=2 * (part(la, i) + n - i)))
        mat.append(row)
    num = _as_poly(det(mat), n)
    return num.div_exact_many(intsymp_denom_factors(n, k))


def _bialt_bar(la, n, k):
    # columns j <= k are cleared of their geometric-series denominators:
    # the entry is x_j^e prod_l (1 - x_j x_l) - x_j^{-e} prod_l (1 - x_j/x_l)
    # with l running over the unpaired variables, so the extra product
    # factors join the empty-shape denominator in the final division.
    extra = []
    plus, minus = [], []
    for j in range(1, k + 1):
        pj = LaurentPoly.one(n)
        mj = LaurentPoly.one(n)
        for l in range(k + 1, n + 1):
            fp = 1 - LaurentPoly.x_var(n, j - 1) * LaurentPoly.x_var(n, l - 1)
            fm = 1 - LaurentPoly.x_var(n, j - 1, power2=-2) * LaurentPoly.x_var(n, l - 1)
            pj = pj * fp
            mj = mj * fm
            extra.append(fp)
            extra.append(fm)
        plus.append(pj)
        minus.append(mj)
    mat = []
    for i in range(1, n + 1):
        e2 = 2 * (part(la, i) + k - i + 1)
        row = []
        for j in range(1, k + 1):
            row.append(LaurentPoly.x_var(n, j - 1, power2=e2) * plus[j - 1]
                       - LaurentPoly.x_var(n, j - 1, power2=-e2) * minus[j - 1])
        for j in range(k + 1, n + 1):
            row.append(LaurentPoly.x_var(n, j - 1, power2=2 * (part(la, i) + n - i)))
        mat.append(row)
    num = _as_poly(det(mat), n)
    return num.div_exact_many(intsymp_denom_factors(n, k) + extra)


def _hook(arm, leg):
    return (arm + 1,) + (1,) * leg


def _giambelli(la, n, k):
    arms, legs = frobenius(la)
    r = len(arms)
    if r == 0:
        return LaurentPoly.one(n)
    mat = [[_jt1(_hook(arms[i], legs[j]), n, k) for j in range(r)] for i in range(r)]
    return _as_poly(det(mat), n)


def e_circ_list(n, k):
    """Coefficients of (1 - t^2) prod_{i=1}^k (1 + x_i t)(1 + x_i^{-1} t).

    Indices run 0 .. 2k+2; entries 0 <= r <= k agree with the symplectic
    character of a column (1^r) in x_1, ..., x_k, and entry k+1 vanishes.
    """
    y = []
    for i in range(k):
        y.append(LaurentPoly.x_var(n, i))
        y.append(LaurentPoly.x_var(n, i, power2=-2))
    ey = elem_list(y, 2 * k + 2, n)
    out = []
    for r in range(2 * k + 3):
        v = ey[r]
        if r >= 2:
            v = v - ey[r - 2]
        out.append(v)
    return out


def dual_e(r, m, n, k, ecirc, etail):
    """e_{r,m}: the e-circle/tail convolution cut off at p <= k - m.

    The cutoff is what makes the column structure of the first dual
    determinant work; the second one needs dual_e_series instead.
    """
    total = LaurentPoly.zero(n)
    for p in range(0, k - m + 1):
        if 0 <= r - p <= n - k:
            total = total + ecirc[p] * etail[r - p]
    return total


def dual_e_series(r, n, k, ecirc, etail):
    """Coefficient of t^r in (1-t^2) prod_{i<=k} (1+x_i t)(1+x_i^{-1} t)
    prod_{l>k} (1+x_l t): the full convolution, no cutoff.

    Agrees with dual_e(r, 0, ...) for r <= k but keeps the top
    coefficients of the paired-alphabet factor that the cutoff drops;
    the paired-shape determinant is only valid with these included.
    """
    total = LaurentPoly.zero(n)
    for p in range(len(ecirc)):
        if 0 <= r - p <= n - k:
            total = total + ecirc[p] * etail[r - p]
    return total


def _dual_jt1(la, n, k):
    w = part(la, 1)
    if w == 0:
        return LaurentPoly.one(n)
    lc = conjugate(la)
    ecirc = e_circ_list(n, k)
    etail = elem_list(mixed_letters(n, k, lo=k + 1), n - k, n)
    mat = []
    for i in range(1, w + 1):
        row = []
        for j in range(1, w + 1):
            s = LaurentPoly.zero(n)
            for m in range(j):
                s = s + dual_e(part(lc, i) - i + j - 2 * m, m, n, k, ecirc, etail)
            row.append(s)
        mat.append(row)
    return _as_poly(det(mat), n)


def _dual_jt2(la, n, k):
    if len(la) > k + 1:
        raise ValueError("this determinant needs l(la) <= k+1")
    w = part(la, 1)
    if w == 0:
        return LaurentPoly.one(n)
    lc = conjugate(la)
    ecirc = e_circ_list(n, k)
    etail = elem_list(mixed_letters(n, k, lo=k + 1), n - k, n)
    mat = []
    for i in range(1, w + 1):
        ci = part(lc, i)
        row = [dual_e_series(ci - i + 1, n, k, ecirc, etail)]
        for j in range(2, w + 1):
            row.append(dual_e_series(ci - i + j, n, k, ecirc, etail)
                       + dual_e_series(ci - i - j + 2, n, k, ecirc, etail))
        mat.append(row)
    return _as_poly(det(mat), n)


def _univ_sc(la, n, k):
    # expand the determinant once over free symbols h_1, h_2, ... and only
    # then substitute the finite alphabet; this exercises the universal
    # character rather than re-deriving the staggered determinant
    l = len(la)
    if l > k + 1:
        raise ValueError("the universal route needs l(la) <= k+1")
    if l == 0:
        return LaurentPoly.one(n)
    topr = la[0] + l

    def sh(r):
        if r < 0:
            return LaurentPoly.zero(topr)
        if r == 0:
            return LaurentPoly.one(topr)
        return LaurentPoly.x_var(topr, r - 1)

    mat = []
    for i in range(1, l + 1):
        li = la[i - 1]
        row = [sh(li - i + 1)]
        for j in range(2, l + 1):
            row.append(sh(li - i + j) + sh(li - i - j + 2))
        mat.append(row)
    sym = _as_poly(det(mat), topr)

    hs = hom_list(mixed_letters(n, k), topr, n)
    total = LaurentPoly.zero(n)
    for e, c in sym.terms.items():
        prod = LaurentPoly.const(n, c)
        for idx, d2 in enumerate(e):
            if d2:
                prod = prod * hs[idx + 1] ** (d2 // 2)
        total = total + prod
    return total


def intsymp_char(la, n, k, method="tableau"):
    """The character sp^{(k,n-k)}_la computed by the requested route.

    All routes return the same polynomial; the short-shape methods in
    SHORT_METHODS raise ValueError when l(la) > k+1.
    """
    la = normalize(la)
    if any(not isinstance(p, int) for p in la):
        raise ValueError("interpolating characters need integer shapes")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if len(la) > n:
        return LaurentPoly.zero(n)
    if method == "tableau":
        return tableau_char(la, n, k)
    if method == "jt1":
        return _jt1(la, n, k)
    if method == "jt2":
        return _jt2(la, n, k)
    if method == "jt3":
        return _jt3(la, n, k)
    if method == "bialt":
        return _bialt(la, n, k)
    if method == "bialt-bar":
        return _bialt_bar(la, n, k)
    if method == "giambelli":
        return _giambelli(la, n, k)
    if method == "dual-jt1":
        return _dual_jt1(la, n, k)
    if method == "dual-jt2":
        return _dual_jt2(la, n, k)
    if method == "univ-sc":
        return _univ_sc(la, n, k)
    raise ValueError("unknown method %r" % method)
