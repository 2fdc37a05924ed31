"""Tableau model for the interpolating characters.

The alphabet for parameters (k, n-k) is

    1 < 1' < 2 < 2' < ... < k < k' < k+1 < k+2 < ... < n

(primed letters are the "barred" ones; only the first k values carry a
primed partner).  A filling of the Young diagram of la is admissible when
rows weakly increase, columns strictly increase, and every entry of row i
is >= the unprimed letter i.  The weight of a letter is x_i for unprimed
i (any i), and 1/x_i for primed i.  Summing weights over all admissible
fillings gives the character: at k = n this is the classical symplectic
character, at k = 0 the Schur polynomial.

Letters are handled by their position t = 1..n+k in the alphabet order.
"""

from __future__ import annotations

from .poly import LaurentPoly
from .shapes import normalize


def n_letters(n, k):
    return n + k


def row_floor(i, k):
    """Position of the smallest letter allowed in (1-based) row i."""
    return 2 * i - 1 if i <= k else k + i


def max_row_of_letter(t, n, k):
    """Deepest row the letter at position t may occupy."""
    return (t + 1) // 2 if t <= 2 * k else t - k


def letter_weight(t, n, k):
    """(0-based variable index, exponent sign) of the letter at position t."""
    if t <= 2 * k:
        return (t + 1) // 2 - 1, (1 if t % 2 else -1)
    return t - k - 1, 1


def letter_name(t, n, k):
    if t <= 2 * k:
        i = (t + 1) // 2
        return str(i) if t % 2 else str(i) + "'"
    return str(t - k)


def horizontal_strips(mu, cap, max_len):
    """All nu with mu <= nu <= cap rowwise, nu/mu a horizontal strip and
    at most max_len rows.  cap must be weakly decreasing."""
    rows = min(max_len, len(cap))
    mu_p = list(mu) + [0] * (rows - len(mu))
    if len(mu) > rows:
        return []
    out = []
    cur = [0] * rows

    def rec(i):
        if i == rows:
            j = rows
            while j and cur[j - 1] == 0:
                j -= 1
            out.append(tuple(cur[:j]))
            return
        lo = mu_p[i]
        hi = cap[i] if i == 0 else min(cap[i], mu_p[i - 1])
        for v in range(lo, hi + 1):
            cur[i] = v
            if v == 0:
                # weak decrease forces the remaining rows to stay empty
                j = i
                while j and cur[j - 1] == 0:
                    j -= 1
                out.append(tuple(cur[:j]))
            else:
                rec(i + 1)
        cur[i] = 0

    rec(0)
    return out


def _letter_dp(n, k, cap):
    """Run the letter-by-letter strip DP under per-row caps.

    Returns {final shape: character polynomial in n variables}.  States are
    kept as raw term dicts and only wrapped at the end.
    """
    states = {(): {(0,) * n: 1}}
    for t in range(1, n + k + 1):
        var, sgn = letter_weight(t, n, k)
        depth = min(max_row_of_letter(t, n, k), len(cap))
        new = {}
        for mu, terms in states.items():
            for nu in horizontal_strips(mu, cap, depth):
                d = sum(nu) - sum(mu)
                tgt = new.get(nu)
                if tgt is None:
                    tgt = {}
                    new[nu] = tgt
                if d == 0:
                    for e, c in terms.items():
                        s = tgt.get(e, 0) + c
                        if s:
                            tgt[e] = s
                        else:
                            del tgt[e]
                else:
                    delta = 2 * sgn * d
                    for e, c in terms.items():
                        ne = e[:var] + (e[var] + delta,) + e[var + 1:]
                        s = tgt.get(ne, 0) + c
                        if s:
                            tgt[ne] = s
                        else:
                            del tgt[ne]
        states = new
    return {mu: LaurentPoly(n, terms) for mu, terms in states.items()}


def tableau_char(la, n, k):
    """Character of shape la with parameters (k, n-k), by the strip DP."""
    la = normalize(la)
    if any(not isinstance(p, int) for p in la):
        raise ValueError("tableau model needs integer parts")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if len(la) > n:
        return LaurentPoly.zero(n)
    if not la:
        return LaurentPoly.one(n)
    table = _letter_dp(n, k, la)
    return table.get(la, LaurentPoly.zero(n))


def tableau_char_box(n, k, width):
    """Characters of every shape inside the width^n box, in one DP pass."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    cap = (width,) * n if width else ()
    return _letter_dp(n, k, cap)


_BOX_CACHE = {}


def char_table(n, k, width):
    """Cached box table; tables only ever grow per (n, k)."""
    got = _BOX_CACHE.get((n, k))
    if got is not None and got[0] >= width:
        return got[1]
    table = tableau_char_box(n, k, width)
    _BOX_CACHE[(n, k)] = (width, table)
    return table


def clear_char_cache():
    _BOX_CACHE.clear()


def enumerate_tableaux(la, n, k):
    """All admissible fillings, rows as tuples of letter positions.

    Exponential; meant as the independent oracle for the DP and for
    counting fillings directly.
    """
    la = normalize(la)
    if len(la) > n:
        return []
    if not la:
        return [()]
    rows = len(la)
    T = [[0] * la[i] for i in range(rows)]
    cells = [(i, j) for i in range(rows) for j in range(la[i])]
    out = []
    top = n_letters(n, k)

    def rec(idx):
        if idx == len(cells):
            out.append(tuple(tuple(r) for r in T))
            return
        i, j = cells[idx]
        lo = row_floor(i + 1, k)
        if j > 0 and T[i][j - 1] > lo:
            lo = T[i][j - 1]
        if i > 0 and T[i - 1][j] + 1 > lo:
            lo = T[i - 1][j] + 1
        for v in range(lo, top + 1):
            T[i][j] = v
            rec(idx + 1)

    rec(0)
    return out


def tableau_monomial(T, n, k):
    """Weight of one filling, as a monomial."""
    exps = [0] * n
    for row in T:
        for t in row:
            var, sgn = letter_weight(t, n, k)
            exps[var] += 2 * sgn
    return LaurentPoly.monomial(n, tuple(exps))


def char_by_enumeration(la, n, k):
    """Character as a plain sum over fillings (oracle for tableau_char)."""
    total = LaurentPoly.zero(n)
    for T in enumerate_tableaux(la, n, k):
        total = total + tableau_monomial(T, n, k)
    return total


def format_tableau(T, n, k):
    return "\n".join(" ".join(letter_name(t, n, k) for t in row) for row in T)
