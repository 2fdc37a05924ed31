"""Shifted plane partitions on the double-staircase shape.

For parameters (k, n-k) the shape has n rows; row i (1-based) starts at
column i and has length

    n + k - 2i + 2   for i <= k
    n - i + 1        for i > k.

A filling sigma assigns a nonnegative integer to each cell, weakly
decreasing along rows and down columns.  The l-th trace is the sum of the
entries on diagonal j - i = l, and two statistics are built from traces:

    v(sigma) = (k - 1/2) t_0 + sum_{l=0}^{n-k-1} t_l - n t_{n-k}
               + sum_{l=n-k}^{n+k-1} (-1)^(l-n+k+1) (l-n+k) t_l
    w(sigma) = k t_0 + sum_{l=0}^{n-k-1} t_l - n t_{n-k}
               + sum_{l=n-k}^{n+k-1} (-1)^(l-n+k+1) (l-n+k+1) t_l

At k = 0 these collapse to |sigma| - t_0/2 and |sigma|.  The diagonal
profile (sigma_11, sigma_22, ..., sigma_nn) is a partition; grouping the
generating sums by profile is what links these objects to characters.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import LaurentPoly
from .shapes import normalize


def spp_rows(n, k):
    """Row lengths of the shape."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return tuple(n + k - 2 * i + 2 if i <= k else n - i + 1 for i in range(1, n + 1))


def enumerate_spp(n, k, bound, profile=None):
    """Yield all fillings with entries <= bound, rows as tuples.

    With profile given, only fillings whose diagonal equals it (padded
    with zeros to n) are produced; the bound is then implied by
    profile[0] but an explicit smaller bound still applies.
    """
    mu = spp_rows(n, k)
    if profile is not None:
        prof = tuple(profile) + (0,) * (n - len(profile))
        if len(prof) != n:
            raise ValueError("profile too long")
        bound = min(bound, prof[0]) if prof else bound
    rows = [[0] * m for m in mu]

    def rec(i, off):
        if i == n:
            yield tuple(tuple(r) for r in rows)
            return
        if off == mu[i]:
            yield from rec(i + 1, 0)
            return
        j = (i + 1) + off  # absolute column
        cap = bound
        if off > 0:
            cap = min(cap, rows[i][off - 1])
        if i > 0:
            # cell above sits in row i-1 (1-based i), column j; its offset
            # there is j - i; it exists when 0 <= j - i < mu[i-1]
            t = j - i
            if 0 <= t < mu[i - 1]:
                cap = min(cap, rows[i - 1][t])
        lo = 0
        if profile is not None and off == 0:
            want = prof[i]
            if want > cap:
                return
            lo = cap = want
        for v in range(cap, lo - 1, -1):
            rows[i][off] = v
            yield from rec(i, off + 1)
        rows[i][off] = 0

    yield from rec(0, 0)


def spp_profile(sigma):
    return normalize(tuple(row[0] for row in sigma))


def spp_traces(sigma, n, k):
    """t_l for l = 0 .. n+k-1."""
    mu = spp_rows(n, k)
    out = []
    for l in range(n + k):
        s = 0
        for i in range(n):
            if l < mu[i]:
                s += sigma[i][l]
        out.append(s)
    return out


def spp_size(sigma):
    return sum(sum(row) for row in sigma)


def stat_v(sigma, n, k):
    t = spp_traces(sigma, n, k)
    total = Fraction(2 * k - 1, 2) * t[0]
    for l in range(0, n - k):
        total += t[l]
    if n - k < len(t):
        total -= n * t[n - k]
    for l in range(n - k, n + k):
        c = l - n + k
        total += (c if (c + 1) % 2 == 0 else -c) * t[l]
    return total


def stat_w(sigma, n, k):
    t = spp_traces(sigma, n, k)
    total = k * t[0]
    for l in range(0, n - k):
        total += t[l]
    if n - k < len(t):
        total -= n * t[n - k]
    for l in range(n - k, n + k):
        c = l - n + k
        total += ((c + 1) if (c + 1) % 2 == 0 else -(c + 1)) * t[l]
    return total


def _q_of(value):
    f = Fraction(value)
    if f.denominator not in (1, 2):
        raise ValueError("statistic off the half lattice")
    return (int(2 * f),)


_TABLE_CACHE = {}


def profile_weight_table(n, k, bound):
    """{profile: (sum q^v, sum q^w)} over all fillings with entries <= bound.

    Cached per (n, k); a larger bound refreshes the cache and any profile
    present for a smaller bound is complete there too (fillings with
    max entry <= small bound are a subset keyed by the same profiles).
    """
    got = _TABLE_CACHE.get((n, k))
    if got is not None and got[0] >= bound:
        table, stored_bound = got[1], got[0]
        if stored_bound == bound:
            return table
        # filter out profiles exceeding the requested bound
        return {p: pw for p, pw in table.items() if not p or p[0] <= bound}
    table = {}
    for sigma in enumerate_spp(n, k, bound):
        p = spp_profile(sigma)
        qv = _q_of(stat_v(sigma, n, k))
        qw = _q_of(stat_w(sigma, n, k))
        got_p = table.get(p)
        if got_p is None:
            table[p] = [LaurentPoly(1, {qv: 1}), LaurentPoly(1, {qw: 1})]
        else:
            got_p[0] = got_p[0] + LaurentPoly(1, {qv: 1})
            got_p[1] = got_p[1] + LaurentPoly(1, {qw: 1})
    table = {p: (a, b) for p, (a, b) in table.items()}
    _TABLE_CACHE[(n, k)] = (bound, table)
    return table


def clear_spp_cache():
    _TABLE_CACHE.clear()


def count_spp(n, k, bound):
    """Number of fillings with entries <= bound."""
    return sum(1 for _ in enumerate_spp(n, k, bound))
