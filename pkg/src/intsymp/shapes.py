"""Partitions and the shape families used by the summation identities.

A partition is a tuple of weakly decreasing positive values with trailing
zeros trimmed; () is the empty partition.  Parts are ints except where a
routine explicitly allows half-integers (staircase-shifted rectangles),
in which case Fractions appear.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement


def normalize(parts):
    parts = tuple(p for p in parts if p)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing")
    if parts and parts[-1] < 0:
        raise ValueError("negative part")
    return parts


def size(la):
    return sum(la)


def length(la):
    return len(la)


def part(la, i):
    """1-based part access with zero padding."""
    return la[i - 1] if 1 <= i <= len(la) else 0


def conjugate(la):
    if not la:
        return ()
    m = la[0]
    return tuple(sum(1 for p in la if p >= j) for j in range(1, m + 1))


def contains(outer, inner):
    return all(part(outer, i) >= part(inner, i) for i in range(1, len(inner) + 1))


def add_rect(la, a, n):
    """Add a columns of height n: la + (a^n).  Requires len(la) <= n."""
    if len(la) > n:
        raise ValueError("partition taller than the rectangle")
    if a == 0:
        return la
    return normalize(tuple(part(la, i) + a for i in range(1, n + 1)))


def partitions_in_box(width, height):
    """All partitions with at most `height` parts, each at most `width`."""
    out = []
    for comb in combinations_with_replacement(range(width + 1), height):
        la = tuple(sorted(comb, reverse=True))
        out.append(normalize(la))
    # combinations_with_replacement repeats nothing, but normalize may
    # collide shapes of different padded lengths; dedupe keeps it clean.
    return sorted(set(out), key=lambda la: (sum(la), la))


def is_even_partition(la):
    return all(p % 2 == 0 for p in la)


def family(name, m, n):
    """Shape families inside the m x n box.

    par:   all partitions in the box
    even:  partitions with all parts (rows) even
    even_cols: partitions whose columns 1..m all have even height
               (equivalently the conjugate inside the n x m box has all
               parts even); at m = 0 this is {()}
    odd_cols:  columns 1..m all of odd height; empty at m = 0 since there
               are no columns to be odd
    """
    box = partitions_in_box(m, n)
    if name == "par":
        return box
    if name == "even":
        return [la for la in box if is_even_partition(la)]
    if name == "even_cols":
        if m == 0:
            return [()]
        out = []
        for la in box:
            cols = conjugate(la) + (0,) * (m - len(conjugate(la)))
            if all(c % 2 == 0 for c in cols[:m]):
                out.append(la)
        return out
    if name == "odd_cols":
        if m == 0:
            return []
        out = []
        for la in box:
            cols = conjugate(la) + (0,) * (m - len(conjugate(la)))
            if all(c % 2 == 1 for c in cols[:m]):
                out.append(la)
        return out
    raise ValueError("unknown family %r" % name)


def index_set(la, n):
    """{ part(la, n+1-q) + q - 1 : q = 1..n }: the strictly increasing
    label set attached to a partition with at most n parts."""
    if len(la) > n:
        raise ValueError("too many parts")
    return tuple(part(la, n + 1 - q) + q - 1 for q in range(1, n + 1))


def from_index_set(idx):
    """Inverse of index_set: given strictly increasing labels, recover la."""
    n = len(idx)
    la = tuple(idx[n - i] - (n - i) for i in range(1, n + 1))
    return normalize(la)


def frobenius(la):
    """Frobenius coordinates (arms | legs) of a partition."""
    d = 0
    while part(la, d + 1) > d:
        d += 1
    arms = tuple(part(la, i) - i for i in range(1, d + 1))
    legs = tuple(part(conjugate(la), i) - i for i in range(1, d + 1))
    return arms, legs


def from_frobenius(arms, legs):
    d = len(arms)
    if len(legs) != d:
        raise ValueError("mismatched coordinate lengths")
    rows = []
    for i in range(1, d + 1):
        rows.append(arms[i - 1] + i)
    # rows below the diagonal come from the legs of the conjugate
    mu_cols = []
    for i in range(1, d + 1):
        mu_cols.append(legs[i - 1] + i)
    height = mu_cols[0] if mu_cols else 0
    la = list(rows) + [0] * (height - d)
    for i in range(1, d + 1):
        for r in range(d, mu_cols[i - 1]):
            la[r] += 1
    return normalize(tuple(la))


def half_shift(la, n):
    """la + (1/2, ..., 1/2) with n parts, as a tuple of Fractions."""
    if len(la) > n:
        raise ValueError("too many parts")
    return tuple(Fraction(part(la, i)) + Fraction(1, 2) for i in range(1, n + 1))


def parse_shape(text):
    """Parse a comma-separated shape; '' is the empty partition and parts
    may be fractions like 3/2."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        f = Fraction(tok)
        parts.append(int(f) if f.denominator == 1 else f)
    tup = tuple(parts)
    if any(Fraction(tup[i]) < Fraction(tup[i + 1]) for i in range(len(tup) - 1)):
        raise ValueError("parts must be weakly decreasing")
    if tup and Fraction(tup[-1]) < 0:
        raise ValueError("negative part")
    return tuple(p for p in tup if p)


def format_shape(la):
    if not la:
        return "()"
    return "(" + ",".join(str(p) for p in la) + ")"
