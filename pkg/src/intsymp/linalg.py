"""Division-free determinants and Pfaffians over any commutative ring.

Entries may be ints, Fractions, LaurentPolys or PolyFracs; the only
requirement is +, -, * and scalar mixing with int, which all of those
support.  Determinants use the Berkowitz vector recurrence (no division,
so no fraction-field blowup on polynomial entries); Pfaffians use the
expansion along the first live row, memoized on the subset bitmask.
"""

from __future__ import annotations


def det(matrix):
    """Berkowitz division-free determinant."""
    n = len(matrix)
    if n == 0:
        return 1
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]

    # V holds the coefficient vector of the characteristic polynomial of
    # the current leading principal submatrix (Samuelson-Berkowitz).
    V = [1, -matrix[0][0]]
    for r in range(1, n):
        # R = row r against columns <r, C = column r against rows <r,
        # A = leading principal r x r block.
        R = [matrix[r][j] for j in range(r)]
        C = [matrix[i][r] for i in range(r)]
        A = [[matrix[i][j] for j in range(r)] for i in range(r)]
        # items[t] = coefficient multiplying V shifted by t:
        # [1, -M[r][r], -R*C, -R*A*C, -R*A^2*C, ...]
        items = [1, -matrix[r][r]]
        v = C
        for _ in range(r):
            s = 0
            for a, b in zip(R, v):
                s = s + a * b
            items.append(-s)
            if len(items) == r + 2:
                break
            v = [sum_product(A[i], v) for i in range(r)]
        newV = []
        for i in range(r + 2):
            s = 0
            for j in range(min(i, len(V) - 1) + 1):
                t = i - j
                if t < len(items):
                    s = s + items[t] * V[j]
            newV.append(s)
        V = newV
    d = V[n]
    return -d if n % 2 else d


def sum_product(row, vec):
    s = 0
    for a, b in zip(row, vec):
        s = s + a * b
    return s


def det_cofactor(matrix):
    """Cofactor-expansion determinant, as an independent cross-check.

    Exponential; keep the order small.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        a = matrix[0][j]
        if isinstance(a, int) and a == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = a * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def pfaffian(matrix):
    """Pfaffian of a skew-symmetric matrix of even order.

    Subset dynamic programming: expand along the smallest live index.
    Memoizing on the index bitmask gives 2^n states instead of (n-1)!!
    leaves, which is plenty for the orders used here (n <= 12 or so).
    """
    n = len(matrix)
    if n % 2:
        return 0
    if n == 0:
        return 1
    memo = {}

    def rec(mask, idxs):
        if not idxs:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        i = idxs[0]
        total = 0
        sign = 1
        for t in range(1, len(idxs)):
            j = idxs[t]
            a = matrix[i][j]
            if not (isinstance(a, int) and a == 0):
                rest = idxs[1:t] + idxs[t + 1:]
                sub = rec(mask & ~(1 << i) & ~(1 << j), rest)
                term = a * sub
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    full = (1 << n) - 1
    return rec(full, tuple(range(n)))


def check_skew(matrix, zero=0):
    n = len(matrix)
    for i in range(n):
        if matrix[i][i] != zero:
            raise ValueError("diagonal not zero")
        for j in range(i + 1, n):
            if matrix[i][j] != -matrix[j][i]:
                raise ValueError("not skew-symmetric")


def submatrix(matrix, rows, cols):
    return [[matrix[i][j] for j in cols] for i in rows]


def pf_principal(matrix, idxs):
    """Pfaffian of the principal submatrix on the given index list."""
    return pfaffian(submatrix(matrix, idxs, idxs))
