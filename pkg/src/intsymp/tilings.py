"""Lozenge tilings of flashlight regions with one free vertical edge.

The region is a trapezoid of unit triangles between vertical lines
0, 1, ..., n+k (line 0 is the free edge).  Wall c is the strip between
lines c and c+1; positions inside a wall are half-integer heights stored
doubled, increasing from the top of the picture, and a triangle is

    (0, c, d)  base on line c, pointing away from the free edge,
    (1, c, e)  base on line c+1, pointing back at it,

with d == c (mod 2).  A lozenge is a pair of adjacent triangles: "flat"
(0,c,d)+(1,c-1,d+1) crossing line c, "rise" (0,c,d)+(1,c,d) and "fall"
(0,c,d)+(1,c,d+2) inside wall c.  Drawn with the free edge on the left
and the free-edge labels 0..m+n-1 increasing bottom to top, a rise climbs
toward the fixed side; rises are the lozenges the weight counts.

Tilings are not stored as coordinate sets.  Each tiling of the trapezoid
with protrusions at labels la_i + n - i is determined by a shifted plane
partition with n rows (row i one diagonal step in from row i-1, row
lengths n+k-2i+2 then n-i+1, entries at most the bound, weakly decreasing
both ways) whose profile is la: the cell (i, p) of the matrix puts a flat
lozenge at height 2*(bound - entry + i - 1) + p - 1 of wall p - 1, first
column cells protrude across the free edge, and the leftover triangles of
every wall have a unique completion by rises and falls.  The number of
rises in the i-th wall counting from the fixed side is the i-th trace
difference of the matrix, which is how tiling_weight reads weights off
without touching the geometry.  A perfect-matching backtracker over the
raw triangle adjacency double-checks all of this on regions of at most
MATCHING_TRIANGLE_CAP triangles.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import orth_b_char
from .identities import symp_rect_frac
from .poly import LaurentPoly, PolyFrac
from .shapes import conjugate, normalize, part
from .spp import enumerate_spp, spp_profile, spp_rows, spp_traces
from .tableaux import letter_weight, row_floor

MATCHING_TRIANGLE_CAP = 30


def region_triangle_count(m, n, k):
    """Unit triangles in the trapezoid with bound m, n rows, k of them long."""
    return 2 * m * (n + k) + n * n + k * k + k


def _check_region_params(m, n, k):
    for v in (m, n, k):
        if not isinstance(v, int) or v < 0:
            raise ValueError("region parameters must be nonnegative integers")
    if k > n:
        raise ValueError("need k <= n")


class FlashlightRegion:
    """The trapezoid F_{x,y,z,t} with every protrusion placement allowed.

    y + z protrusions cross the free edge, z of the walls come doubled,
    x bounds how far the protrusions spread, and t > 0 forces a corner:
    labels below t are blocked, so tilings correspond to shifted plane
    partitions with bound x + t and every profile part >= t.
    """

    __slots__ = ("x", "y", "z", "t")

    def __init__(self, x, y, z, t=0):
        for v in (x, y, z, t):
            if not isinstance(v, int) or v < 0:
                raise ValueError("region parameters must be nonnegative integers")
        self.x = x
        self.y = y
        self.z = z
        self.t = t

    @property
    def n(self):
        return self.y + self.z

    @property
    def k(self):
        return self.z

    @property
    def bound(self):
        return self.x + self.t

    def triangle_count(self):
        return region_triangle_count(self.bound, self.n, self.k)

    def __repr__(self):
        return "FlashlightRegion(%d, %d, %d, %d)" % (self.x, self.y, self.z, self.t)


class AnchoredRegion:
    """The same trapezoid with the protrusions pinned at labels la_i + n - i.

    Tilings correspond to shifted plane partitions with profile exactly la,
    so their number is the count of tableaux of shape la and their weight
    sum is the character sp^(k,n-k)_la, whatever the bound m >= la_1.
    """

    __slots__ = ("m", "n", "k", "shape")

    def __init__(self, m, n, k, shape):
        _check_region_params(m, n, k)
        shape = normalize(shape)
        if any(not isinstance(p, int) for p in shape):
            raise ValueError("profile parts must be integers")
        if len(shape) > n:
            raise ValueError("profile has more than n parts")
        if shape and shape[0] > m:
            raise ValueError("profile exceeds the bound")
        self.m = m
        self.n = n
        self.k = k
        self.shape = shape

    @property
    def labels(self):
        """Free-edge labels of the pinned protrusions, top down."""
        return tuple(part(self.shape, i) + self.n - i for i in range(1, self.n + 1))

    def triangle_count(self):
        return region_triangle_count(self.m, self.n, self.k)

    def __repr__(self):
        return "AnchoredRegion(%d, %d, %d, %r)" % (self.m, self.n, self.k, self.shape)


def _check_cells(cells, n, k, bound):
    mu = spp_rows(n, k)
    if len(cells) != n:
        raise ValueError("need exactly %d rows" % n)
    for i, row in enumerate(cells):
        if len(row) != mu[i]:
            raise ValueError("row %d must have length %d" % (i + 1, mu[i]))
        for j, e in enumerate(row):
            if not isinstance(e, int) or e < 0 or e > bound:
                raise ValueError("entries must lie in 0..%d" % bound)
            if j and row[j - 1] < e:
                raise ValueError("rows must weakly decrease")
        if i:
            for j, e in enumerate(row):
                if cells[i - 1][j + 1] < e:
                    raise ValueError("columns must weakly decrease")


class LozengeTiling:
    """One tiling, stored as its shifted plane partition matrix."""

    __slots__ = ("n", "k", "bound", "cells", "_tiles")

    def __init__(self, n, k, bound, cells):
        _check_region_params(bound, n, k)
        cells = tuple(tuple(r) for r in cells)
        _check_cells(cells, n, k, bound)
        self.n = n
        self.k = k
        self.bound = bound
        self.cells = cells
        self._tiles = None

    def profile(self):
        return spp_profile(self.cells)

    def protrusions(self):
        """Free-edge labels of the protruding lozenges, top down."""
        return tuple(row[0] + self.n - i for i, row in enumerate(self.cells, 1))

    def column_counts(self):
        """Rise lozenges per wall, counted from the fixed side."""
        t = list(spp_traces(self.cells, self.n, self.k)) + [0]
        w = self.n + self.k
        return tuple(t[w - i] - t[w - i + 1] for i in range(1, w + 1))

    def lozenges(self):
        """Every lozenge as (kind, wall, pos), kind in flat/rise/fall/half.

        pos is the doubled height of the away-pointing triangle; the list
        is an exact cover of the region or a ValueError escapes.
        """
        if self._tiles is None:
            self._tiles = _placement(self.cells, self.n, self.k, self.bound)
        return self._tiles

    def render(self):
        """The matrix, one row per line, shifted one cell per row."""
        if not self.cells:
            return ""
        w = max(len(str(e)) for row in self.cells for e in row)
        out = []
        for i, row in enumerate(self.cells):
            pad = " " * (i * (w + 1))
            out.append(pad + " ".join(str(e).rjust(w) for e in row))
        return "\n".join(out)

    def __eq__(self, other):
        if not isinstance(other, LozengeTiling):
            return NotImplemented
        return (self.n, self.k, self.bound, self.cells) == \
            (other.n, other.k, other.bound, other.cells)

    def __hash__(self):
        return hash((self.n, self.k, self.bound, self.cells))

    def __repr__(self):
        return "LozengeTiling(n=%d, k=%d, bound=%d, cells=%r)" % (
            self.n, self.k, self.bound, self.cells)


def enumerate_tilings(region):
    """All tilings of a flashlight or anchored region, one stream item each.

    Flashlight regions run over every allowed protrusion placement (profile
    parts >= t), anchored ones keep the profile fixed.
    """
    if isinstance(region, FlashlightRegion):
        n, k, b, t = region.n, region.k, region.bound, region.t
        for cells in enumerate_spp(n, k, b):
            if t and any(row[0] < t for row in cells):
                continue
            yield LozengeTiling(n, k, b, cells)
    elif isinstance(region, AnchoredRegion):
        for cells in enumerate_spp(region.n, region.k, region.m, profile=region.shape):
            yield LozengeTiling(region.n, region.k, region.m, cells)
    else:
        raise TypeError("expected a FlashlightRegion or AnchoredRegion")


def tiling_weight(T, k=None, n=None):
    """Monomial weight of one tiling.

    Rises in wall i from the fixed side weigh like the i-th letter of the
    (k, n-k) alphabet: x_j for i = 2j-1, 1/x_j for i = 2j (j <= k), and
    x_{i-k} beyond the doubled walls.
    """
    if k is None:
        k = T.k
    if n is None:
        n = T.n
    if (n, k) != (T.n, T.k):
        raise ValueError("tiling has parameters (%d, %d)" % (T.n, T.k))
    e = [0] * n
    for i, c in enumerate(T.column_counts(), 1):
        var, sgn = letter_weight(i, n, k)
        e[var] += sgn * c
    return LaurentPoly.monomial(n, tuple(2 * v for v in e))


# ---------------------------------------------------------------------
# transfer to tableaux
# ---------------------------------------------------------------------


def bijection_tableau(T):
    """The tableau behind a tiling: conjugate each matrix row, then turn
    value v into alphabet position n+k+1-v.

    The image is checked to be an admissible filling of the profile shape;
    tableau_weight recovers tiling_weight through this separate route.
    """
    n, k = T.n, T.k
    w = n + k
    tab = []
    for row in T.cells:
        conj = conjugate(tuple(v for v in row if v))
        if conj:
            tab.append(tuple(w + 1 - v for v in conj))
    for i, row in enumerate(tab, 1):
        lo = row_floor(i, k)
        for j, t in enumerate(row):
            if t < lo or t > w:
                raise ValueError("letter out of range in row %d" % i)
            if j and row[j - 1] > t:
                raise ValueError("rows must weakly increase")
            if i > 1 and j < len(tab[i - 2]) and tab[i - 2][j] >= t:
                raise ValueError("columns must strictly increase")
    if tuple(len(r) for r in tab) != T.profile():
        raise ValueError("tableau shape differs from the profile")
    return tuple(tab)


def tableau_weight(tab, n, k):
    """Product of letter weights of a filling, as a monomial."""
    e = [0] * n
    for row in tab:
        for t in row:
            var, sgn = letter_weight(t, n, k)
            e[var] += sgn
    return LaurentPoly.monomial(n, tuple(2 * v for v in e))


# ---------------------------------------------------------------------
# generating functions and counts
# ---------------------------------------------------------------------


def corner_monomial(n, k, a):
    """(x_{k+1} ... x_n)^a, the weight of the forced corner."""
    return LaurentPoly.monomial(n, (0,) * k + (2 * a,) * (n - k))


def tiling_gf(m, n, k, a=0):
    """Weight sum over all tilings of the flashlight region (m, n-k, k, a).

    Termwise this is the sum of sp^(k,n-k)_la over la in (a^n) plus all
    partitions in the n x m box; as a product it is tiling_gf_closed.
    """
    total = LaurentPoly.zero(n)
    for T in enumerate_tilings(FlashlightRegion(m, n - k, k, a)):
        total = total + tiling_weight(T)
    return total


def tiling_gf_free(m, n, k, a=0):
    """The weight sum with the forced corner stripped away.

    An odd orthogonal rectangle ((m/2)^n) times a symplectic rectangle
    ((m/2+a)^k) times (x_{k+1} ... x_n)^(m/2); a PolyFrac because the odd-m
    rectangles live over prod (x_i^(1/2) + x_i^(-1/2)).
    """
    out = PolyFrac(orth_b_char((Fraction(m, 2),) * n, n))
    out = out * symp_rect_frac(Fraction(m, 2) + a, k, n)
    for i in range(k, n):
        out = out * LaurentPoly.x_var(n, i, power2=m)
    return out


def tiling_gf_closed(m, n, k, a=0):
    """Product form of tiling_gf: the free product times the corner."""
    return tiling_gf_free(m, n, k, a) * corner_monomial(n, k, a)


def all_ones(p):
    """Value at x_1 = ... = x_n = 1, i.e. the coefficient sum."""
    if isinstance(p, PolyFrac):
        return all_ones(p.num) / all_ones(p.den)
    return Fraction(sum(p.terms.values()))


def flashlight_product(x, y, z, t=0):
    """Closed product for the number of tilings of F_{x,y,z,t}:

        prod_{1<=i<=j<=y+z} (x+i+j-1)/(i+j-1)
      * prod_{1<=i<=j<=z}   (x+2t+i+j)/(i+j)

    as an exact Fraction (integral only as a whole).  The -1/+0 offsets
    were pinned down by enumerating small regions; shifting both pairs up
    by one fails already at (1,1,0,0), where it gives 4/3 for a region
    with 2 tilings.
    """
    out = Fraction(1)
    for i in range(1, y + z + 1):
        for j in range(i, y + z + 1):
            out *= Fraction(x + i + j - 1, i + j - 1)
    for i in range(1, z + 1):
        for j in range(i, z + 1):
            out *= Fraction(x + 2 * t + i + j, i + j)
    return out


def flashlight_count(x, y, z, t=0, check=True):
    """Number of tilings of F_{x,y,z,t}, by enumeration.

    With check=True the enumerated count is also compared against the
    closed product and against the all-ones value of the closed generating
    function; an ArithmeticError quoting every value escapes on mismatch.
    """
    region = FlashlightRegion(x, y, z, t)
    count = sum(1 for _ in enumerate_tilings(region))
    if check:
        prod = flashlight_product(x, y, z, t)
        dim = all_ones(tiling_gf_closed(x, y + z, z, t))
        if prod != count or dim != count:
            raise ArithmeticError(
                "tilings of %r: enumeration %d, product %s, gf at ones %s"
                % (region, count, prod, dim))
    return count


# ---------------------------------------------------------------------
# geometric oracle: brute-force perfect matchings
# ---------------------------------------------------------------------


def region_triangles(m, n, k):
    """The away- and back-pointing triangles of the trapezoid.

    Wall c holds m+reach(c) away and m+reach(c+1) back triangles, where
    reach(c) counts the matrix rows long enough to touch line c+1.
    """
    mu = spp_rows(n, k)
    reach = [sum(1 for r in mu if r > c) for c in range(n + k + 1)]
    away, back = [], []
    for c in range(n + k):
        for d in range(c, c + 2 * (m + reach[c]) - 1, 2):
            away.append((c, d))
        for e in range(c + 2, c + 2 * (m + reach[c + 1]) + 1, 2):
            back.append((c, e))
    return away, back


def enumerate_matchings(m, n, k, labels=None, floor=0):
    """Perfect matchings of the triangle adjacency graph, by backtracking.

    Away triangles on line 0 may stay unmatched; those are the protrusions.
    labels pins the protrusion label set exactly, floor only bounds it from
    below.  Yields one (labels, rise counts) signature per matching, in no
    particular order.  This is the independent cross-check of the plane
    partition transfer, so it never touches that code; regions over
    MATCHING_TRIANGLE_CAP triangles raise ValueError.
    """
    if region_triangle_count(m, n, k) > MATCHING_TRIANGLE_CAP:
        raise ValueError("region exceeds %d triangles" % MATCHING_TRIANGLE_CAP)
    away, back = region_triangles(m, n, k)
    away_set = set(away)
    partners = {}
    for c, e in back:
        opts = ((c, e - 2), (c, e), (c + 1, e - 1))
        partners[(c, e)] = [a for a in opts if a in away_set]
    target = None if labels is None else frozenset(labels)
    w = n + k
    taken = set()
    pairs = []

    def emit():
        free = [(c, d) for (c, d) in away if (c, d) not in taken]
        if any(c > 0 for c, _ in free):
            return None
        labs = tuple(sorted((m + n - 1 - d // 2 for _, d in free), reverse=True))
        if target is not None:
            if set(labs) != target:
                return None
        elif labs and labs[-1] < floor:
            return None
        rises = [0] * w
        for b, a in pairs:
            if b == a:
                rises[a[0]] += 1
        return labs, tuple(rises[w - i] for i in range(1, w + 1))

    def solve(todo):
        if not todo:
            sig = emit()
            if sig is not None:
                yield sig
            return
        best_i, best_opts = 0, None
        for i, b in enumerate(todo):
            opts = [a for a in partners[b] if a not in taken]
            if best_opts is None or len(opts) < len(best_opts):
                best_i, best_opts = i, opts
            if len(opts) <= 1:
                break
        b = todo[best_i]
        rest = todo[:best_i] + todo[best_i + 1:]
        for a in best_opts:
            taken.add(a)
            pairs.append((b, a))
            yield from solve(rest)
            taken.remove(a)
            pairs.pop()

    yield from solve(list(back))


def matching_signatures(region):
    """(protrusion labels, rise counts) of every matching of the region.

    The geometric counterpart of (T.protrusions(), T.column_counts()) over
    enumerate_tilings; agreement of the two multisets proves the transfer
    is a weight-preserving bijection on the region.
    """
    if isinstance(region, FlashlightRegion):
        return enumerate_matchings(region.bound, region.n, region.k, floor=region.t)
    if isinstance(region, AnchoredRegion):
        return enumerate_matchings(region.m, region.n, region.k, labels=region.labels)
    raise TypeError("expected a FlashlightRegion or AnchoredRegion")


def tiling_signature(T):
    """The (labels, rise counts) pair matching_signatures compares against."""
    return T.protrusions(), T.column_counts()


# ---------------------------------------------------------------------
# placement of one tiling
# ---------------------------------------------------------------------


def _placement(cells, n, k, m):
    away, back = region_triangles(m, n, k)
    away_free = set(away)
    back_free = set(back)
    tiles = []
    for i0, row in enumerate(cells):
        for p0, entry in enumerate(row):
            c = p0
            d = 2 * (m - entry + i0) + c
            if (c, d) not in away_free:
                raise ValueError("cell (%d, %d) places no triangle" % (i0 + 1, p0 + 1))
            away_free.discard((c, d))
            if c == 0:
                tiles.append(("half", 0, d))
            else:
                if (c - 1, d + 1) not in back_free:
                    raise ValueError("flat at wall %d height %d sticks out" % (c, d))
                back_free.discard((c - 1, d + 1))
                tiles.append(("flat", c, d))
    # what is left of each wall is a union of paths alternating between
    # away and back triangles; matching any degree-one triangle first
    # peels the paths apart, and anything else means the matrix was bad
    for c in range(n + k):
        fa = sorted(d for (cc, d) in away_free if cc == c)
        fb = sorted(e for (cc, e) in back_free if cc == c)
        if len(fa) != len(fb):
            raise ValueError("wall %d cannot be completed" % c)

        def commit(d, e):
            tiles.append(("rise" if d == e else "fall", c, d))
            fa.remove(d)
            fb.remove(e)
            away_free.discard((c, d))
            back_free.discard((c, e))

        while fb:
            done = False
            for e in fb:
                opts = [d for d in (e - 2, e) if d in fa]
                if len(opts) == 1:
                    commit(opts[0], e)
                    done = True
                    break
            if not done:
                for d in fa:
                    opts = [e for e in (d, d + 2) if e in fb]
                    if len(opts) == 1:
                        commit(d, opts[0])
                        done = True
                        break
            if not done:
                raise ValueError("wall %d has no forced lozenge" % c)
    if away_free or back_free:
        raise ValueError("region not exactly covered")
    return tuple(sorted(tiles, key=lambda t: (t[1], t[2], t[0])))
