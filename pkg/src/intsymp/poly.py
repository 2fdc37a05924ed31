"""Multivariate Laurent polynomials with exact half-integer exponents.

The whole library computes in Z[x1^(1/2), x1^(-1/2), ..., xn^(1/2), xn^(-1/2)]
(coefficients may momentarily be Fractions, e.g. while clearing weight
statistics, but every stored value is exact).  Exponents are stored *doubled*
as plain ints, so x1^(3/2) has stored exponent 3 and x1^2 has stored
exponent 4.  This keeps the term keys hashable tuples of ints and makes the
half-integer bookkeeping explicit instead of floating around in Fractions.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from operator import add


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division does not come out clean."""


def _norm_coeff(c):
    # Keep ints as ints; collapse integral Fractions back down.
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial.

    terms maps exponent tuples (doubled ints, length == arity) to nonzero
    int/Fraction coefficients.  The zero polynomial has an empty dict.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(arity):
        return LaurentPoly(arity, {})

    @staticmethod
    def const(arity, c):
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly(arity, {})
        return LaurentPoly(arity, {(0,) * arity: c})

    @staticmethod
    def one(arity):
        return LaurentPoly.const(arity, 1)

    @staticmethod
    def monomial(arity, exps, c=1):
        """exps are given in *halves*: pass doubled ints directly."""
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly(arity, {})
        if len(exps) != arity:
            raise ValueError("exponent tuple has wrong length")
        return LaurentPoly(arity, {tuple(exps): c})

    @staticmethod
    def x_var(arity, i, power2=2, c=1):
        """x_i^(power2/2); i is 0-based."""
        exps = [0] * arity
        exps[i] = power2
        return LaurentPoly.monomial(arity, exps, c)

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.arity: 1}

    def is_constant(self):
        if not self.terms:
            return True
        zero = (0,) * self.arity
        return len(self.terms) == 1 and zero in self.terms

    def constant_value(self):
        if not self.terms:
            return 0
        zero = (0,) * self.arity
        if self.terms.keys() == {zero}:
            return self.terms[zero]
        raise ValueError("not a constant")

    def n_terms(self):
        return len(self.terms)

    def coeff_of(self, exps):
        return self.terms.get(tuple(exps), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(self.arity, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.arity, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm_coeff(s)
            else:
                out.pop(e, None)
        return LaurentPoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = _norm_coeff(s)
            else:
                out.pop(e, None)
        return LaurentPoly(self.arity, out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if not a or not b:
            return LaurentPoly(self.arity, {})
        if len(a) < len(b):
            a, b = b, a
        # a is the longer factor; loop b outside for fewer dict rebuilds
        out = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(self.arity, {e: _norm_coeff(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                if c in (1, -1):
                    cc = c if k % 2 else 1
                    return LaurentPoly(self.arity, {tuple(k * x for x in e): cc})
            raise ValueError("negative power of a non-unit")
        result = LaurentPoly.one(self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- ordering and division -----------------------------------------

    def _grlex_lead(self):
        """Leading exponent tuple in graded lex order (largest)."""
        return max(self.terms, key=lambda e: (sum(e), e))

    def div_exact(self, den):
        """Exact division; raises ExactDivisionError if den does not divide.

        Multivariate long division by leading-term cancellation in grlex
        order.  A Newton-polytope box bounds the quotient support so the
        loop provably terminates: any quotient monomial must fit between
        the per-variable min/max exponents of num and den.
        """
        den = self._coerce(den)
        if den is None or den.is_zero():
            raise ExactDivisionError("division by zero")
        if den.is_one():
            return self
        if self.is_zero():
            return self
        if den.is_constant():
            dc = den.constant_value()
            out = {}
            for e, c in self.terms.items():
                q = Fraction(c, dc) if not isinstance(c, Fraction) else c / dc
                if q.denominator != 1:
                    raise ExactDivisionError("constant does not divide coefficients")
                out[e] = int(q)
            return LaurentPoly(self.arity, out)

        n = self.arity
        num_min = [min(e[i] for e in self.terms) for i in range(n)]
        num_max = [max(e[i] for e in self.terms) for i in range(n)]
        den_min = [min(e[i] for e in den.terms) for i in range(n)]
        den_max = [max(e[i] for e in den.terms) for i in range(n)]
        lo = [num_min[i] - den_min[i] for i in range(n)]
        hi = [num_max[i] - den_max[i] for i in range(n)]
        if any(lo[i] > hi[i] for i in range(n)):
            raise ExactDivisionError("no room for a quotient")

        lead_d = den._grlex_lead()
        cd = den.terms[lead_d]
        rem = dict(self.terms)
        # max-heap on grlex via negated keys, with lazy deletion; sound
        # because grlex is translation invariant, so every term a
        # cancellation step introduces sits strictly below the lead it
        # cancelled and a popped lead can never re-enter rem
        heap = [(-sum(e), tuple(-x for x in e), e) for e in rem]
        heapq.heapify(heap)
        quo = {}
        while rem:
            lead_r = heapq.heappop(heap)[2]
            while lead_r not in rem:
                lead_r = heapq.heappop(heap)[2]
            q_exp = tuple(lead_r[i] - lead_d[i] for i in range(n))
            if any(q_exp[i] < lo[i] or q_exp[i] > hi[i] for i in range(n)):
                raise ExactDivisionError("not exactly divisible")
            cr = rem[lead_r]
            qc = Fraction(cr, cd) if not isinstance(cr, Fraction) or not isinstance(cd, Fraction) else cr / cd
            if isinstance(qc, Fraction) and qc.denominator == 1:
                qc = int(qc)
            quo[q_exp] = qc
            for e, c in den.terms.items():
                t = tuple(map(add, e, q_exp))
                s = rem.get(t, 0) - qc * c
                if s:
                    if t not in rem:
                        heapq.heappush(heap, (-sum(t), tuple(-x for x in t), t))
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return LaurentPoly(self.arity, {e: _norm_coeff(c) for e, c in quo.items()})

    def div_exact_many(self, factors):
        """Divide by each factor in turn (valid since the ring is a UFD)."""
        q = self
        for f in factors:
            q = q.div_exact(f)
        return q

    # -- substitution and reshaping ------------------------------------

    def specialize(self, values2):
        """Substitute x_i = q^(values2[i]/2); returns a 1-variable poly in q.

        values2 are doubled exponents of q.  Each *term* must land on the
        half lattice of q: sum_i exps[i]*values2[i] must be even (both are
        doubled, so the product carries a factor 4 over the true value;
        evenness of the doubled result is what we need).
        """
        if len(values2) != self.arity:
            raise ValueError("wrong number of values")
        out = {}
        for e, c in self.terms.items():
            t = 0
            for d, w in zip(e, values2):
                t += d * w
            if t % 2:
                raise ValueError("specialization leaves the half-integer lattice")
            k = (t // 2,)
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm_coeff(s)
            else:
                out.pop(k, None)
        return LaurentPoly(1, out)

    def eval_fractions(self, values):
        """Evaluate at rational points.  Values must be positive rationals
        (so half-integer powers stay rational we require exact squares) or
        the exponents all even."""
        if len(values) != self.arity:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(1)
            for d, x in zip(e, values):
                if d % 2:
                    raise ValueError("cannot evaluate half-integer exponent at a rational")
                v *= Fraction(x) ** (d // 2)
            total += c * v
        return total

    def embed(self, new_arity, positions):
        """Map variable i to slot positions[i] of a wider ring."""
        if len(positions) != self.arity:
            raise ValueError("wrong positions length")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * new_arity
            for i, p in enumerate(positions):
                ne[p] = e[i]
            out[tuple(ne)] = c
        return LaurentPoly(new_arity, out)

    def permute_vars(self, perm):
        """Variable i of the result is variable perm[i] of self."""
        inv = [0] * self.arity
        for i, p in enumerate(perm):
            inv[p] = i
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[inv[i]] for i in range(self.arity))] = c
        return LaurentPoly(self.arity, out)

    def invert_var(self, i):
        """x_i -> 1/x_i."""
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i] = -ne[i]
            out[tuple(ne)] = c
        return LaurentPoly(self.arity, out)

    def set_var_zero(self, i):
        """Substitute x_i = 0 and drop the variable.

        Any term with a negative exponent of x_i makes the substitution
        undefined; terms with positive exponent vanish.
        """
        out = {}
        for e, c in self.terms.items():
            if e[i] < 0:
                raise ValueError("negative exponent at zero substitution")
            if e[i] > 0:
                continue
            out[e[:i] + e[i + 1:]] = c
        return LaurentPoly(self.arity - 1, out)

    def set_var_one(self, i):
        """Substitute x_i = 1 and drop the variable."""
        out = {}
        for e, c in self.terms.items():
            k = e[:i] + e[i + 1:]
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm_coeff(s)
            else:
                out.pop(k, None)
        return LaurentPoly(self.arity - 1, out)

    def var_range(self, i):
        """(min, max) doubled exponent of x_i, or None for the zero poly."""
        if not self.terms:
            return None
        es = [e[i] for e in self.terms]
        return min(es), max(es)

    # -- text and json ---------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def text(self, names=None):
        """Render with the given variable names (default x1, x2, ...)."""
        if not self.terms:
            return "0"
        if names is None:
            names = ["x%d" % (i + 1) for i in range(self.arity)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, d in enumerate(e):
                if d == 0:
                    continue
                name = names[i]
                if d == 2:
                    factors.append(name)
                elif d % 2 == 0:
                    factors.append("%s^%d" % (name, d // 2))
                else:
                    factors.append("%s^%s" % (name, Fraction(d, 2)))
            cs = str(c)
            if not factors:
                body = cs
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = cs + "*" + "*".join(factors)
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.arity, str(self))

    def to_json_dict(self):
        terms = []
        for e, c in self.sorted_terms():
            if isinstance(c, Fraction):
                cs = "%d/%d" % (c.numerator, c.denominator)
            else:
                cs = str(c)
            terms.append({"coeff": cs, "exps": list(e)})
        return {"arity": self.arity, "terms": terms}

    @staticmethod
    def from_json_dict(d):
        arity = d["arity"]
        terms = {}
        for t in d["terms"]:
            cs = t["coeff"]
            c = Fraction(cs) if "/" in cs else int(cs)
            terms[tuple(t["exps"])] = _norm_coeff(c)
        return LaurentPoly(arity, terms)


class PolyFrac:
    """A quotient of Laurent polynomials, for identities that momentarily
    leave the polynomial ring (half-integer rectangles, Weyl denominators).

    No gcd reduction is attempted; equality goes by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one(num.arity)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.arity != den.arity:
            raise ValueError("arity mismatch")
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p):
        return PolyFrac(p)

    @property
    def arity(self):
        return self.num.arity

    def _coerce(self, other):
        if isinstance(other, PolyFrac):
            return other
        if isinstance(other, LaurentPoly):
            return PolyFrac(other)
        if isinstance(other, (int, Fraction)):
            return PolyFrac(LaurentPoly.const(self.arity, other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolyFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return PolyFrac(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolyFrac(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolyFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError
        return PolyFrac(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        raise TypeError("unhashable (no canonical form)")

    def is_zero(self):
        return self.num.is_zero()

    def to_poly(self):
        """Collapse to a polynomial; raises if the quotient is not one."""
        return self.num.div_exact(self.den)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    __repr__ = __str__
