"""One-variable q-polynomial building blocks.

Everything returns a LaurentPoly of arity 1 in q.  Half-integer steps
appear only through explicit q^(r/2) monomials; the bracket of a genuine
half-integer is not a Laurent polynomial and is rejected, callers that
need ratios of such brackets assemble them as one product-over-product
exact division (see bracket_ratio).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import LaurentPoly


def q_power(r):
    """q^r for integer or half-integer r."""
    r = Fraction(r)
    if r.denominator not in (1, 2):
        raise ValueError("exponent off the half-integer lattice")
    return LaurentPoly.monomial(1, (int(2 * r),))


def q_int(r):
    """[r] = 1 + q + ... + q^(r-1) for a nonnegative integer r."""
    r = Fraction(r)
    if r.denominator != 1:
        raise ValueError("bracket of a non-integer is not a polynomial")
    r = int(r)
    if r < 0:
        raise ValueError("negative bracket")
    return LaurentPoly(1, {(2 * i,): 1 for i in range(r)})


def one_minus_q(r):
    """1 - q^r, integer or half-integer r."""
    return LaurentPoly.one(1) - q_power(r)


def one_plus_q(r):
    """1 + q^r, integer or half-integer r.  The angle bracket <r>."""
    return LaurentPoly.one(1) + q_power(r)


def bracket_ratio(nums, dens):
    """prod (1 - q^a) / prod (1 - q^b) with one exact division at the end.

    Exponents may be half-integers.  This is how ratios of half-integer
    brackets [m + i - 1/2]/[i - 1/2] stay inside the polynomial ring: each
    bracket alone would need (1 - q^(1/2)) in the denominator but the
    ratio cancels it.
    """
    num = LaurentPoly.one(1)
    for a in nums:
        num = num * one_minus_q(a)
    den_factors = [one_minus_q(b) for b in dens]
    return num.div_exact_many(den_factors)


def q_binom(n, k):
    """Gaussian binomial coefficient, a polynomial in q."""
    if k < 0 or k > n:
        return LaurentPoly.zero(1)
    return bracket_ratio(range(n - k + 1, n + 1), range(1, k + 1))


def qtext(p):
    """Render a one-variable polynomial with the variable named q."""
    if p.arity != 1:
        raise ValueError("qtext is for one-variable polynomials")
    return p.text(["q"])


def poly_at_q1(p):
    """Evaluate a q-polynomial at q = 1 (exact)."""
    total = 0
    for _, c in p.terms.items():
        total += c
    return total


def nonneg_coeffs(p):
    return all((c > 0) for c in p.terms.values())
