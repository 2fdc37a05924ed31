import json
import random
from fractions import Fraction

import pytest

from intsymp.poly import ExactDivisionError, LaurentPoly as LP, PolyFrac


def rand_poly(rng, arity, nterms=4, emax=3):
    p = LP.zero(arity)
    for _ in range(nterms):
        exps = tuple(2 * rng.randint(-emax, emax) for _ in range(arity))
        p = p + LP.monomial(arity, exps, rng.randint(-5, 5))
    return p


def test_constructors_and_equality():
    x = LP.x_var(2, 0)
    assert x == LP.monomial(2, (2, 0))
    assert LP.const(3, 0).is_zero()
    assert LP.one(2).is_one()
    assert LP.const(1, Fraction(4, 2)) == 2
    assert LP.zero(2) == 0
    assert x != LP.x_var(2, 1)


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(60):
        a = rand_poly(rng, 2)
        b = rand_poly(rng, 2)
        c = rand_poly(rng, 2)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a
        assert a * LP.one(2) == a
        assert (a * b) * c == a * (b * c)


def test_pow():
    x = LP.x_var(1, 0)
    assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1
    assert x ** 0 == LP.one(1)
    assert x ** -2 == LP.monomial(1, (-4,))
    with pytest.raises(ValueError):
        (x + 1) ** -1


def test_half_integer_exponents():
    h = LP.x_var(1, 0, power2=1)
    assert h * h == LP.x_var(1, 0)
    assert h.text(["q"]) == "q^1/2"
    assert h.text(["q"]) == "q^1/2"
    assert str(h + h ** -1) == "x1^1/2 + x1^-1/2"


def test_div_exact_roundtrip_random():
    rng = random.Random(23)
    done = 0
    while done < 100:
        a = rand_poly(rng, 2, nterms=3)
        b = rand_poly(rng, 2, nterms=3)
        if a.is_zero() or b.is_zero():
            continue
        p = a * b
        assert p.div_exact(a) == b
        assert p.div_exact(b) == a
        assert p.div_exact_many([a, b]).is_one() or (a * b).is_zero()
        done += 1


def test_div_exact_rejects():
    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    with pytest.raises(ExactDivisionError):
        (x1 + 1).div_exact(x2 + 1)
    with pytest.raises(ExactDivisionError):
        (x1 * x1 + 1).div_exact(x1 + 1)
    with pytest.raises(ExactDivisionError):
        x1.div_exact(LP.zero(2))
    assert (x1 * 6 + 2).div_exact(LP.const(2, 2)) == x1 * 3 + 1
    with pytest.raises(ExactDivisionError):
        (x1 * 3 + 2).div_exact(LP.const(2, 2))


def test_specialize_lattice():
    x1 = LP.x_var(2, 0, power2=1)
    x2 = LP.x_var(2, 1, power2=1)
    # x1^(1/2) x2^(1/2) at x_i = q^(1/2): every term lands on q^(1/2)
    p = x1 * x2
    assert p.specialize([1, 1]) == LP.x_var(1, 0, power2=1)
    # a lone half power of q^(1/2) would hit the quarter lattice
    with pytest.raises(ValueError):
        x1.specialize([1])
    # integer exponents at integer powers always work
    q = LP.x_var(2, 0) * LP.x_var(2, 1) ** -1
    assert q.specialize([2, 4]) == LP.monomial(1, (-2,))


def test_eval_fractions():
    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    p = x1 ** 2 - x2
    assert p.eval_fractions([Fraction(1, 2), Fraction(1, 3)]) == Fraction(-1, 12)
    with pytest.raises(ValueError):
        LP.x_var(1, 0, power2=1).eval_fractions([Fraction(1, 2)])


def test_embed_permute_invert():
    x = LP.x_var(2, 0) + LP.x_var(2, 1) ** 2
    wide = x.embed(4, [1, 3])
    assert wide == LP.x_var(4, 1) + LP.x_var(4, 3) ** 2
    p = LP.x_var(2, 0) + 2 * LP.x_var(2, 1)
    assert p.permute_vars([1, 0]) == LP.x_var(2, 1) + 2 * LP.x_var(2, 0)
    assert p.invert_var(0) == LP.x_var(2, 0) ** -1 + 2 * LP.x_var(2, 1)


def test_set_var_zero_one():
    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    p = x1 * x2 + x2 ** 2 + 1
    assert p.set_var_zero(0) == LP.x_var(1, 0) ** 2 + 1
    assert p.set_var_one(0) == LP.x_var(1, 0) ** 2 + LP.x_var(1, 0) + 1
    with pytest.raises(ValueError):
        (x1 ** -1).set_var_zero(0)


def test_text_format():
    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    assert str(LP.zero(2)) == "0"
    assert str(x1 + x1 ** -1) == "x1 + x1^-1"
    assert str(-x1 * x2 + 2) == "-x1*x2 + 2"
    assert str(LP.monomial(2, (3, 0), Fraction(1, 2))) == "1/2*x1^3/2"


def test_json_roundtrip_random():
    rng = random.Random(5)
    for _ in range(50):
        p = rand_poly(rng, 3)
        blob = json.dumps(p.to_json_dict())
        assert LP.from_json_dict(json.loads(blob)) == p
    # half exponents and fraction coefficients survive too
    p = LP.monomial(2, (1, -3), Fraction(2, 3)) + LP.one(2)
    blob = json.dumps(p.to_json_dict())
    assert LP.from_json_dict(json.loads(blob)) == p


def test_polyfrac_field_ops():
    x1, x2 = LP.x_var(2, 0), LP.x_var(2, 1)
    f = PolyFrac(x1 ** 2 - x2 ** 2, x1 + x2)
    g = PolyFrac(x1 - x2)
    assert f == g
    assert f + g == g * 2
    assert (f - g).is_zero()
    assert f * PolyFrac(x1 + x2) == PolyFrac(x1 ** 2 - x2 ** 2)
    assert (f / g) == PolyFrac(LP.one(2))
    assert f.to_poly() == x1 - x2
    with pytest.raises(ExactDivisionError):
        PolyFrac(x1, x2 + 1).to_poly()
    with pytest.raises(ZeroDivisionError):
        PolyFrac(x1, LP.zero(2))
