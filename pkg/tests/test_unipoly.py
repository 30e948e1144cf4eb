"""Univariate exact arithmetic, root isolation, and the real extension
field, checked against sympy as an independent oracle."""

import random
from fractions import Fraction

import pytest
import sympy

from germinv.errors import PrecisionExceededError
from germinv.numberfield import FieldContext
from germinv.unipoly import (AlgebraicReal, UniPoly, cauchy_bound,
                             count_real_roots, isolate_real_roots,
                             sturm_sequence, uni_gcd, uni_squarefree)

_t = sympy.Symbol("t")


def to_sympy(p: UniPoly):
    return sympy.Poly([sympy.Rational(c) for c in reversed(p.coeffs)] or [0],
                      _t, domain="QQ")


def from_sympy(sp) -> UniPoly:
    return UniPoly([Fraction(c.p, c.q) for c in reversed(sp.all_coeffs())])


def rand_poly(rng, deg, coeff=9):
    return UniPoly([Fraction(rng.randint(-coeff, coeff))
                    for _ in range(deg + 1)])


def test_divmod_matches_sympy():
    rng = random.Random(1)
    for _ in range(30):
        a = rand_poly(rng, rng.randint(0, 7))
        b = rand_poly(rng, rng.randint(0, 4))
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        sq, sr = sympy.div(to_sympy(a), to_sympy(b))
        assert q == from_sympy(sq) and r == from_sympy(sr)


def test_gcd_matches_sympy():
    rng = random.Random(2)
    for _ in range(30):
        g = rand_poly(rng, rng.randint(0, 3))
        a = rand_poly(rng, rng.randint(0, 3)) * g
        b = rand_poly(rng, rng.randint(0, 3)) * g
        if a.is_zero() and b.is_zero():
            continue
        mine = uni_gcd(a, b)
        ref = to_sympy(a).gcd(to_sympy(b)).monic()
        assert mine == from_sympy(ref)


def test_squarefree_matches_sympy():
    rng = random.Random(3)
    for _ in range(30):
        a = rand_poly(rng, rng.randint(1, 3))
        b = rand_poly(rng, rng.randint(1, 2))
        p = a * a * b
        if p.is_zero() or p.degree < 1:
            continue
        mine = uni_squarefree(p)
        # compare monic squarefree parts
        prod = sympy.Integer(1)
        for fac, _ in to_sympy(p).sqf_list()[1]:
            prod = prod * fac
        ref = sympy.Poly(prod, _t).monic()
        assert mine.monic() == from_sympy(ref)


def test_sturm_count_matches_sympy():
    rng = random.Random(4)
    for _ in range(25):
        p = rand_poly(rng, rng.randint(1, 6))
        if p.is_zero():
            continue
        p = uni_squarefree(p)
        if p.degree < 1:
            continue
        seq = sturm_sequence(p)
        lo, hi = Fraction(-10), Fraction(10)
        mine = count_real_roots(p, lo, hi, seq)
        ref = sympy.Poly(to_sympy(p), _t).count_roots(-10, 10)
        # count_real_roots uses the half-open (lo, hi]; sympy counts [lo, hi]
        if to_sympy(p).eval(-10) == 0:
            ref -= 1
        assert mine == ref


def test_isolate_real_roots_matches_sympy():
    rng = random.Random(5)
    for _ in range(25):
        p = rand_poly(rng, rng.randint(1, 6))
        if p.is_zero() or p.degree < 1:
            continue
        roots = isolate_real_roots(uni_squarefree(p))
        ref = sympy.Poly(to_sympy(p), _t).real_roots()
        ref = sorted(set(ref))
        assert len(roots) == len(ref)
        for mine, rr in zip(roots, ref):
            lo, hi = sympy.Rational(mine.lo), sympy.Rational(mine.hi)
            assert lo <= rr <= hi


def test_rational_roots_collapse():
    # (t - 3)(t + 1/2)(t^2 + 1): rational roots isolate to points
    p = UniPoly([Fraction(-3), Fraction(1)]) * \
        UniPoly([Fraction(1, 2), Fraction(1)]) * \
        UniPoly([Fraction(1), Fraction(0), Fraction(1)])
    roots = isolate_real_roots(p)
    assert [(r.lo, r.hi) for r in roots] == [
        (Fraction(-1, 2), Fraction(-1, 2)), (Fraction(3), Fraction(3))]
    assert all(r.is_rational() for r in roots)


def test_algebraic_sqrt2():
    p = UniPoly([Fraction(-2), Fraction(0), Fraction(1)])
    (r,) = [r for r in isolate_real_roots(p) if r.lo > 0]
    r.refine_to(Fraction(1, 10**12))
    assert abs(float(r) - 2**0.5) < 1e-11
    assert r.sign() == 1


def test_cauchy_bound_contains_roots():
    rng = random.Random(6)
    for _ in range(20):
        p = rand_poly(rng, rng.randint(1, 6))
        if p.is_zero() or p.degree < 1:
            continue
        bound = cauchy_bound(p)
        for rr in sympy.Poly(to_sympy(p), _t).real_roots():
            assert abs(rr) <= sympy.Rational(bound)


def sqrt2_ctx() -> FieldContext:
    p = UniPoly([Fraction(-2), Fraction(0), Fraction(1)])
    return FieldContext(p, Fraction(1), Fraction(2))


def test_field_basic_arithmetic():
    K = sqrt2_ctx()
    r = K.generator()
    assert (r * r - 2).is_zero()
    assert not (r - 1).is_zero()
    assert (r * r).as_rational() == Fraction(2)
    assert abs(float(r) - 2**0.5) < 1e-12


def test_field_inverse():
    K = sqrt2_ctx()
    r = K.generator()
    # 1/(1 + sqrt2) = sqrt2 - 1
    assert ((1 + r).inverse() - (r - 1)).is_zero()
    x = r * Fraction(3, 7) - 2
    assert (x * x.inverse() - 1).is_zero()


def test_field_sign():
    K = sqrt2_ctx()
    r = K.generator()
    assert (r - Fraction(3, 2)).sign() == -1   # sqrt2 < 1.5
    assert (r - Fraction(7, 5)).sign() == 1    # sqrt2 > 1.4
    assert (r * r - 2).sign() == 0


def test_field_sign_precision_budget():
    from math import isqrt
    K = sqrt2_ctx()
    r = K.generator()
    # a <= sqrt2 < a + 2^-400: deciding sign(r - a) takes ~400 bits
    a = Fraction(isqrt(2 * 4**400), 2**400)
    tiny = r - a
    with pytest.raises(PrecisionExceededError):
        tiny.sign(max_bits=8)
    assert tiny.sign(max_bits=1024) == 1


def test_field_golden_ratio():
    p = UniPoly([Fraction(-1), Fraction(-1), Fraction(1)])
    K = FieldContext(p, Fraction(1), Fraction(2))
    phi = K.generator()
    assert (phi * phi - phi - 1).is_zero()
    assert ((phi - 1) * phi - 1).is_zero()   # 1/phi = phi - 1
    assert abs(float(phi) - (1 + 5**0.5) / 2) < 1e-12


def test_field_division_by_zero():
    K = sqrt2_ctx()
    with pytest.raises(ZeroDivisionError):
        K.from_rational(0).inverse()


def test_eval_interval_bounds():
    rng = random.Random(7)
    for _ in range(20):
        p = rand_poly(rng, rng.randint(0, 5))
        lo, hi = Fraction(-2), Fraction(3, 2)
        blo, bhi = p.eval_interval(lo, hi)
        for k in range(8):
            x = lo + (hi - lo) * Fraction(k, 7)
            assert blo <= p.eval(x) <= bhi


def test_pow_matches_repeated_mul():
    p = UniPoly([Fraction(1), Fraction(2), Fraction(1)])
    q = UniPoly([Fraction(1)])
    for _ in range(4):
        q = q * p
    assert p**4 == q
    assert p**0 == UniPoly([Fraction(1)])
