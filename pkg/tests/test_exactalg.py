import random
from fractions import Fraction as F

import pytest

from voa.exactalg import (Context, PolyQ, UniPoly, associate_poly,
                          associate_unipoly, binom, binomial_poly, g_poly,
                          pseudo_divide)


def test_binomial_integer_values():
    assert binom(-2, 3) == -4
    assert binom(5, 2) == 10
    assert binom(3, 0) == 1
    assert binom(2, 5) == 0


def test_binomial_matches_falling_factorial_for_small_tops():
    import math
    for n in range(-10, 11):
        for k in range(0, 11):
            if n >= 0:
                want = math.comb(n, k) if k <= n else 0
            else:
                want = (-1) ** k * math.comb(-n + k - 1, k)
            assert binom(n, k) == want, (n, k)


def test_binomial_poly_symbolic():
    ctx = Context(("eps",))
    eps = ctx.var("eps")
    assert binomial_poly(eps, 2) == eps * (eps - 1) / 2
    assert binomial_poly(eps + 2, 1) == eps + 2
    assert binomial_poly(eps, 0) == ctx.const(1)
    # agrees with the integer binomial after substitution
    p = binomial_poly(eps + 1, 3)
    for e in range(-5, 6):
        assert p.evaluate({"eps": e}) == binom(e + 1, 3)


def test_pseudo_divide_exact_division():
    ctx = Context(())
    x2 = UniPoly.from_consts([0, 0, 1])
    x = UniPoly.from_consts([0, 1])
    q, r = pseudo_divide(x2, x)
    assert not r
    assert q == x


def test_pseudo_divide_requires_degree_order():
    x2 = UniPoly.from_consts([0, 0, 1])
    x = UniPoly.from_consts([0, 1])
    with pytest.raises(ValueError):
        pseudo_divide(x, x2)
    with pytest.raises(ZeroDivisionError):
        pseudo_divide(x, UniPoly.from_consts([]))


def test_pseudo_divide_hand_checked_remainder():
    # divide 132x^2 - 65x - 70h + 3 by x - 1: the remainder is the value at
    # x = 1, namely 70 - 70h
    ctx = Context(("h",))
    h = ctx.var("h")
    a = UniPoly(ctx, [ctx.const(3) - h * 70, ctx.const(-65), ctx.const(132)])
    b = UniPoly(ctx, [ctx.const(-1), ctx.const(1)])
    q, r = pseudo_divide(a, b)
    assert r.degree() == 0
    assert r.coeffs[0] == ctx.const(70) - h * 70


def _rand_unipoly(rng, ctx, max_deg, max_cdeg):
    coeffs = []
    for _ in range(rng.randint(1, max_deg + 1)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, max_cdeg) for _ in ctx.names)
            terms[e] = F(rng.randint(-4, 4))
        coeffs.append(PolyQ(ctx, terms))
    return UniPoly(ctx, coeffs)


def test_pseudo_divide_identity_randomized():
    rng = random.Random(11)
    ctx = Context(("h",))
    cases = 0
    while cases < 250:
        a = _rand_unipoly(rng, ctx, 4, 2)
        b = _rand_unipoly(rng, ctx, 3, 1)
        if not b or not a or a.degree() < b.degree():
            continue
        cases += 1
        q, r = pseudo_divide(a, b)
        d = a.degree() - b.degree()
        lhs = a * (b.lc() ** (d + 1))
        assert lhs == q * b + r
        assert not r or r.degree() < b.degree()


def test_g_poly_trivial_and_errors():
    x = UniPoly.from_consts([0, 1])
    assert associate_unipoly(g_poly(x, x), x)
    with pytest.raises(ValueError):
        g_poly(UniPoly.from_consts([]), UniPoly.from_consts([]))


def test_g_poly_divides_common_roots_randomized():
    # on factored products, the chain output vanishes at every common root
    rng = random.Random(23)
    ctx = Context(())
    for _ in range(250):
        roots = [F(rng.randint(-3, 3)) for _ in range(4)]
        common = roots[:2]
        a = UniPoly.from_consts([1])
        for r in common + roots[2:3]:
            a = a * UniPoly.from_consts([-r, 1])
        b = UniPoly.from_consts([1])
        for r in common + roots[3:]:
            b = b * UniPoly.from_consts([-r, 1])
        g = g_poly(a, b)
        for r in common:
            val = sum(c.constant_value() * r ** i for i, c in enumerate(g.coeffs))
            assert val == 0


def test_g_poly_omega_chain():
    # cubic eigenvalue polynomial against the quadratic relation over Q[h]
    ctx = Context(("h",))
    h = ctx.var("h")
    c = ctx.const
    a1 = UniPoly(ctx, [c(F(-9, 256)), c(F(169, 256)), c(F(-13, 8)), c(1)])
    a2 = UniPoly(ctx, [c(3) - h * 70, c(-65), c(132)])
    g = g_poly(a1, a2)
    assert g.degree() == 0
    target = (h - 1) * (h + F(1, 128)) * (h - F(15, 128))
    assert associate_poly(g.coeffs[0], target)


def test_context_and_poly_basics():
    ctx = Context(("a", "b"))
    a, b = ctx.var("a"), ctx.var("b")
    p = (a + b) ** 2 - a * a - b * b
    assert p == 2 * a * b
    assert p.subs({"a": F(3)}).subs({"b": F(1, 2)}).constant_value() == 3
    assert p.evaluate({"a": 3, "b": F(1, 2)}) == 3
    assert (a - a) == 0 and not (a - a)
    with pytest.raises(ValueError):
        Context(("x", "x"))
