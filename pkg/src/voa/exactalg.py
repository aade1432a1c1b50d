"""Exact coefficient arithmetic.

Everything downstream computes over Q: plain ``Fraction`` scalars, sparse
multivariate polynomials (``PolyQ``), and a univariate layer (``UniPoly``)
for pseudo-remainder chains.  Coefficients are polynomials, never rational
functions; the only divisions performed anywhere are by explicit nonzero
rationals, which keeps all arithmetic exact and termination obvious.
"""

from fractions import Fraction
from math import gcd


class Context:
    """An ordered tuple of indeterminate names shared by PolyQ values."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate indeterminate names")

    def __repr__(self):
        return "Context(%r)" % (self.names,)

    def __eq__(self, other):
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def zero_exp(self):
        return (0,) * len(self.names)

    def var(self, name):
        e = [0] * len(self.names)
        e[self.index[name]] = 1
        return PolyQ(self, {tuple(e): Fraction(1)})

    def const(self, c):
        c = Fraction(c)
        if not c:
            return PolyQ(self, {})
        return PolyQ(self, {self.zero_exp(): c})


EMPTY_CONTEXT = Context(())


def _as_poly(ctx, x):
    if isinstance(x, PolyQ):
        if x.ctx != ctx:
            raise ValueError("mixed polynomial contexts: %r vs %r" % (x.ctx, ctx))
        return x
    return ctx.const(x)


class PolyQ:
    """Sparse multivariate polynomial over Q.

    terms maps dense exponent tuples (one slot per context name) to nonzero
    Fraction coefficients.
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    @staticmethod
    def _raw(ctx, clean_terms):
        p = PolyQ.__new__(PolyQ)
        p.ctx = ctx
        p.terms = clean_terms
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(ctx, c):
        return ctx.const(c)

    # -- basic structure ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.names, tuple(sorted(self.terms.items()))))
        return self._hash

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial: %s" % self)
        return self.terms[self.ctx.zero_exp()]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name):
        i = self.ctx.index[name]
        return max((e[i] for e in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(self.ctx, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return PolyQ._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(self.ctx, other))

    def __rsub__(self, other):
        return _as_poly(self.ctx, other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyQ._raw(self.ctx, {})
            return PolyQ._raw(self.ctx,
                              {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, PolyQ):
            return NotImplemented
        other = _as_poly(self.ctx, other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return PolyQ._raw(self.ctx, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Fraction(other)
        return self * (1 / other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ctx.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- substitution ------------------------------------------------------

    def subs(self, assignments):
        """Substitute values (Fraction or PolyQ over a target context) for a
        subset of the indeterminates; unassigned names must exist in the
        target context when polynomial values are used."""
        target = None
        for v in assignments.values():
            if isinstance(v, PolyQ):
                target = v.ctx
                break
        if target is None:
            target = self.ctx
        out = target.const(0)
        for e, c in self.terms.items():
            term = target.const(c)
            for name, k in zip(self.ctx.names, e):
                if not k:
                    continue
                if name in assignments:
                    v = assignments[name]
                    v = v if isinstance(v, PolyQ) else target.const(v)
                else:
                    v = target.var(name)
                term = term * v ** k
            out = out + term
        return out

    def evaluate(self, assignments):
        """Full evaluation to a Fraction; every appearing name must be set."""
        out = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for name, k in zip(self.ctx.names, e):
                if k:
                    v *= Fraction(assignments[name]) ** k
            out += v
        return out

    # -- content and rendering --------------------------------------------

    def content(self):
        """gcd of the rational coefficients (0 for the zero polynomial)."""
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def leading_key(self):
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[self.leading_key()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.ctx.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append("%s^%d" % (name, k))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    __repr__ = __str__


_BINOM_CACHE = {}


def binom(n, k):
    """Integer-top binomial with the usual negative-top convention,
    computed by the falling-factorial product."""
    if k < 0:
        return Fraction(0)
    key = (n, k)
    hit = _BINOM_CACHE.get(key)
    if hit is not None:
        return hit
    num = Fraction(1)
    for t in range(k):
        num *= Fraction(n - t, t + 1)
    if len(_BINOM_CACHE) < 100000:
        _BINOM_CACHE[key] = num
    return num


def binomial_poly(top, k):
    """top*(top-1)*...*(top-k+1)/k!; exact PolyQ for a polynomial top,
    Fraction for a rational top."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(top, PolyQ):
        out = top.ctx.const(1)
        for t in range(k):
            out = out * (top - t)
        fact = 1
        for t in range(2, k + 1):
            fact *= t
        return out / fact if fact != 1 else out
    return binom(top, k)


class UniPoly:
    """Dense univariate polynomial in a distinguished variable with PolyQ
    coefficients (the coefficient ring is the PolyQ context)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        cs = [_as_poly(ctx, c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def from_consts(values, ctx=EMPTY_CONTEXT):
        return UniPoly(ctx, [ctx.const(v) for v in values])

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.ctx.const(0)
        a = self.coeffs + [z] * (n - len(self.coeffs))
        b = other.coeffs + [z] * (n - len(other.coeffs))
        return UniPoly(self.ctx, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyQ)):
            o = _as_poly(self.ctx, other)
            return UniPoly(self.ctx, [c * o for c in self.coeffs])
        out = [self.ctx.const(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.ctx, out)

    __rmul__ = __mul__

    def shift_mul(self, k):
        """Multiply by x^k."""
        return UniPoly(self.ctx, [self.ctx.const(0)] * k + self.coeffs)

    def content(self):
        num = 0
        den = 1
        for c in self.coeffs:
            cc = c.content()
            num = gcd(num, cc.numerator)
            den = den * cc.denominator // gcd(den, cc.denominator)
        return Fraction(num, den)

    def normalized(self):
        """Divide by the rational content and make the leading coefficient's
        leading rational positive; canonical representative of the associate
        class under Q-scalars."""
        if not self.coeffs:
            return self
        c = self.content()
        out = self * (1 / c)
        if out.lc().leading_coeff() < 0:
            out = -out
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            parts.append("(%s)*x^%d" % (c, i) if i else "(%s)" % (c,))
        return " + ".join(parts)

    __repr__ = __str__


def pseudo_divide(a, b):
    """lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.

    Exact over the coefficient ring: no coefficient division happens.
    Requires deg a >= deg b; swapping lower-degree dividends is the chain
    driver's job.
    """
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if a.degree() < b.degree():
        raise ValueError("pseudo_divide needs deg a >= deg b")
    ctx = a.ctx
    d = a.degree() - b.degree()
    lb = b.lc()
    q = UniPoly(ctx, [])
    r = a
    for _ in range(d + 1):
        if r.degree() < b.degree():
            q = lb * q
            r = lb * r
            continue
        k = r.degree() - b.degree()
        cr = r.lc()
        q = lb * q + UniPoly(ctx, [ctx.const(0)] * k + [cr])
        r = lb * r - (b * cr).shift_mul(k)
    return q, r


def g_poly(a1, a2):
    """Run the pseudo-remainder chain until the remainder vanishes and
    return the last nonzero entry, content/sign normalized.

    The value is canonical only up to a nonzero element of the coefficient
    ring; compare results with associate_unipoly."""
    if not a1 and not a2:
        raise ValueError("g_poly of two zero polynomials")
    if a1.degree() < a2.degree():
        a1, a2 = a2, a1
    while a2:
        _, r = pseudo_divide(a1, a2)
        a1, a2 = a2, r
    return a1.normalized()


def associate_unipoly(p, q):
    """True when p and q generate the same ideal up to a unit times a
    nonzero coefficient-ring element: equal degrees and each pseudo-divides
    the other with zero remainder."""
    if not p or not q:
        return (not p) and (not q)
    if p.degree() != q.degree():
        return False
    _, r1 = pseudo_divide(p, q)
    _, r2 = pseudo_divide(q, p)
    return (not r1) and (not r2)


def associate_poly(p, q):
    """Associate equality of PolyQ values under nonzero rational scalars."""
    if not p or not q:
        return (not p) and (not q)
    if set(p.terms) != set(q.terms):
        return False
    k = p.leading_key()
    ratio = p.terms[k] / q.terms[k]
    return all(c == ratio * q.terms[e] for e, c in p.terms.items())
