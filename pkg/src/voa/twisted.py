"""Half-integer-moded module calculus.

The twisted field of a vacuum-module element u is the normal-ordered
free-field product of the correction e^{Delta_x} u, where Delta_x pairs
nonnegative current modes weighted by the rational series coefficients
c_{mn} of -log(((1+x)^{1/2} + (1+y)^{1/2}) / 2).

Mode convention: Y_tw(u, x) = sum_n u_n x^{-n-1} with n integral for
even-length monomials and half-integral for odd-length ones; the module's
lowest weight is d/16 and u_n raises weight by wt(u) - n - 1 as usual.
All table values pin this convention exactly.
"""

from fractions import Fraction

from .exactalg import binom
from .fock import State, VAC
from .vertex import heis_mode

_C_CACHE = {}


def _series_mul(a, b, max_total):
    out = {}
    for (m1, n1), c1 in a.items():
        for (m2, n2), c2 in b.items():
            m, n = m1 + m2, n1 + n2
            if m + n > max_total:
                continue
            k = (m, n)
            v = out.get(k, Fraction(0)) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def c_coeffs(max_total):
    """Taylor coefficients c_{mn}, m+n <= max_total, of
    -log(((1+x)^(1/2) + (1+y)^(1/2)) / 2)."""
    if max_total in _C_CACHE:
        return _C_CACHE[max_total]
    sq_x = {(k, 0): binom(Fraction(1, 2), k) for k in range(max_total + 1)}
    sq_y = {(0, k): binom(Fraction(1, 2), k) for k in range(max_total + 1)}
    b = {}
    for k, c in sq_x.items():
        b[k] = b.get(k, Fraction(0)) + c / 2
    for k, c in sq_y.items():
        b[k] = b.get(k, Fraction(0)) + c / 2
    b[(0, 0)] -= 1  # B = (sqrt(1+x)+sqrt(1+y))/2 - 1, no constant term
    b = {k: c for k, c in b.items() if c}
    out = {}
    power = {(0, 0): Fraction(1)}
    for k in range(1, max_total + 1):
        power = _series_mul(power, b, max_total)
        if not power:
            break
        sign = Fraction(-1 if k % 2 == 1 else 1, k)  # -log(1+B) = sum (-1)^k B^k / k
        for key, c in power.items():
            v = out.get(key, Fraction(0)) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    table = {}
    for m in range(max_total + 1):
        for n in range(max_total + 1 - m):
            table[(m, n)] = out.get((m, n), Fraction(0))
    _C_CACHE[max_total] = table
    return table


def delta_once(u):
    """Apply Delta once: {drop t: state}, t = m + n over surviving pairs.

    Zero modes act as 0 on the vacuum module, so only m, n >= 1 pairs
    survive and every surviving term lowers the weight by at least 2.
    """
    wt2 = u.max_creation_deg2()
    table = c_coeffs(wt2 // 2 + 1)
    rank = u.module.rank
    out = {}
    for m in range(1, wt2 // 2 + 1):
        for n in range(1, wt2 // 2 + 1 - m + 1):
            c = table.get((m, n))
            if not c:
                continue
            acc = State(u.module)
            for i in range(1, rank + 1):
                acc = acc + heis_mode(i, m, heis_mode(i, n, u))
            if acc:
                t = m + n
                out[t] = out.get(t, State(u.module)) + acc.scale(c)
    return {t: s for t, s in out.items() if s}


def delta_apply(u):
    """e^{Delta_x} u as {t: component}, component at x^{-t} of weight
    wt(u) - t; the exponential truncates after at most wt(u)/2 steps."""
    if u.module.kind != VAC:
        raise ValueError("the correction operator acts on the vacuum module")
    comps = {0: u}
    layer = {0: u}
    fact = Fraction(1)
    k = 1
    while layer:
        nxt = {}
        for t0, s in layer.items():
            for dt, ds in delta_once(s).items():
                t = t0 + dt
                nxt[t] = nxt.get(t, State(u.module)) + ds
        layer = {t: s for t, s in nxt.items() if s}
        if not layer:
            break
        fact *= k
        for t, s in layer.items():
            comps[t] = comps.get(t, State(u.module)) + s.scale(Fraction(1, fact))
        k += 1
    return {t: s for t, s in comps.items() if s}


def _y0_mode_mono(a_ops, n, target):
    """Mode n of the normal-ordered twisted field of the monomial a_ops,
    applied to a twisted state; modes run over half-integers."""
    module = target.module
    if not a_ops:
        return target if n == -1 else State(module)
    gens = [g for g, _ in a_ops]
    depths = [d2 // 2 for _, d2 in a_ops]
    k = len(gens)
    total2 = int(2 * (n + 1)) - 2 * sum(depths)  # doubled sum of modes, odd each
    res = State(module)
    for b_ops, cb in target.terms.items():
        ann2 = max((d2 for _, d2 in b_ops), default=-1)  # odd; -1 forces creation
        mono = State.monomial(module, b_ops)
        for modes2 in _half_tuples(k, total2, ann2):
            coeff = cb
            for m2, i in zip(modes2, depths):
                coeff *= binom(Fraction(-m2 - 2, 2), i - 1)
                if not coeff:
                    break
            if not coeff:
                continue
            cur = mono
            for t in sorted(range(k), key=lambda t: -modes2[t]):
                cur = heis_mode(gens[t], Fraction(modes2[t], 2), cur)
                if not cur:
                    break
            if cur:
                res = res + cur.scale(coeff)
    return res


def _half_tuples(k, total2, ann2):
    """Tuples of k odd doubled-modes summing to total2, each at most ann2;
    the sum constraint bounds them below."""
    if k == 0:
        if total2 == 0:
            yield ()
        return
    lo = total2 - (k - 1) * ann2
    if lo % 2 == 0:
        lo += 1
    m2 = lo
    while m2 <= ann2:
        for tail in _half_tuples(k - 1, total2 - m2, ann2):
            yield (m2,) + tail
        m2 += 2


def twisted_n_product(u, n, s):
    """Mode n of the corrected twisted field of u, applied to s."""
    if u.module.kind != VAC:
        raise ValueError("left factor must live in the vacuum module")
    if not s.module.twisted():
        raise ValueError("target must be the half-integer module")
    n = Fraction(n)
    out = State(s.module)
    for t, comp in delta_apply(u).items():
        for a_ops, ca in comp.terms.items():
            if (len(a_ops) % 2 == 0) != (n.denominator == 1):
                raise ValueError(
                    "mode %s has the wrong parity for a length-%d monomial"
                    % (n, len(a_ops)))
            part = _y0_mode_mono(a_ops, n - t, s)
            if part:
                out = out + part.scale(ca)
    return out
