"""Mode actions on untwisted modules.

Two independent evaluation routes are provided for n-th products:

* ``n_product`` strips one creation operator at a time and applies the
  iterate expansion of the structure identity (the engine path), and
* ``field_mode`` expands the normal-ordered free-field product directly
  (the oracle path used by the tests and by the twisted construction).

Both are exact; they agree term-by-term, which is one of the standing
cross-checks of the engine.
"""

from fractions import Fraction

from .exactalg import binom, PolyQ
from .fock import EXP, State, TW, VAC, parity_pattern, theta, vacuum

NEG_INF = float("-inf")

_NP_MEMO = {}


def clear_caches():
    _NP_MEMO.clear()


def heis_mode(g, k, s):
    """Apply the current mode h[g](k) to a state.

    k < 0 appends a creation operator, k > 0 contracts against matching
    creation operators ([h(k), h(-k)] = k on an orthonormal basis), and
    k = 0 acts by the zero-mode eigenvalue (0 on the vacuum module).
    """
    if isinstance(k, int):
        k2 = 2 * k
    else:
        k = Fraction(k)
        k2 = int(2 * k)
    if (k2 % 2 != 0) != s.module.twisted():
        raise ValueError("mode %s has the wrong parity for %s" % (k, s.module))
    out = {}

    def put(ops, c):
        if c:
            v = out.get(ops, 0) + c
            if v:
                out[ops] = v
            else:
                out.pop(ops, None)

    for ops, c in s.terms.items():
        if k2 < 0:
            put(tuple(sorted(ops + ((g, -k2),))), c)
        elif k2 == 0:
            if s.module.kind == EXP:
                put(ops, c * s.module.lam[g - 1])
        else:
            done = None
            for p, (gg, d2) in enumerate(ops):
                if gg != g or d2 != k2 or done == (gg, d2):
                    continue
                done = (gg, d2)
                mult = 0
                for op in ops:
                    if op == done:
                        mult += 1
                rest = list(ops)
                del rest[p]
                put(tuple(rest), c * Fraction(k2 * mult, 2))
    return State._raw(s.module, out)


def creation(g, m, s):
    """h[g](-m) for m > 0."""
    return heis_mode(g, -Fraction(m), s)


def _annihilation_degrees(g, ops):
    return sorted({d2 for gg, d2 in ops if gg == g})


def _acc(out, terms, c):
    if c == 1:
        for o, v in terms.items():
            s = out.get(o, 0) + v
            if s:
                out[o] = s
            else:
                del out[o]
    else:
        for o, v in terms.items():
            s = out.get(o, 0) + v * c
            if s:
                out[o] = s
            else:
                del out[o]


def _npm(a_ops, a_module_rank, n, b_ops, module):
    """n-th product of the vacuum monomial a_ops on the module monomial
    b_ops (unit coefficients); memoized."""
    key = (a_ops, n, b_ops, module.key())
    hit = _NP_MEMO.get(key)
    if hit is not None:
        return hit

    if not a_ops:
        res = (State._raw(module, {b_ops: Fraction(1)}) if n == -1
               else State._raw(module, {}))
        _NP_MEMO[key] = res
        return res

    g, d2 = a_ops[-1]
    m = d2 // 2
    rest = a_ops[:-1]
    rest_wt = sum(dd for _, dd in rest) // 2
    b_deg = sum(dd for _, dd in b_ops) // 2
    out = {}
    bmono = State._raw(module, {b_ops: Fraction(1)})

    # creation side: h[g](-m-p) (rest)_{n+p} b
    p = 0
    while rest_wt + b_deg - (n + p) - 1 >= 0:
        inner = _np_state(rest, a_module_rank, n + p, bmono)
        if inner:
            _acc(out, heis_mode(g, -(m + p), inner).terms, binom(m + p - 1, p))
        p += 1

    # annihilation side: -(-1)^m (rest)_{n-m-p} h[g](p) b
    sgn = Fraction(-1 if m % 2 == 0 else 1)  # -(-1)^m
    ann = [0] if module.kind == EXP else []
    ann += [d2b // 2 for d2b in _annihilation_degrees(g, b_ops)]
    for p in ann:
        sp = heis_mode(g, p, bmono)
        if sp:
            inner = _np_state(rest, a_module_rank, n - m - p, sp)
            if inner:
                _acc(out, inner.terms, sgn * binom(m + p - 1, p))

    res = State._raw(module, out)
    _NP_MEMO[key] = res
    return res


def _np_state(a_ops, rank, n, b):
    out = {}
    for ops, c in b.terms.items():
        part = _npm(a_ops, rank, n, ops, b.module)
        if part:
            _acc(out, part.terms, c)
    return State._raw(b.module, out)


def n_product(a, n, b):
    """a_n b for a in the vacuum module and b untwisted."""
    if a.module.kind != VAC:
        raise ValueError("left factor must live in the vacuum module")
    if b.module.twisted():
        raise ValueError("use twisted_n_product for the half-integer module")
    if a.module.rank != b.module.rank:
        raise ValueError("rank mismatch")
    out = {}
    for ops, c in a.terms.items():
        part = _np_state(ops, a.module.rank, n, b)
        if part:
            _acc(out, part.terms, c)
    return State._raw(b.module, out)


def _mode_tuples(k, total2, ann2):
    """Doubled mode tuples (m2_1..m2_k) with sum total2, each entry at most
    ann2 and on ann2's parity grid; the sum constraint bounds them below."""
    if k == 0:
        if total2 == 0:
            yield ()
        return
    lo = total2 - (k - 1) * ann2
    if (lo - ann2) % 2:
        lo += 1
    m2 = lo
    while m2 <= ann2:
        for tail in _mode_tuples(k - 1, total2 - m2, ann2):
            yield (m2,) + tail
        m2 += 2


def field_mode(a, n, b):
    """Oracle route: the mode of the normal-ordered free-field product.

    For a monomial h[g1](-i1)...h[gk](-ik)vac the field is the normal
    ordered product of (1/(i-1)!) d^(i-1) h[g](x) factors; its x^(-n-1)
    coefficient acting on b is summed directly.
    """
    if b.module.twisted():
        raise ValueError("field_mode is the untwisted oracle")
    out = State(b.module)
    for a_ops, ca in a.terms.items():
        for b_ops, cb in b.terms.items():
            part = _field_mode_mono(a_ops, Fraction(n), b_ops, b.module)
            if part:
                out = out + part.scale(ca * cb)
    return out


def _field_mode_mono(a_ops, n, b_ops, module):
    if not a_ops:
        return State.monomial(module, b_ops) if n == -1 else State(module)
    gens = [g for g, _ in a_ops]
    depths = [d2 // 2 for _, d2 in a_ops]
    total2 = int(2 * (n + 1)) - 2 * sum(depths)
    ann2 = max([d2 for _, d2 in b_ops], default=0)  # even; 0 admits zero modes
    res = State(module)
    target = State.monomial(module, b_ops)
    for modes2 in _mode_tuples(len(gens), total2, ann2):
        coeff = Fraction(1)
        for m2, i in zip(modes2, depths):
            coeff *= binom(Fraction(-m2, 2) - 1, i - 1)
            if not coeff:
                break
        if not coeff:
            continue
        cur = target
        order = sorted(range(len(modes2)), key=lambda t: -modes2[t])
        for t in order:  # annihilators first (rightmost in normal order)
            cur = heis_mode(gens[t], Fraction(modes2[t], 2), cur)
            if not cur:
                break
        if cur:
            res = res + cur.scale(coeff)
    return res


# -- derived operations ---------------------------------------------------------


def commutator_table(a, b):
    """All k >= 0 with a_k b nonzero; drives [a_i, b_j] evaluation."""
    if not (a.is_homogeneous() and b.is_homogeneous()):
        raise ValueError("commutator_table needs homogeneous inputs")
    top = int(a.weight() + b.weight()) - 1
    out = []
    for k in range(0, top + 1):
        v = n_product(a, k, b)
        if v:
            out.append((k, v))
    return out


def eval_commutator(a, i, b, j, s):
    """[a_i, b_j] s = sum_k C(i,k) (a_k b)_{i+j-k} s."""
    from .twisted import twisted_n_product
    apply_mode = twisted_n_product if s.module.twisted() else n_product
    out = State(s.module)
    top = int(a.weight() + b.weight()) - 1
    for k in range(0, top + 1):
        akb = n_product(a, k, b)
        if not akb:
            continue
        c = binom(i, k)
        if not c:
            continue
        part = apply_mode(akb, i + j - k, s)
        if part:
            out = out + part.scale(c)
    return out


def epsilon_of(a, u):
    """Largest k with a_k u nonzero, scanning down from the weight bound;
    NEG_INF if the whole field kills u."""
    from .twisted import twisted_n_product
    if not (a.is_homogeneous() and u.is_homogeneous()):
        raise ValueError("epsilon_of needs homogeneous inputs")
    wa = a.weight()
    if u.module.symbolic():
        top = wa - 1 + Fraction(u.max_creation_deg2(), 2)
    else:
        top = wa + u.weight() - u.module.base_weight() - 1
    floor_gap = wa + Fraction(u.max_creation_deg2(), 2) + 2
    apply_mode = twisted_n_product if u.module.twisted() else n_product
    if u.module.twisted():
        par = (len(next(iter(a.terms))) % 2)  # odd op count -> half-integer
        k = Fraction(int(2 * top) // 2) if par == 0 else top
        k = top if (int(2 * top) % 2 == par) else top - Fraction(1, 2)
    else:
        k = Fraction(int(top))
        if k > top:
            k -= 1
    while k >= -floor_gap:
        if apply_mode(a, k, u):
            return k
        k -= 1
    return NEG_INF


def is_omega_vector(u, rank=None):
    """True when every generator's top mode bound holds on u: the quadratic
    currents at most 1, the quartics at most 3, and each pair element
    S_lm(1,r) at most r."""
    from . import fock
    if rank is None:
        rank = u.module.rank
    for i in range(1, rank + 1):
        if epsilon_of(fock.omega_i(rank, i), u) > 1:
            return False
        if epsilon_of(fock.ham_i(rank, i), u) > 3:
            return False
    for l in range(2, rank + 1):
        for m in range(1, l):
            for r in (1, 2, 3):
                if epsilon_of(fock.s_pair(rank, l, m, 1, r), u) > r:
                    return False
    return True
