"""Level-zero algebra products and the annihilator-span machinery.

star(a, b) and circ(a, b) are the standard bilinear operations built from
binomially weighted modes; O(V) is the span of all circ products, and the
quotient by it controls lowest-weight module theory.  Membership in O(V)
is decided by exact linear algebra below a configurable weight bound: a
positive answer comes with a certificate (an explicit combination of circ
generators), a negative answer only means "not found below this bound".
"""

import itertools
import os
from fractions import Fraction

from .exactalg import binom
from .fock import State, lam_context, vacuum
from .linear import Echelon
from .vertex import n_product
from .twisted import twisted_n_product

DEFAULT_MAX_WEIGHT = 16


def _max_weight_cap():
    return int(os.environ.get("VOA_MAX_WEIGHT", DEFAULT_MAX_WEIGHT))


def _weighted_modes(a_ops, shift, b, use_field):
    """sum_i C(wt a, i) a_{i-shift} b for one vacuum monomial a_ops.

    With use_field the whole sum is taken in a single normal-ordered field
    pass (the binomial weight depends only on the total mode), which is
    much faster than wt(a)+1 separate mode extractions on heavy states.
    """
    from .fock import State as _State
    module = b.module
    wa = sum(d2 for _, d2 in a_ops) // 2
    if not use_field:
        out = _State(module)
        part = _State.monomial(module, a_ops)
        for i in range(0, wa + 1):
            c = binom(wa, i)
            if c:
                out = out + n_product(part, i - shift, b).scale(c)
        return out
    from .vertex import _mode_tuples, heis_mode
    gens = [g for g, _ in a_ops]
    depths = [d2 // 2 for _, d2 in a_ops]
    base2 = -2 * sum(depths)
    out = _State(module)
    for b_ops, cb in b.terms.items():
        if not a_ops:
            i = shift - 1
            if 0 <= i <= wa:
                out = out + _State.monomial(module, b_ops).scale(cb * binom(wa, i))
            continue
        ann2 = max((d2 for _, d2 in b_ops), default=0)
        target = _State.monomial(module, b_ops)
        for i in range(0, wa + 1):
            n = i - shift
            total2 = 2 * (n + 1) + base2
            wbin = binom(wa, i)
            for modes2 in _mode_tuples(len(gens), total2, ann2):
                coeff = wbin
                for m2, dep in zip(modes2, depths):
                    coeff *= binom(Fraction(-m2 - 2, 2), dep - 1)
                    if not coeff:
                        break
                if not coeff:
                    continue
                cur = target
                for t in sorted(range(len(modes2)), key=lambda t: -modes2[t]):
                    cur = heis_mode(gens[t], modes2[t] // 2, cur)
                    if not cur:
                        break
                if cur:
                    out = out + cur.scale(coeff * cb)
    return out


def _binomial_mode_sum(a, shift, b):
    out = State(b.module)
    for ops, c in a.terms.items():
        out = out + _weighted_modes(ops, shift, b, False).scale(c)
    return out


def star(a, b):
    """sum_i C(wt a, i) a_{i-1} b, per homogeneous piece of a."""
    return _binomial_mode_sum(a, 1, b)


def circ(a, b):
    """sum_i C(wt a, i) a_{i-2} b, per homogeneous piece of a."""
    return _binomial_mode_sum(a, 2, b)


def star_list(factors):
    """Left-associated star product of a list of elements."""
    out = factors[0]
    for f in factors[1:]:
        out = star(out, f)
    return out


def theta_even_monomials(rank, weight):
    """Monomials of the fixed-point subalgebra at the given weight: even
    op count, ops sorted; returned as ops tuples."""
    out = []

    def rec(remaining, min_op, ops):
        if remaining == 0:
            if len(ops) % 2 == 0:
                out.append(tuple(ops))
            return
        g0, d0 = min_op
        for g in range(g0, rank + 1):
            dstart = d0 if g == g0 else 1
            for d in range(dstart, remaining + 1):
                ops.append((g, 2 * d))
                rec(remaining - d, (g, d), ops)
                ops.pop()

    rec(weight, (1, 1), [])
    return [tuple(sorted(o)) for o in out]


def plus_dimension(rank, weight):
    return len(theta_even_monomials(rank, weight))


class OSpanBasis:
    """Row-reduced span of circ products below a weight bound, with the
    generating (a, b) pair kept per row for certificates.

    Generator pairs are consumed lazily in increasing total weight;
    membership queries extend the span only as far as needed, and a found
    certificate is a complete proof no matter how much was enumerated.
    """

    def __init__(self, rank, bound, parity=None):
        cap = _max_weight_cap()
        if bound > cap:
            raise ValueError(
                "weight bound %d exceeds cap %d (raise VOA_MAX_WEIGHT); "
                "basis size would be near %d monomials"
                % (bound, cap, sum(plus_dimension(rank, w)
                                   for w in range(bound + 1))))
        self.rank = rank
        self.bound = bound
        self.echelon = Echelon()
        self.generators = {}
        self._gid = 0
        monos = {w: theta_even_monomials(rank, w) for w in range(bound + 1)}
        if parity is not None:
            from .fock import parity_pattern
            monos = {w: [m for m in ms if parity_pattern(m) == parity]
                     for w, ms in monos.items()}
        self._pairs = self._pair_iter(monos)
        self.exhausted = False

    def _pair_iter(self, monos):
        for total in range(1, self.bound):  # total = wa + wb, product wt <= bound
            for wa in range(1, total + 1):
                wb = total - wa
                for oa in monos.get(wa, ()):
                    for ob in monos.get(wb, ()):
                        yield oa, ob

    def extend(self, steps=None):
        """Insert up to `steps` more generator pairs (all remaining when
        None); returns the number of pairs consumed."""
        module = vacuum(self.rank)
        done = 0
        for oa, ob in self._pairs:
            v = circ(State.monomial(module, oa), State.monomial(module, ob))
            if v and self.echelon.insert(v.terms, self._gid):
                self.generators[self._gid] = (oa, ob)
            self._gid += 1
            done += 1
            if steps is not None and done >= steps:
                return done
        self.exhausted = True
        return done

    def rank_of_span(self):
        return self.echelon.rank()


_OSPAN_CACHE = {}


def o_span(rank, bound, parity=None, full=True):
    key = (rank, bound, parity)
    if key not in _OSPAN_CACHE:
        _OSPAN_CACHE[key] = OSpanBasis(rank, bound, parity)
    basis = _OSPAN_CACHE[key]
    if full and not basis.exhausted:
        basis.extend()
    return basis


def member_o(v, rank, bound):
    """Exact membership of v in the circ span below the bound.

    Returns (True, certificate) with certificate a list of
    (a_ops, b_ops, coefficient) triples, or (False, None).  A True answer
    is a proof; False is only "not found below this bound".
    """
    for d2 in v.weight_parts():
        if d2 // 2 > bound:
            raise ValueError("weight %d exceeds the bound %d" % (d2 // 2, bound))
    basis = o_span(rank, bound, full=False)
    while True:
        ok, cert = basis.echelon.member(v.terms)
        if ok:
            triples = [(basis.generators[t][0], basis.generators[t][1], c)
                       for t, c in cert.items()]
            return True, triples
        if basis.exhausted:
            return False, None
        basis.extend(steps=40)


def certificate_state(rank, triples):
    """Re-multiply a certificate to the state it claims to build."""
    module = vacuum(rank)
    out = State(module)
    for oa, ob, c in triples:
        out = out + circ(State.monomial(module, oa),
                         State.monomial(module, ob)).scale(c)
    return out


def zhu_action_on_top(a, top):
    """o(a) = a_{wt a - 1} acting on a lowest-weight vector, per
    homogeneous piece of a; dispatches on the module kind."""
    apply_mode = twisted_n_product if top.module.twisted() else n_product
    out = State(top.module)
    for d2, part in a.weight_parts().items():
        out = out + apply_mode(part, d2 // 2 - 1, top)
    return out
