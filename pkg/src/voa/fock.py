"""Fock-space states for the rank-d free-boson algebra and its modules.

Three module kinds share one state representation:

* the vacuum module (the algebra itself, built on currents h[1]..h[d]),
* highest-weight modules generated by an exponential vector with
  prescribed (symbolic by default) zero-mode eigenvalues, and
* the half-integer-moded module attached to the sign involution, with
  lowest weight d/16.

A monomial is a sorted tuple of creation operators applied to the base
vector; creation operators commute, so the sorted tuple is a faithful
normal form.  Degrees are stored doubled (deg2 = 2*degree) so twisted
half-integer modes stay integral.
"""

from fractions import Fraction

from .exactalg import Context, Fraction as _F, PolyQ  # noqa: F401

VAC = "vac"
EXP = "exp"
TW = "tw"

_LAM_CONTEXTS = {}


def lam_context(rank):
    """Shared polynomial context for symbolic zero-mode eigenvalues."""
    if rank not in _LAM_CONTEXTS:
        _LAM_CONTEXTS[rank] = Context(tuple("lam%d" % i for i in range(1, rank + 1)))
    return _LAM_CONTEXTS[rank]


class Module:
    """Tag describing which module a state lives in."""

    __slots__ = ("kind", "rank", "lam", "_key")

    def __init__(self, kind, rank, lam=None):
        self.kind = kind
        self.rank = rank
        if kind == EXP:
            if lam is None:
                ctx = lam_context(rank)
                lam = tuple(ctx.var(n) for n in ctx.names)
            lam = tuple(Fraction(x) if not isinstance(x, PolyQ) else x for x in lam)
            if len(lam) != rank:
                raise ValueError("lam must have one entry per generator")
        self.lam = lam
        if kind == EXP:
            lk = tuple(x if isinstance(x, Fraction) else ("poly", hash(x))
                       for x in lam)
            self._key = (kind, rank, lk)
        else:
            self._key = (kind, rank)

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Module) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Module(%s, rank=%d)" % (self.kind, self.rank)

    def twisted(self):
        return self.kind == TW

    def symbolic(self):
        return self.kind == EXP and any(isinstance(x, PolyQ) for x in self.lam)

    def base_weight(self):
        """Weight of the base vector: 0, <lam,lam>/2, or d/16."""
        if self.kind == VAC:
            return Fraction(0)
        if self.kind == TW:
            return Fraction(self.rank, 16)
        out = None
        for x in self.lam:
            sq = x * x
            out = sq if out is None else out + sq
        return out / 2 if isinstance(out, Fraction) else out * Fraction(1, 2)

    def base_token(self):
        return {VAC: "vac", EXP: "exp(lam)", TW: "vactw"}[self.kind]


def vacuum(rank):
    return Module(VAC, rank)


def exp_module(rank, lam=None):
    return Module(EXP, rank, lam)


def twisted_module(rank):
    return Module(TW, rank)


class State:
    """Sparse linear combination of Fock monomials over one module.

    terms: {ops tuple: coefficient}, ops = sorted tuple of (gen, deg2)
    with deg2 > 0; coefficients are Fraction or PolyQ and zero coefficients
    are never stored.
    """

    __slots__ = ("module", "terms")

    def __init__(self, module, terms=None):
        self.module = module
        self.terms = {}
        if terms:
            for ops, c in terms.items():
                if c:
                    self.terms[ops] = self.terms.get(ops, 0) + c
            self.terms = {o: c for o, c in self.terms.items() if c}

    # -- construction helpers ----------------------------------------------

    @staticmethod
    def _raw(module, clean_terms):
        """Internal: wrap an already-normalized terms dict without copying."""
        s = State.__new__(State)
        s.module = module
        s.terms = clean_terms
        return s

    @staticmethod
    def base(module):
        return State(module, {(): Fraction(1)})

    @staticmethod
    def monomial(module, ops, coeff=Fraction(1)):
        ops = tuple(sorted(ops))
        for g, d2 in ops:
            if not (1 <= g <= module.rank) or d2 <= 0:
                raise ValueError("bad creation op (%s, %s)" % (g, d2))
            if (d2 % 2 == 0) == module.twisted():
                raise ValueError("degree parity does not match module kind")
        return State(module, {ops: coeff})

    def zero(self):
        return State(self.module)

    # -- linear structure ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, State):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __add__(self, other):
        if other == 0:
            return self
        if self.module is not other.module and self.module != other.module:
            raise ValueError("cannot add states of different modules")
        out = dict(self.terms)
        for ops, c in other.terms.items():
            s = out.get(ops, 0) + c
            if s:
                out[ops] = s
            else:
                out.pop(ops, None)
        return State._raw(self.module, out)

    __radd__ = __add__

    def __neg__(self):
        return State._raw(self.module, {o: -c for o, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return State._raw(self.module, {})
        return State._raw(self.module,
                          {o: v * c for o, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = scale

    # -- structure queries ---------------------------------------------------

    def creation_degree2(self, ops):
        return sum(d2 for _, d2 in ops)

    def max_creation_deg2(self):
        return max((self.creation_degree2(o) for o in self.terms), default=0)

    def weight(self):
        """Conformal weight; requires homogeneity."""
        degs = {self.creation_degree2(o) for o in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous state, creation degrees %s"
                             % sorted(Fraction(d, 2) for d in degs))
        base = self.module.base_weight()
        if not degs:
            return base
        return base + Fraction(degs.pop(), 2)

    def is_homogeneous(self):
        return len({self.creation_degree2(o) for o in self.terms}) <= 1

    def weight_parts(self):
        """Split into homogeneous components keyed by creation degree2."""
        parts = {}
        for ops, c in self.terms.items():
            d2 = self.creation_degree2(ops)
            parts.setdefault(d2, {})[ops] = c
        return {d2: State(self.module, t) for d2, t in sorted(parts.items())}

    # -- rendering ------------------------------------------------------------

    def render(self):
        """Canonical text in the catalog grammar, e.g.
        ``3/2*h(1,-2)^2 h(2,-1) vac``; parse_state_text round-trips it."""
        if not self.terms:
            return "0"
        parts = []
        for ops in sorted(self.terms):
            c = self.terms[ops]
            factors = []
            i = 0
            while i < len(ops):
                g, d2 = ops[i]
                n = 1
                while i + n < len(ops) and ops[i + n] == (g, d2):
                    n += 1
                deg = "-%d" % (d2 // 2) if d2 % 2 == 0 else "-%d/2" % d2
                atom = "h(%d,%s)" % (g, deg)
                factors.append(atom if n == 1 else "%s^%d" % (atom, n))
                i += n
            factors.append(self.module.base_token())
            body = " ".join(factors)
            cs = "(%s)" % c if isinstance(c, PolyQ) else str(c)
            parts.append(body if cs == "1" else "%s*%s" % (cs, body))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return self.render()


# -- involution, grading, parity ---------------------------------------------


def theta(s):
    """Negate every current: multiply each monomial by (-1)^(#ops)."""
    if s.module.kind == EXP:
        raise ValueError("the involution maps this module to the one with "
                         "opposite zero-mode eigenvalues; it is not an "
                         "endomorphism here")
    return State(s.module,
                 {o: (c if len(o) % 2 == 0 else -c) for o, c in s.terms.items()})


def parity_pattern(ops):
    """Set of generator indices appearing an odd number of times."""
    count = {}
    for g, _ in ops:
        count[g] = count.get(g, 0) + 1
    return frozenset(g for g, n in count.items() if n % 2)


def project_theta(s, sign):
    """(s + sign*theta(s)) / 2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return (s + theta(s).scale(Fraction(sign))).scale(Fraction(1, 2))


def weight(s):
    return s.weight()


# -- named generators ----------------------------------------------------------


def _vac_state(rank, ops, coeff=Fraction(1)):
    return State.monomial(vacuum(rank), ops, coeff)


def omega_i(rank, i):
    """(1/2) h[i](-1)^2 vac, the i-th quadratic current."""
    return _vac_state(rank, ((i, 2), (i, 2)), Fraction(1, 2))


def omega(rank):
    """Conformal vector: sum of the quadratic currents."""
    out = State(vacuum(rank))
    for i in range(1, rank + 1):
        out = out + omega_i(rank, i)
    return out


def ham_i(rank, i):
    """(1/3) h[i](-3)h[i](-1) vac - (1/3) h[i](-2)^2 vac, weight 4."""
    return (_vac_state(rank, ((i, 6), (i, 2)), Fraction(1, 3))
            + _vac_state(rank, ((i, 4), (i, 4)), Fraction(-1, 3)))


def jay_i(rank, i):
    """h(-1)^4 - 2h(-3)h(-1) + (3/2)h(-2)^2 on generator i."""
    return (_vac_state(rank, ((i, 2),) * 4)
            + _vac_state(rank, ((i, 6), (i, 2)), Fraction(-2))
            + _vac_state(rank, ((i, 4), (i, 4)), Fraction(3, 2)))


def s_pair(rank, i, j, r, s):
    """h[i](-r)h[j](-s) vac for distinct i, j."""
    if i == j:
        raise ValueError("paired generators must be distinct")
    return _vac_state(rank, ((i, 2 * r), (j, 2 * s)))


def _s_combo(rank, i, j, coeffs):
    out = State(vacuum(rank))
    for s, c in coeffs.items():
        out = out + s_pair(rank, i, j, 1, s).scale(Fraction(c))
    return out


def e_u(rank, i, j):
    return _s_combo(rank, i, j, {2: 5, 3: 25, 4: 36, 5: 16})


def e_t(rank, i, j):
    return _s_combo(rank, i, j, {2: -16, 3: 145, 4: 19, 5: 8})


def lam_pair(rank, i, j):
    return _s_combo(rank, i, j, {2: 45, 3: 190, 4: 240, 5: 96})


def generator(name, rank, *idx):
    """Dispatcher keyed by catalog names."""
    table = {
        "omega": lambda: omega_i(rank, idx[0]) if idx else omega(rank),
        "H": lambda: ham_i(rank, *idx),
        "J": lambda: jay_i(rank, *idx),
        "S": lambda: s_pair(rank, *idx),
        "Eu": lambda: e_u(rank, *idx),
        "Et": lambda: e_t(rank, *idx),
        "Lambda": lambda: lam_pair(rank, *idx),
    }
    if name not in table:
        raise ValueError("unknown generator %r" % name)
    return table[name]()
