"""Word calculus on a generic constrained vector.

The boundary derivations and the kernel-vector checks both reason about a
vector u that is not realized in any concrete module; all that is known
about it is annihilation data: for each generator g there is a top mode
eps(g) with g_s u = 0 for s > eps(g), plus optional values or formal
symbols for specific modes at or below the top.  For the pair calculus
the S-generator tops are shifted by a formal variable eps, handled as
"eps large" for comparisons; concrete reruns substitute an integer.

States over u are combinations of words: tuples of letters, a letter
being a generator mode that was kept formal.  Everything is driven by
three mutually recursive operations:

* genword_on_u  -- a nested creation word (an element of the algebra,
  A-letters outside, one pair-generator core inside) acting on bare u
  through the iterate expansion, with the cut parameter chosen as the
  exact top mode of the stripped generator so the crossed sum vanishes;
* elem_on       -- an arbitrary algebra element acting on a word, by
  commuting it past the leading letter;
* place_letter  -- a single generator mode inserted into a word, sorted
  into canonical position with commutator corrections, or pushed down to
  u when its index exceeds the generator's top (it must die there).

Commutator data (products g_k h) comes from the exact Fock engine, so the
whole calculus is anchored to it.
"""

from fractions import Fraction

from .exactalg import Context, PolyQ, binom, binomial_poly
from .fock import State, parity_pattern, s_pair, ham_i, omega_i, vacuum
from .linear import Echelon
from .vertex import n_product


class Idx:
    """Mode index c0 + c1*eps; ordered by eps -> +infinity when no value
    is given, numerically when one is."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0, c1=0):
        self.c0 = c0
        self.c1 = c1

    def __add__(self, other):
        if isinstance(other, Idx):
            return Idx(self.c0 + other.c0, self.c1 + other.c1)
        return Idx(self.c0 + other, self.c1)

    def __sub__(self, other):
        if isinstance(other, Idx):
            return Idx(self.c0 - other.c0, self.c1 - other.c1)
        return Idx(self.c0 - other, self.c1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Idx(other)
        return self.c0 == other.c0 and self.c1 == other.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __repr__(self):
        if self.c1 == 0:
            return str(self.c0)
        head = "eps" if self.c1 == 1 else "%d*eps" % self.c1
        if self.c0 == 0:
            return head
        return "%s%+d" % (head, self.c0)


W, H, S = "w", "H", "S"

# letter = (kind, data, idx); data = gen for w/H, (l, m, r) for S
# genword = tuple of (genkey, depth>=1), outermost first; genkey = (kind, data)


def gen_weight(genkey):
    kind, data = genkey
    if kind == W:
        return 2
    if kind == H:
        return 4
    return data[2] + 2  # S(l,m;1,r) has weight r + 1


class WordConfig:
    """Annihilation data and rule hooks for the generic vector."""

    def __init__(self, rank, eps_value=None, symbolic=True):
        self.rank = rank
        self.eps_value = eps_value
        self.symbolic = symbolic
        self.ctx = Context(("eps",)) if symbolic else None
        self._eps_poly = self.ctx.var("eps") if symbolic else None
        self._states = {}
        self._genword_tables = {}
        self._products = {}
        self.trace_guard = 0

    # -- ring helpers -----------------------------------------------------

    def one(self):
        return self.ctx.const(1) if self.symbolic else Fraction(1)

    def coeff(self, c):
        return self.ctx.const(c) if self.symbolic else Fraction(c)

    def val(self, idx):
        if self.eps_value is None:
            raise ValueError("no eps value in formal mode")
        return idx.c0 + idx.c1 * self.eps_value

    def cmp_gt(self, a, b):
        """a > b, with eps treated as arbitrarily large in formal mode."""
        if self.eps_value is not None:
            return self.val(a) > self.val(b)
        return (a.c1, a.c0) > (b.c1, b.c0)

    def idx_binom(self, idx, k):
        if self.eps_value is not None:
            c = binom(self.val(idx), k)
            return self.coeff(c)
        if idx.c1 == 0:
            return self.coeff(binom(idx.c0, k))
        return binomial_poly(self._eps_poly * idx.c1 + idx.c0, k)

    def norm_idx(self, idx):
        """Letters carry value-normalized indices in concrete mode."""
        if self.eps_value is not None:
            return Idx(self.val(idx))
        return idx

    # -- generator data -----------------------------------------------------

    def gen_state(self, genkey):
        if genkey not in self._states:
            kind, data = genkey
            if kind == W:
                st = omega_i(self.rank, data)
            elif kind == H:
                st = ham_i(self.rank, data)
            else:
                l, m, r = data
                st = s_pair(self.rank, l, m, 1, r)
            self._states[genkey] = st
        return self._states[genkey]

    def epsilon(self, genkey):
        """Top mode with g_s u = 0 strictly above it."""
        raise NotImplementedError

    def base_rule(self, genkey, idx):
        """Action of the letter directly on u: 'keep', a coefficient (the
        empty-word value), or None for zero.  Only consulted at or below
        epsilon(genkey)."""
        raise NotImplementedError

    def rho_pair(self):
        """Slack of u against pair-containing elements:
        max(0, eps(S) - wt(S) + 1)."""
        raise NotImplementedError

    # -- derived bounds ------------------------------------------------------

    def letter_slack(self, letter):
        """Weight raise of a kept letter, floored at zero; pair letters get
        the pair slack added before flooring, which keeps the kill bound
        sound for pair letters below their top."""
        kind, data, idx = letter
        w = Idx(gen_weight((kind, data))) - idx - 1
        if kind == S:
            w = w + self.rho_pair()
        zero = Idx(0)
        return w if self.cmp_gt(w, zero) else zero

    def word_slack(self, word):
        s = Idx(0)
        for letter in word:
            s = s + self.letter_slack(letter)
        return s

    def elem_bound(self, weight, has_pair):
        """Exact top mode of a weight-homogeneous element on bare u."""
        b = Idx(weight - 1)
        if has_pair:
            b = b + self.rho_pair()
        return b

    def kill_bound(self, genkey, word):
        """Sound vanishing bound for a single generator mode on word . u."""
        return (Idx(gen_weight(genkey) - 1) + self.rho_pair()
                + self.word_slack(word))


def word_key(letter):
    kind, data, idx = letter
    rank = 0 if kind == S else (1 if kind == W else 2)
    return (rank, data, idx.c1, idx.c0)


class Combo(dict):
    """word tuple -> coefficient; zero coefficients are dropped."""

    def add(self, word, c):
        if not c:
            return
        v = self.get(word, 0) + c
        if v:
            self[word] = v
        else:
            self.pop(word, None)

    def extend(self, other, scale=1):
        for w, c in other.items():
            self.add(w, c * scale)

    def scaled(self, c):
        out = Combo()
        if c:
            for w, v in self.items():
                out.add(w, v * c)
        return out


class WordEngine:
    def __init__(self, config):
        self.cfg = config
        self._genword_cache = {}
        self._decomp_cache = {}
        self._span_cache = {}

    # -- element decomposition into nested generator words -------------------

    def _genword_state(self, gw):
        """Fock state of a nested creation word."""
        cfg = self.cfg
        key = ("gwstate", gw)
        if key not in cfg._genword_tables:
            if not gw:
                st = State.base(vacuum(cfg.rank))
            else:
                (genkey, depth) = gw[0]
                inner = self._genword_state(gw[1:])
                st = n_product(cfg.gen_state(genkey), -depth, inner)
            cfg._genword_tables[key] = st
        return cfg._genword_tables[key]

    def _enumerate_genwords(self, weight, pattern):
        """Nested words with A-letters outside and, for a two-element
        pattern, one pair core inside."""
        cfg = self.cfg
        cores = [((), 0)]
        if pattern:
            l, m = max(pattern), min(pattern)
            cores = []
            for r in (1, 2, 3):
                for s in range(1, weight - r + 1):
                    cores.append((((S, (l, m, r)), s), r + s))
        akeys = ([(W, k) for k in range(1, cfg.rank + 1)]
                 + [(H, k) for k in range(1, cfg.rank + 1)])
        out = []

        def rec(prefix, wt_left, max_item):
            if pattern:
                for core, cw in cores:
                    if cw == wt_left:
                        out.append(tuple(prefix) + (core,))
            elif wt_left == 0:
                out.append(tuple(prefix))
            for gi, g in enumerate(akeys):
                base = gen_weight(g)
                for depth in range(1, wt_left - base + 2):
                    item = (gi, depth)
                    if max_item is not None and item > max_item:
                        continue
                    w = base + depth - 1
                    if w <= wt_left:
                        prefix.append((g, depth))
                        rec(prefix, wt_left - w, item)
                        prefix.pop()

        rec([], weight, None)
        return out

    def to_genwords(self, state):
        """Rewrite a Fock state as a combination of nested generator words;
        exact linear solve against the enumerated spanning family."""
        key = tuple(sorted(state.terms.items()))
        if key in self._decomp_cache:
            return self._decomp_cache[key]
        pats = {parity_pattern(o) for o in state.terms}
        if len(pats) != 1:
            raise ValueError("mixed parity patterns in decomposition")
        pattern = pats.pop()
        if len(pattern) not in (0, 2):
            raise ValueError("only empty or pair patterns are supported")
        wt = int(state.weight())
        skey = (wt, pattern)
        if skey not in self._span_cache:
            ech = Echelon()
            words = {}
            for gw in self._enumerate_genwords(wt, pattern):
                st = self._genword_state(gw)
                if st and ech.insert(st.terms, gw):
                    words[gw] = st
            self._span_cache[skey] = ech
        ech = self._span_cache[skey]
        ok, cert = ech.member(state.terms)
        if not ok:
            raise ValueError("generator words fail to span at weight %d, "
                             "pattern %s" % (wt, set(pattern)))
        out = [(c, gw) for gw, c in cert.items() if c]
        self._decomp_cache[key] = out
        return out

    # -- the three mutually recursive evaluators ------------------------------

    def genword_on_u(self, gw, idx):
        cfg = self.cfg
        key = (gw, idx)
        hit = self._genword_cache.get(key)
        if hit is not None:
            return hit
        out = Combo()
        if not gw:
            if (idx == Idx(-1)) if cfg.eps_value is None else (cfg.val(idx) == -1):
                out.add((), cfg.one())
            self._genword_cache[key] = out
            return out
        (genkey, depth), rest = gw[0], gw[1:]
        m = cfg.epsilon(genkey)
        # bound for the remaining word acting on u
        if rest:
            rest_wt = sum(gen_weight(g) + dd - 1 for g, dd in rest)
            rest_pair = any(g[0] == S for g, _ in rest)
            fb = cfg.elem_bound(rest_wt, rest_pair)
        else:
            fb = Idx(-1)
        # sum over s <= m with t = idx - depth - s <= fb
        lo = idx - depth - fb
        hi = m
        if cfg.eps_value is None:
            if lo.c1 > hi.c1:
                steps = -1
            elif lo.c1 < hi.c1:
                raise RuntimeError("formal sum of unbounded length: %s..%s"
                                   % (lo, hi))
            else:
                steps = hi.c0 - lo.c0
        else:
            steps = cfg.val(hi) - cfg.val(lo)
        for d in range(steps + 1):
            s = lo + d
            t = idx - depth - s
            inner = self.genword_on_u(rest, t)
            if not inner:
                continue
            c = cfg.idx_binom(Idx(-1) - s, depth - 1)
            if not c:
                continue
            for w, cw in inner.items():
                out.extend(self.place_letter(genkey, s, w), cw * c)
        # iterate correction: (-1)^depth sum_l C(l+depth-1, depth-1) *
        # C(m+depth, l+depth) (g_l f)_{idx-depth-l}
        if rest:
            rest_state = self._genword_state(rest)
            sign = -1 if depth % 2 else 1
            l = 0
            top = int(cfg.gen_state(genkey).weight() + rest_state.weight())
            while l < top:
                prod = n_product(cfg.gen_state(genkey), l, rest_state)
                if prod:
                    c = (cfg.coeff(sign * binom(l + depth - 1, l))
                         * cfg.idx_binom(m + depth, l + depth))
                    if c:
                        out.extend(self.elem_on(prod, idx - depth - l, ()),
                                   c)
                l += 1
        self._genword_cache[key] = out
        return out

    def elem_on(self, state, idx, word):
        cfg = self.cfg
        out = Combo()
        if not state:
            return out
        if not word:
            for c, gw in self.to_genwords(state):
                out.extend(self.genword_on_u(gw, idx), cfg.coeff(c))
            return out
        head, rest = word[0], word[1:]
        hkey = (head[0], head[1])
        inner = self.elem_on(state, idx, rest)
        for w, c in inner.items():
            out.extend(self.place_letter(hkey, head[2], w), c)
        hstate = cfg.gen_state(hkey)
        top = int(state.weight() + hstate.weight())
        for k in range(0, top):
            prod = n_product(state, k, hstate)
            if not prod:
                continue
            c = cfg.idx_binom(idx, k)
            if c:
                out.extend(self.elem_on(prod, idx + head[2] - k, rest), c)
        return out

    def place_letter(self, genkey, idx, word):
        cfg = self.cfg
        out = Combo()
        eps = cfg.epsilon(genkey)
        reducible = cfg.cmp_gt(idx, eps)
        if not word:
            if reducible:
                return out
            rule = cfg.base_rule(genkey, idx)
            if rule is None:
                return out
            if rule == "keep":
                out.add(((genkey[0], genkey[1], cfg.norm_idx(idx)),),
                        cfg.one())
            else:
                out.add((), cfg.coeff(rule))
            return out
        if reducible:
            # sound kill: above the slack-adjusted top the letter dies
            if cfg.cmp_gt(idx, cfg.kill_bound(genkey, word)):
                return out
        letter = (genkey[0], genkey[1], cfg.norm_idx(idx))
        if not reducible and word_key(letter) <= word_key(word[0]):
            return Combo({(letter,) + word: cfg.one()})
        head, rest = word[0], word[1:]
        hkey = (head[0], head[1])
        inner = self.place_letter(genkey, idx, rest)
        for w, c in inner.items():
            out.extend(self.place_letter(hkey, head[2], w), c)
        gstate = cfg.gen_state(genkey)
        hstate = cfg.gen_state(hkey)
        top = int(gstate.weight() + hstate.weight())
        for k in range(0, top):
            prod = n_product(gstate, k, hstate)
            if not prod:
                continue
            c = cfg.idx_binom(idx, k)
            if c:
                out.extend(self.elem_on(prod, idx + head[2] - k, rest), c)
        return out

    def apply_letters(self, letters, combo=None):
        """Apply generator modes right-to-left to a word combination
        (u itself when omitted)."""
        cur = combo if combo is not None else Combo({(): self.cfg.one()})
        for genkey, idx in reversed(letters):
            nxt = Combo()
            for w, c in cur.items():
                nxt.extend(self.place_letter(genkey, idx, w), c)
            cur = nxt
        return cur
